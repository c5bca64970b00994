"""Standalone figure renderer: squidfig --kind KIND --in CSV [--in CSV] --out IMG."""

import argparse
import sys

from .render import KINDS, FigureSpec, render
from .schemas import SchemaError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="squidfig", description="Render figures from squidspec CSV tables"
    )
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument(
        "--in",
        dest="inputs",
        action="append",
        required=True,
        help="input CSV (repeat for kinds with several inputs)",
    )
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--manifest", default=None, help="manifest JSON for labeling")
    parser.add_argument("--xlim", nargs=2, type=float, default=None)
    parser.add_argument("--ylim", nargs=2, type=float, default=None)
    args = parser.parse_args(argv)
    try:
        spec = FigureSpec(
            kind=args.kind,
            inputs=tuple(args.inputs),
            out_path=args.out,
            xlim=tuple(args.xlim) if args.xlim else None,
            ylim=tuple(args.ylim) if args.ylim else None,
            manifest=args.manifest,
        )
        render(spec)
    except SchemaError as err:
        print(f"squidfig: schema error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"squidfig: I/O error: {err}", file=sys.stderr)
        return 5
    print(f"squidfig: wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
