"""Render the five figure kinds from solver CSV tables.

Each builder returns the plotted arrays alongside the figure so tests can
verify that re-rendering the same inputs reproduces the same data. Inputs
are never written to.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .schemas import SchemaError, column, read_table

__all__ = ["FigureSpec", "render"]

KINDS = ("spectrum", "crossing_zoom", "splittings", "transitions", "deepsweep")

# input roles per kind: (required, optional)
INPUT_ROLES = {
    "spectrum": (("spectrum",), ("wells",)),
    "crossing_zoom": (("crossings_zoom",), ()),
    "splittings": (("crossings",), ("crossings_wkb",)),
    "transitions": (("transitions",), ("transitions",)),
    "deepsweep": (("deepsweep",), ()),
}


@dataclass(frozen=True)
class FigureSpec:
    """One figure request: input CSVs, kind, output path, optional ranges."""

    kind: str
    inputs: tuple  # CSV paths in the role order of INPUT_ROLES[kind]
    out_path: str
    xlim: tuple | None = None
    ylim: tuple | None = None
    manifest: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SchemaError(f"unknown figure kind {self.kind!r}; choose from {KINDS}")
        required, optional = INPUT_ROLES[self.kind]
        n_min, n_max = len(required), len(required) + len(optional)
        if not n_min <= len(self.inputs) <= n_max:
            raise SchemaError(
                f"{self.kind} takes {n_min}..{n_max} input CSVs "
                f"({', '.join(required + optional)}), got {len(self.inputs)}"
            )


def _provenance(spec: FigureSpec) -> str | None:
    if spec.manifest is None:
        return None
    manifest = json.loads(Path(spec.manifest).read_text(encoding="utf-8"))
    parts = [f"config {manifest.get('config_sha256', '?')[:12]}"]
    circuit = manifest.get("config", {}).get("circuit", {})
    if "critical_current_amperes" in circuit:
        parts.append(f"I_c = {float(circuit['critical_current_amperes']) * 1e6:g} uA")
    if "capacitance_farads" in circuit:
        parts.append(f"C = {float(circuit['capacitance_farads']) * 1e12:g} pF")
    if "inductance_henries" in circuit:
        parts.append(f"L = {float(circuit['inductance_henries']) * 1e12:g} pH")
    return ", ".join(parts)


def _build_spectrum(spec: FigureSpec, ax):
    data = read_table(spec.inputs[0], "spectrum")
    j = column(data, "J")
    e = column(data, "E_GHz")
    k = column(data, "k").astype(int)
    p = column(data, "p_left")
    for ki in np.unique(k):
        sel = k == ki
        order = np.argsort(j[sel])
        ax.plot(j[sel][order], e[sel][order], color="0.75", lw=0.4, zorder=1)
    left = p > 0.5
    ax.scatter(j[left], e[left], s=2.0, color="crimson", zorder=2, label="left-well states")
    if len(spec.inputs) > 1:
        wells = read_table(spec.inputs[1], "wells")
        ax.plot(
            column(wells, "J"),
            column(wells, "barrier_top_GHz"),
            "k--",
            lw=1.0,
            zorder=3,
            label="barrier top",
        )
    ax.set_xlabel("bias J")
    ax.set_ylabel("E/h (GHz)")
    ax.legend(loc="upper right", fontsize=8)
    return {"J": j, "E_GHz": e, "p_left": p}


def _build_crossing_zoom(spec: FigureSpec, ax):
    data = read_table(spec.inputs[0], "crossings_zoom")
    dj = column(data, "delta_J_from_center") * 1e6
    lo = column(data, "E_lower_GHz")
    hi = column(data, "E_upper_GHz")
    order = np.argsort(dj)
    ax.plot(dj[order], lo[order] * 1e3, "o-", ms=3, label="lower")
    ax.plot(dj[order], hi[order] * 1e3, "s-", ms=3, label="upper")
    gap = (hi - lo).min() * 1e3
    ax.set_title(f"minimal gap {gap:.2f} MHz")
    ax.set_xlabel("bias offset from center (1e-6 J)")
    ax.set_ylabel("E/h (MHz)")
    ax.legend(fontsize=8)
    return {"delta_J": dj, "E_lower_GHz": lo, "E_upper_GHz": hi}


def _build_splittings(spec: FigureSpec, ax):
    data = read_table(spec.inputs[0], "crossings")
    jc = column(data, "J_c")
    delta = column(data, "delta_MHz")
    branch = column(data, "n_L").astype(int)
    cmap = plt.get_cmap("tab10")
    out = {"J_c": jc, "delta_MHz": delta, "n_L": branch}
    if jc.size == 0:
        ax.text(0.5, 0.5, "no crossings in catalog", ha="center", va="center",
                transform=ax.transAxes)
    for b in np.unique(branch):
        sel = branch == b
        ax.scatter(jc[sel], delta[sel], s=18, color=cmap(int(b) % 10),
                   label=f"branch {b} (exact)", zorder=2)
    if len(spec.inputs) > 1:
        wkb = read_table(spec.inputs[1], "crossings_wkb")
        jw = column(wkb, "J")
        dw = column(wkb, "splitting_cubic_MHz")
        bw = column(wkb, "n_l").astype(int)
        out.update({"wkb_J": jw, "wkb_MHz": dw, "wkb_n_l": bw})
        for b in np.unique(bw):
            sel = bw == b
            order = np.argsort(jw[sel])
            ax.plot(jw[sel][order], dw[sel][order], color=cmap(int(b) % 10),
                    lw=1.2, zorder=1)
    ax.set_yscale("log")
    ax.set_xlabel("bias J")
    ax.set_ylabel("splitting (MHz)")
    if jc.size:
        ax.legend(fontsize=7)
    return out


def _build_transitions_panel(path, ax):
    data = read_table(path, "transitions")
    j = column(data, "J")
    e = column(data, "E_GHz")
    w = np.clip(column(data, "weight"), 0.0, 1.0)
    ax.scatter(j, e, s=1.0 + 40.0 * w, alpha=np.clip(w, 0.03, 1.0) ** 0.5,
               color="navy", edgecolors="none")
    ax.set_xlabel("bias J")
    ax.set_ylabel("transition frequency (GHz)")
    return {"J": j, "E_GHz": e, "weight": w}


def _build_deepsweep(spec: FigureSpec, ax):
    data = read_table(spec.inputs[0], "deepsweep")
    ec = column(data, "ec_over_ej")
    dl = column(data, "delta_l_GHz")
    dr = column(data, "delta_r_GHz")
    ax.plot(ec, dl, "--", color="0.3", lw=1.4, label="left-well spacing")
    ax.plot(ec, dr, "-", color="0.6", lw=1.0, label="right-well spacing")
    out = {"ec_over_ej": ec, "delta_l_GHz": dl, "delta_r_GHz": dr}
    for idx, key in enumerate(("delta_n0_MHz", "delta_n1_MHz", "delta_n2_MHz")):
        d = column(data, key) / 1e3  # GHz
        out[key] = d
        ax.plot(ec, d, lw=2.2, label=f"splitting, branch {idx}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("E_C / E_J")
    ax.set_ylabel("frequency (GHz)")
    # top axis: harmonic right-well state count, which scales as
    # (E_C/E_J)^(-1/2); calibrate the power law from the data
    nr = column(data, "n_r_harmonic")
    a = float(np.median(nr * np.sqrt(ec)))
    floor = a * 1e-150  # keeps matplotlib's off-scale probe values finite
    sec = ax.secondary_xaxis(
        "top",
        functions=(
            lambda x: a / np.sqrt(np.maximum(x, floor)),
            lambda y: (a / np.maximum(y, floor)) ** 2,
        ),
    )
    sec.set_xlabel("right-well states (harmonic)")
    ax.legend(fontsize=7)
    return out


def render(spec: FigureSpec) -> dict:
    """Write the figure and return the plotted arrays."""
    if spec.kind == "transitions":
        n = len(spec.inputs)
        fig, axes = plt.subplots(1, n, figsize=(5.0 * n, 4.0), squeeze=False)
        data = {}
        for i, (path, ax) in enumerate(zip(spec.inputs, axes[0])):
            data[f"panel{i}"] = _build_transitions_panel(path, ax)
            if spec.xlim:
                ax.set_xlim(*spec.xlim)
            if spec.ylim:
                ax.set_ylim(*spec.ylim)
    else:
        fig, ax = plt.subplots(figsize=(6.0, 4.5))
        builder = {
            "spectrum": _build_spectrum,
            "crossing_zoom": _build_crossing_zoom,
            "splittings": _build_splittings,
            "deepsweep": _build_deepsweep,
        }[spec.kind]
        data = builder(spec, ax)
        if spec.xlim:
            ax.set_xlim(*spec.xlim)
        if spec.ylim:
            ax.set_ylim(*spec.ylim)
    note = _provenance(spec)
    if note:
        fig.text(0.01, 0.01, note, fontsize=6, color="0.4")
    fig.tight_layout()
    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=160)
    plt.close(fig)
    return data
