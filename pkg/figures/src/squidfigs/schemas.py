"""Documented CSV schemas of the solver CLI, and a strict reader.

Column names and order are the published interface contract; anything
missing is rejected with a column-level error before rendering starts.
"""

from pathlib import Path

import numpy as np

__all__ = ["SCHEMAS", "SchemaError", "read_table", "column"]

SCHEMAS = {
    "spectrum": ["J", "I_amperes", "k", "E_GHz", "p_left", "branch_label"],
    "wells": [
        "J",
        "gamma_left_min",
        "gamma_barrier_top",
        "gamma_right_min",
        "delta_u_left_GHz",
        "delta_u_right_GHz",
        "barrier_top_GHz",
    ],
    "crossings": [
        "n_L",
        "J_c",
        "I_c_nA_offset",
        "delta_MHz",
        "width_nA",
        "slope_H",
        "slope_V",
    ],
    "crossings_wkb": ["n_l", "J", "N_L", "splitting_cubic_MHz"],
    "crossings_zoom": ["n_L", "J", "delta_J_from_center", "E_lower_GHz", "E_upper_GHz"],
    "transitions": [
        "J",
        "I_amperes",
        "pair",
        "E_GHz",
        "weight",
        "k_initial",
        "k_final",
        "p_left_initial",
        "p_left_final",
    ],
    "deepsweep": [
        "ec_over_ej",
        "bias_j",
        "n_r_harmonic",
        "delta_l_GHz",
        "delta_r_GHz",
        "delta_n0_MHz",
        "delta_n1_MHz",
        "delta_n2_MHz",
        "flags",
    ],
}


class SchemaError(Exception):
    """Input table does not match the documented schema."""


def read_table(path: str | Path, schema: str) -> dict:
    """Read a CSV written by the solver CLI into {column: list}.

    Raises SchemaError naming every missing column. Extra columns are
    tolerated (forward compatibility) but ignored.
    """
    expected = SCHEMAS[schema]
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise SchemaError(f"{path}: empty file, expected a {schema} table")
    header = lines[0].split(",")
    missing = [c for c in expected if c not in header]
    if missing:
        raise SchemaError(
            f"{path}: not a valid {schema} table; missing column(s) {missing} "
            f"(found {header})"
        )
    index = {c: header.index(c) for c in expected}
    data = {c: [] for c in expected}
    for line in lines[1:]:
        if not line:
            continue
        cells = line.split(",")
        for c in expected:
            data[c].append(cells[index[c]])
    return data


def column(data: dict, name: str) -> np.ndarray:
    """Numeric view of one column."""
    return np.array([float(x) for x in data[name]])
