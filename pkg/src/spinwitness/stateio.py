"""JSON serialisation of two-spin states.

Schema::

    {
      "basis": "computational" | "coupled",
      "matrix": [[[re, im], ...4], ...4]   # row-major
    }

Loading converts to the internal computational-basis representation and
validates the result.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .states import from_coupled_basis, to_coupled_basis, validate

_BASES = ("computational", "coupled")


def state_to_dict(rho: np.ndarray, basis: str = "computational") -> dict:
    """Encode a computational-basis state for JSON output."""
    if basis not in _BASES:
        raise ValueError(f"basis must be one of {_BASES}, got {basis!r}")
    m = np.asarray(rho, dtype=np.complex128)
    if basis == "coupled":
        m = to_coupled_basis(m)
    matrix = [[[float(x.real), float(x.imag)] for x in row] for row in m]
    return {"basis": basis, "matrix": matrix}


def state_from_dict(obj: dict) -> np.ndarray:
    """Decode and validate a state; always returns the computational basis."""
    if not isinstance(obj, dict):
        raise ValueError("state document must be a JSON object")
    basis = obj.get("basis")
    if basis not in _BASES:
        raise ValueError(f"'basis' must be one of {_BASES}, got {basis!r}")
    matrix = obj.get("matrix")
    if not (isinstance(matrix, list) and len(matrix) == 4):
        raise ValueError("'matrix' must be a 4x4 array of [re, im] pairs")
    m = np.empty((4, 4), dtype=np.complex128)
    for i, row in enumerate(matrix):
        if not (isinstance(row, list) and len(row) == 4):
            raise ValueError(f"matrix row {i} must have 4 entries")
        for j, cell in enumerate(row):
            if not (isinstance(cell, (list, tuple)) and len(cell) == 2):
                raise ValueError(f"matrix entry ({i},{j}) must be a [re, im] pair")
            m[i, j] = complex(float(cell[0]), float(cell[1]))
    if basis == "coupled":
        m = from_coupled_basis(m)
    return validate(m)


def save_state(rho: np.ndarray, path: str | Path, basis: str = "computational") -> None:
    Path(path).write_text(json.dumps(state_to_dict(rho, basis), indent=2) + "\n")


def load_state(path: str | Path) -> np.ndarray:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return state_from_dict(obj)
