"""Averaging a two-spin state over common rotations about the z axis.

The average kills every coherence between sectors of different total spin
projection S_z while leaving the sector populations and the s0/t0 coherence
untouched. ``twirl_analytic`` applies that projection exactly by zeroing
coupled-basis elements; ``twirl_numeric`` discretises the rotation average
and exists as an independent oracle. Rotations are local operations, so the
twirled state is never more entangled than its input.

The axis is always z. For a state whose magnetisation points elsewhere,
rotate it so the magnetisation is along z before twirling if the full vector
magnitude is to be preserved; twirling as-is preserves only the z component.
"""

from __future__ import annotations

import numpy as np

from .states import SZ_COUPLED, from_coupled_basis, to_coupled_basis

DEFAULT_POINTS = 16

# entries to keep: same-S_z pairs, i.e. the {s0, t0} block plus the diagonal
_KEEP = np.equal.outer(SZ_COUPLED, SZ_COUPLED)


def twirl_analytic(rho: np.ndarray) -> np.ndarray:
    """Project onto the rotation-averaged form by zeroing cross-sector coherences."""
    coupled = to_coupled_basis(rho)
    return from_coupled_basis(np.where(_KEEP, coupled, 0.0))


def twirl_numeric(rho: np.ndarray, n_points: int = DEFAULT_POINTS) -> np.ndarray:
    """Uniform-grid average over z rotations exp(i theta S_z).

    The integrand contains harmonics at most of order two in theta, so any
    grid of >= 5 equally spaced points is exact up to rounding; n_points >= 8
    is required as a safety margin.
    """
    if n_points < 8:
        raise ValueError(f"n_points must be >= 8, got {n_points}")
    rho = np.asarray(rho, dtype=np.complex128)
    # S_z is diagonal in the computational basis: (1, 0, 0, -1)
    sz = np.array([1.0, 0.0, 0.0, -1.0])
    acc = np.zeros((4, 4), dtype=np.complex128)
    for k in range(n_points):
        theta = 2.0 * np.pi * k / n_points
        u = np.exp(1j * theta * sz)
        acc += np.conj(u)[:, None] * rho * u[None, :]
    return acc / n_points
