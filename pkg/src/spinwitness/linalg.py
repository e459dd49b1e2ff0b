"""Hermitian linear algebra for the fixed 4x4 problems used everywhere else.

All inputs and outputs are dense complex128 arrays. Eigenvalues below
``-PSD_CLIP`` are treated as genuine negativity; anything in
``[-PSD_CLIP, 0)`` is floating-point noise and clipped to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPSD

HERMITICITY_TOL = 1e-9
PSD_CLIP = 1e-10
NOISE_FLOOR = 1e-14


@dataclass(frozen=True)
class HermitianEigenResult:
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermiticity_defect(m: np.ndarray) -> float:
    """Max-norm distance of ``m`` from its own conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T)))


def hermitian_eigen(m: np.ndarray) -> HermitianEigenResult:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NotHermitian when max |M - M^dag| exceeds 1e-9, NoConvergence if
    the underlying iteration fails (not observed at this size).
    """
    m = np.asarray(m, dtype=np.complex128)
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_TOL:
        raise NotHermitian(f"max |M - M^dag| = {defect:.3e} exceeds {HERMITICITY_TOL:.1e}")
    try:
        w, v = np.linalg.eigh((m + m.conj().T) / 2.0)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - 4x4 eigh always converges
        raise NoConvergence(str(exc)) from exc
    return HermitianEigenResult(eigenvalues=w, eigenvectors=v)


def matrix_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Hermitian square root of a Hermitian PSD matrix.

    Eigenvalues in [-PSD_CLIP, 0) are clipped to zero; anything lower raises
    NotPSD with the offending eigenvalue in the message. Positive eigenvalues
    below NOISE_FLOOR are also zeroed: they sit at solver noise level, and the
    square root would otherwise amplify them to ~1e-8 and turn rank-deficient
    inputs into full-rank roots.
    """
    res = hermitian_eigen(m)
    lo = float(res.eigenvalues[0])
    if lo < -PSD_CLIP:
        raise NotPSD(f"min eigenvalue {lo:.3e} below -{PSD_CLIP:.1e}")
    w = np.where(res.eigenvalues < NOISE_FLOOR, 0.0, res.eigenvalues)
    v = res.eigenvectors
    s = (v * np.sqrt(w)) @ v.conj().T
    return (s + s.conj().T) / 2.0


def conjugate_by(a: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Return ``u^dag @ a @ u``."""
    u = np.asarray(u, dtype=np.complex128)
    return u.conj().T @ np.asarray(a, dtype=np.complex128) @ u
