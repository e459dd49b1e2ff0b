"""Two-spin density operators, basis conventions, and the two measured observables.

Basis conventions (fixed globally):

* computational order: ``|uu>, |ud>, |du>, |dd>`` (site A first, u = spin up)
* coupled order: ``|s0>, |t1>, |t0>, |t-1>`` with

  - ``|s0> = (|ud> - |du>) / sqrt(2)`` (antisymmetric singlet; this sign fixes
    the phase of the s0/t0 coherence)
  - ``|t1> = |uu>``, ``|t0> = (|ud> + |du>) / sqrt(2)``, ``|t-1> = |dd>``

The change-of-basis matrix (coupled kets as columns, computational rows) is::

    [[ 0      , 1, 0      , 0],
     [ 1/sqrt2, 0, 1/sqrt2, 0],
     [-1/sqrt2, 0, 1/sqrt2, 0],
     [ 0      , 0, 0      , 1]]

States are stored in the computational basis; the coupled basis is a view
obtained with :func:`to_coupled_basis`. Validated density matrices are
returned as read-only arrays and every operation here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BlochNormExceeded, NotHermitian, NotPSD, NotUnitTrace, Unphysical
from .linalg import hermiticity_defect

HERMITIAN_TOL = 1e-9
TRACE_TOL = 1e-9
PSD_TOL = 1e-9
BLOCH_TOL = 1e-9
PHYSICAL_TOL = 1e-9

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

_SQ2 = 1.0 / np.sqrt(2.0)

SINGLET_KET = np.array([0.0, _SQ2, -_SQ2, 0.0], dtype=np.complex128)

# Columns: |s0>, |t1>, |t0>, |t-1> expressed in the computational basis.
COUPLED_BASIS_MATRIX = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [_SQ2, 0.0, _SQ2, 0.0],
        [-_SQ2, 0.0, _SQ2, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ],
    dtype=np.complex128,
)

# Total-spin projection S_z = (sigma_z^A + sigma_z^B)/2 is diagonal in both bases.
SZ_COMPUTATIONAL = np.array([1.0, 0.0, 0.0, -1.0])
SZ_COUPLED = np.array([0.0, 1.0, 0.0, -1.0])

_TOTAL_SPIN_OPS = tuple(
    (np.kron(s, np.eye(2)) + np.kron(np.eye(2), s)) / 2.0 for s in PAULI
)


def _freeze(m: np.ndarray) -> np.ndarray:
    out = np.array(m, dtype=np.complex128)
    out.flags.writeable = False
    return out


def _check_bloch(v, label: str) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64).reshape(3)
    n = float(np.linalg.norm(v))
    if n > 1.0 + BLOCH_TOL:
        raise BlochNormExceeded(f"|{label}| = {n:.12f} exceeds 1")
    return v


@dataclass(frozen=True)
class ProductState:
    """Pair of single-qubit Bloch vectors describing an uncorrelated two-spin state."""

    bloch_a: np.ndarray
    bloch_b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bloch_a", _check_bloch(self.bloch_a, "v_A"))
        object.__setattr__(self, "bloch_b", _check_bloch(self.bloch_b, "v_B"))


@dataclass(frozen=True)
class Observables:
    """The measured pair: singlet fraction and magnetisation vector.

    Construction enforces 0 <= p_s <= 1, |m| <= 1 and the probability
    normalisation p_s <= 1 - |m| (within tolerance).
    """

    singlet_fraction: float
    magnetisation: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        ps = float(self.singlet_fraction)
        m = np.asarray(self.magnetisation, dtype=np.float64).reshape(3)
        object.__setattr__(self, "singlet_fraction", ps)
        object.__setattr__(self, "magnetisation", m)
        if not -1e-12 <= ps <= 1.0 + 1e-12:
            raise ValueError(f"singlet fraction {ps} outside [0, 1]")
        m_abs = float(np.linalg.norm(m))
        if m_abs > 1.0 + 1e-9:
            raise ValueError(f"|m| = {m_abs} exceeds 1")
        if ps > 1.0 - m_abs + PHYSICAL_TOL:
            raise Unphysical(
                f"p_s = {ps:.12f} exceeds 1 - |m| = {1.0 - m_abs:.12f}: "
                "probability normalisation violated"
            )

    @property
    def m_abs(self) -> float:
        return float(np.linalg.norm(self.magnetisation))


def validate(matrix: np.ndarray) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return a read-only copy.

    Raises NotHermitian / NotUnitTrace / NotPSD naming the violated invariant
    and its magnitude.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("matrix has non-finite entries")
    defect = hermiticity_defect(m)
    if defect > HERMITIAN_TOL:
        raise NotHermitian(f"max |M - M^dag| = {defect:.3e} exceeds {HERMITIAN_TOL:.1e}")
    tr = float(np.trace(m).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotUnitTrace(f"|trace - 1| = {abs(tr - 1.0):.3e} exceeds {TRACE_TOL:.1e}")
    w = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    if w[0] < -PSD_TOL:
        raise NotPSD(f"min eigenvalue {float(w[0]):.3e} below -{PSD_TOL:.1e}")
    return _freeze(m)


def to_coupled_basis(rho: np.ndarray) -> np.ndarray:
    """Rewrite a computational-basis state in the coupled (s0, t1, t0, t-1) basis."""
    u = COUPLED_BASIS_MATRIX
    return u.conj().T @ np.asarray(rho, dtype=np.complex128) @ u


def from_coupled_basis(rho_coupled: np.ndarray) -> np.ndarray:
    """Inverse of :func:`to_coupled_basis`."""
    u = COUPLED_BASIS_MATRIX
    return u @ np.asarray(rho_coupled, dtype=np.complex128) @ u.conj().T


def singlet_fraction(rho: np.ndarray) -> float:
    """Population <s0| rho |s0> of the antisymmetric singlet state."""
    val = float(np.real(SINGLET_KET.conj() @ np.asarray(rho) @ SINGLET_KET))
    return min(max(val, 0.0), 1.0)


def magnetisation(rho: np.ndarray) -> np.ndarray:
    """Ensemble magnetisation Tr[S rho] with S = (sigma_A + sigma_B)/2."""
    rho = np.asarray(rho, dtype=np.complex128)
    return np.array([float(np.trace(op @ rho).real) for op in _TOTAL_SPIN_OPS])


def _reduced_density(rho: np.ndarray, site: str) -> np.ndarray:
    r = np.asarray(rho, dtype=np.complex128).reshape(2, 2, 2, 2)
    if site == "A":
        return np.einsum("abcb->ac", r)
    if site == "B":
        return np.einsum("abad->bd", r)
    raise ValueError(f"site must be 'A' or 'B', got {site!r}")


def reduced_bloch(rho: np.ndarray, site: str) -> np.ndarray:
    """Bloch vector of the one-spin state obtained by tracing out the other site."""
    red = _reduced_density(rho, site)
    return np.array([float(np.trace(s @ red).real) for s in PAULI])


def product_state_density(p: ProductState) -> np.ndarray:
    """Tensor product of the two single-spin states (I + v.sigma)/2."""
    factors = []
    for v in (p.bloch_a, p.bloch_b):
        one = np.eye(2, dtype=np.complex128) / 2.0
        for comp, s in zip(v, PAULI):
            one = one + (comp / 2.0) * s
        factors.append(one)
    return _freeze(np.kron(factors[0], factors[1]))


def separable_singlet_fraction(p: ProductState) -> float:
    """Singlet fraction of a product state: (1 - v_A . v_B) / 4."""
    return float(1.0 - np.dot(p.bloch_a, p.bloch_b)) / 4.0


def observables(rho: np.ndarray) -> Observables:
    """Extract the measured (p_s, m) pair from a valid state."""
    return Observables(singlet_fraction(rho), magnetisation(rho))
