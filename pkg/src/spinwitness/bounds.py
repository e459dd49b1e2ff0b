"""Closed-form entanglement bounds and the witness built on them.

Everything here consumes only the two ensemble observables: the singlet
fraction p_s and a magnetisation magnitude m. The central facts:

* any state satisfies p_s <= 1 - m (probability normalisation);
* a separable state satisfies p_s <= (1 - m^2) / 2, and pure product states
  sit exactly on that line, so the condition p_s > (1 - m^2) / 2 is a tight
  sufficient witness of entanglement;
* the concurrence is bounded below by p_s - sqrt((1 - p_s)^2 - m^2), and the
  level sets of that bound are p_s = (1 - C^2 - m^2) / (2 (1 - C)) for
  m <= 1 - C.

If only the z component of the magnetisation is known, the same formulas with
|m_z| remain sufficient but are no longer tight.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomain, Unphysical
from .sampling import SpunState
from .states import Observables

PHYSICAL_TOL = 1e-9
CERT_MARGIN = 1e-12

MODE_FULL = "full-vector"
MODE_Z = "z-only"


@dataclass(frozen=True)
class WitnessVerdict:
    """Certified minimum concurrence plus the diagnostics behind it."""

    min_concurrence: float
    entangled_certified: bool
    singlet_bound_value: float
    physical: bool
    mode: str


def _check_inputs(p_s: float, m: float) -> tuple[float, float]:
    p_s, m = float(p_s), float(m)
    if not 0.0 <= p_s <= 1.0:
        raise ValueError(f"p_s = {p_s} outside [0, 1]")
    if not 0.0 <= m <= 1.0:
        raise ValueError(f"m = {m} outside [0, 1]")
    return p_s, m


def min_concurrence_bound(p_s: float, m: float) -> float:
    """Lower bound max[p_s - sqrt((1 - p_s)^2 - m^2), 0] on the concurrence.

    ``m`` is the magnitude of the full magnetisation vector. Raises
    Unphysical when p_s > 1 - m beyond tolerance; the bound is zero exactly
    when p_s <= (1 - m^2) / 2.
    """
    p_s, m = _check_inputs(p_s, m)
    if p_s > 1.0 - m + PHYSICAL_TOL:
        raise Unphysical(
            f"p_s = {p_s:.12f} exceeds 1 - m = {1.0 - m:.12f}: "
            "probability normalisation violated"
        )
    # factored form of (1 - p_s)^2 - m^2: no cancellation near p_s + m = 1
    gap = max(1.0 - p_s - m, 0.0) * (1.0 - p_s + m)
    return float(max(p_s - np.sqrt(gap), 0.0))


def singlet_bound(m: float) -> float:
    """Separability threshold (1 - m^2) / 2; entanglement is certified above it."""
    _, m = _check_inputs(0.0, m)
    return (1.0 - m * m) / 2.0


def contour_min_ps(concurrence: float, m: float) -> float:
    """Minimum singlet fraction guaranteeing at least the given concurrence.

    Valid for 0 <= C < 1 and m <= 1 - C; returns (1 - C^2 - m^2)/(2 (1 - C)).
    At m = 0 this is (1 + C)/2 and at m = 1 - C it equals C; the C -> 0 limit
    recovers :func:`singlet_bound`.
    """
    c = float(concurrence)
    _, m = _check_inputs(0.0, m)
    if not 0.0 <= c < 1.0:
        raise ValueError(f"concurrence target {c} outside [0, 1)")
    if m > 1.0 - c + 1e-12:
        raise OutOfDomain(f"m = {m} exceeds 1 - C = {1.0 - c}")
    return (1.0 - c * c - m * m) / (2.0 * (1.0 - c))


def spun_entanglement_condition(s: SpunState) -> bool:
    """True exactly when the closed-form concurrence of ``s`` is positive.

    Evaluated in the cross-multiplied form 2 p_s (1 - 2a + 2 a eta^2 sin^2 phi)
    > 1 - 2a - m^2, which stays valid when the bracket changes sign.
    """
    sin_phi = np.sin(s.phi)
    bracket = 1.0 - 2.0 * s.a + 2.0 * s.a * s.eta * s.eta * sin_phi * sin_phi
    return 2.0 * s.p_s * bracket > 1.0 - 2.0 * s.a - s.m * s.m


def supremum_check(m: float, grid_resolution: int, eta_power: int = 2) -> float:
    """Grid maximum of the singlet-fraction threshold over all spun parameters.

    Scans the right-hand side of the explicit entanglement condition,
    0.5 (1 - 2a - m^2) / (1 - 2a + 2a eta^k sin^2 phi), over the feasible
    (a, eta, phi) box, skipping points where the denominator is nonpositive
    (no threshold exists there). The maximum is attained at a = 0 and equals
    (1 - m^2) / 2 for either coherence exponent k in {1, 2}; the grid value
    approaches it from below.
    """
    _, m = _check_inputs(0.0, m)
    if grid_resolution < 2:
        raise ValueError("grid_resolution must be >= 2")
    if eta_power not in (1, 2):
        raise ValueError("eta_power must be 1 or 2")
    a = np.linspace(0.0, 1.0 - m, grid_resolution)[:, None, None]
    eta = np.linspace(0.0, 1.0, grid_resolution)[None, :, None]
    phi = np.linspace(0.0, 2.0 * np.pi, grid_resolution, endpoint=False)[None, None, :]
    denom = 1.0 - 2.0 * a + 2.0 * a * eta**eta_power * np.sin(phi) ** 2
    numer = 1.0 - 2.0 * a - m * m
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = 0.5 * numer / denom
    vals = np.where(denom > 0.0, vals, -np.inf)
    return float(vals.max())


def reference_min_ps(concurrence: float) -> float:
    """Threshold (1 + sqrt(1 + 3 C^2)) / 3 from the generalised fidelity witness.

    Kept only as a comparison curve for plots; never used for certification
    (it is weaker than :func:`contour_min_ps` at every magnetisation).
    """
    c = float(concurrence)
    return float((1.0 + np.sqrt(1.0 + 3.0 * c * c)) / 3.0)


def witness(obs: Observables, mode: str = MODE_FULL) -> WitnessVerdict:
    """Certify a minimum concurrence from the measured observables.

    ``full-vector`` mode uses |m| and is tight; ``z-only`` uses |m_z| and is
    sufficient but not tight. Certification requires the singlet fraction to
    sit strictly above the separability threshold (margin 1e-12); on or below
    the line the verdict reports zero. Raises Unphysical if the pair violates
    probability normalisation.
    """
    if mode not in (MODE_FULL, MODE_Z):
        raise ValueError(f"mode must be {MODE_FULL!r} or {MODE_Z!r}, got {mode!r}")
    m = obs.m_abs if mode == MODE_FULL else abs(float(obs.magnetisation[2]))
    p_s = obs.singlet_fraction
    bound = singlet_bound(m)
    certified = p_s > bound + CERT_MARGIN
    min_c = min_concurrence_bound(p_s, m) if certified else 0.0
    return WitnessVerdict(
        min_concurrence=min_c,
        entangled_certified=certified and min_c > 0.0,
        singlet_bound_value=bound,
        physical=True,
        mode=mode,
    )
