"""Random-state generation for the Monte-Carlo experiments.

Determinism contract: every sample is a pure function of ``(seed, index,
family)``. Each index owns a fixed range of Philox counter blocks (4 uniform
words per block), so batches may be generated in any chunking - including
across worker threads - and always produce identical values. Distribution
transforms are built from raw uniforms only (inverse-CDF exponentials,
Box-Muller normals), keeping golden sequences stable across library versions.

Families:

* ``spun``       - rotation-averaged states: populations flat-Dirichlet over
                   (p_s, a, b), z-magnetisation uniform on [-b, b], coherence
                   ratio eta uniform on [0, 1], phase uniform on [0, 2pi)
* ``ginibre``    - G G^dag / Tr with G a 4x4 matrix of standard complex normals
* ``separable``  - Dirichlet-weighted mixtures of product states with Bloch
                   vectors uniform in the unit ball
* ``saturating`` - the a = 0 family that attains the concurrence bound, with
                   p_s uniform on [0, 1] and m uniform on [0, 1 - p_s]
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpunState, Unphysical
from .states import ProductState, from_coupled_basis, product_state_density, validate

FAMILIES = ("spun", "ginibre", "separable", "saturating")

_TWO_PI = 2.0 * np.pi
_SUM_TOL = 1e-12


@dataclass(frozen=True)
class SpunState:
    """Six-parameter form of a state averaged over common z-rotations.

    p_s, a and b are the singlet, triplet-zero and (t1 + t-1) populations,
    m the z-magnetisation (may be negative; bounds consume |m|), eta in [0, 1]
    scales the s0/t0 coherence c = eta * sqrt(a * p_s), and phi is its phase.
    """

    p_s: float
    a: float
    b: float
    m: float
    eta: float
    phi: float

    def __post_init__(self):
        for name in ("p_s", "a", "b", "m", "eta", "phi"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if min(self.p_s, self.a, self.b) < -_SUM_TOL:
            raise InvalidSpunState(
                f"negative population (p_s={self.p_s}, a={self.a}, b={self.b})"
            )
        total = self.p_s + self.a + self.b
        if abs(total - 1.0) > _SUM_TOL:
            raise InvalidSpunState(f"populations sum to {total!r}, not 1")
        if abs(self.m) > self.b + _SUM_TOL:
            raise InvalidSpunState(f"|m| = {abs(self.m)} exceeds b = {self.b}")
        if not 0.0 <= self.eta <= 1.0 + _SUM_TOL:
            raise InvalidSpunState(f"eta = {self.eta} outside [0, 1]")

    @property
    def coherence(self) -> float:
        """Magnitude c of the s0/t0 coherence; c^2 <= a * p_s by construction."""
        return self.eta * np.sqrt(max(self.a, 0.0) * max(self.p_s, 0.0))


@dataclass(frozen=True)
class SeparableMixture:
    """Convex mixture of product states; weights are normalised to 1."""

    components: tuple

    def __post_init__(self):
        comps = tuple((float(w), p) for w, p in self.components)
        object.__setattr__(self, "components", comps)
        total = sum(w for w, _ in comps)
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"mixture weights sum to {total!r}, not 1")
        if any(w < -_SUM_TOL for w, _ in comps):
            raise ValueError("mixture weights must be nonnegative")


@dataclass(frozen=True)
class SamplerConfig:
    seed: int
    count: int
    family: str

    def __post_init__(self):
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")


def _uniform_block(seed: int, start: int, count: int, blocks_per_sample: int) -> np.ndarray:
    """Uniform words for samples [start, start+count), shape (count, 4*blocks)."""
    bg = np.random.Philox(key=np.array([seed, 0], dtype=np.uint64))
    if start:
        bg.advance(start * blocks_per_sample)
    words = 4 * blocks_per_sample
    return np.random.Generator(bg).random(count * words).reshape(count, words)


def _exponentials(u: np.ndarray) -> np.ndarray:
    # u in [0, 1) so 1 - u in (0, 1]; -log is a unit-rate exponential
    return -np.log1p(-u)


def _normals(u: np.ndarray) -> np.ndarray:
    """Box-Muller transform of an even number of uniforms."""
    u = u.reshape(-1, 2)
    r = np.sqrt(2.0 * _exponentials(u[:, 0]))
    ang = _TWO_PI * u[:, 1]
    return np.stack([r * np.cos(ang), r * np.sin(ang)], axis=1).reshape(-1)


def _spun_from_words(u: np.ndarray) -> SpunState:
    e = _exponentials(u[:3])
    tot = e[0] + e[1] + e[2]
    p_s, a, b = e[0] / tot, e[1] / tot, e[2] / tot
    m = (2.0 * u[3] - 1.0) * b
    return SpunState(p_s=p_s, a=a, b=b, m=m, eta=u[4], phi=_TWO_PI * u[5])


def sample_spun(cfg: SamplerConfig, start: int = 0) -> list[SpunState]:
    """Spun-form states; sample i depends only on (seed, start + i)."""
    assert cfg.family == "spun"
    rows = _uniform_block(cfg.seed, start, cfg.count, blocks_per_sample=2)
    return [_spun_from_words(row) for row in rows]


def _ginibre_from_words(u: np.ndarray) -> np.ndarray:
    z = _normals(u[:32])
    g = z[:16].reshape(4, 4) + 1j * z[16:32].reshape(4, 4)
    rho = g @ g.conj().T
    return validate(rho / np.trace(rho).real)


def sample_ginibre(cfg: SamplerConfig, start: int = 0) -> list[np.ndarray]:
    """Full-rank random mixed states G G^dag / Tr[G G^dag]."""
    assert cfg.family == "ginibre"
    rows = _uniform_block(cfg.seed, start, cfg.count, blocks_per_sample=8)
    return [_ginibre_from_words(row) for row in rows]


def _bloch_from_words(u: np.ndarray) -> np.ndarray:
    # 4 uniforms -> 4 normals (one discarded) for the direction, 1 for the radius
    n = _normals(u[:4])[:3]
    norm = np.linalg.norm(n)
    if norm == 0.0:  # pragma: no cover - probability ~ 2**-150
        n, norm = np.array([0.0, 0.0, 1.0]), 1.0
    return (u[4] ** (1.0 / 3.0)) * n / norm


def _separable_from_words(u: np.ndarray, max_components: int) -> SeparableMixture:
    k = 1 + int(u[0] * max_components)
    raw = np.array([_exponentials(u[1 + j * 11]) for j in range(k)])
    weights = raw / raw.sum()
    comps = []
    for j in range(k):
        base = 1 + j * 11
        va = _bloch_from_words(u[base + 1 : base + 6])
        vb = _bloch_from_words(u[base + 6 : base + 11])
        comps.append((weights[j], ProductState(va, vb)))
    return SeparableMixture(tuple(comps))


def sample_separable(
    cfg: SamplerConfig, max_components: int = 4, start: int = 0
) -> list[SeparableMixture]:
    """Mixtures of 1..max_components product states (separable by construction)."""
    assert cfg.family == "separable"
    if max_components < 1:
        raise ValueError("max_components must be >= 1")
    words = 1 + 11 * max_components
    blocks = -(-words // 4)
    rows = _uniform_block(cfg.seed, start, cfg.count, blocks_per_sample=blocks)
    return [_separable_from_words(row, max_components) for row in rows]


def sample_saturating(cfg: SamplerConfig, start: int = 0) -> list[np.ndarray]:
    """Bound-attaining states at observable pairs uniform over the physical wedge."""
    assert cfg.family == "saturating"
    rows = _uniform_block(cfg.seed, start, cfg.count, blocks_per_sample=1)
    return [saturating_state(row[0], row[1] * (1.0 - row[0])) for row in rows]


def mixture_density(mix: SeparableMixture) -> np.ndarray:
    """Density operator of a separable mixture."""
    rho = np.zeros((4, 4), dtype=np.complex128)
    for w, p in mix.components:
        rho += w * product_state_density(p)
    return validate(rho)


def to_density(s: SpunState) -> np.ndarray:
    """Density operator of a spun state (computational basis).

    Coupled-basis diagonal is (p_s, (b+m)/2, a, (b-m)/2) with the s0/t0
    coherence c * exp(+-i phi).
    """
    c = s.coherence
    coupled = np.zeros((4, 4), dtype=np.complex128)
    coupled[0, 0] = s.p_s
    coupled[1, 1] = (s.b + s.m) / 2.0
    coupled[2, 2] = s.a
    coupled[3, 3] = (s.b - s.m) / 2.0
    coupled[0, 2] = c * np.exp(1j * s.phi)
    coupled[2, 0] = c * np.exp(-1j * s.phi)
    return validate(from_coupled_basis(coupled))


def saturating_state(p_s: float, m: float) -> np.ndarray:
    """State with observables (p_s, m) whose concurrence equals the certified bound.

    The t0 population and coherence vanish; all non-singlet weight sits in the
    polarised triplets: diag(p_s, (1-p_s+m)/2, 0, (1-p_s-m)/2) in the coupled
    basis. Raises Unphysical when p_s + |m| > 1.
    """
    p_s, m = float(p_s), float(m)
    if not 0.0 <= p_s <= 1.0:
        raise Unphysical(f"p_s = {p_s} outside [0, 1]")
    if p_s + abs(m) > 1.0 + 1e-12:
        raise Unphysical(f"p_s + |m| = {p_s + abs(m):.12f} exceeds 1")
    b = 1.0 - p_s
    coupled = np.diag(
        np.array([p_s, (b + m) / 2.0, 0.0, (b - m) / 2.0], dtype=np.complex128)
    )
    return validate(from_coupled_basis(coupled))
