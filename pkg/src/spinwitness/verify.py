"""Self-verification suite: every library invariant as a named numeric check.

Each check returns the worst violation it observed so a failure report can
say how badly an inequality broke, not just that it did. ``bound_fn`` exists
as a hook so a deliberately wrong bound can be injected to prove the suite
detects it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bounds import (
    contour_min_ps,
    min_concurrence_bound,
    singlet_bound,
    spun_entanglement_condition,
    supremum_check,
    witness,
)
from .concurrence import spun_concurrence_closed_form, wootters_concurrence
from .sampling import (
    SamplerConfig,
    mixture_density,
    sample_ginibre,
    sample_separable,
    sample_spun,
    saturating_state,
    to_density,
)
from .states import observables
from .twirl import twirl_analytic, twirl_numeric

BoundFn = Callable[[float, float], float]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    detail: str


def _result(name: str, worst: float, tol: float, detail: str) -> CheckResult:
    return CheckResult(name=name, passed=worst <= tol, worst=worst, detail=detail)


def check_bound_validity_spun(seed: int, n: int, bound_fn: BoundFn | None = None) -> CheckResult:
    """Concurrence of every spun sample sits above the certified bound."""
    bound = bound_fn or min_concurrence_bound
    worst = -np.inf
    for s in sample_spun(SamplerConfig(seed=seed, count=n, family="spun")):
        c = spun_concurrence_closed_form(s).concurrence
        worst = max(worst, bound(s.p_s, abs(s.m)) - c)
    return _result("bound-validity-spun", worst, 1e-9, f"n={n}, worst gap {worst:.3e}")


def check_bound_validity_ginibre(
    seed: int, n: int, bound_fn: BoundFn | None = None
) -> CheckResult:
    """Concurrence of arbitrary random states sits above the bound at (p_s, |m|)."""
    bound = bound_fn or min_concurrence_bound
    worst = -np.inf
    for rho in sample_ginibre(SamplerConfig(seed=seed + 1, count=n, family="ginibre")):
        obs = observables(rho)
        c = wootters_concurrence(rho).concurrence
        worst = max(worst, bound(obs.singlet_fraction, obs.m_abs) - c)
    return _result("bound-validity-ginibre", worst, 1e-9, f"n={n}, worst gap {worst:.3e}")


def check_separable_bound(seed: int, n: int, max_components: int = 4) -> CheckResult:
    """No separable mixture exceeds (1 - m^2)/2 or gets certified."""
    worst = -np.inf
    certified = 0
    cfg = SamplerConfig(seed=seed + 2, count=n, family="separable")
    for mix in sample_separable(cfg, max_components=max_components):
        obs = observables(mixture_density(mix))
        worst = max(worst, obs.singlet_fraction - singlet_bound(obs.m_abs))
        if witness(obs).entangled_certified:
            certified += 1
    ok = worst <= 1e-9 and certified == 0
    return CheckResult(
        "separable-bound", ok, worst, f"n={n}, worst excess {worst:.3e}, certified {certified}"
    )


def check_twirl_oracle(seed: int, n: int = 1000, n_points: int = 16) -> CheckResult:
    """Analytic projection equals the discretised rotation average."""
    worst = 0.0
    for rho in sample_ginibre(SamplerConfig(seed=seed + 3, count=n, family="ginibre")):
        dev = np.max(np.abs(twirl_analytic(rho) - twirl_numeric(rho, n_points)))
        worst = max(worst, float(dev))
    return _result("twirl-oracle", worst, 1e-10, f"n={n}, max deviation {worst:.3e}")


def check_twirl_idempotence(seed: int, n: int = 1000) -> CheckResult:
    worst = 0.0
    for rho in sample_ginibre(SamplerConfig(seed=seed + 4, count=n, family="ginibre")):
        t = twirl_analytic(rho)
        worst = max(worst, float(np.max(np.abs(twirl_analytic(t) - t))))
    return _result("twirl-idempotence", worst, 1e-12, f"n={n}, max deviation {worst:.3e}")


def check_twirl_monotonicity(seed: int, n: int) -> CheckResult:
    """Twirling never increases concurrence (it is a local operation)."""
    worst = -np.inf
    for rho in sample_ginibre(SamplerConfig(seed=seed + 5, count=n, family="ginibre")):
        c_orig = wootters_concurrence(rho).concurrence
        c_spun = wootters_concurrence(twirl_analytic(rho)).concurrence
        worst = max(worst, c_spun - c_orig)
    return _result("twirl-monotonicity", worst, 1e-9, f"n={n}, worst increase {worst:.3e}")


def check_closed_form_agreement(seed: int, n: int = 10000) -> CheckResult:
    """Closed-form spun concurrence matches the generic pipeline."""
    worst = 0.0
    for s in sample_spun(SamplerConfig(seed=seed + 6, count=n, family="spun")):
        closed = spun_concurrence_closed_form(s)
        generic = wootters_concurrence(to_density(s))
        dev = abs(closed.concurrence - generic.concurrence)
        dev = max(dev, float(np.max(np.abs(closed.lambdas - generic.lambdas))))
        worst = max(worst, dev)
    return _result("closed-form-agreement", worst, 1e-8, f"n={n}, max deviation {worst:.3e}")


def check_condition_sign_agreement(seed: int, n: int = 100000) -> CheckResult:
    """Explicit inequality and closed-form positivity agree away from the boundary."""
    disagreements = 0
    cfg = SamplerConfig(seed=seed + 7, count=n, family="spun")
    for s in sample_spun(cfg):
        c = spun_concurrence_closed_form(s).concurrence
        if abs(c) <= 1e-10:
            continue
        if spun_entanglement_condition(s) != (c > 0.0):
            disagreements += 1
    return CheckResult(
        "condition-sign-agreement",
        disagreements == 0,
        float(disagreements),
        f"n={n}, disagreements {disagreements}",
    )


def check_saturation_equality(grid: int = 50) -> CheckResult:
    """The a = 0 family attains the concurrence bound with equality.

    The grid tiles the feasible wedge p_s + m <= 1, with each row running all
    the way to the exact boundary m = 1 - p_s.
    """
    worst = 0.0
    for p_s in np.linspace(0.0, 1.0, grid):
        for m in np.linspace(0.0, 1.0 - p_s, grid):
            c = wootters_concurrence(saturating_state(p_s, m)).concurrence
            worst = max(worst, abs(c - min_concurrence_bound(p_s, m)))
    return _result("saturation-equality", worst, 1e-8, f"{grid}x{grid} grid, worst {worst:.3e}")


def check_supremum(resolution: int = 200) -> CheckResult:
    """Grid supremum of the explicit condition reproduces (1 - m^2)/2."""
    worst = 0.0
    for m in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
        for power in (1, 2):
            got = supremum_check(m, resolution, eta_power=power)
            worst = max(worst, abs(got - singlet_bound(m)))
    return _result("supremum-grid", worst, 1e-4, f"res={resolution}, worst {worst:.3e}")


def check_bound_consistency(grid: int = 200) -> CheckResult:
    """Monotonicity of the bound and consistency with its contour inverse.

    Three sub-invariants, each with its own tolerance: the bound is
    nondecreasing in both p_s and m (1e-12; extra polarisation at fixed
    singlet fraction only strengthens the certificate); the contour evaluated
    at the bound never exceeds p_s + 1e-12; the small-concurrence limit of the
    contour matches the separability threshold to 1e-8.
    """
    worst_mono = 0.0
    worst_inverse = 0.0
    worst_limit = 0.0
    ps_vals = np.linspace(0.0, 1.0, grid)
    m_vals = np.linspace(0.0, 1.0, grid)
    prev_row = None
    for m in m_vals:
        row = np.array(
            [min_concurrence_bound(p, m) if p <= 1.0 - m else np.nan for p in ps_vals]
        )
        finite = ~np.isnan(row)
        diffs = np.diff(row[finite])
        if diffs.size:  # nondecreasing in p_s
            worst_mono = max(worst_mono, float(-diffs.min()))
        if prev_row is not None:
            both = finite & ~np.isnan(prev_row)
            if both.any():  # nondecreasing in m
                worst_mono = max(worst_mono, float((prev_row[both] - row[both]).max()))
        prev_row = row
        for p in ps_vals[finite]:
            c = min_concurrence_bound(float(p), float(m))
            if 0.0 < c < 1.0 and m <= 1.0 - c:
                worst_inverse = max(worst_inverse, contour_min_ps(c, float(m)) - float(p))
        if m <= 1.0 - 1e-8:  # the contour domain shrinks to m <= 1 - C
            worst_limit = max(
                worst_limit, abs(contour_min_ps(1e-9, float(m)) - singlet_bound(float(m)))
            )
    passed = worst_mono <= 1e-12 and worst_inverse <= 1e-12 and worst_limit <= 1e-8
    worst = max(worst_mono, worst_inverse, worst_limit)
    return CheckResult(
        "bound-consistency",
        passed,
        worst,
        f"{grid}x{grid} grid: monotonicity {worst_mono:.3e}, "
        f"inverse {worst_inverse:.3e}, limit {worst_limit:.3e}",
    )


def run_checks(
    seed: int = 0,
    samples: int = 100000,
    ginibre_samples: int = 10000,
    bound_fn: BoundFn | None = None,
    names: Sequence[str] | None = None,
) -> list[CheckResult]:
    """Run the full suite (or the named subset) and return one result per check."""
    tasks = {
        "bound-validity-spun": lambda: check_bound_validity_spun(seed, samples, bound_fn),
        "bound-validity-ginibre": lambda: check_bound_validity_ginibre(
            seed, ginibre_samples, bound_fn
        ),
        "separable-bound": lambda: check_separable_bound(seed, samples),
        "twirl-oracle": lambda: check_twirl_oracle(seed),
        "twirl-idempotence": lambda: check_twirl_idempotence(seed),
        "twirl-monotonicity": lambda: check_twirl_monotonicity(seed, samples),
        "closed-form-agreement": lambda: check_closed_form_agreement(seed),
        "condition-sign-agreement": lambda: check_condition_sign_agreement(seed, samples),
        "saturation-equality": lambda: check_saturation_equality(),
        "supremum-grid": lambda: check_supremum(),
        "bound-consistency": lambda: check_bound_consistency(),
    }
    selected = names if names is not None else list(tasks)
    unknown = [n for n in selected if n not in tasks]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")
    return [tasks[name]() for name in selected]
