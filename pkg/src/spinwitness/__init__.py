"""Certify pairwise spin entanglement from two ensemble observables.

The library bounds the Wootters concurrence of an unknown two-spin state from
just its singlet fraction p_s and magnetisation m, via the tight witness
p_s > (1 - m^2) / 2 and the floor C >= p_s - sqrt((1 - p_s)^2 - m^2). It also
implements the full concurrence pipeline, the z-rotation twirling channel,
random-state families for Monte-Carlo verification, and a CLI harness.
"""

from .bounds import (
    WitnessVerdict,
    contour_min_ps,
    min_concurrence_bound,
    reference_min_ps,
    singlet_bound,
    spun_entanglement_condition,
    supremum_check,
    witness,
)
from .concurrence import (
    ConcurrenceResult,
    spin_flip,
    spun_concurrence_closed_form,
    wootters_concurrence,
)
from .errors import (
    BlochNormExceeded,
    InsufficientSamples,
    InvalidSpunState,
    NoConvergence,
    NotHermitian,
    NotPSD,
    NotUnitTrace,
    OutOfDomain,
    Unphysical,
)
from .linalg import HermitianEigenResult, conjugate_by, hermitian_eigen, matrix_sqrt_psd
from .sampling import (
    SamplerConfig,
    SeparableMixture,
    SpunState,
    mixture_density,
    sample_ginibre,
    sample_saturating,
    sample_separable,
    sample_spun,
    saturating_state,
    to_density,
)
from .stateio import load_state, save_state, state_from_dict, state_to_dict
from .states import (
    Observables,
    ProductState,
    from_coupled_basis,
    magnetisation,
    observables,
    product_state_density,
    reduced_bloch,
    separable_singlet_fraction,
    singlet_fraction,
    to_coupled_basis,
    validate,
)
from .twirl import twirl_analytic, twirl_numeric
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "BlochNormExceeded",
    "CheckResult",
    "ConcurrenceResult",
    "HermitianEigenResult",
    "InsufficientSamples",
    "InvalidSpunState",
    "NoConvergence",
    "NotHermitian",
    "NotPSD",
    "NotUnitTrace",
    "Observables",
    "OutOfDomain",
    "ProductState",
    "SamplerConfig",
    "SeparableMixture",
    "SpunState",
    "Unphysical",
    "WitnessVerdict",
    "conjugate_by",
    "contour_min_ps",
    "from_coupled_basis",
    "hermitian_eigen",
    "load_state",
    "magnetisation",
    "matrix_sqrt_psd",
    "min_concurrence_bound",
    "mixture_density",
    "observables",
    "product_state_density",
    "reduced_bloch",
    "reference_min_ps",
    "run_checks",
    "sample_ginibre",
    "sample_saturating",
    "sample_separable",
    "sample_spun",
    "saturating_state",
    "save_state",
    "separable_singlet_fraction",
    "singlet_bound",
    "singlet_fraction",
    "spin_flip",
    "spun_concurrence_closed_form",
    "spun_entanglement_condition",
    "state_from_dict",
    "state_to_dict",
    "supremum_check",
    "to_coupled_basis",
    "to_density",
    "twirl_analytic",
    "twirl_numeric",
    "validate",
    "witness",
]
