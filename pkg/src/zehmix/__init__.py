"""zehmix: statistical mixtures that the density operator cannot tell apart.

Ensembles keep their member lists, so two preparations with the same
``rho`` remain distinguishable through higher moments of the per-state
expectation value.
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .qalgebra import (  # noqa: F401
    MINUS_X,
    MINUS_Y,
    MINUS_Z,
    PLUS_X,
    PLUS_Y,
    PLUS_Z,
    SX,
    SY,
    SZ,
    Ket,
    Observable,
    SpinDirection,
    evolve_pure,
    expectation,
    herm_eig,
    make_ket,
    same_ray,
    spin_component,
    tensor,
    tensor_obs,
)
from .mixtures import (  # noqa: F401
    DensityOperator,
    Ensemble,
    density_equal,
    density_of,
    make_ensemble,
    purity,
    von_neumann_entropy,
    zeh_mixture_1,
    zeh_mixture_2,
)
from .moments import MomentWitness, central_moment, distinguish, moment, moment_profile, rv_value  # noqa: F401
from .dynamics import evolve_density, evolve_ensemble  # noqa: F401
from .bipartite import (  # noqa: F401
    BipartiteState,
    ScenarioSpec,
    is_entangled,
    partial_trace,
    reduced_expectation,
    run_scenario,
)
from .sampling import SamplerConfig, born_sample, estimate_moment, sample_member  # noqa: F401
