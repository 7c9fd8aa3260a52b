# __init__.py
"""Scattering and bound states of a q-deformed hyperbolic barrier/well
in the relativistic (Klein-Gordon type) wave equation with equal scalar
and vector coupling.

Closed-form observables via complex-parameter Gauss hypergeometric
solutions matched at the origin, plus an independent direct-integration
oracle for validation.  Hot kernels are numba-compiled by default; set
KGSCATTER_NUMBA=0 for the pure-Python fallback.  KGSCATTER_THREADS caps
energy-sweep parallelism.
"""

__version__ = "0.1.0"

from .bound_states import (
    BoundDiagnostics,
    BoundKinematics,
    BoundStateResult,
    bound_kinematics,
    find_bound_states,
    nonrelativistic_map,
    quantization_residual,
)
from .errors import (
    BadRange,
    BoxTooSmall,
    CPoleError,
    DegenerateTransform,
    KgscatterError,
    NoConvergence,
    OutOfWell,
    OverflowGuard,
    PoleError,
    RootLost,
    SingularMatching,
    StepLimit,
    SubBarrierEnergy,
)
from .hyp2f1 import Hyp2F1Params, gauss_2f1, gauss_2f1_derivative, log_gamma
from .ode_oracle import (
    IntegrationConfig,
    find_bound_states_numeric,
    integrate_scattering,
    shoot_bound_state,
)
from .potential import PotentialParams, WellParams, evaluate, profile, well_evaluate
from .scattering import (
    KinematicsDiagnostics,
    ScatterKinematics,
    ScatteringResult,
    WaveSample,
    current_density,
    kinematics,
    psi_left,
    psi_right,
    solve_matching,
    sweep,
)

__all__ = [
    "__version__",
    # potential
    "PotentialParams", "WellParams", "evaluate", "well_evaluate", "profile",
    # hyp2f1
    "Hyp2F1Params", "log_gamma", "gauss_2f1", "gauss_2f1_derivative",
    # scattering
    "KinematicsDiagnostics", "ScatterKinematics", "ScatteringResult",
    "WaveSample", "kinematics", "psi_left", "psi_right", "solve_matching",
    "current_density", "sweep",
    # bound states
    "BoundDiagnostics", "BoundKinematics", "BoundStateResult",
    "bound_kinematics", "quantization_residual", "find_bound_states",
    "nonrelativistic_map",
    # oracle
    "IntegrationConfig", "integrate_scattering", "shoot_bound_state",
    "find_bound_states_numeric",
    # errors
    "KgscatterError", "PoleError", "CPoleError", "NoConvergence",
    "DegenerateTransform", "SubBarrierEnergy", "OutOfWell",
    "SingularMatching", "RootLost", "StepLimit", "OverflowGuard",
    "BoxTooSmall", "BadRange",
]
