"""Superluminal kinematics, tachyon four-momenta and path-amplitude invariants."""

from .amplitudes import (
    DEFAULT_PARAMS,
    AxiomReport,
    InvariantParams,
    Path,
    PathEnsemble,
    PathSegment,
    amplitude,
    check_axioms,
    fringe,
    interference_scan,
    invariant_P,
    phase,
    two_arm_ensemble,
)
from .decay import (
    ALTERNATIVE,
    HELICITY_LIKE,
    Leg,
    SymmetryRuleSet,
    apply_discrete_symmetry,
    conservation_residual,
    solve_unique_decay,
)
from .derivation import (
    CoefficientFamily,
    cauchy_solution_check,
    newton_identity_check,
    power_sum,
    truncated_reconstruction,
)
from .errors import (
    ConstraintViolation,
    EnumerationCapError,
    RegimeError,
    SingularVelocityError,
    TachyonError,
    UndefinedHelicity,
)
from .fourmomentum import (
    CovariantFourVector,
    InfiniteVelocity,
    MassiveState,
    SpacelikeState,
    TachyonState,
    energy_momentum,
    four_vector,
    helicity_transform,
    infinite_velocity_frame,
    s_transform,
    transform_state,
    velocity_compose,
    wigner_rotation,
)
from .kinematics import (
    GeneralBoost,
    SpacetimeEvent,
    SuperluminalCoords,
    boost_subluminal,
    boost_superluminal,
    coefficient_A,
    infinite_boost,
    interval,
    interval_superluminal,
    superluminal_length,
    superluminal_time_flow,
)
from .lattice import Lattice, count_paths, lattice_path_sum
from .units import NATURAL, UnitSystem

__version__ = "0.1.0"
