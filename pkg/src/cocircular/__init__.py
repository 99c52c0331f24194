"""Numerical laboratory for centered co-circular central configurations.

Computes the unique ordered minimizer of power-law interaction energies on
the unit circle, applies dihedral quadratic-form certificates to rule out
centered co-circular central configurations, and mechanizes the exact
integer sign conditions that exclude three-special-mass placements.
"""

from ._backend import active_backend, available_backends
from .analysis import (
    ANTIPODAL_CERTIFICATE,
    HYPOTHESES_NOT_MET,
    LEMMA_CHAIN_INFEASIBLE,
    PredictionVerdict,
    SignConstraintSystem,
    exhaustive_theorem_check,
    predict_nonexistence,
    required_signs,
    run_lemma_suite,
    side_predicates,
    sign_system,
)
from .certificate import (
    CENTERED_CANDIDATE,
    CERTIFIED_NOT_CC,
    NOT_CENTERED,
    UNCONVERGED,
    CertificateResult,
    ClassifyTolerances,
    Verdict,
    antipodal_certificate_value,
    certificate_search,
    classify,
    quadrilateral_gap,
)
from .core import (
    AngleConfig,
    CentrednessDiagnostics,
    InteractionMatrix,
    MassVector,
    centredness_diagnostics,
    chord_distance,
    interaction_matrix,
    positions,
    potential,
    potential_gradient,
    potential_hessian,
    quadratic_form,
)
from .errors import (
    CocircularError,
    CollisionError,
    InfeasibleStepError,
    NotApplicableError,
    OrderingError,
    UnconvergedError,
)
from .optimizer import (
    MinimizeOptions,
    MinimizeResult,
    finite_difference_gradient,
    minimize_potential,
    random_feasible_config,
)
from .symmetry import (
    DihedralElement,
    SpecialMassPattern,
    act_on_angles,
    act_on_masses,
    enumerate_group,
    is_ordered_symmetrically,
    parse_element,
    render_element,
    special_positions,
    symmetric_order_conventions,
)

__version__ = "0.1.0"
