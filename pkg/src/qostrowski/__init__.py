"""Jackson q-calculus on finite intervals and sharp q-Ostrowski inequalities."""

from .qcore import (
    LOG_TOL,
    DomainError,
    LatticeFn,
    LatticeKind,
    PiecewiseLinearFn,
    QIntegralResult,
    QInterval,
    QParam,
    SamplingPlan,
    lattice_index_of,
    lattice_point,
    q_derivative,
    q_derivative_at_a,
    q_integral,
    q_integral_between,
    sup_norm_qderiv,
)
from .inequalities import (
    BoundCheckReport,
    BoundKind,
    Branch,
    ConsistencyError,
    abs_weighted_sum_closed,
    check_mvt,
    check_ostrowski,
    classical_ostrowski_bound,
    combined_bound_M,
    disproved_bound,
    find_lagrange_witness,
    full_ostrowski_bound,
    lattice_ostrowski_bound,
    midpoint_index,
    naive_mvt_violation_search,
)
from .extremal import (
    certify_unit_norm,
    check_interpolation_lemma,
    make_absdev,
    make_fx_eps,
    make_gx,
    make_selfsim_fx,
    make_step_counterexample,
    make_tari_counterexample,
    make_tent_counterexample,
    pullback,
    rescale_abscissa,
)

__version__ = "0.1.0"
