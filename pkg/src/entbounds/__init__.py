"""Multipartite entanglement measures and parametrized monogamy/polygamy
bound families, with numerical verification and figure reproduction."""

from .bounds import (
    BoundParams,
    BoundReport,
    Grouping,
    InfeasibleParamsError,
    LemmaCoefficients,
    SandwichBounds,
    ThetaResult,
    chain_values,
    lemma_rhs,
    monogamy_lower_AB,
    multi_partition_polygamy,
    negativity_bounds_AB,
    pair_measures_sq,
    polygamy_bound_coa,
    polygamy_upper_AB,
    theta,
    tripartite_bounds,
)
from .linalg import (
    MAX_DIM,
    TAU_HERM,
    TAU_NUM,
    TAU_PSD,
    SubsystemShape,
    default_labels,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
    psd_sqrt,
    qubit_shape,
    tensor_product,
    trace_norm,
)
from .measures import (
    Bipartition,
    MeasureValue,
    cren_crenoa_two_qubit,
    linear_entropy,
    negativity,
    pure_concurrence,
    reduced_density,
    schmidt_rank,
    two_qubit_coa,
    two_qubit_concurrence,
)
from .optimizer import (
    OptimizationResult,
    greedy_grouping,
    minimal_admissible_p,
    optimize,
    ordered_set_partitions,
)
from .states import (
    AcinParams,
    PureState,
    StateSpecError,
    WClass4Params,
    acin_state,
    emit_state_spec,
    haar_random_pure,
    parse_state_spec,
    wclass4_state,
)

__version__ = "0.1.0"

__all__ = [
    "AcinParams", "Bipartition", "BoundParams", "BoundReport", "Grouping",
    "InfeasibleParamsError", "LemmaCoefficients", "MAX_DIM", "MeasureValue",
    "OptimizationResult", "PureState", "SandwichBounds", "StateSpecError",
    "SubsystemShape", "TAU_HERM", "TAU_NUM", "TAU_PSD", "ThetaResult",
    "WClass4Params", "acin_state", "chain_values", "cren_crenoa_two_qubit",
    "default_labels", "emit_state_spec", "greedy_grouping",
    "haar_random_pure", "hermitian_eigenvalues", "lemma_rhs",
    "linear_entropy", "minimal_admissible_p", "monogamy_lower_AB",
    "multi_partition_polygamy", "negativity", "negativity_bounds_AB",
    "optimize", "ordered_set_partitions", "pair_measures_sq",
    "parse_state_spec", "partial_trace", "partial_transpose",
    "polygamy_bound_coa", "polygamy_upper_AB", "psd_sqrt",
    "pure_concurrence", "qubit_shape", "reduced_density", "schmidt_rank",
    "tensor_product", "theta", "trace_norm", "tripartite_bounds",
    "two_qubit_coa", "two_qubit_concurrence", "wclass4_state",
]
