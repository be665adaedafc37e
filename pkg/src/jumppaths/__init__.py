"""Exact counting of jump paths on integer lattices.

Closed-form and recurrence counts, brute-force oracles, path-length
generating functions, the mex-built 2-D decomposition sequence, and
exact-arithmetic checks of the limiting Gaussian shape of path lengths.
"""

from .bruteforce import (
    DirectionalTally,
    directional_counts,
    enumerate_restricted,
    enumerate_simple,
    enumerate_unrestricted,
    is_valid_jump_path,
    length_histogram,
)
from .cltlab import (
    AsympParams,
    DistSummary,
    a_param,
    asymp_mean,
    asymp_params,
    asymp_var,
    chi_param,
    component_distributions,
    convergence_report,
    curvature_check,
    exact_distribution,
    ks_distance,
    log_weight_first_difference,
    ratio_expansion_check,
    tail_mass,
)
from .errors import GuardError
from .exactmath import InexactDivisionError, Polynomial, binom, binomial_row
from .genfunc import (
    GenFunResult,
    b_poly,
    legendre_coeff_poly,
    path_length_poly,
    path_length_poly_direct,
    trivariate_coeff,
)
from .pathcount import (
    CountTable,
    alternating_binomial_identity,
    at_least_k_stationary,
    count_table,
    relaxed_count,
    restricted_count,
    restricted_count_2d,
    total_paths,
    unrestricted_count,
    unrestricted_count_by_recurrence,
)
from .zeckseq import (
    Decomposition,
    InsufficientGridError,
    SeqGrid,
    build_sequence,
    decompositions,
    representable_set,
)

__version__ = "0.1.0"

__all__ = [
    "AsympParams",
    "CountTable",
    "Decomposition",
    "DirectionalTally",
    "DistSummary",
    "GenFunResult",
    "GuardError",
    "InexactDivisionError",
    "InsufficientGridError",
    "Polynomial",
    "SeqGrid",
    "a_param",
    "alternating_binomial_identity",
    "asymp_mean",
    "asymp_params",
    "asymp_var",
    "at_least_k_stationary",
    "b_poly",
    "binom",
    "binomial_row",
    "build_sequence",
    "chi_param",
    "component_distributions",
    "convergence_report",
    "count_table",
    "curvature_check",
    "decompositions",
    "directional_counts",
    "enumerate_restricted",
    "enumerate_simple",
    "enumerate_unrestricted",
    "exact_distribution",
    "is_valid_jump_path",
    "ks_distance",
    "legendre_coeff_poly",
    "length_histogram",
    "log_weight_first_difference",
    "path_length_poly",
    "path_length_poly_direct",
    "ratio_expansion_check",
    "relaxed_count",
    "representable_set",
    "restricted_count",
    "restricted_count_2d",
    "tail_mass",
    "total_paths",
    "trivariate_coeff",
    "unrestricted_count",
    "unrestricted_count_by_recurrence",
]
