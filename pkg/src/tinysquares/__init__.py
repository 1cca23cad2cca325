"""Monomial ideals in K[x, y] whose squares have very few generators."""

from .constructions import (
    J0,
    ConditionReport,
    check_conditions,
    corner_subideal,
    degree_profile,
    power_mu_profile,
    tiny_square_ideal,
)
from .core import (
    ExponentOverflowError,
    IdealError,
    Monomial,
    PairIndex,
    StaircaseIdeal,
    contains,
    divides,
    ideal_power,
    ideal_product,
    minimalize,
    mu,
    normalize,
    pair_product,
    product,
)
from .gamma import DivSet, GammaValue, div_set, gamma_map, noncomparable, square_generator_pairs
from .search import (
    SearchOutcome,
    SearchSpace,
    min_mu_square,
    single_degree_bound_check,
    two_degree_scan,
    verify_ge_nine,
)

__version__ = "0.1.0"
