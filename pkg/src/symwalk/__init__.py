"""Exact tail, point and interval bounds for weighted Rademacher sums.

Every probability is an exact dyadic rational ``p / 2**e``; decimal input is
read as an exact base-10 rational.
"""

from .bounds import (
    BoundReport,
    ParityCase,
    TheoremTag,
    hoeffding_bound,
    katona_bound,
    kleitman_bound,
    kwapien_rhs,
    lo_bound,
    milner_bound,
    parity_indicator,
    point_bound_Bn,
    point_bound_lem1,
    point_bound_thm2,
    tail_bound,
)
from .exactnum import DomainError, DyadicProb, ResourceError, binom, dyadic_to_decimal, parse_rational
from .families import (
    FamilyAuditReport,
    SetFamily,
    audit_family,
    build_family_eq,
    build_family_geq,
    check_antichain,
    check_k_intersecting,
    diameter,
    signed_subset_sums,
)
from .lipschitz import (
    LipschitzCheck,
    LipschitzTable,
    check_lipschitz_bound,
    coordinate_sum,
    lipschitz_tail,
    random_odd_lipschitz,
    validate,
)
from .verify import SweepSpec, VerifyRecord, extremal_candidates, find_max_tail, preset, run_sweep
from .walk import walk_interval, walk_point, walk_tail
from .wsum import (
    WalkDistribution,
    WeightVector,
    best_interval_prob,
    distribution,
    parse_weights,
    point_prob,
    tail_prob,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
