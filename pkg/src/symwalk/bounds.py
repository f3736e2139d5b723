"""Right-hand sides of the optimal concentration inequalities.

All probabilities are exact :class:`DyadicProb` values except
:func:`hoeffding_bound`, which is a float kept for comparison only.

Parity drives every bound: with ``k = ceil(x)`` the walk length used is
``n`` when ``n + k`` is even and drops to ``n - 1`` (or the target moves to
``k + 1``) when it is odd.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    DomainError,
    DyadicProb,
    RationalLike,
    binom,
    ceil_rational,
    parse_rational,
)
from .walk import walk_interval, walk_point, walk_tail

__all__ = [
    "ParityCase",
    "TheoremTag",
    "BoundReport",
    "parity_indicator",
    "tail_bound",
    "point_bound_Bn",
    "point_bound_thm2",
    "point_bound_lem1",
    "lo_bound",
    "katona_bound",
    "milner_bound",
    "kleitman_bound",
    "hoeffding_bound",
    "kwapien_rhs",
]


class ParityCase(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"


class TheoremTag(str, enum.Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    POINT_NONZERO = "point_nonzero"
    LEM1 = "lem1"
    LITTLEWOOD_OFFORD = "littlewood_offord"
    KATONA = "katona"
    MILNER = "milner"
    KLEITMAN = "kleitman"


@dataclass(frozen=True)
class BoundReport:
    """A bound value together with the case of the formula that produced it."""

    bound: DyadicProb
    effective_walk_length: int
    parity_case: ParityCase
    theorem_tag: TheoremTag

    def describe(self) -> str:
        return f"{self.parity_case.value} case, W_{self.effective_walk_length}"


def _positive_x(x: RationalLike) -> Fraction:
    xf = parse_rational(x)
    if xf <= 0:
        raise DomainError(f"x must be > 0, got {xf}")
    return xf


def _check_n(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise DomainError(f"n must be >= {minimum}, got {n}")


def parity_indicator(x: RationalLike, n: int) -> int:
    """1 if ``ceil(x) + n`` is even, else 0."""
    return 1 if (ceil_rational(parse_rational(x)) + n) % 2 == 0 else 0


def tail_bound(n: int, x: RationalLike) -> BoundReport:
    """Optimal bound on P{S_n >= x} over symmetric steps bounded by 1."""
    _check_n(n)
    xf = _positive_x(x)
    k = ceil_rational(xf)
    if (k + n) % 2 == 0:
        return BoundReport(walk_tail(n, xf), n, ParityCase.EVEN, TheoremTag.THM1)
    return BoundReport(walk_tail(n - 1, xf), n - 1, ParityCase.ODD, TheoremTag.THM1)


def point_bound_Bn(n: int, x: RationalLike) -> DyadicProb:
    """Intermediate point bound ``B_n(x)`` for nonzero weights.

    ``P{W_n = k}`` if ``n + k`` is even, ``P{W_{n-1} = k}`` otherwise, with
    ``k = ceil(x)``.  For ``n = 0`` the odd case is read as zero.
    """
    _check_n(n, 0)
    k = ceil_rational(_positive_x(x))
    if (n + k) % 2 == 0:
        return walk_point(n, k)
    return walk_point(n - 1, k) if n >= 1 else DyadicProb(0)


def point_bound_thm2(n: int, x: RationalLike) -> BoundReport:
    """Optimal bound on P{S_n = x}: P{W_m = k} with ``m = min(n or n-1, k^2)``."""
    _check_n(n)
    k = ceil_rational(_positive_x(x))
    if (n + k) % 2 == 0:
        m, case = min(n, k * k), ParityCase.EVEN
    else:
        m, case = min(n - 1, k * k), ParityCase.ODD
    return BoundReport(walk_point(m, k), m, case, TheoremTag.THM2)


def point_bound_lem1(n: int, x: RationalLike) -> DyadicProb:
    """Point bound valid when every weight is strictly positive.

    ``P{W_n = k}`` if ``n + k`` is even, ``P{W_n = k + 1}`` otherwise.
    Positivity of the weights is the caller's responsibility.
    """
    _check_n(n)
    k = ceil_rational(_positive_x(x))
    if (n + k) % 2 == 0:
        return walk_point(n, k)
    return walk_point(n, k + 1)


def lo_bound(n: int, k: int) -> DyadicProb:
    """Littlewood-Offord bound: the ``k`` largest binomials of row ``n`` over ``2**n``."""
    _check_n(n)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return walk_interval(n, k)


def _check_nk(n: int, k: int) -> None:
    _check_n(n)
    if k < 1 or k > n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")


def katona_bound(n: int, k: int) -> int:
    """Maximum size of a k-intersecting family on ``[n]``."""
    _check_nk(n, k)
    if (n + k) % 2 == 0:
        t = (n + k) // 2
        return sum(binom(n, j) for j in range(t, n + 1))
    t = (n + k + 1) // 2
    return sum(binom(n, j) for j in range(t, n + 1)) + binom(n - 1, t - 1)


def milner_bound(n: int, k: int) -> int:
    """Maximum size of a k-intersecting antichain on ``[n]``: C(n, ceil((n+k)/2))."""
    _check_nk(n, k)
    return binom(n, (n + k + 1) // 2)


def kleitman_bound(n: int, k: int) -> int:
    """Maximum size of a family on ``[n]`` with diameter at most ``n - k``.

    Same value as :func:`katona_bound`; kept separate because it bounds a
    larger class of families.
    """
    _check_nk(n, k)
    if (n + k) % 2 == 0:
        t = (n + k) // 2
        return sum(binom(n, j) for j in range(t, n + 1))
    t = (n + k + 1) // 2
    return sum(binom(n, j) for j in range(t, n + 1)) + binom(n - 1, t - 1)


def hoeffding_bound(n: int, x: float | RationalLike) -> float:
    """``exp(-x^2 / 2n)`` as a float."""
    _check_n(n)
    xf = float(x) if isinstance(x, float) else float(parse_rational(x))
    if xf <= 0:
        raise DomainError(f"x must be > 0, got {x}")
    return math.exp(-xf * xf / (2 * n))


def kwapien_rhs(n: int, x: RationalLike) -> DyadicProb:
    """``min(1, 2 P{W_n >= x})`` for the Rademacher case."""
    _check_n(n)
    tail = walk_tail(n, _positive_x(x))
    if tail.numerator == 0:
        return tail
    # 2*tail <= 1 iff tail <= 1/2
    if tail <= DyadicProb(1, 1):
        return tail.double()
    return DyadicProb(1)
