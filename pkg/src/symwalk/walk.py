"""Exact law of the simple random walk ``W_n`` (sum of ``n`` fair signs)."""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import DomainError, DyadicProb, RationalLike, binom, ceil_rational, parse_rational

__all__ = ["SimpleWalk", "walk_point", "walk_tail", "walk_interval", "walk_tail_count"]


@dataclass(frozen=True)
class SimpleWalk:
    """``W_n``; supported on ``{-n, -n+2, ..., n}``."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"walk length must be >= 0, got {self.n}")

    def support(self) -> range:
        return range(-self.n, self.n + 1, 2)

    def point(self, k: int) -> DyadicProb:
        return walk_point(self.n, k)

    def tail(self, x: RationalLike) -> DyadicProb:
        return walk_tail(self.n, x)

    def interval(self, k: int) -> DyadicProb:
        return walk_interval(self.n, k)


def _point_count(n: int, k: int) -> int:
    if (n + k) % 2 or abs(k) > n:
        return 0
    return binom(n, (n + k) // 2)


def walk_point(n: int, k: int) -> DyadicProb:
    """P{W_n = k}."""
    if n < 0:
        raise DomainError(f"walk length must be >= 0, got {n}")
    return DyadicProb(_point_count(n, k), n)


def walk_tail_count(n: int, k: int) -> int:
    """Number of sign patterns with ``W_n >= k`` for integer ``k``."""
    if n < 0:
        raise DomainError(f"walk length must be >= 0, got {n}")
    if k <= -n:
        return 1 << n
    if k > n:
        return 0
    # smallest j with 2j - n >= k
    j0 = (n + k + 1) // 2
    return sum(binom(n, j) for j in range(j0, n + 1))


def walk_tail(n: int, x: RationalLike) -> DyadicProb:
    """P{W_n >= x} for rational ``x``; reduced exactly to ``k = ceil(x)``."""
    k = ceil_rational(parse_rational(x))
    return DyadicProb(walk_tail_count(n, k), n)


def walk_interval(n: int, k: int) -> DyadicProb:
    """P{W_n in (-k, k]}."""
    if n < 0:
        raise DomainError(f"walk length must be >= 0, got {n}")
    if k < 1:
        raise DomainError(f"interval half-width must be >= 1, got {k}")
    # support value v = 2j - n lies in (-k, k]  <=>  (n - k)/2 < j <= (n + k)/2
    lo = (n - k) // 2 + 1
    hi = (n + k) // 2
    return DyadicProb(sum(binom(n, j) for j in range(max(lo, 0), min(hi, n) + 1)), n)

