"""Exact distribution of weighted Rademacher sums ``S_n = sum a_i eps_i``.

Weights are exact rationals.  Internally everything is scaled by the least
common multiple ``L`` of the weight denominators so that sums are integers;
a :class:`WalkDistribution` stores integer support values ``v`` meaning
``v / L``.

Three engines build the same distribution:

* ``enumerate`` -- evaluates the sum on every one of the ``2**n`` sign patterns;
* ``convolve`` -- sparse dynamic program over integer partial sums;
* ``meet_in_middle`` -- enumerates two halves and combines them.

Point and tail queries with ``engine="meet_in_middle"`` never materialize the
full law, which keeps ``n`` up to 40 tractable.
"""

from __future__ import annotations

import bisect
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .exactnum import DomainError, DyadicProb, RationalLike, ResourceError, ceil_rational, parse_rational

__all__ = [
    "WeightVector",
    "WalkDistribution",
    "IntervalResult",
    "ENGINES",
    "SUPPORT_BUDGET",
    "ENUMERATE_MAX_N",
    "MITM_MAX_N",
    "distribution",
    "signed_sums",
    "tail_prob",
    "point_prob",
    "best_interval_prob",
    "parse_weights",
    "read_weights_file",
]

ENGINES = ("enumerate", "convolve", "meet_in_middle", "auto")
SUPPORT_BUDGET = 1 << 22
ENUMERATE_MAX_N = 24
MITM_MAX_N = 40
# pairs formed when the meet-in-the-middle engine materializes a full law
MITM_PAIR_BUDGET = 1 << 24
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class WeightVector:
    """Coefficients ``a_1, ..., a_n`` of ``S_n``, in the caller's order.

    ``bounded=True`` enforces ``|a_i| <= 1``; pass ``bounded=False`` for the
    Littlewood-Offord setting where weights are at least 1 in absolute value.
    """

    weights: tuple[Fraction, ...]
    bounded: bool = True
    scale: int = field(init=False, repr=False, compare=False)
    scaled: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, weights: Iterable[RationalLike], bounded: bool = True):
        ws = tuple(parse_rational(a) for a in weights)
        if bounded:
            bad = [a for a in ws if abs(a) > 1]
            if bad:
                raise DomainError(f"weights must satisfy |a_i| <= 1, got {bad[0]}")
        scale = math.lcm(*(a.denominator for a in ws)) if ws else 1
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "bounded", bounded)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "scaled", tuple(int(a * scale) for a in ws))

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def normalized(self) -> "WeightVector":
        """Absolute values sorted ascending; the law of ``S_n`` is unchanged."""
        return WeightVector(sorted(abs(a) for a in self.weights), bounded=self.bounded)

    def scaled_by(self, c: RationalLike) -> "WeightVector":
        c = parse_rational(c)
        return WeightVector([c * a for a in self.weights], bounded=self.bounded and abs(c) <= 1)

    def all_nonzero(self) -> bool:
        return all(a != 0 for a in self.weights)

    def all_positive(self) -> bool:
        return all(a > 0 for a in self.weights)

    def digest(self) -> str:
        """Canonical text of the normalized weights, e.g. ``"1/2,1,1"``."""
        return ",".join(str(a) for a in sorted(abs(a) for a in self.weights))

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.weights) + ")"


@dataclass(frozen=True)
class WalkDistribution:
    """Exact law of ``S_n`` as counts of sign patterns.

    ``values[i] / scale`` occurs for ``counts[i]`` of the ``2**n`` patterns.
    """

    n: int
    scale: int
    values: tuple[int, ...]
    counts: tuple[int, ...]
    _cum: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.values) != len(self.counts):
            raise ValueError("values and counts differ in length")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("support values must be strictly increasing")
        if any(c <= 0 for c in self.counts):
            raise ValueError("counts must be positive")
        if sum(self.counts) != 1 << self.n:
            raise ValueError(f"counts sum to {sum(self.counts)}, expected 2^{self.n}")
        m = len(self.values)
        for i in range(m // 2 + 1):
            j = m - 1 - i
            if self.values[i] != -self.values[j] or self.counts[i] != self.counts[j]:
                raise ValueError("distribution is not symmetric")
        object.__setattr__(self, "_cum", (0, *accumulate(self.counts)))

    @property
    def denominator_exponent(self) -> int:
        return self.n

    @property
    def support(self) -> list[tuple[Fraction, int]]:
        return [(Fraction(v, self.scale), c) for v, c in zip(self.values, self.counts)]

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.support)

    def point_count(self, x: RationalLike) -> int:
        xs = parse_rational(x) * self.scale
        if xs.denominator != 1:
            return 0
        i = bisect.bisect_left(self.values, int(xs))
        if i < len(self.values) and self.values[i] == xs:
            return self.counts[i]
        return 0

    def tail_count(self, x: RationalLike) -> int:
        """Patterns with ``S_n >= x``."""
        threshold = ceil_rational(parse_rational(x) * self.scale)
        i = bisect.bisect_left(self.values, threshold)
        return self._cum[-1] - self._cum[i]

    def point_prob(self, x: RationalLike) -> DyadicProb:
        return DyadicProb(self.point_count(x), self.n)

    def tail_prob(self, x: RationalLike) -> DyadicProb:
        return DyadicProb(self.tail_count(x), self.n)

    def best_interval(self, k: int) -> tuple[Fraction, DyadicProb]:
        """Heaviest window ``(x - k, x + k]`` and its ``x``; see :func:`best_interval_prob`."""
        if k < 1:
            raise DomainError(f"k must be >= 1, got {k}")
        width = 2 * k * self.scale
        vals, cum = self.values, self._cum
        best, best_j, i = -1, 0, 0
        for j, r in enumerate(vals):
            while vals[i] <= r - width:
                i += 1
            mass = cum[j + 1] - cum[i]
            if mass > best:
                best, best_j = mass, j
        return Fraction(vals[best_j], self.scale) - k, DyadicProb(best, self.n)

    def rescaled(self, scale: int) -> "WalkDistribution":
        """Same law expressed over a multiple of the current scale."""
        if scale % self.scale:
            raise ValueError(f"{scale} is not a multiple of {self.scale}")
        f = scale // self.scale
        return WalkDistribution(self.n, scale, tuple(v * f for v in self.values), self.counts)

    def same_law(self, other: "WalkDistribution") -> bool:
        if self.n != other.n:
            return False
        lcm = math.lcm(self.scale, other.scale)
        a, b = self.rescaled(lcm), other.rescaled(lcm)
        return a.values == b.values and a.counts == b.counts


class IntervalResult(NamedTuple):
    x_star: Fraction
    prob: DyadicProb
    hypothesis_satisfied: bool


# ---------------------------------------------------------------------------
# enumeration primitives


def _int_dtype(scaled: Sequence[int]):
    return np.int64 if sum(abs(a) for a in scaled) < _INT64_SAFE else object


def _subset_sums(scaled: Sequence[int]) -> np.ndarray:
    """``out[mask] = sum of scaled[i] for bits i set in mask``."""
    out = np.zeros(1, dtype=_int_dtype(scaled))
    for a in scaled:
        out = np.concatenate((out, out + a))
    return out


def signed_sums(w: WeightVector) -> np.ndarray:
    """Scaled ``s_A = sum_{i in A} a_i - sum_{i not in A} a_i`` for every mask ``A``.

    Bit ``i`` of the mask selects element ``i + 1`` (a plus sign on ``a_{i+1}``).
    Values are integers over ``w.scale``.
    """
    if w.n > ENUMERATE_MAX_N:
        raise ResourceError(f"enumeration limited to n <= {ENUMERATE_MAX_N} (got n={w.n})")
    total = sum(w.scaled)
    return 2 * _subset_sums(w.scaled) - total


def _collapse(sums: np.ndarray) -> tuple[list[int], list[int]]:
    vals, cnts = np.unique(sums, return_counts=True)
    return [int(v) for v in vals], [int(c) for c in cnts]


def _enumerate(w: WeightVector) -> WalkDistribution:
    vals, cnts = _collapse(signed_sums(w))
    return WalkDistribution(w.n, w.scale, tuple(vals), tuple(cnts))


def _convolve(w: WeightVector, budget: int = SUPPORT_BUDGET) -> WalkDistribution:
    law: dict[int, int] = {0: 1}
    for a in sorted(abs(a) for a in w.scaled):
        if a == 0:
            law = {v: 2 * c for v, c in law.items()}
            continue
        nxt: dict[int, int] = {}
        for v, c in law.items():
            nxt[v + a] = nxt.get(v + a, 0) + c
            nxt[v - a] = nxt.get(v - a, 0) + c
        if len(nxt) > budget:
            raise ResourceError(f"convolve support exceeds budget of {budget} points")
        law = nxt
    items = sorted(law.items())
    return WalkDistribution(w.n, w.scale, tuple(v for v, _ in items), tuple(c for _, c in items))


def _halves(w: WeightVector):
    if w.n > MITM_MAX_N:
        raise ResourceError(f"meet_in_middle limited to n <= {MITM_MAX_N} (got n={w.n})")
    scaled = sorted(abs(a) for a in w.scaled)
    # interleave so both halves carry similar magnitudes
    left, right = scaled[0::2], scaled[1::2]
    out = []
    for part in (left, right):
        sums = 2 * _subset_sums(part) - sum(part)
        vals, cnts = np.unique(sums, return_counts=True)
        out.append((vals, cnts.astype(np.int64)))
    return out


def _meet_in_middle(w: WeightVector, pair_budget: int = MITM_PAIR_BUDGET) -> WalkDistribution:
    (lv, lc), (rv, rc) = _halves(w)
    if len(lv) * len(rv) > pair_budget:
        raise ResourceError(
            f"meet_in_middle would combine {len(lv) * len(rv)} pairs, budget is {pair_budget}"
        )
    if lv.dtype == object or rv.dtype == object:
        law: Counter = Counter()
        for v, c in zip(lv.tolist(), lc.tolist()):
            for u, d in zip(rv.tolist(), rc.tolist()):
                law[v + u] += c * d
        items = sorted(law.items())
        return WalkDistribution(w.n, w.scale, tuple(v for v, _ in items), tuple(c for _, c in items))
    sums = (lv[:, None] + rv[None, :]).ravel()
    weights = (lc[:, None] * rc[None, :]).ravel()
    vals, inv = np.unique(sums, return_inverse=True)
    cnts = np.zeros(len(vals), dtype=np.int64)
    np.add.at(cnts, inv, weights)
    return WalkDistribution(w.n, w.scale, tuple(int(v) for v in vals), tuple(int(c) for c in cnts))


def _support_estimate(w: WeightVector) -> int:
    return min(1 << w.n, sum(abs(a) for a in w.scaled) + 1)


def _choose_engine(w: WeightVector) -> str:
    if _support_estimate(w) <= SUPPORT_BUDGET:
        return "convolve"
    if w.n <= MITM_MAX_N:
        return "meet_in_middle"
    raise ResourceError(
        f"no exact engine fits: support estimate {_support_estimate(w)} > {SUPPORT_BUDGET} "
        f"and n={w.n} > {MITM_MAX_N}"
    )


def distribution(w: WeightVector | Sequence[RationalLike], engine: str = "auto") -> WalkDistribution:
    """Exact law of ``S_n``; every engine returns the identical object."""
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    if engine == "auto":
        engine = _choose_engine(w)
    if engine == "enumerate":
        return _enumerate(w)
    if engine == "convolve":
        return _convolve(w)
    if engine == "meet_in_middle":
        return _meet_in_middle(w)
    raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")


# ---------------------------------------------------------------------------
# queries


def _mitm_counts(w: WeightVector, x: Fraction, kind: str) -> int:
    (lv, lc), (rv, rc) = _halves(w)
    xs = x * w.scale
    r_cum = np.concatenate(([0], np.cumsum(rc)))
    if kind == "tail":
        t = ceil_rational(xs)
        idx = np.searchsorted(rv, [t - int(v) for v in lv.tolist()], side="left")
        return sum(int(c) * int(r_cum[-1] - r_cum[i]) for c, i in zip(lc.tolist(), idx.tolist()))
    if xs.denominator != 1:
        return 0
    t = int(xs)
    targets = [t - int(v) for v in lv.tolist()]
    lo = np.searchsorted(rv, targets, side="left")
    hi = np.searchsorted(rv, targets, side="right")
    return sum(int(c) * int(r_cum[j] - r_cum[i]) for c, i, j in zip(lc.tolist(), lo.tolist(), hi.tolist()))


def _query(w, x: RationalLike, engine: str, kind: str) -> DyadicProb:
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    xf = parse_rational(x)
    if engine == "auto":
        engine = _choose_engine(w)
    if engine == "meet_in_middle":
        return DyadicProb(_mitm_counts(w, xf, kind), w.n)
    law = distribution(w, engine)
    return law.tail_prob(xf) if kind == "tail" else law.point_prob(xf)


def tail_prob(w: WeightVector | Sequence[RationalLike], x: RationalLike, engine: str = "auto") -> DyadicProb:
    """P{S_n >= x}."""
    return _query(w, x, engine, "tail")


def point_prob(w: WeightVector | Sequence[RationalLike], x: RationalLike, engine: str = "auto") -> DyadicProb:
    """P{S_n = x}."""
    return _query(w, x, engine, "point")


def best_interval_prob(
    w: WeightVector | Sequence[RationalLike], k: int, engine: str = "auto"
) -> IntervalResult:
    """Maximize P{S_n in (x - k, x + k]} over real ``x``.

    An optimal half-open window can always be slid right until its closed end
    sits on an atom, so only those windows are scanned.  Ties go to the
    smallest ``x_star``.  ``hypothesis_satisfied`` reports whether every
    ``|a_i| >= 1``, the condition under which :func:`lo_bound` applies.
    """
    if not isinstance(w, WeightVector):
        w = WeightVector(w, bounded=False)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    x_star, prob = distribution(w, engine).best_interval(k)
    return IntervalResult(x_star, prob, all(abs(a) >= 1 for a in w.weights))


# ---------------------------------------------------------------------------
# text input


def parse_weights(text: str, bounded: bool = True) -> WeightVector:
    """Weights from ``"1,1,0.5"``, whitespace-separated, or one per line.

    Blank lines and ``#`` comments are ignored.  Decimals are exact base-10.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(t for t in line.replace(",", " ").split() if t)
    return WeightVector(tokens, bounded=bounded)


def read_weights_file(path: str | Path, bounded: bool = True) -> WeightVector:
    return parse_weights(Path(path).read_text(), bounded=bounded)
