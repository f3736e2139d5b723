"""Odd 1-Lipschitz functions on the vertices of the cube ``{-1, 1}^n``.

Vertex ``A`` (an ``n``-bit mask) is the point whose coordinate ``i + 1`` is
``+1`` when bit ``i`` is set and ``-1`` otherwise.  The l1 distance between
vertices ``A`` and ``B`` is ``2 |A ^ B|``, and the complement of ``A`` is the
antipodal point, so oddness reads ``f[~A] = -f[A]``.  With masks as array
indices the complement of index ``i`` is ``2**n - 1 - i``, i.e. the reversed
array.

Values are exact: a table stores integer numerators over one common
denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, NamedTuple, Optional, Sequence

import numpy as np

from .bounds import tail_bound
from .exactnum import DomainError, DyadicProb, RationalLike, ceil_rational, parse_rational
from .families import bits_to_mask, mask_to_bits

__all__ = [
    "MAX_DIM",
    "GENERATOR_MAX_DIM",
    "LipschitzTable",
    "Violation",
    "LipschitzCheck",
    "coordinate_sum",
    "weighted_coordinate_sum",
    "validate",
    "random_odd_lipschitz",
    "lipschitz_tail",
    "check_lipschitz_bound",
    "read_table",
    "write_table",
    "parse_table",
]

MAX_DIM = 16
GENERATOR_MAX_DIM = 12
# raw generator values live on a grid of step 1/8
_GRID = 8


class Violation(NamedTuple):
    kind: str  # "odd" or "lipschitz"
    a: int
    b: int


class LipschitzTable:
    """Values ``f_A`` on all ``2**n`` vertices, as ``numerators / denominator``."""

    __slots__ = ("n", "numerators", "denominator", "_valid")

    def __init__(self, n: int, numerators, denominator: int = 1):
        if n < 0 or n > MAX_DIM:
            raise DomainError(f"dimension must be in [0, {MAX_DIM}], got {n}")
        if denominator <= 0:
            raise DomainError("denominator must be positive")
        nums = np.asarray(numerators)
        if nums.shape != (1 << n,):
            raise DomainError(f"expected {1 << n} vertex values, got shape {nums.shape}")
        if nums.dtype != object:
            nums = nums.astype(np.int64)
        nums.setflags(write=False)
        self.n = n
        self.numerators = nums
        self.denominator = int(denominator)
        self._valid: Optional[bool] = None

    @classmethod
    def from_values(cls, n: int, values: Sequence[RationalLike] | Mapping[int, RationalLike]) -> "LipschitzTable":
        """Table from per-vertex rationals; a mapping must cover every mask."""
        if isinstance(values, Mapping):
            missing = [m for m in range(1 << n) if m not in values]
            if missing:
                raise DomainError(f"missing vertex {mask_to_bits(missing[0], n)}")
            seq = [parse_rational(values[m]) for m in range(1 << n)]
        else:
            seq = [parse_rational(v) for v in values]
            if len(seq) != 1 << n:
                raise DomainError(f"expected {1 << n} vertex values, got {len(seq)}")
        den = math.lcm(*(v.denominator for v in seq)) if seq else 1
        ints = [int(v * den) for v in seq]
        big = max((abs(v) for v in ints), default=0) >= 1 << 60
        return cls(n, np.array(ints, dtype=object if big else np.int64), den)

    def value(self, mask: int) -> Fraction:
        return Fraction(int(self.numerators[mask]), self.denominator)

    @property
    def values(self) -> list[Fraction]:
        return [Fraction(int(v), self.denominator) for v in self.numerators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LipschitzTable):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self) -> str:
        return f"LipschitzTable(n={self.n}, denominator={self.denominator})"


def coordinate_sum(n: int) -> LipschitzTable:
    """``f(y) = y_1 + ... + y_n``, i.e. ``f_A = 2|A| - n``."""
    masks = np.arange(1 << n, dtype=np.int64)
    return LipschitzTable(n, 2 * np.bitwise_count(masks).astype(np.int64) - n, 1)


def weighted_coordinate_sum(weights: Sequence[RationalLike]) -> LipschitzTable:
    """``f(y) = sum a_i y_i``; 1-Lipschitz and odd whenever every ``|a_i| <= 1``."""
    ws = [parse_rational(a) for a in weights]
    n = len(ws)
    den = math.lcm(*(a.denominator for a in ws)) if ws else 1
    scaled = [int(a * den) for a in ws]
    vals = np.zeros(1, dtype=np.int64)
    for a in scaled:
        vals = np.concatenate((vals - a, vals + a))
    # element i + 1 lands on bit i; a clear bit is the -1 coordinate
    return LipschitzTable(n, vals, den)


def validate(t: LipschitzTable) -> tuple[bool, Optional[Violation]]:
    """Check oddness and the vertex Lipschitz condition ``|f_A - f_B| <= 2|A ^ B|``.

    The cube distance is a path metric, so it suffices to test the ``n 2^(n-1)``
    edges.  Returns ``(True, None)`` or ``(False, violation)`` naming the first
    offending vertex or edge by mask order.
    """
    nums, n = t.numerators, t.n
    odd_bad = np.flatnonzero(nums + nums[::-1] != 0)
    if len(odd_bad):
        a = int(odd_bad[0])
        t._valid = False
        return False, Violation("odd", a, (1 << n) - 1 - a)
    limit = 2 * t.denominator
    first = None
    for i in range(n):
        v = nums.reshape(1 << (n - 1 - i), 2, 1 << i)
        bad = np.flatnonzero(np.abs(v[:, 1] - v[:, 0]).ravel() > limit)
        if len(bad):
            hi, lo = divmod(int(bad[0]), 1 << i)
            a = (hi << (i + 1)) | lo
            if first is None or a < first[0]:
                first = (a, a | (1 << i))
    if first is not None:
        t._valid = False
        return False, Violation("lipschitz", *first)
    t._valid = True
    return True, None


def _require_valid(t: LipschitzTable) -> None:
    if t._valid is None:
        validate(t)
    if not t._valid:
        raise DomainError("table is not an odd 1-Lipschitz function")


def random_odd_lipschitz(n: int, seed: int) -> LipschitzTable:
    """Random odd 1-Lipschitz table, deterministic in ``seed``.

    Raw values are drawn on ``[-n, n]`` in steps of 1/8, pushed down to the
    largest 1-Lipschitz function below them, ``h_A = min_B g_B + 2|A ^ B|``,
    and then made odd by ``f_A = (h_A - h_{~A}) / 2``.
    """
    if n < 0 or n > GENERATOR_MAX_DIM:
        raise DomainError(f"generator dimension must be in [0, {GENERATOR_MAX_DIM}], got {n}")
    rng = np.random.default_rng(seed)
    h = rng.integers(-_GRID * n, _GRID * n, size=1 << n, endpoint=True).astype(np.int64)
    step = 2 * _GRID
    # the l1 cube metric is a sum over coordinates, so one relaxation pass
    # per coordinate gives the exact minimum over all B
    for i in range(n):
        v = h.reshape(1 << (n - 1 - i), 2, 1 << i)
        lo, hi = v[:, 0].copy(), v[:, 1].copy()
        np.minimum(lo, hi + step, out=v[:, 0])
        np.minimum(hi, lo + step, out=v[:, 1])
    return LipschitzTable(n, h - h[::-1], 2 * _GRID)


def lipschitz_tail(t: LipschitzTable, x: RationalLike) -> DyadicProb:
    """``2^-n |{A : f_A >= x}|``, the tail of ``f`` at uniform random signs."""
    _require_valid(t)
    xf = parse_rational(x)
    if xf <= 0:
        raise DomainError(f"x must be > 0, got {xf}")
    threshold = ceil_rational(xf * t.denominator)
    return DyadicProb(int(np.count_nonzero(t.numerators >= threshold)), t.n)


@dataclass(frozen=True)
class LipschitzCheck:
    """Outcome of comparing a table's tail with the walk bound."""

    n: int
    x: Fraction
    lhs: DyadicProb
    rhs: DyadicProb
    effective_walk_length: int

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    @property
    def slack(self) -> Fraction:
        return self.rhs.to_fraction() - self.lhs.to_fraction()


def check_lipschitz_bound(t: LipschitzTable, x: RationalLike) -> LipschitzCheck:
    """Compare :func:`lipschitz_tail` with :func:`tail_bound`; never raises on violation."""
    lhs = lipschitz_tail(t, x)
    rep = tail_bound(t.n, x)
    return LipschitzCheck(t.n, parse_rational(x), lhs, rep.bound, rep.effective_walk_length)


# ---------------------------------------------------------------------------
# text format: one "bitstring value" line per vertex


def write_table(t: LipschitzTable, path: str | Path | None = None) -> str:
    lines = [f"{mask_to_bits(m, t.n)} {t.value(m)}\n" for m in range(1 << t.n)]
    text = "".join(lines)
    if path is not None:
        Path(path).write_text(text)
    return text


def parse_table(text: str) -> LipschitzTable:
    values: dict[int, Fraction] = {}
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"line {lineno}: expected 'bitmask value'")
        bits, val = parts
        if n is None:
            n = len(bits)
        elif len(bits) != n:
            raise DomainError(f"line {lineno}: bitmask length {len(bits)} != {n}")
        mask = bits_to_mask(bits)
        if mask in values:
            raise DomainError(f"line {lineno}: duplicate vertex {bits}")
        values[mask] = parse_rational(val)
    if n is None:
        raise DomainError("empty table")
    return LipschitzTable.from_values(n, values)


def read_table(path: str | Path) -> LipschitzTable:
    return parse_table(Path(path).read_text())
