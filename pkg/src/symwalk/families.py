"""Set families of sign patterns and their extremal-combinatorics audits.

A subset ``A`` of ``[n]`` is an ``n``-bit mask: bit ``i`` set means element
``i + 1`` belongs to ``A`` (equivalently, ``eps_{i+1} = +1``).  Bitstrings are
written with element 1 first, so ``"110"`` is ``{1, 2}`` for ``n = 3``.

Pairwise structure checks run either as direct numpy scans over member pairs
or, for dense families, through exact transforms over the whole cube that
count, for every vertex ``A``, the members ``B`` at each intersection size or
symmetric-difference size.  The cheaper route is chosen per call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .bounds import katona_bound, kleitman_bound, milner_bound
from .exactnum import DomainError, DyadicProb, RationalLike, ResourceError, ceil_rational, parse_rational
from .wsum import WalkDistribution, WeightVector, distribution, signed_sums

__all__ = [
    "MAX_GROUND_SET",
    "SetFamily",
    "SignedSubsetSum",
    "CheckResult",
    "FamilyAuditReport",
    "mask_to_bits",
    "bits_to_mask",
    "build_family_geq",
    "build_family_eq",
    "signed_subset_sums",
    "family_probability",
    "check_k_intersecting",
    "check_antichain",
    "diameter",
    "audit_family",
]

MAX_GROUND_SET = 24
# cube transforms hold (2^n, n+1) int32 tables
_TRANSFORM_MAX_N = 20
_PAIR_CHUNK = 1 << 22


def mask_to_bits(mask: int, n: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def bits_to_mask(bits: str) -> int:
    bits = bits.strip()
    if not bits or set(bits) - {"0", "1"}:
        raise DomainError(f"not a bitstring: {bits!r}")
    return sum(1 << i for i, b in enumerate(bits) if b == "1")


class CheckResult(NamedTuple):
    ok: bool
    witness: Optional[tuple[int, int]] = None


class SignedSubsetSum(NamedTuple):
    mask: int
    s_value: Fraction


class SetFamily:
    """Immutable family of distinct subsets of ``[n]``.

    Members are kept sorted by mask value.  Structural results are cached
    in :attr:`structure_flags` as they are computed.
    """

    __slots__ = ("n", "_members", "_flags")

    def __init__(self, n: int, members: Iterable[int]):
        if n < 0 or n > MAX_GROUND_SET:
            raise ResourceError(f"ground set limited to n <= {MAX_GROUND_SET} (got n={n})")
        arr = np.unique(np.fromiter((int(m) for m in members), dtype=np.int64))
        if len(arr) and (arr[0] < 0 or arr[-1] >= 1 << n):
            raise DomainError(f"mask out of range for n={n}")
        arr.setflags(write=False)
        self.n = n
        self._members = arr
        self._flags: dict = {}

    @classmethod
    def _from_sorted(cls, n: int, arr: np.ndarray) -> "SetFamily":
        fam = cls.__new__(cls)
        arr = arr.astype(np.int64, copy=False)
        arr.setflags(write=False)
        fam.n, fam._members, fam._flags = n, arr, {}
        return fam

    @classmethod
    def from_bitstrings(cls, lines: Iterable[str]) -> "SetFamily":
        rows = [ln.strip() for ln in lines if ln.strip()]
        if not rows:
            raise DomainError("cannot infer n from an empty bitstring list")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DomainError("bitstrings differ in length")
        return cls(n, (bits_to_mask(r) for r in rows))

    @property
    def members(self) -> np.ndarray:
        return self._members

    @property
    def structure_flags(self) -> dict:
        return dict(self._flags)

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self):
        return (int(m) for m in self._members)

    def __contains__(self, mask: int) -> bool:
        i = np.searchsorted(self._members, mask)
        return bool(i < len(self._members) and self._members[i] == mask)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._members, other._members)

    def __hash__(self) -> int:
        return hash((self.n, self._members.tobytes()))

    def __repr__(self) -> str:
        shown = ", ".join(self.to_bitstrings()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"SetFamily(n={self.n}, {{{shown}{more}}})"

    def to_bitstrings(self) -> list[str]:
        return [mask_to_bits(int(m), self.n) for m in self._members]

    def export_text(self) -> str:
        """Newline-separated bitstrings, element 1 first."""
        return "".join(b + "\n" for b in self.to_bitstrings())

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.export_text())

    def indicator(self) -> np.ndarray:
        ind = np.zeros(1 << self.n, dtype=bool)
        ind[self._members] = True
        return ind


# ---------------------------------------------------------------------------
# construction


def _require_ground(w: WeightVector) -> None:
    if w.n > MAX_GROUND_SET:
        raise ResourceError(f"ground set limited to n <= {MAX_GROUND_SET} (got n={w.n})")


def signed_subset_sums(w: WeightVector) -> list[SignedSubsetSum]:
    """Every ``(A, s_A)``; mainly for inspection of small cases."""
    _require_ground(w)
    return [SignedSubsetSum(A, Fraction(int(s), w.scale)) for A, s in enumerate(signed_sums(w))]


def build_family_geq(w: WeightVector, x: RationalLike) -> SetFamily:
    """``{A : s_A >= x}``."""
    _require_ground(w)
    threshold = ceil_rational(parse_rational(x) * w.scale)
    sums = signed_sums(w)
    return SetFamily._from_sorted(w.n, np.flatnonzero(sums >= threshold))


def build_family_eq(w: WeightVector, x: RationalLike) -> SetFamily:
    """``{A : s_A = x}``."""
    _require_ground(w)
    target = parse_rational(x) * w.scale
    if target.denominator != 1:
        return SetFamily._from_sorted(w.n, np.zeros(0, dtype=np.int64))
    sums = signed_sums(w)
    return SetFamily._from_sorted(w.n, np.flatnonzero(sums == int(target)))


# ---------------------------------------------------------------------------
# cube transforms


def _profile(fam: SetFamily, mode: str) -> np.ndarray:
    """``P[A, j] = #{B in F : stat(A, B) = j}`` for every vertex ``A``.

    ``stat`` is ``|A & B|`` for ``mode="meet"`` and ``|A ^ B|`` for ``"xor"``.
    Built one coordinate at a time; multiplying by the formal variable is a
    shift along the last axis.
    """
    n = fam.n
    prof = np.zeros((1 << n, n + 1), dtype=np.int32)
    prof[fam.members, 0] = 1
    for i in range(n):
        v = prof.reshape(1 << (n - 1 - i), 2, 1 << i, n + 1)
        b0 = v[:, 0].copy()
        b1 = v[:, 1].copy()
        if mode == "meet":
            v[:, 0] = b0 + b1
            v[:, 1] = b0
            v[:, 1, :, 1:] += b1[..., :-1]
        else:
            v[:, 0] = b0
            v[:, 0, :, 1:] += b1[..., :-1]
            v[:, 1] = b1
            v[:, 1, :, 1:] += b0[..., :-1]
    return prof


def _use_transform(fam: SetFamily) -> bool:
    n, m = fam.n, len(fam)
    return n <= _TRANSFORM_MAX_N and m * m > (n + 1) << n


def _pair_rows(fam: SetFamily):
    """Yield ``(start, rows)`` chunks so each row-by-members block stays bounded."""
    mem = fam.members
    rows = max(1, _PAIR_CHUNK // max(len(mem), 1))
    for start in range(0, len(mem), rows):
        yield start, mem[start:start + rows]


def _first_partner(fam: SetFamily, a: int, bad) -> int:
    mem = fam.members
    hits = np.flatnonzero(bad(a, mem))
    return int(mem[hits[0]])


def check_k_intersecting(fam: SetFamily, k: int) -> CheckResult:
    """Whether ``|A & B| >= k`` for all ``A, B`` in the family (``A = B`` included).

    On failure the witness is the lexicographically first violating pair.
    """
    key = ("k_intersecting", k)
    mem = fam.members
    if len(mem) == 0:
        fam._flags[key] = True
        return CheckResult(True)

    def bad(a, arr):
        return np.bitwise_count(arr & a) < k

    first = None
    if _use_transform(fam):
        prof = _profile(fam, "meet")[mem]
        low = prof[:, :k].sum(axis=1)
        idx = np.flatnonzero(low > 0)
        if len(idx):
            first = int(mem[idx[0]])
    else:
        for start, chunk in _pair_rows(fam):
            viol = np.bitwise_count(chunk[:, None] & mem[None, :]) < k
            rows = np.flatnonzero(viol.any(axis=1))
            if len(rows):
                first = int(chunk[rows[0]])
                break
    if first is None:
        fam._flags[key] = True
        return CheckResult(True)
    fam._flags[key] = False
    return CheckResult(False, (first, _first_partner(fam, first, bad)))


def check_antichain(fam: SetFamily) -> CheckResult:
    """Whether no member is a proper subset of another.

    The witness ``(A, B)`` has ``A`` a proper subset of ``B``, with ``A``
    the smallest such mask and ``B`` its smallest proper superset.
    """
    mem = fam.members
    if len(mem) <= 1:
        fam._flags["is_antichain"] = True
        return CheckResult(True)
    n = fam.n
    first = None
    if len(mem) * len(mem) > (n + 1) << n:
        # up[C] = number of members containing C
        up = fam.indicator().astype(np.int32)
        for i in range(n):
            v = up.reshape(1 << (n - 1 - i), 2, 1 << i)
            v[:, 0] += v[:, 1]
        idx = np.flatnonzero(up[mem] > 1)
        if len(idx):
            first = int(mem[idx[0]])
    else:
        for start, chunk in _pair_rows(fam):
            sub = ((chunk[:, None] & mem[None, :]) == chunk[:, None]) & (chunk[:, None] != mem[None, :])
            rows = np.flatnonzero(sub.any(axis=1))
            if len(rows):
                first = int(chunk[rows[0]])
                break
    if first is None:
        fam._flags["is_antichain"] = True
        return CheckResult(True)
    fam._flags["is_antichain"] = False
    partner = _first_partner(fam, first, lambda a, arr: ((arr & a) == a) & (arr != a))
    return CheckResult(False, (first, partner))


def diameter(fam: SetFamily) -> int:
    """``max |A ^ B|`` over members; 0 for a single member."""
    mem = fam.members
    if len(mem) == 0:
        raise DomainError("diameter of an empty family is undefined")
    if _use_transform(fam):
        prof = _profile(fam, "xor")[mem]
        nz = prof > 0
        # highest nonzero column in each row
        d = int((fam.n - np.argmax(nz[:, ::-1], axis=1)).max())
    else:
        d = 0
        for start, chunk in _pair_rows(fam):
            d = max(d, int(np.bitwise_count(chunk[:, None] ^ mem[None, :]).max()))
    fam._flags["diameter"] = d
    return d


# ---------------------------------------------------------------------------
# audit


@dataclass(frozen=True)
class FamilyAuditReport:
    """Structure and cardinality of ``F_{>=x}`` and ``F_x`` for one weight vector.

    Fields that do not apply are ``None``: the antichain check needs every
    weight nonzero, and the cardinality bounds need ``k <= n``.
    """

    n: int
    x: Fraction
    k: int
    weights: str
    geq_size: int
    eq_size: int
    geq_k_intersecting: bool
    geq_witness: Optional[tuple[int, int]]
    geq_diameter: Optional[int]
    geq_diameter_ok: bool
    eq_k_intersecting: bool
    eq_antichain: Optional[bool]
    eq_witness: Optional[tuple[int, int]]
    katona: Optional[int]
    kleitman: Optional[int]
    milner: Optional[int]
    tail_bridge_ok: bool
    point_bridge_ok: bool
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def katona_ok(self) -> bool:
        return self.katona is None or self.geq_size <= self.katona

    @property
    def kleitman_ok(self) -> bool:
        return self.kleitman is None or self.geq_size <= self.kleitman

    @property
    def milner_ok(self) -> bool:
        # Milner's bound needs an antichain, which needs nonzero weights
        return self.milner is None or self.eq_antichain is None or self.eq_size <= self.milner

    @property
    def passed(self) -> bool:
        return (
            self.geq_k_intersecting
            and self.geq_diameter_ok
            and self.eq_k_intersecting
            and self.eq_antichain is not False
            and self.katona_ok
            and self.kleitman_ok
            and self.milner_ok
            and self.tail_bridge_ok
            and self.point_bridge_ok
        )

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "x": str(self.x),
            "k": self.k,
            "weights": self.weights,
            "geq_size": self.geq_size,
            "eq_size": self.eq_size,
            "geq_k_intersecting": self.geq_k_intersecting,
            "geq_witness": None if self.geq_witness is None
            else [mask_to_bits(m, self.n) for m in self.geq_witness],
            "geq_diameter": self.geq_diameter,
            "geq_diameter_ok": self.geq_diameter_ok,
            "eq_k_intersecting": self.eq_k_intersecting,
            "eq_antichain": "not applicable" if self.eq_antichain is None else self.eq_antichain,
            "eq_witness": None if self.eq_witness is None
            else [mask_to_bits(m, self.n) for m in self.eq_witness],
            "katona_bound": self.katona,
            "kleitman_bound": self.kleitman,
            "milner_bound": self.milner,
            "katona_tight": self.katona is not None and self.geq_size == self.katona,
            "milner_tight": self.milner is not None and self.eq_size == self.milner,
            "tail_bridge_ok": self.tail_bridge_ok,
            "point_bridge_ok": self.point_bridge_ok,
            "passed": self.passed,
            "notes": list(self.notes),
        }


def audit_family(w: WeightVector, x: RationalLike, law: Optional[WalkDistribution] = None) -> FamilyAuditReport:
    """Build ``F_{>=x}`` and ``F_x`` with ``k = ceil(x)`` and check every claim.

    Weights must be non-negative: the intersection argument relies on it.
    The bridge identities compare family sizes with probabilities from the
    convolution engine (or from ``law``, if the caller already has it).
    """
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    _require_ground(w)
    xf = parse_rational(x)
    if xf <= 0:
        raise DomainError(f"x must be > 0, got {xf}")
    if any(a < 0 for a in w.weights):
        raise DomainError("audit needs non-negative weights; use WeightVector.normalized()")
    n, k = w.n, ceil_rational(xf)
    geq = build_family_geq(w, xf)
    eq = build_family_eq(w, xf)
    notes = []

    inter = check_k_intersecting(geq, k)
    geq_diam = diameter(geq) if len(geq) else None
    diam_ok = geq_diam is None or geq_diam <= n - k
    eq_inter = check_k_intersecting(eq, k)
    if w.all_nonzero():
        anti = check_antichain(eq)
        eq_anti, eq_wit = anti.ok, anti.witness
    else:
        eq_anti, eq_wit = None, None
        notes.append("antichain check not applicable: zero weight present")

    if 1 <= k <= n:
        kat, kle, mil = katona_bound(n, k), kleitman_bound(n, k), milner_bound(n, k)
    else:
        kat = kle = mil = None
        notes.append(f"k={k} exceeds n={n}: families must be empty")

    if law is None:
        law = distribution(w, "convolve")
    tail_ok = DyadicProb(len(geq), n) == law.tail_prob(xf)
    point_ok = DyadicProb(len(eq), n) == law.point_prob(xf)
    if kat is None and (len(geq) or len(eq)):
        notes.append("nonempty family with k > n")
        diam_ok = False

    return FamilyAuditReport(
        n=n,
        x=xf,
        k=k,
        weights=w.digest(),
        geq_size=len(geq),
        eq_size=len(eq),
        geq_k_intersecting=inter.ok,
        geq_witness=inter.witness,
        geq_diameter=geq_diam,
        geq_diameter_ok=diam_ok,
        eq_k_intersecting=eq_inter.ok,
        eq_antichain=eq_anti,
        eq_witness=eq_wit,
        katona=kat,
        kleitman=kle,
        milner=mil,
        tail_bridge_ok=tail_ok,
        point_bridge_ok=point_ok,
        notes=tuple(notes),
    )


def family_probability(fam: SetFamily) -> DyadicProb:
    """``|F| / 2**n``."""
    return DyadicProb(len(fam), fam.n)
