"""Sweep harness: check every inequality against exact computation.

A :class:`SweepSpec` names the walk lengths, the ``x`` grid, where weight
vectors come from, and which checks to run.  :func:`iter_sweep` yields one
:class:`VerifyRecord` per (check, parameter point); :func:`run_sweep` collects
them with a summary.  Records come out in a fixed order (check, n, weight
index, x), so identical specs give identical output.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from . import bounds
from .exactnum import (
    DomainError,
    DyadicProb,
    RationalLike,
    ResourceError,
    ceil_rational,
    dyadic_to_decimal,
    parse_rational,
)
from .families import MAX_GROUND_SET, FamilyAuditReport, audit_family
from .lipschitz import GENERATOR_MAX_DIM, coordinate_sum, lipschitz_tail, random_odd_lipschitz
from .wsum import WalkDistribution, WeightVector, distribution

__all__ = [
    "CHECKS",
    "WORKERS_ENV",
    "FullGrid",
    "RandomWeights",
    "ExtremalOnly",
    "SweepSpec",
    "VerifyRecord",
    "SweepResult",
    "extremal_candidates",
    "find_max_tail",
    "iter_sweep",
    "run_sweep",
    "preset",
    "PRESETS",
    "load_spec",
    "record_to_dict",
    "summary_csv",
    "repro_command",
    "records_jsonl",
    "merge_summaries",
]

CHECKS = (
    "thm1",
    "thm2",
    "lem1",
    "lo",
    "katona",
    "milner",
    "kleitman",
    "lipschitz",
    "hoeffding_cmp",
    "kwapien_cmp",
)
_WEIGHT_CHECKS = {"thm1", "thm2", "lem1", "katona", "milner", "kleitman"}
_FAMILY_CHECKS = {"katona", "milner", "kleitman"}
WORKERS_ENV = "SYMWALK_WORKERS"
HOEFFDING_SLACK = 2.0 ** -40


def _frac(v: RationalLike) -> Fraction:
    return parse_rational(v)


@dataclass(frozen=True)
class FullGrid:
    """Every vector in ``values^n``; ``values`` defaults to multiples of ``step`` in [0, 1]."""

    step: Fraction = Fraction(1, 4)
    values: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        step = _frac(self.step)
        if step <= 0 or (1 / step).denominator != 1:
            raise DomainError(f"grid step must divide 1, got {step}")
        object.__setattr__(self, "step", step)
        if self.values is not None:
            object.__setattr__(self, "values", tuple(sorted(_frac(v) for v in self.values)))

    def grid(self) -> tuple[Fraction, ...]:
        if self.values is not None:
            return self.values
        m = int(1 / self.step)
        return tuple(self.step * i for i in range(m + 1))


@dataclass(frozen=True)
class RandomWeights:
    """``count`` vectors per ``n`` with entries ``p/q``, ``q <= max_denominator``."""

    count: int
    seed: int = 0
    max_denominator: int = 64
    positive: bool = False


@dataclass(frozen=True)
class ExtremalOnly:
    """Only the extremal configurations for each ``(n, x)``."""


WeightSource = Union[FullGrid, RandomWeights, ExtremalOnly]


@dataclass(frozen=True)
class SweepSpec:
    n_min: int
    n_max: int
    checks: frozenset
    weight_source: WeightSource = FullGrid()
    x_step: Fraction = Fraction(1, 4)
    x_grid: Optional[tuple[Fraction, ...]] = None
    x_from_support: int = 0
    k_values: tuple[int, ...] = (1, 2, 3)
    lipschitz_tables: int = 100
    lipschitz_seed: int = 0
    max_records: Optional[int] = None
    name: str = "custom"

    def __post_init__(self):
        checks = frozenset(self.checks)
        unknown = checks - set(CHECKS)
        if unknown:
            raise DomainError(f"unknown checks: {sorted(unknown)}")
        object.__setattr__(self, "checks", checks)
        object.__setattr__(self, "x_step", _frac(self.x_step))
        if self.x_step <= 0:
            raise DomainError("x_step must be positive")
        if self.x_grid is not None:
            object.__setattr__(self, "x_grid", tuple(_frac(x) for x in self.x_grid))
        if self.n_min < 0 or self.n_max < self.n_min:
            raise DomainError(f"bad n range [{self.n_min}, {self.n_max}]")

    def xs(self, n: int) -> list[Fraction]:
        if self.x_grid is not None:
            return [x for x in self.x_grid if x > 0]
        count = int(n / self.x_step)
        return [self.x_step * i for i in range(1, count + 1)]


@dataclass(frozen=True, slots=True)
class VerifyRecord:
    check: str
    n: int
    param: Fraction
    weights: str
    lhs: DyadicProb
    rhs: Union[DyadicProb, float]
    tight: bool
    passed: bool
    detail: str = ""


@dataclass
class SweepResult:
    records: list
    summary: dict
    truncated: bool = False
    notices: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and all(s["failed"] == 0 for s in self.summary.values())


# ---------------------------------------------------------------------------
# weight sources


def _ones(n: int) -> WeightVector:
    return WeightVector([1] * n)


def extremal_candidates(check_tag: str, n: int, x: RationalLike) -> list[WeightVector]:
    """Weight vectors at which the bounds are attained.

    All ones; all ones with the last weight zeroed; ``x/k`` repeated ``m``
    times then zeros (``m`` as in the point bound); ``x/k`` repeated ``n``
    times.  For ``lo`` the argument is the half-width ``k`` and only the
    all-ones vector is relevant.
    """
    xf = _frac(x)
    if xf <= 0:
        raise DomainError(f"x must be > 0, got {xf}")
    out: list[WeightVector] = [_ones(n)]
    if check_tag != "lo" and n >= 1:
        out.append(WeightVector([1] * (n - 1) + [0]))
        k = ceil_rational(xf)
        r = xf / k
        m = bounds.point_bound_thm2(n, xf).effective_walk_length
        out.append(WeightVector([r] * m + [0] * (n - m)))
        out.append(WeightVector([r] * n))
    seen, uniq = set(), []
    for w in out:
        if w.weights not in seen:
            seen.add(w.weights)
            uniq.append(w)
    return uniq


def _random_vectors(src: RandomWeights, n: int, bounded: bool = True) -> Iterator[WeightVector]:
    rng = np.random.default_rng([src.seed, n])
    for _ in range(src.count):
        dens = rng.integers(1, src.max_denominator, size=n, endpoint=True)
        lo = 1 if src.positive else 0
        nums = [int(rng.integers(lo, d, endpoint=True)) for d in dens]
        yield WeightVector([Fraction(p, int(q)) for p, q in zip(nums, dens)], bounded=bounded)


def _grid_vectors(src: FullGrid, n: int) -> Iterator[WeightVector]:
    vals = src.grid()
    bounded = all(abs(v) <= 1 for v in vals)
    for combo in itertools.product(vals, repeat=n):
        yield WeightVector(combo, bounded=bounded)


def find_max_tail(
    n: int, x: RationalLike, budget: Union[RationalLike, int] = Fraction(1, 4), seed: int = 0
) -> tuple[WeightVector, DyadicProb]:
    """Best ``P{S_n >= x}`` found over a weight grid or a random sample.

    ``budget`` is a grid step (``Fraction`` or string such as ``"1/4"``) or a
    random sample size (``int``).  The extremal candidates are always tried
    first, so the result dominates them.  Grid search runs over multisets
    since the law of ``S_n`` ignores the order of the weights.
    """
    xf = _frac(x)
    best_w, best_p = None, DyadicProb(0)

    def consider(w: WeightVector):
        nonlocal best_w, best_p
        p = distribution(w).tail_prob(xf)
        if best_w is None or p > best_p:
            best_w, best_p = w, p

    for w in extremal_candidates("thm1", n, xf):
        consider(w)
    if isinstance(budget, int) and not isinstance(budget, bool):
        yield_from = _random_vectors(RandomWeights(budget, seed), n)
    else:
        vals = FullGrid(_frac(budget)).grid()
        yield_from = (WeightVector(c) for c in itertools.combinations_with_replacement(vals, n))
    for w in yield_from:
        consider(w)
    return best_w, best_p


# ---------------------------------------------------------------------------
# record generation


def _rec(check, n, param, weights, lhs, rhs, detail="") -> VerifyRecord:
    if isinstance(rhs, float):
        passed = float(lhs) <= rhs + HOEFFDING_SLACK
        tight = False
    else:
        passed = lhs <= rhs
        tight = lhs == rhs
    return VerifyRecord(check, n, param, weights, lhs, rhs, tight, passed, detail)


def _support_xs(law: WalkDistribution, count: int) -> list[Fraction]:
    pos = [Fraction(v, law.scale) for v in law.values if v > 0]
    if not pos or count <= 0:
        return []
    idx = sorted({round(i * (len(pos) - 1) / max(count - 1, 1)) for i in range(count)})
    return [pos[i] for i in idx]


def _vectors(spec: SweepSpec, n: int, check: str) -> Iterator[tuple[Optional[Fraction], WeightVector]]:
    """``(x, w)`` pairs; ``x`` is ``None`` unless the source depends on ``x``."""
    src = spec.weight_source
    if isinstance(src, ExtremalOnly):
        if check == "lo":
            yield None, _ones(n)
            return
        for x in spec.xs(n):
            for w in extremal_candidates(check, n, x):
                yield x, w
    elif isinstance(src, RandomWeights):
        for w in _random_vectors(src, n, bounded=check != "lo"):
            yield None, w
    else:
        for w in _grid_vectors(src, n):
            yield None, w


def _weight_records(spec: SweepSpec, check: str, n: int) -> Iterator[VerifyRecord]:
    if check in _FAMILY_CHECKS and n > MAX_GROUND_SET:
        raise ResourceError(f"families limited to n <= {MAX_GROUND_SET}")
    laws: dict[str, WalkDistribution] = {}
    for fixed_x, w in _vectors(spec, n, check):
        if not w.bounded and any(abs(a) > 1 for a in w.weights):
            continue
        if check in ("lem1", "milner") and not w.all_positive():
            continue
        digest = w.digest()
        law = laws.get(digest)
        if law is None:
            law = laws[digest] = distribution(w)
        if fixed_x is not None:
            xs = [fixed_x]
        else:
            xs = spec.xs(n) + [x for x in _support_xs(law, spec.x_from_support) if x not in spec.xs(n)]
        label = str(w)
        for x in xs:
            if check == "thm1":
                yield _rec(check, n, x, label, law.tail_prob(x), bounds.tail_bound(n, x).bound)
            elif check == "thm2":
                yield _rec(check, n, x, label, law.point_prob(x), bounds.point_bound_thm2(n, x).bound)
            elif check == "lem1":
                yield _rec(check, n, x, label, law.point_prob(x), bounds.point_bound_lem1(n, x))
            else:
                yield _family_record(check, n, x, w, label, law)


# the three family checks share one audit per (weights, x)
_AUDITS: dict = {}
_AUDIT_CACHE_MAX = 1 << 16


def _audit(w: WeightVector, x: Fraction, law: WalkDistribution) -> FamilyAuditReport:
    key = (w.weights, x)
    rep = _AUDITS.get(key)
    if rep is None:
        if len(_AUDITS) >= _AUDIT_CACHE_MAX:
            _AUDITS.clear()
        rep = _AUDITS[key] = audit_family(w, x, law)
    return rep


def _family_record(check: str, n: int, x: Fraction, w: WeightVector, label: str,
                   law: WalkDistribution) -> VerifyRecord:
    rep = _audit(w, x, law)
    struct_ok = rep.tail_bridge_ok and rep.point_bridge_ok
    if check == "milner":
        lhs = DyadicProb(rep.eq_size, n)
        rhs = DyadicProb(rep.milner, n) if rep.milner is not None else DyadicProb(0)
        struct_ok = struct_ok and rep.eq_k_intersecting and rep.eq_antichain is not False
        detail = f"|F_x|={rep.eq_size} antichain={rep.eq_antichain}"
    else:
        bound = rep.katona if check == "katona" else rep.kleitman
        lhs = DyadicProb(rep.geq_size, n)
        rhs = DyadicProb(bound, n) if bound is not None else DyadicProb(0)
        if check == "katona":
            struct_ok = struct_ok and rep.geq_k_intersecting
            detail = f"|F>=x|={rep.geq_size} k-intersecting={rep.geq_k_intersecting}"
        else:
            struct_ok = struct_ok and rep.geq_diameter_ok
            detail = f"|F>=x|={rep.geq_size} diameter={rep.geq_diameter}"
    r = _rec(check, n, x, label, lhs, rhs, detail)
    if not struct_ok:
        r = VerifyRecord(r.check, r.n, r.param, r.weights, r.lhs, r.rhs, r.tight, False, detail + " STRUCTURE")
    return r


def _lo_records(spec: SweepSpec, n: int) -> Iterator[VerifyRecord]:
    if n < 1:
        return
    for _, w in _vectors(spec, n, "lo"):
        if any(abs(a) < 1 for a in w.weights):
            continue
        law = distribution(w)
        for k in spec.k_values:
            x_star, prob = law.best_interval(k)
            yield _rec("lo", n, Fraction(k), str(w), prob, bounds.lo_bound(n, k), f"x*={x_star}")


def _lipschitz_records(spec: SweepSpec, n: int) -> Iterator[VerifyRecord]:
    if n < 1:
        return
    if n > GENERATOR_MAX_DIM:
        raise ResourceError(f"random Lipschitz tables limited to n <= {GENERATOR_MAX_DIM}")
    tables = [("coordsum", coordinate_sum(n))]
    tables += [(f"seed={spec.lipschitz_seed + i}", random_odd_lipschitz(n, spec.lipschitz_seed + i))
               for i in range(spec.lipschitz_tables)]
    xs = spec.xs(n)
    rhs = {x: bounds.tail_bound(n, x) for x in xs}
    for label, t in tables:
        for x in xs:
            yield _rec("lipschitz", n, x, label, lipschitz_tail(t, x), rhs[x].bound)


def _comparison_records(spec: SweepSpec, check: str, n: int) -> Iterator[VerifyRecord]:
    if n < 1:
        return
    for x in spec.xs(n):
        tb = bounds.tail_bound(n, x).bound
        if check == "hoeffding_cmp":
            yield _rec(check, n, x, "-", tb, bounds.hoeffding_bound(n, x))
        else:
            yield _rec(check, n, x, "-", tb, bounds.kwapien_rhs(n, x))


def _task(spec: SweepSpec, check: str, n: int) -> tuple[list, list]:
    """All records for one (check, n) plus any truncation notices."""
    try:
        if check in _WEIGHT_CHECKS:
            if n < 1:
                return [], []
            return list(_weight_records(spec, check, n)), []
        if check == "lo":
            return list(_lo_records(spec, n)), []
        if check == "lipschitz":
            return list(_lipschitz_records(spec, n)), []
        return list(_comparison_records(spec, check, n)), []
    except ResourceError as exc:
        return [], [f"{check} n={n} skipped: {exc}"]


def _tasks(spec: SweepSpec) -> list[tuple[str, int]]:
    return [(c, n) for c in CHECKS if c in spec.checks for n in range(spec.n_min, spec.n_max + 1)]


def _workers(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def _task_star(args):
    return _task(*args)


def iter_sweep(spec: SweepSpec, notices: Optional[list] = None, workers: Optional[int] = None) -> Iterator[VerifyRecord]:
    """Yield records in deterministic order; truncation notices go to ``notices``."""
    tasks = _tasks(spec)
    workers = _workers(workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_task_star, [(spec, c, n) for c, n in tasks])
            for recs, notes in results:
                if notices is not None:
                    notices.extend(notes)
                yield from recs
        return
    for c, n in tasks:
        if c in _WEIGHT_CHECKS and n >= 1:
            # stream: grids can be large
            try:
                yield from _weight_records(spec, c, n)
            except ResourceError as exc:
                if notices is not None:
                    notices.append(f"{c} n={n} skipped: {exc}")
            continue
        recs, notes = _task(spec, c, n)
        if notices is not None:
            notices.extend(notes)
        yield from recs


def run_sweep(spec: SweepSpec, keep_records: bool = True, workers: Optional[int] = None) -> SweepResult:
    """Run a sweep; the summary counts records, failures and tight cases per check."""
    notices: list[str] = []
    summary = {c: {"records": 0, "passed": 0, "failed": 0, "tight": 0} for c in CHECKS if c in spec.checks}
    records, failures = [], []
    truncated = False
    for i, rec in enumerate(iter_sweep(spec, notices, workers)):
        if spec.max_records is not None and i >= spec.max_records:
            truncated = True
            notices.append(f"stopped after {spec.max_records} records (max_records)")
            break
        s = summary[rec.check]
        s["records"] += 1
        s["passed" if rec.passed else "failed"] += 1
        s["tight"] += rec.tight
        if not rec.passed:
            failures.append(repro_command(rec))
        if keep_records:
            records.append(rec)
    if notices and not truncated:
        truncated = any("skipped" in m for m in notices)
    return SweepResult(records, summary, truncated, notices, failures)


def repro_command(rec: VerifyRecord) -> str:
    """A CLI invocation that recomputes both sides of a record."""
    w = rec.weights.strip("()").replace(" ", "")
    x = rec.param
    if rec.check == "thm1":
        return f"symwalk prob tail --weights {w} --x {x} && symwalk bound tail --n {rec.n} --x {x}"
    if rec.check == "thm2":
        return f"symwalk prob point --weights {w} --x {x} && symwalk bound point --n {rec.n} --x {x}"
    if rec.check == "lem1":
        return (f"symwalk prob point --weights {w} --x {x} && "
                f"symwalk bound point --n {rec.n} --x {x} --strict-positive")
    if rec.check == "lo":
        return f"symwalk prob interval --weights {w} --k {x} && symwalk bound lo --n {rec.n} --k {x}"
    if rec.check in _FAMILY_CHECKS:
        return f"symwalk family audit --weights {w} --x {x}"
    if rec.check == "lipschitz":
        seed = rec.weights.split("=")[-1] if rec.weights.startswith("seed=") else None
        if seed is None:
            return f"symwalk prob tail --weights {','.join(['1'] * rec.n)} --x {x}"
        return (f"symwalk lipschitz gen --n {rec.n} --seed {seed} --out t.txt && "
                f"symwalk lipschitz check --table t.txt --x {x}")
    return f"symwalk bound tail --n {rec.n} --x {x}"


# ---------------------------------------------------------------------------
# presets and serialization


def preset(name: str) -> list[SweepSpec]:
    """Named sweep bundles: ``quick`` (small grids) and ``full`` (all acceptance sweeps)."""
    if name not in PRESETS:
        raise DomainError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    return PRESETS[name]()


def _quick() -> list[SweepSpec]:
    half = Fraction(1, 2)
    return [
        SweepSpec(1, 6, frozenset({"thm1", "thm2", "lem1"}), FullGrid(half), x_step=half, name="quick-walk"),
        SweepSpec(1, 5, frozenset({"katona", "milner", "kleitman"}), FullGrid(half), x_step=half,
                  name="quick-families"),
        SweepSpec(1, 10, frozenset({"thm1", "thm2"}), ExtremalOnly(), x_step=half, name="quick-extremal"),
        SweepSpec(1, 4, frozenset({"lo"}), FullGrid(values=(1, Fraction(3, 2), 2)), name="quick-lo"),
        SweepSpec(2, 6, frozenset({"lipschitz"}), x_step=half, lipschitz_tables=20, name="quick-lipschitz"),
        SweepSpec(1, 30, frozenset({"hoeffding_cmp", "kwapien_cmp"}), x_step=half, name="quick-compare"),
    ]


def _full() -> list[SweepSpec]:
    quarter, half = Fraction(1, 4), Fraction(1, 2)
    return [
        SweepSpec(1, 6, frozenset({"thm1", "thm2", "lem1"}), FullGrid(quarter), x_step=quarter, name="full-grid"),
        SweepSpec(1, 10, frozenset({"thm1", "thm2"}), ExtremalOnly(), x_step=half, name="full-extremal"),
        SweepSpec(1, 6, frozenset({"lo"}), FullGrid(values=(1, Fraction(5, 4), Fraction(3, 2), 2)),
                  k_values=(1, 2, 3), name="full-lo"),
        SweepSpec(1, 14, frozenset({"katona", "milner", "kleitman"}), RandomWeights(36, seed=2024),
                  x_step=half, x_from_support=4, name="full-families"),
        SweepSpec(2, 10, frozenset({"lipschitz"}), x_step=half, lipschitz_tables=1000, name="full-lipschitz"),
        SweepSpec(1, 30, frozenset({"hoeffding_cmp", "kwapien_cmp"}), x_step=half, name="full-compare"),
    ]


PRESETS = {"quick": _quick, "full": _full}


def load_spec(text: str) -> SweepSpec:
    """Parse a ``key = value`` sweep description.

    Keys: ``n_min``, ``n_max``, ``checks`` (comma list), ``weights``
    (``grid``, ``random`` or ``extremal``), ``grid_step``, ``grid_values``,
    ``random_count``, ``random_seed``, ``max_denominator``, ``x_step``,
    ``x_grid``, ``x_from_support``, ``k_values``, ``lipschitz_tables``,
    ``lipschitz_seed``, ``max_records``, ``name``.  ``#`` starts a comment.
    """
    kv: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        kv[key] = value

    def lst(key):
        return [s.strip() for s in kv[key].split(",") if s.strip()]

    source_kind = kv.get("weights", "grid")
    if source_kind == "grid":
        values = tuple(_frac(v) for v in lst("grid_values")) if "grid_values" in kv else None
        source: WeightSource = FullGrid(_frac(kv.get("grid_step", "1/4")), values)
    elif source_kind == "random":
        source = RandomWeights(int(kv.get("random_count", "100")), int(kv.get("random_seed", "0")),
                               int(kv.get("max_denominator", "64")))
    elif source_kind == "extremal":
        source = ExtremalOnly()
    else:
        raise DomainError(f"unknown weights source {source_kind!r}")
    return SweepSpec(
        n_min=int(kv.get("n_min", "1")),
        n_max=int(kv.get("n_max", "6")),
        checks=frozenset(lst("checks")) if "checks" in kv else frozenset({"thm1"}),
        weight_source=source,
        x_step=_frac(kv.get("x_step", "1/4")),
        x_grid=tuple(_frac(v) for v in lst("x_grid")) if "x_grid" in kv else None,
        x_from_support=int(kv.get("x_from_support", "0")),
        k_values=tuple(int(v) for v in lst("k_values")) if "k_values" in kv else (1, 2, 3),
        lipschitz_tables=int(kv.get("lipschitz_tables", "100")),
        lipschitz_seed=int(kv.get("lipschitz_seed", "0")),
        max_records=int(kv["max_records"]) if "max_records" in kv else None,
        name=kv.get("name", "custom"),
    )


def _render(p: Union[DyadicProb, float]) -> dict:
    if isinstance(p, float):
        return {"exact": None, "decimal": repr(p)}
    return {"exact": str(p), "decimal": dyadic_to_decimal(p, 12)}


def record_to_dict(rec: VerifyRecord) -> dict:
    lhs, rhs = _render(rec.lhs), _render(rec.rhs)
    return {
        "check": rec.check,
        "n": rec.n,
        "param": str(rec.param),
        "weights": rec.weights,
        "lhs": lhs["exact"],
        "lhs_decimal": lhs["decimal"],
        "rhs": rhs["exact"],
        "rhs_decimal": rhs["decimal"],
        "tight": rec.tight,
        "passed": rec.passed,
        "detail": rec.detail,
    }


def records_jsonl(records: Iterable[VerifyRecord]) -> Iterator[str]:
    for rec in records:
        yield json.dumps(record_to_dict(rec), sort_keys=True) + "\n"


def summary_csv(summary: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "records", "passed", "failed", "tight"])
    for check in CHECKS:
        if check in summary:
            s = summary[check]
            w.writerow([check, s["records"], s["passed"], s["failed"], s["tight"]])
    return buf.getvalue()


def merge_summaries(parts: Sequence[dict]) -> dict:
    out: dict = {}
    for part in parts:
        for check, s in part.items():
            t = out.setdefault(check, {"records": 0, "passed": 0, "failed": 0, "tight": 0})
            for key in t:
                t[key] += s[key]
    return out
