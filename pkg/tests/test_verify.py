import json
from fractions import Fraction

import pytest

import oracles
from symwalk.bounds import tail_bound
from symwalk.exactnum import DomainError, DyadicProb
from symwalk.verify import (
    ExtremalOnly,
    FullGrid,
    RandomWeights,
    SweepSpec,
    extremal_candidates,
    find_max_tail,
    iter_sweep,
    load_spec,
    merge_summaries,
    preset,
    records_jsonl,
    repro_command,
    run_sweep,
    summary_csv,
)

Q = Fraction


def test_extremal_candidate_examples():
    assert (Q(3, 4),) * 4 in [w.weights for w in extremal_candidates("thm2", 4, Q(3, 2))]
    assert (1, 1, 0) in [w.weights for w in extremal_candidates("thm1", 3, 2)]
    assert [w.weights for w in extremal_candidates("lo", 3, 1)] == [(1, 1, 1)]


def test_find_max_tail_examples():
    w, p = find_max_tail(3, 2, Q(1, 4))
    assert p == Q(1, 4) and oracles.tail(w.weights, 2) == Q(1, 4)
    assert find_max_tail(2, Q(1, 2), Q(1, 4))[1] == Q(1, 2)
    assert find_max_tail(1, 1, 10)[1] == Q(1, 2)


def test_find_max_tail_dominates_candidates():
    for n in range(1, 6):
        for x in (Q(1, 3), Q(3, 2), Q(2)):
            _, p = find_max_tail(n, x, 30, seed=n)
            for w in extremal_candidates("thm1", n, x):
                assert p >= oracles.tail(w.weights, x)


def test_small_grid_sweep_has_no_failures_and_finds_tight_cases():
    spec = SweepSpec(1, 3, {"thm1", "thm2", "lem1"}, FullGrid(Q(1, 2)), x_step=Q(1, 2))
    res = run_sweep(spec)
    assert res.ok and not res.failures
    assert res.summary["thm1"]["tight"] > 0
    assert all(r.passed for r in res.records)
    assert all(r.passed for r in res.records if r.tight)


def test_records_are_independently_correct():
    spec = SweepSpec(2, 2, {"thm1", "thm2"}, FullGrid(Q(1, 2)), x_step=Q(1, 2))
    for rec in run_sweep(spec).records:
        ws = [Q(s) for s in rec.weights.strip("()").split(", ")]
        oracle = oracles.tail if rec.check == "thm1" else oracles.point
        assert rec.lhs == oracle(ws, rec.param)


def test_extremal_sweep_is_tight_where_expected():
    spec = SweepSpec(1, 6, {"thm1", "thm2"}, ExtremalOnly(), x_step=Q(1, 2))
    res = run_sweep(spec)
    assert res.ok
    tight = {(r.check, r.n, r.param) for r in res.records if r.tight}
    for n in range(1, 7):
        for x in [Q(i, 2) for i in range(1, 2 * n + 1)]:
            assert ("thm1", n, x) in tight
            assert ("thm2", n, x) in tight


def test_lipschitz_and_comparison_sweeps():
    spec = SweepSpec(2, 4, {"lipschitz", "hoeffding_cmp", "kwapien_cmp"}, x_step=Q(1, 2), lipschitz_tables=5)
    res = run_sweep(spec)
    assert res.ok
    assert res.summary["lipschitz"]["records"] == sum(6 * 2 * n for n in range(2, 5))


def test_family_sweep():
    spec = SweepSpec(1, 5, {"katona", "milner", "kleitman"}, RandomWeights(10, seed=3), x_step=Q(1, 2),
                     x_from_support=2)
    res = run_sweep(spec)
    assert res.ok and res.summary["katona"]["records"] > 0


def test_budget_exceeded_yields_partial_results_and_notice():
    spec = SweepSpec(24, 25, {"katona"}, RandomWeights(1), x_grid=(Q(12),))
    res = run_sweep(spec)
    assert res.truncated and any("n=25 skipped" in m for m in res.notices)
    spec = SweepSpec(1, 6, {"thm1"}, FullGrid(Q(1, 2)), max_records=10)
    res = run_sweep(spec)
    assert res.truncated and len(res.records) == 10


def test_workers_give_identical_output():
    spec = SweepSpec(1, 3, {"thm1", "lem1", "lo"}, FullGrid(values=(1, Q(3, 2))), x_step=Q(1, 2))
    a = "".join(records_jsonl(iter_sweep(spec, workers=1)))
    b = "".join(records_jsonl(iter_sweep(spec, workers=2)))
    assert a == b


def test_serialization_round_trip():
    res = run_sweep(SweepSpec(1, 2, {"thm1", "hoeffding_cmp"}, FullGrid(Q(1, 2)), x_step=Q(1, 2)))
    for line in records_jsonl(res.records):
        d = json.loads(line)
        assert DyadicProb.parse(d["lhs"]).to_fraction() >= 0
        if d["rhs"] is not None:
            assert DyadicProb.parse(d["rhs"])
    text = summary_csv(merge_summaries([res.summary, res.summary]))
    assert text.splitlines()[0] == "check,records,passed,failed,tight"
    assert text.splitlines()[1].startswith("thm1,")


def test_load_spec():
    spec = load_spec("""
        # a custom sweep
        n_min = 2
        n_max = 3
        checks = thm1, lo
        weights = grid
        grid_values = 1, 3/2
        x_step = 1/2
        k_values = 1, 2
    """)
    assert (spec.n_min, spec.n_max, spec.checks) == (2, 3, frozenset({"thm1", "lo"}))
    assert spec.weight_source.grid() == (1, Q(3, 2))
    assert spec.xs(2) == [Q(1, 2), 1, Q(3, 2), 2]
    with pytest.raises(DomainError):
        load_spec("checks = thm9")
    with pytest.raises(DomainError):
        load_spec("weights = magic")


def test_presets():
    assert {s.name for s in preset("quick")} >= {"quick-walk", "quick-lipschitz"}
    with pytest.raises(DomainError):
        preset("slow")


def test_repro_command_mentions_both_sides():
    res = run_sweep(SweepSpec(3, 3, {"thm1"}, ExtremalOnly(), x_grid=(Q(2),)))
    cmd = repro_command(res.records[0])
    assert "symwalk prob tail" in cmd and "symwalk bound tail --n 3 --x 2" in cmd


def test_quick_preset_passes():
    for spec in preset("quick"):
        res = run_sweep(spec, keep_records=False)
        assert res.ok, (spec.name, res.failures[:3])
        assert not res.truncated


def test_tail_bound_grid_max_matches_find_max_tail():
    for n in range(1, 5):
        for x in [Q(i, 2) for i in range(1, 2 * n + 1)]:
            assert find_max_tail(n, x, Q(1, 4))[1] == tail_bound(n, x).bound
