from fractions import Fraction

import numpy as np
import pytest

import oracles
from symwalk.bounds import tail_bound
from symwalk.exactnum import DomainError, DyadicProb
from symwalk.lipschitz import (
    LipschitzTable,
    check_lipschitz_bound,
    coordinate_sum,
    lipschitz_tail,
    parse_table,
    random_odd_lipschitz,
    read_table,
    validate,
    weighted_coordinate_sum,
    write_table,
)

Q = Fraction


def scaled(t: LipschitzTable, c) -> LipschitzTable:
    return LipschitzTable.from_values(t.n, [c * v for v in t.values])


def test_validate_examples():
    assert validate(coordinate_sum(3)) == (True, None)
    ok, v = validate(scaled(coordinate_sum(3), 3))
    assert not ok and v.kind == "lipschitz"
    ok, v = validate(LipschitzTable.from_values(2, [0, 1, 0, 0]))
    assert not ok and v.kind == "odd" and v.a == 1


def test_tail_examples():
    assert lipschitz_tail(coordinate_sum(3), 2) == Q(1, 8)
    assert lipschitz_tail(coordinate_sum(3), Q(1, 2)) == Q(1, 2)


def test_check_examples():
    c = check_lipschitz_bound(coordinate_sum(3), 2)
    assert (c.lhs, c.rhs, c.passed, c.tight) == (Q(1, 8), Q(1, 4), True, False)
    c = check_lipschitz_bound(coordinate_sum(4), 2)
    assert (c.lhs, c.rhs, c.tight) == (Q(5, 16), Q(5, 16), True)
    # at x = 1 the sum sits one parity step below the bound
    c = check_lipschitz_bound(coordinate_sum(4), 1)
    assert (c.lhs, c.rhs, c.tight) == (Q(5, 16), Q(1, 2), False)
    c = check_lipschitz_bound(scaled(coordinate_sum(3), Q(1, 2)), 2)
    assert (c.lhs, c.rhs, c.slack) == (0, Q(1, 4), Q(1, 4))


def test_tail_rejects_invalid_table_and_bad_x():
    with pytest.raises(DomainError):
        lipschitz_tail(scaled(coordinate_sum(2), 3), 1)
    with pytest.raises(DomainError):
        lipschitz_tail(coordinate_sum(2), 0)


@pytest.mark.parametrize("seed", range(300))
def test_validate_matches_all_pairs_oracle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 5))
    t = random_odd_lipschitz(n, seed)
    vals = list(t.values)
    # perturb one antipodal pair half the time, keeping oddness
    if seed % 2:
        a = int(rng.integers(0, 1 << n))
        bump = Q(int(rng.integers(1, 9)), 4)
        vals[a] += bump
        vals[(1 << n) - 1 - a] -= bump
    # and break oddness a quarter of the time
    if seed % 4 == 2:
        vals[0] += Q(1, 8)
    u = LipschitzTable.from_values(n, vals)
    assert validate(u)[0] == oracles.lipschitz_ok(n, vals)


@pytest.mark.parametrize("n", range(0, 9))
def test_generator_output_is_valid_and_deterministic(n):
    for seed in range(40 if n <= 6 else 8):
        t = random_odd_lipschitz(n, seed)
        assert validate(t) == (True, None)
        assert t == random_odd_lipschitz(n, seed)


@pytest.mark.parametrize("seed", range(60))
def test_generator_matches_mcshane_oracle(seed):
    n = 1 + seed % 5
    rng = np.random.default_rng(seed)
    g = [Q(int(v), 8) for v in rng.integers(-8 * n, 8 * n, size=1 << n, endpoint=True)]
    h = oracles.mcshane_minorant(n, g)
    expected = [(h[a] - h[(1 << n) - 1 - a]) / 2 for a in range(1 << n)]
    assert random_odd_lipschitz(n, seed).values == expected
    assert oracles.lipschitz_ok(n, expected)


def test_one_dimensional_generator():
    for seed in range(50):
        t = random_odd_lipschitz(1, seed)
        f0, f1 = t.values
        assert f0 == -f1 and abs(f1) <= 1


def test_range_bound_gives_zero_tail_above_n():
    for seed in range(20):
        t = random_odd_lipschitz(4, seed)
        assert lipschitz_tail(t, Q(41, 10)) == 0


def test_weighted_coordinate_sum_matches_walk_tail():
    t = weighted_coordinate_sum([1, 1, Q(1, 2)])
    assert validate(t)[0]
    assert lipschitz_tail(t, Q(3, 2)) == Q(2, 8)


@pytest.mark.parametrize("n", range(1, 9))
def test_coordinate_sum_tight_at_matching_parity(n):
    for x in range(1, n + 1):
        c = check_lipschitz_bound(coordinate_sum(n), x)
        assert c.passed
        assert c.tight == ((x + n) % 2 == 0)


def test_table_text_round_trip(tmp_path):
    t = random_odd_lipschitz(3, 11)
    p = tmp_path / "t.txt"
    text = write_table(t, p)
    assert text.splitlines()[0].startswith("000 ")
    assert read_table(p) == t
    with pytest.raises(DomainError):
        parse_table("00 1\n11 -1\n01 0\n")
    with pytest.raises(DomainError):
        parse_table("0 1\n0 1\n")


def test_bad_table_shapes():
    with pytest.raises(DomainError):
        LipschitzTable(2, [0, 0, 0])
    with pytest.raises(DomainError):
        random_odd_lipschitz(13, 0)
    with pytest.raises(DomainError):
        LipschitzTable.from_values(1, {0: 1})


def test_tail_bound_dominates_random_tables():
    for n in range(1, 7):
        for seed in range(50):
            t = random_odd_lipschitz(n, seed)
            for x in [Q(i, 4) for i in range(1, 4 * n + 1)]:
                assert lipschitz_tail(t, x) <= tail_bound(n, x).bound
