import itertools
import math
from fractions import Fraction

import pytest

import oracles
from symwalk.bounds import (
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
from symwalk.exactnum import DomainError, DyadicProb

Q = Fraction


def test_tail_bound_examples():
    r = tail_bound(4, "1.2")
    assert (r.bound, r.effective_walk_length, r.parity_case) == (DyadicProb(5, 4), 4, ParityCase.EVEN)
    r = tail_bound(3, 2)
    assert (r.bound, r.effective_walk_length, r.parity_case) == (DyadicProb(1, 2), 2, ParityCase.ODD)
    assert r.theorem_tag is TheoremTag.THM1
    assert r.describe() == "odd case, W_2"


@pytest.mark.parametrize("n", [1, 2, 3, 7, 8])
@pytest.mark.parametrize("x", [Q(1, 10), Q(1, 2), Q(1)])
def test_tail_bound_is_one_half_on_unit_interval(n, x):
    assert tail_bound(n, x).bound == Q(1, 2)


def test_parity_indicator():
    assert parity_indicator("1.2", 4) == 1
    assert parity_indicator(2, 3) == 0


def test_point_bound_Bn_examples():
    assert point_bound_Bn(4, 2) == Q(4, 16)
    assert point_bound_Bn(5, 2) == Q(4, 16)
    assert point_bound_Bn(3, "0.5") == Q(3, 8)
    assert point_bound_Bn(0, 1) == 0


def test_point_bound_thm2_examples():
    r = point_bound_thm2(4, "1.5")
    assert (r.bound, r.effective_walk_length) == (Q(4, 16), 4)
    r = point_bound_thm2(9, 2)
    assert (r.bound, r.effective_walk_length, r.parity_case) == (Q(4, 16), 4, ParityCase.ODD)


def test_point_bound_lem1_examples():
    assert point_bound_lem1(4, "1.5") == Q(4, 16)
    # n + k odd: P{W_5 = 3} = C(5, 4) / 32
    assert point_bound_lem1(5, "1.5") == Q(5, 32)
    assert point_bound_lem1(3, "0.5") == Q(3, 8)


def test_lo_bound_examples():
    assert lo_bound(3, 1) == Q(3, 8)
    assert lo_bound(4, 2) == Q(10, 16)


@pytest.mark.parametrize("n", range(1, 13))
def test_lo_bound_is_sum_of_largest_binomials(n):
    row = sorted(oracles.pascal_row(n), reverse=True)
    for k in range(1, n + 2):
        assert lo_bound(n, k) == Q(sum(row[:k]), 2 ** n)


def test_family_bound_examples():
    assert katona_bound(3, 1) == 4
    assert katona_bound(4, 1) == 8
    assert katona_bound(4, 2) == 5
    assert milner_bound(4, 2) == 4
    assert milner_bound(4, 1) == 4
    assert [kleitman_bound(3, 1), kleitman_bound(4, 2), kleitman_bound(4, 1)] == [4, 5, 8]


def test_comparison_examples():
    assert hoeffding_bound(2, 2) == pytest.approx(math.exp(-1))
    assert hoeffding_bound(8, 4) == pytest.approx(math.exp(-1))
    assert kwapien_rhs(2, 2) == Q(1, 2)
    assert kwapien_rhs(4, 2) == Q(10, 16)
    assert kwapien_rhs(3, "0.5") == 1


@pytest.mark.parametrize(
    "call",
    [
        lambda: tail_bound(0, 1),
        lambda: tail_bound(3, 0),
        lambda: tail_bound(3, "-1/2"),
        lambda: point_bound_thm2(2, 0),
        lambda: lo_bound(3, 0),
        lambda: katona_bound(3, 4),
        lambda: milner_bound(3, 0),
        lambda: hoeffding_bound(3, 0.0),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


GRID = [Q(i, 4) for i in range(5)]


def _grid_max(n, fn):
    return max(fn(w) for w in itertools.combinations_with_replacement(GRID, n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tail_bound_equals_grid_maximum(n):
    # optimality: the bound is attained on the weight grid
    for x in [Q(i, 4) for i in range(1, 4 * n + 1)]:
        assert _grid_max(n, lambda w: oracles.tail(w, x)) == tail_bound(n, x).bound


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_point_bound_thm2_dominates_grid_and_is_attained(n):
    for x in [Q(i, 4) for i in range(1, 4 * n + 1)]:
        best = _grid_max(n, lambda w: oracles.point(w, x))
        assert best <= point_bound_thm2(n, x).bound
        k = math.ceil(x)
        m = point_bound_thm2(n, x).effective_walk_length
        assert oracles.point([x / k] * m + [0] * (n - m), x) == point_bound_thm2(n, x).bound


# exhaustive maximum families for tiny ground sets, via max clique


def _max_clique(vertices, ok_self, ok_pair):
    verts = [v for v in vertices if ok_self(v)]
    adj = {v: {u for u in verts if u != v and ok_pair(u, v)} for v in verts}
    best = 0

    def grow(size, cand):
        nonlocal best
        if size + len(cand) <= best:
            return
        if not cand:
            best = size
            return
        v = max(cand)
        grow(size + 1, cand & adj[v])
        grow(size, cand - {v})

    grow(0, set(verts))
    return best


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_family_bounds_match_exhaustive_extremal_sizes(n):
    pc = oracles.popcount
    sets = range(2 ** n)
    for k in range(1, n + 1):
        kint = _max_clique(sets, lambda a: pc(a) >= k, lambda a, b: pc(a & b) >= k)
        anti = _max_clique(sets, lambda a: pc(a) >= k,
                           lambda a, b: pc(a & b) >= k and a & b not in (a, b))
        diam = _max_clique(sets, lambda a: True, lambda a, b: pc(a ^ b) <= n - k)
        assert katona_bound(n, k) == kint
        assert milner_bound(n, k) == anti
        assert kleitman_bound(n, k) == diam
