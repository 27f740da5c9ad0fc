from collections import Counter
from itertools import combinations, permutations
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unigf import enumeration as en
from unigf.enumeration import (LLPartition, StatVector, enumerate_llp, min_right_moves,
                               s_poly_bruteforce, s_poly_rec, stat_nse, stat_nsb, stat_rlb,
                               stat_rle, stats)
from unigf.polyring import ALPHA, BETA, LAMBDA, MU, MPoly
from unigf.unified import coeff_triangle, u_poly_main

EXAMPLE = LLPartition.parse("382/147/96/5")


def llp_by_cuts(n, k):
    # Independent construction: a permutation of [n] cut into k non-empty runs.
    for perm in permutations(range(1, n + 1)):
        for cuts in combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            yield tuple(perm[bounds[i]:bounds[i + 1]] for i in range(k))


def test_parse_and_format():
    assert EXAMPLE.blocks == ((3, 8, 2), (1, 4, 7), (9, 6), (5,))
    assert EXAMPLE.format() == "3,8,2/1,4,7/9,6/5"
    assert LLPartition.parse("3,8,2/1,4,7/9,6/5") == EXAMPLE
    assert LLPartition.parse("10,1/2,3,4,5,6,7,8,9").n == 10
    with pytest.raises(ValueError):
        LLPartition.parse("12/24")
    with pytest.raises(ValueError):
        LLPartition(((1,), ()))


def test_worked_example_statistics():
    assert stat_rlb(EXAMPLE) == 1
    assert stat_nsb(EXAMPLE) == 2
    assert stat_rle(EXAMPLE) == 2
    assert stat_nse(EXAMPLE) == 3
    assert stats(EXAMPLE) == StatVector(1, 2, 2, 3)


@pytest.mark.parametrize("text, want", [
    ("1234", StatVector(0, 0, 3, 0)),
    ("4321", StatVector(0, 0, 0, 3)),
    ("21/3", StatVector(1, 0, 0, 1)),
    ("12/34", StatVector(1, 0, 2, 0)),
    ("43/21", StatVector(0, 1, 0, 2)),
])
def test_small_statistics(text, want):
    p = LLPartition.parse(text)
    assert stats(p) == want
    assert (stat_rlb(p), stat_nsb(p), stat_rle(p), stat_nse(p)) == tuple(want)


def test_min_right_moves_examples():
    assert min_right_moves((2, 1, 6, 5)) == 2
    assert min_right_moves((1, 2, 3)) == 0
    assert min_right_moves((3, 8, 2)) == 2
    assert min_right_moves(()) == 0
    with pytest.raises(ValueError):
        min_right_moves(tuple(range(9)))
    with pytest.raises(ValueError):
        min_right_moves((1, 1))


@given(st.permutations(range(1, 8)))
def test_min_right_moves_equals_non_rl_minima(perm):
    assert min_right_moves(perm) == len(perm) - len(en.right_to_left_minima(perm))


def test_enumerate_small_streams():
    assert [p.format() for p in enumerate_llp(2, 1)] == ["1,2", "2,1"]
    assert list(enumerate_llp(2, 3)) == []
    assert [p.format() for p in enumerate_llp(3, 2)][:4] == ["1,2/3", "2,1/3", "3/1,2", "3/2,1"]


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_cut_construction(n):
    for k in range(1, n + 1):
        ours = [p.blocks for p in enumerate_llp(n, k)]
        assert len(ours) == len(set(ours))
        assert set(ours) == set(llp_by_cuts(n, k))


def test_counts():
    # one block of size 2 among three: 6 set partitions * 3! block orders * 2
    assert en.count_llp(4, 3) == 72
    assert sum(en.count_llp(4, k) for k in range(1, 5)) == factorial(4) * 2**3
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert en.count_llp(n, k) == comb(n - 1, k - 1) * factorial(n)


def test_restricted_growth_strings():
    rgs = list(en.restricted_growth_strings(4, 2))
    assert rgs == sorted(rgs)
    assert len(rgs) == 7
    assert [len(list(en.set_partitions(5, k))) for k in range(1, 6)] == [1, 15, 25, 10, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_complementarity_and_move_oracle(n):
    for k in range(1, n + 1):
        for p in enumerate_llp(n, k):
            s = stats(p)
            assert s.nsb + s.rlb == k - 1
            assert s.nse + s.rle == n - k
            assert s.nsb == min_right_moves(p.openers())
            assert s.nse == sum(min_right_moves(b) for b in p.blocks)
            assert s == StatVector(stat_rlb(p), stat_nsb(p), stat_rle(p), stat_nse(p))


def test_s_poly_examples():
    assert s_poly_bruteforce(1, 1) == 1
    assert s_poly_bruteforce(2, 2) == ALPHA + BETA
    assert s_poly_rec(2, 1) == LAMBDA + MU
    assert s_poly_rec(3, 3) == (ALPHA + BETA) * (ALPHA + 2 * BETA)
    assert s_poly_rec(3, 4).is_zero()
    assert s_poly_bruteforce(3, 4).is_zero()


def test_worked_example_seven_partitions():
    # rlb=1, nsb=0, rle=2, nse=0 among four elements in two blocks
    want = {LLPartition.parse(s).blocks for s in
            ["12/34", "13/24", "14/23", "1/234", "134/2", "124/3", "123/4"]}
    got = {p.blocks for p in enumerate_llp(4, 2) if stats(p) == StatVector(1, 0, 2, 0)}
    assert got == want
    s42 = s_poly_bruteforce(4, 2).substitute({"b": 1, "m": 1})
    assert s42.coefficient((0, 1, 0, 2, 0)) == 7


@pytest.mark.parametrize("n", range(1, 8))
def test_bruteforce_equals_recurrence_and_triangle(n):
    tri = coeff_triangle(n)
    for k in range(1, n + 1):
        assert s_poly_bruteforce(n, k) == s_poly_rec(n, k) == tri.entry(n, k)


@pytest.mark.parametrize("n", range(1, 11))
def test_recurrence_bridge_to_main(n):
    for k in range(1, n + 1):
        assert s_poly_rec(n, k) == u_poly_main(n).coeff_of_x_power(k)


def test_counting_at_all_ones():
    ones = {s: 1 for s in "ablm"}
    for n in range(1, 7):
        total = sum(s_poly_bruteforce(n, k).evaluate(ones) for k in range(1, n + 1))
        assert total == factorial(n) * 2 ** (n - 1)
        assert total == u_poly_main(n).substitute(ones).coefficient_sum()


def test_guard():
    with pytest.raises(en.EnumerationTooLarge):
        s_poly_bruteforce(9, 3)


def test_enumeration_is_deterministic():
    assert [p.blocks for p in enumerate_llp(5, 3)] == [p.blocks for p in enumerate_llp(5, 3)]
