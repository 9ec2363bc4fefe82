import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiex import partition_opt as po
from multiex.errors import InvalidArity, InvalidSize
from oracles import f_bruteforce


def sizes(max_len=7, max_value=12, min_len=1):
    return st.lists(st.integers(1, max_value), min_size=min_len, max_size=max_len)


class TestFGeneral:
    def test_f2_is_zero_without_witness(self):
        assert po.f_general([5], 2) == po.FtResult(0, None)

    def test_three_ones_canonical_witness(self):
        # all three splits give 1*2; the canonical one is {1},{2,3}
        assert po.f_general([1, 1, 1], 3) == po.FtResult(2, ((0,), (1, 2)))

    def test_one_to_four(self):
        res = po.f_general([4, 3, 2, 1], 3)
        assert res.value == f_bruteforce((1, 2, 3, 4), 3) == 25
        assert sorted(sum((1, 2, 3, 4)[i] for i in b) for b in res.witness) == [5, 5]

    def test_reduced_main_instance(self):
        assert po.f_general([7, 16, 16, 16], 3).value == f_bruteforce((7, 16, 16, 16), 3) == 736

    def test_t_equals_r_plus_one_is_error(self):
        with pytest.raises(InvalidArity):
            po.f_general([1, 2], 4)

    def test_t_below_two_is_error(self):
        with pytest.raises(InvalidArity):
            po.f_general([1, 2], 1)

    @pytest.mark.parametrize("bad", [[0, 1], [-2, 3], [1.5, 2]])
    def test_invalid_sizes(self, bad):
        with pytest.raises(InvalidSize):
            po.f_general(bad, 3)

    def test_large_totals_use_exact_integers(self):
        big = [2**40, 2**40 + 1, 3]
        expected = f_bruteforce(tuple(sorted(big)), 3)
        assert po.f_general(big, 3).value == expected
        assert po.f3_fast(big).value == expected


def test_set_partitions_counts_match_stirling_numbers():
    # S(5,2)=15, S(5,3)=25, S(6,3)=90
    assert len(po.set_partitions(5, 2)) == 15
    assert len(po.set_partitions(5, 3)) == 25
    assert len(po.set_partitions(6, 3)) == 90
    for p in po.set_partitions(6, 3):
        assert po.is_partition(p, 6, 3)
    assert len(set(po.set_partitions(6, 3))) == 90


class TestF3Fast:
    def test_examples(self):
        assert po.f3_fast([2, 2, 2, 2]).value == 16
        assert po.f3_fast([9, 9]) == po.FtResult(81, ((0,), (1,)))
        res = po.f3_fast([1, 2, 2])
        assert res.value == 6
        assert sorted(sum((1, 2, 2)[i] for i in b) for b in res.witness) == [2, 3]

    def test_arity(self):
        with pytest.raises(InvalidArity):
            po.f3_fast([4])

    @settings(max_examples=300, deadline=None)
    @given(sizes(max_len=9, max_value=20, min_len=2))
    def test_matches_general(self, xs):
        fast, general = po.f3_fast(xs), po.f_general(xs, 3)
        assert fast.value == general.value
        canon = po.canonical(xs)
        assert po.is_partition(fast.witness, len(xs), 2)
        assert po.partition_value(canon, fast.witness) == fast.value


class TestClosedForm:
    def test_examples(self):
        assert po.f_closed_equal_r([1, 2, 3]) == 9 == f_bruteforce((1, 2, 3), 3)
        assert po.f_closed_equal_r([2, 2]) == 0
        assert po.f_closed_equal_r([2, 2, 2]) == 8

    @settings(max_examples=200, deadline=None)
    @given(sizes(max_len=7, min_len=2))
    def test_matches_general(self, xs):
        assert po.f_closed_equal_r(xs) == po.f_general(xs, len(xs)).value


@settings(max_examples=150, deadline=None)
@given(sizes(max_len=6, max_value=8), st.integers(2, 6))
def test_general_matches_labelling_bruteforce(xs, t):
    if t >= 3 and len(xs) < t - 1:
        return
    assert po.f_general(xs, t).value == f_bruteforce(tuple(sorted(xs)), t)


@settings(max_examples=200, deadline=None)
@given(sizes(max_len=7), st.integers(2, 6), st.data())
def test_monotone_in_each_entry(xs, t, data):
    if t >= 3 and len(xs) < t - 1:
        return
    i = data.draw(st.integers(0, len(xs) - 1))
    bigger = list(xs)
    bigger[i] += 1
    assert po.f_general(bigger, t).value >= po.f_general(xs, t).value


@settings(max_examples=200, deadline=None)
@given(sizes(max_len=7), st.integers(3, 6))
def test_witness_reproduces_value(xs, t):
    if len(xs) < t - 1:
        return
    res = po.f_general(xs, t)
    assert po.is_partition(res.witness, len(xs), t - 1)
    assert po.partition_value(po.canonical(xs), res.witness) == res.value


@settings(max_examples=100, deadline=None)
@given(sizes(max_len=6), st.integers(3, 5))
def test_witness_is_lexicographically_smallest_maximizer(xs, t):
    if len(xs) < t - 1:
        return
    canon = po.canonical(xs)
    res = po.f_general(xs, t)
    maximizers = [
        p for p in po.set_partitions(len(canon), t - 1)
        if po.partition_value(canon, p) == res.value
    ]
    assert res.witness == min(maximizers)


def test_order_does_not_matter():
    assert po.f_general([4, 1, 3, 2], 3) == po.f_general([1, 2, 3, 4], 3)


def test_batch_paths_agree_with_scalar_paths():
    rng = np.random.default_rng(7)
    for r in range(2, 8):
        rows = rng.integers(1, 15, size=(60, r))
        fast = po.f3_fast_values(rows)
        general = po.f_general_values(rows, 3)
        closed = po.f_closed_equal_r_values(rows)
        for row, a, b, c in zip(rows.tolist(), fast, general, closed):
            assert a == b == po.f3_fast(row).value == po.f_general(row, 3).value
            assert c == po.f_closed_equal_r(row)
        if r >= 3:
            vals = po.f_general_values(rows, 4)
            assert vals.tolist() == [po.f_general(row, 4).value for row in rows.tolist()]


def test_f_t_dispatch():
    assert po.f_t([1, 2, 3, 4], 3) == 25
    assert po.f_t([1, 2, 3, 4], 4) == po.f_closed_equal_r([1, 2, 3, 4]) == 33
    assert po.f_t([3], 2) == 0
