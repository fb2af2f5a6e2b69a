import random

import pytest

from src.braid import BraidWord
from src.diagram import empty, identity
from src.element import AlgebraElement
from src.errors import BadPartition, IndexOutOfRange
from src.poly import M, ONE, uv_power
from src.traces import (
    all_partitions,
    alexander_skein_check,
    ascending_word,
    bubble_trace,
    markov_check,
    markov_trace_5,
    partition_check,
    single_line_trace,
    tau_lambda,
    trace_2,
    vip_checks,
    vip_closed_form,
)


class TestTraceFunctions:
    """Linear traces on CP_n"""

    def test_bubble_trace_counts_vertical_lines(self):
        x = AlgebraElement(2, {identity(2): 3, empty(2): 1})
        assert bubble_trace(M, x) == 3 * M * M + 1

    def test_single_line_trace(self):
        x = AlgebraElement(2, {identity(2): 3, empty(2): 1})
        assert single_line_trace(x).is_zero()
        assert single_line_trace(AlgebraElement.identity(1)) == ONE

    def test_unknot_values(self):
        assert markov_trace_5(BraidWord(1)) == uv_power(-1) + uv_power(1)
        assert trace_2(BraidWord(1)) == ONE

    def test_split_unlink_has_zero_alexander_trace(self):
        assert trace_2(BraidWord(2)).is_zero()


class TestClosedForms:
    """Coefficient sums of the image of sigma_1 ... sigma_(n-1)"""

    def test_closed_form_small_cases(self):
        assert vip_closed_form(1) == ONE
        assert vip_closed_form(2) == -(uv_power(-1) + uv_power(1))
        assert vip_closed_form(3) == uv_power(-2) + 1 + uv_power(2)

    def test_ascending_word(self):
        assert ascending_word(4) == BraidWord(4, (1, 2, 3))
        assert ascending_word(1) == BraidWord(1)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_vip_checks(self, n):
        results = vip_checks(n)
        assert len(results) == 3
        assert all(results.values())

    def test_vip_checks_need_two_strands(self):
        with pytest.raises(IndexOutOfRange):
            vip_checks(1)
        with pytest.raises(IndexOutOfRange):
            vip_closed_form(0)


class TestPartitions:
    """Block braids tau_lambda and their Tr2 values"""

    def test_block_braid(self):
        assert tau_lambda([3]) == BraidWord(3, (1, 2))
        assert tau_lambda([2, 1]) == BraidWord(3, (1,))
        assert tau_lambda([1, 2, 2]) == BraidWord(5, (2, 4))

    @pytest.mark.parametrize("parts", [[], [0], [2, -1], [True]])
    def test_bad_partitions(self, parts):
        with pytest.raises(BadPartition):
            tau_lambda(parts)

    def test_all_partitions(self):
        found = sorted(all_partitions(4))
        assert found == [[1, 1, 1, 1], [2, 1, 1], [2, 2], [3, 1], [4]]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_only_the_full_cycle_survives(self, n):
        assert all(partition_check(n).values())


class TestMarkovProperties:
    """Markov invariance and the Alexander skein relation on random words"""

    def test_markov_moves(self):
        results = markov_check(random.Random(5), 3, 3, max_length=4)
        assert len(results) == 5
        assert all(results.values())

    def test_alexander_skein(self):
        results = alexander_skein_check(random.Random(8), 3, 3, max_length=4)
        assert all(results.values())

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_markov_moves_at_full_scale(self, n):
        assert all(markov_check(random.Random(30 + n), n, 50).values())

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_alexander_skein_at_full_scale(self, n):
        assert all(alexander_skein_check(random.Random(35 + n), n, 50).values())

    def test_stabilized_trefoil_keeps_traces(self):
        trefoil = BraidWord(2, (1, 1, 1))
        stabilized = BraidWord(3, (1, 1, 1, 2))
        assert markov_trace_5(stabilized) == markov_trace_5(trefoil)
        assert trace_2(stabilized) == trace_2(trefoil)
