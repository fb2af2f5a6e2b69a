import random

import pytest
from fractions import Fraction

from src.braid import BraidWord
from src.diagram import from_pairs, identity
from src.element import AlgebraElement
from src.errors import CapExceeded, IndexOutOfRange
from src.homs import FamilySpec
from src.poly import C, M, ONE, U, uv_power
from src.reps import (
    RepMatrix,
    isomorphism_check,
    lambda_formula,
    lambda_formula_check,
    linking_check,
    linking_dependence_check,
    random_element,
    rho_diagram,
    rho_element,
    rho_word,
    specialize,
    subset_basis,
    trace_decomposition_check,
)


class TestSubsetRepresentations:
    """rho_k on diagrams and algebra elements"""

    def test_subset_basis(self):
        assert subset_basis(3, 1) == ((1,), (2,), (3,))
        assert subset_basis(3, 2) == ((1, 2), (1, 3), (2, 3))
        assert subset_basis(2, 0) == ((),)

    def test_subset_size_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            subset_basis(3, 4)

    def test_identity_diagram(self):
        assert rho_diagram(1, identity(3)) == RepMatrix.identity(3, 1)

    def test_diagram_follows_edges_upwards(self):
        matrix = rho_diagram(1, from_pairs(2, [(1, 2)]))
        assert matrix.entry((2,), (1,)) == ONE
        assert matrix.entry((1,), (1,)).is_zero()
        assert matrix.entry((1,), (2,)).is_zero()
        assert matrix.entry((2,), (2,)).is_zero()

    def test_element_is_linear(self):
        x = AlgebraElement(2, {identity(2): U, from_pairs(2, [(1, 2)]): M})
        matrix = rho_element(1, x)
        assert matrix.entry((1,), (1,)) == U
        assert matrix.entry((2,), (1,)) == M
        assert matrix.trace() == U + U

    def test_empty_word_is_identity(self):
        assert rho_word(2, FamilySpec(1), BraidWord(3)) == RepMatrix.identity(3, 2)

    def test_rendering(self):
        text = str(RepMatrix.identity(2, 1))
        assert text.splitlines()[0] == "rho_1 on CP_2, basis {1} {2}"
        assert RepMatrix.identity(2, 1).to_rows() == [["1", "0"], ["0", "1"]]

    def test_specialize(self):
        matrix = rho_element(1, AlgebraElement.from_diagram(identity(2), C))
        assert specialize(matrix, 3, 1, 1) == [[9, 0], [0, 9]]
        assert isinstance(specialize(matrix, 3, 1, 1)[0][0], Fraction)


class TestIsomorphism:
    """CP_n decomposes as the direct sum of End(V_k)"""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_small_n(self, n):
        assert all(isomorphism_check(n).values())

    def test_n4_samples_products(self):
        results = isomorphism_check(4, random.Random(2), sample=20)
        assert all(results.values())

    def test_cap(self):
        with pytest.raises(CapExceeded):
            isomorphism_check(5)

    @pytest.mark.parametrize("n", [2, 3])
    def test_trace_decomposition(self, n):
        assert all(trace_decomposition_check(n, random.Random(n)).values())

    def test_random_element_lives_in_cp_n(self):
        x = random_element(3, random.Random(1))
        assert x.n == 3
        assert not x.is_zero()


class TestColouredBraidFormula:
    """rho_k(phi_1(w)) acts by a monomial permutation matrix"""

    def test_single_crossing(self):
        target, scalar = lambda_formula(BraidWord(2, (1,)), {1})
        assert target == frozenset({2})
        assert scalar == C
        matrix = rho_word(1, FamilySpec(1), BraidWord(2, (1,)))
        assert matrix.entry((2,), (1,)) == C

    def test_red_crossings_give_powers_of_m(self):
        target, scalar = lambda_formula(BraidWord(3, (-2, -2)), {1})
        assert target == frozenset({1})
        assert scalar == M**-2

    def test_random_words(self):
        results = lambda_formula_check(random.Random(9), 3, 3, max_length=4)
        assert all(results.values())

    def test_random_words_include_rational_points(self):
        results = lambda_formula_check(random.Random(4), 2, 2, max_length=3)
        assert "lambda formula holds at rational points in B_2" in results
        assert all(results.values())

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_formula_at_full_scale(self, n):
        assert all(lambda_formula_check(random.Random(40 + n), n, 25).values())
        assert all(linking_check(random.Random(45 + n), n, 25).values())

    def test_hopf_link_scalars(self):
        results = linking_dependence_check(BraidWord(2, (1, 1)))
        assert results["k=1 S={1}"]
        assert all(results.values())
        _, scalar = lambda_formula(BraidWord(2, (1, 1)), {1})
        assert scalar == uv_power(2)

    def test_linking_on_random_words(self):
        assert all(linking_check(random.Random(13), 3, 3, max_length=4).values())
