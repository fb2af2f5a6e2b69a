import random

import pytest

from src.braid import BraidWord
from src.diagram import p2_basis
from src.element import AlgebraElement
from src.errors import IndexOutOfRange, InvalidFamily, RelationFailed
from src.homs import (
    FamilySpec,
    dual_element,
    duality_check,
    family_coefficients,
    homomorphism_check,
    non_homflypt_check,
    phi_generator,
    phi_word,
    quadratic_check,
    skein_check,
    verify_braid_relations,
)
from src.poly import C, D, M, ONE, U, V

ALL_SPECS = [FamilySpec(f) for f in range(1, 6)] + [FamilySpec(2, rescaled=True)]


class TestFamilySpec:
    """Selecting and validating homomorphism families"""

    @pytest.mark.parametrize("family", [0, 6, -1])
    def test_unknown_family(self, family):
        with pytest.raises(InvalidFamily):
            FamilySpec(family)

    def test_only_family_two_rescales(self):
        with pytest.raises(InvalidFamily):
            FamilySpec(3, rescaled=True)

    def test_unknown_slot(self):
        with pytest.raises(InvalidFamily):
            FamilySpec(1, perturbation=(("g", ONE),))

    def test_labels(self):
        assert FamilySpec(4).label() == "phi_4"
        assert FamilySpec(2, rescaled=True).label() == "phi_2 (rescaled)"

    def test_hecke_family_coefficients(self):
        a, b, c, d, e, f = family_coefficients(FamilySpec(5), 1)
        assert a == 1 - C - D + C * D
        assert (b, c, d, e, f) == (-ONE, C, D, -(C * D), ONE)

    def test_family_one_depends_on_m(self):
        a = family_coefficients(FamilySpec(1), 1)[0]
        assert a == M + 1 - C - D


class TestGeneratorImages:
    """Images of generators and words"""

    def test_local_image_in_cp2(self):
        image = phi_generator(FamilySpec(5), 1, 1, 2)
        basis = p2_basis()
        assert image.coefficient(basis[2]) == C
        assert image.coefficient(basis[3]) == D
        assert image.coefficient(basis[5]) == ONE

    @pytest.mark.parametrize("i", [0, 3])
    def test_generator_out_of_range(self, i):
        with pytest.raises(IndexOutOfRange):
            phi_generator(FamilySpec(1), i, 1, 3)

    def test_empty_word_is_identity(self):
        assert phi_word(FamilySpec(3), BraidWord(3)) == AlgebraElement.identity(3)

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
    def test_generator_times_inverse(self, spec):
        w = BraidWord(2, (1, -1))
        assert phi_word(spec, w) == AlgebraElement.identity(2)

    def test_images_are_not_scalar(self):
        image = phi_word(FamilySpec(1), BraidWord(2, (1, 1)))
        assert len(image) > 1


class TestRelations:
    """Braid, duality and skein relations"""

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
    def test_braid_relations_hold(self, spec):
        results = verify_braid_relations(spec)
        assert results
        assert all(results.values())

    def test_perturbed_family_is_rejected(self):
        broken = FamilySpec(5, perturbation=(("a", ONE),))
        with pytest.raises(RelationFailed):
            verify_braid_relations(broken)
        results = verify_braid_relations(broken, strict=False)
        assert not all(results.values())

    def test_duality(self):
        assert all(duality_check().values())

    def test_dual_of_dual_is_identity(self):
        x = phi_generator(FamilySpec(4), 1, 1, 2)
        assert dual_element(dual_element(x)) == x
        assert dual_element(AlgebraElement.from_diagram(p2_basis()[2], U)) == (
            AlgebraElement.from_diagram(p2_basis()[2], V**-1)
        )

    def test_hecke_quadratics(self):
        assert all(quadratic_check().values())

    def test_skein_relations_on_random_words(self):
        results = skein_check(random.Random(11), 3, 4, max_length=4)
        assert all(results.values())

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_skein_relations_at_full_scale(self, n):
        assert all(skein_check(random.Random(20 + n), n, 50).values())

    def test_family_one_has_no_quadratic(self):
        assert all(non_homflypt_check().values())

    @pytest.mark.parametrize("family", [1, 4])
    def test_homomorphism_on_random_words(self, family):
        results = homomorphism_check(
            FamilySpec(family), random.Random(family), 3, 3, max_length=3
        )
        assert all(results.values())
