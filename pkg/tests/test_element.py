import pytest

from src.diagram import empty, enumerate_planar, from_pairs, identity, p2_basis
from src.element import AlgebraElement, elem_mul, elem_tensor, embed_p2
from src.errors import IndexOutOfRange, SizeMismatch
from src.poly import C, D, M, ONE, U, V


@pytest.fixture
def sample_elements():
    """
    Three small elements of CP_2 with polynomial coefficients
    """
    d = p2_basis()
    x = AlgebraElement.combination([d[0], d[2], d[5]], [U, 1, M])
    y = AlgebraElement.combination([d[1], d[3]], [V, C - 1])
    z = AlgebraElement.combination([d[4], d[5]], [D, -1])
    return x, y, z


class TestAlgebraElement:
    """Linear structure and the bilinear product of CP_n"""

    def test_zero_coefficients_are_dropped(self):
        x = AlgebraElement(2, {identity(2): U - U, empty(2): 1})
        assert x.support() == [empty(2)]
        assert (x - x).is_zero()
        assert str(AlgebraElement.zero(2)) == "0"

    def test_coefficient_lookup(self):
        x = AlgebraElement.from_diagram(identity(2), M)
        assert x.coefficient(identity(2)) == M
        assert x.coefficient(empty(2)).is_zero()
        assert x.coefficient_vector(p2_basis())[5] == M

    def test_identity_is_neutral(self, sample_elements):
        one = AlgebraElement.identity(2)
        for x in sample_elements:
            assert one * x == x
            assert x * one == x

    def test_product_is_associative(self, sample_elements):
        x, y, z = sample_elements
        assert (x * y) * z == x * (y * z)

    def test_product_distributes(self, sample_elements):
        x, y, z = sample_elements
        assert x * (y + z) == x * y + x * z
        assert elem_mul(x, y) == x * y

    def test_scalar_multiplication(self, sample_elements):
        x, _, _ = sample_elements
        assert x * U == x.scale(U)
        assert 2 * x == x + x
        assert x.scale(0).is_zero()

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            AlgebraElement.identity(2) + AlgebraElement.identity(3)
        with pytest.raises(SizeMismatch):
            AlgebraElement(2, {identity(3): 1})

    def test_full_algebra_product_closes(self):
        basis = enumerate_planar(2)
        total = AlgebraElement.combination(basis, [ONE] * len(basis))
        square = total * total
        assert set(square.support()) <= set(basis)


class TestTensorAndEmbedding:
    """Tensor product and the embedding of CP_2 into CP_n"""

    def test_tensor_of_identities(self):
        one = AlgebraElement.identity(1)
        assert elem_tensor(one, AlgebraElement.identity(2)) == (
            AlgebraElement.identity(3)
        )

    def test_embed_places_block(self):
        g = AlgebraElement.from_diagram(from_pairs(2, [(1, 2)]), U)
        embedded = embed_p2(g, 2, 4)
        assert embedded.support() == [from_pairs(4, [(1, 1), (2, 3), (4, 4)])]
        assert embedded.coefficient(embedded.support()[0]) == U

    def test_embed_is_multiplicative(self, sample_elements):
        x, y, _ = sample_elements
        assert embed_p2(x * y, 1, 3) == embed_p2(x, 1, 3) * embed_p2(y, 1, 3)

    @pytest.mark.parametrize("i", [0, 3])
    def test_embed_position_out_of_range(self, i):
        with pytest.raises(IndexOutOfRange):
            embed_p2(AlgebraElement.identity(2), i, 3)

    def test_embed_requires_cp2(self):
        with pytest.raises(SizeMismatch):
            embed_p2(AlgebraElement.identity(3), 1, 4)
