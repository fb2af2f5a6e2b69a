"""
Elements of the planar rook algebra CP_n with Laurent-polynomial coefficients.
"""

import logging
from numbers import Rational
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Union

from src.diagram import (
    PlanarDiagram,
    compose,
    identity,
    tensor,
    tensor_all,
)
from src.errors import IndexOutOfRange, SizeMismatch
from src.poly import LaurentPoly

logger = logging.getLogger(__name__)

CoefficientLike = Union[LaurentPoly, int, Rational]


def _diagram_key(d: PlanarDiagram):
    return (len(d.edges), d.edges)


class AlgebraElement:
    """
    Finite formal sum of diagrams of P_n; zero coefficients are never stored
    """

    __slots__ = ("n", "_terms")

    def __init__(
        self,
        n: int,
        terms: Optional[Mapping[PlanarDiagram, CoefficientLike]] = None,
    ):
        cleaned: Dict[PlanarDiagram, LaurentPoly] = {}
        for diagram, coeff in (terms or {}).items():
            if diagram.n != n:
                raise SizeMismatch(f"diagram {diagram} is not in P_{n}")
            value = LaurentPoly.lift(coeff)
            if value:
                cleaned[diagram] = cleaned.get(diagram, LaurentPoly.zero()) + value
        self.n = n
        self._terms = {d: c for d, c in cleaned.items() if c}

    @classmethod
    def _from_clean(
        cls, n: int, terms: Dict[PlanarDiagram, LaurentPoly]
    ) -> "AlgebraElement":
        element = cls.__new__(cls)
        element.n = n
        element._terms = terms
        return element

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls._from_clean(n, {})

    @classmethod
    def identity(cls, n: int) -> "AlgebraElement":
        return cls._from_clean(n, {identity(n): LaurentPoly.one()})

    @classmethod
    def from_diagram(
        cls, d: PlanarDiagram, coeff: CoefficientLike = 1
    ) -> "AlgebraElement":
        return cls(d.n, {d: coeff})

    @classmethod
    def combination(
        cls, diagrams: Sequence[PlanarDiagram], coeffs: Sequence[CoefficientLike]
    ) -> "AlgebraElement":
        if not diagrams:
            raise ValueError("a combination needs at least one diagram")
        terms: Dict[PlanarDiagram, LaurentPoly] = {}
        for d, c in zip(diagrams, coeffs):
            terms[d] = terms.get(d, LaurentPoly.zero()) + LaurentPoly.lift(c)
        return cls(diagrams[0].n, terms)

    @property
    def terms(self) -> Mapping[PlanarDiagram, LaurentPoly]:
        return MappingProxyType(self._terms)

    def coefficient(self, d: PlanarDiagram) -> LaurentPoly:
        return self._terms.get(d, LaurentPoly.zero())

    def coefficient_vector(self, basis: Sequence[PlanarDiagram]) -> List[LaurentPoly]:
        return [self.coefficient(d) for d in basis]

    def support(self) -> List[PlanarDiagram]:
        return sorted(self._terms, key=_diagram_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check_size(self, other: "AlgebraElement"):
        if self.n != other.n:
            raise SizeMismatch(f"cannot combine CP_{self.n} with CP_{other.n}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_size(other)
        result = dict(self._terms)
        for d, c in other._terms.items():
            value = result[d] + c if d in result else c
            if value:
                result[d] = value
            else:
                result.pop(d, None)
        return AlgebraElement._from_clean(self.n, result)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._from_clean(
            self.n, {d: -c for d, c in self._terms.items()}
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: CoefficientLike) -> "AlgebraElement":
        factor = LaurentPoly.lift(coeff)
        if not factor:
            return AlgebraElement.zero(self.n)
        return AlgebraElement._from_clean(
            self.n, {d: c * factor for d, c in self._terms.items()}
        )

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (LaurentPoly, Rational)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_size(other)
        result: Dict[PlanarDiagram, LaurentPoly] = {}
        right = list(other._terms.items())
        for d1, c1 in self._terms.items():
            for d2, c2 in right:
                d = compose(d1, d2)
                product = c1 * c2
                existing = result.get(d)
                result[d] = product if existing is None else existing + product
        return AlgebraElement._from_clean(
            self.n, {d: c for d, c in result.items() if c}
        )

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (LaurentPoly, Rational)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    def map_coefficients(self, fn) -> "AlgebraElement":
        return AlgebraElement(self.n, {d: fn(c) for d, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        lines = []
        for d in self.support():
            coeff = self._terms[d]
            text = str(coeff)
            if len(coeff) > 1:
                text = f"({text})"
            lines.append(f"{text} * {d}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, terms={len(self._terms)})"


def elem_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def elem_tensor(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """
    Bilinear extension of the diagram tensor product
    """
    result: Dict[PlanarDiagram, LaurentPoly] = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            d = tensor(d1, d2)
            product = c1 * c2
            result[d] = result[d] + product if d in result else product
    return AlgebraElement(x.n + y.n, result)


def embed_p2(g: AlgebraElement, i: int, n: int) -> AlgebraElement:
    """
    I^(i-1) (x) g (x) I^(n-i-1) for an element g of CP_2
    """
    if g.n != 2:
        raise SizeMismatch(f"embed_p2 expects an element of CP_2, got CP_{g.n}")
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"position {i} outside 1..{n - 1}")
    left = identity(i - 1)
    right = identity(n - i - 1)
    return AlgebraElement._from_clean(
        n,
        {tensor_all((left, d, right)): c for d, c in g.terms.items()},
    )
