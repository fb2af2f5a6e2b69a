"""
Exact sparse Laurent polynomials.

``LaurentPoly`` lives in Q[U^±1, V^±1, M^±1] where U = sqrt(c), V = sqrt(d) and
M = a + c + d - 1.  Every coefficient of the homomorphism families, their
inverses and the trace values is a Laurent polynomial in these variables, so no
square roots or rational functions are ever needed.

``QPoly`` is the one-variable ring Q[q^±1] with q = UV that the final knot
invariants are reported in.
"""

import re
import logging
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from src.errors import BadSpecialization, NotBalanced, NotDivisible

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int, int]
Coefficient = Union[int, Fraction]
Scalar = Union[int, Fraction]

VARIABLES = ("U", "V", "M")

_RING, *_ = ring(",".join(VARIABLES), QQ)


def _coerce(value) -> Coefficient:
    """
    Convert an exact rational to the canonical stored form
    """
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise TypeError(f"coefficients must be exact rationals, got {value!r}")
    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


def _format_coefficient(coeff: Coefficient) -> str:
    return str(coeff)


def _format_terms(items: Iterable[Tuple[Coefficient, str]]) -> str:
    """
    Join (coefficient, monomial) pairs into ``a + b - c`` form.
    An empty monomial string stands for the constant term.
    """
    pieces: List[str] = []
    for coeff, monomial in items:
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if not monomial:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_coefficient(magnitude)}*{monomial}"

        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"


class LaurentPoly:
    """
    Immutable sparse Laurent polynomial in U, V, M over the rationals.

    Terms map exponent vectors (e_U, e_V, e_M) to nonzero coefficients; the
    zero polynomial has no terms.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, Scalar]] = None):
        cleaned: Dict[Exponent, Coefficient] = {}
        for exponent, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exponent)
            if len(key) != 3:
                raise ValueError(f"exponent vectors have 3 entries, got {exponent}")
            value = _coerce(coeff)
            if value:
                cleaned[key] = value
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, terms: Dict[Exponent, Coefficient]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # --- constructors ---

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._from_clean({(0, 0, 0): 1})

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(
        cls, e_u: int = 0, e_v: int = 0, e_m: int = 0, coeff: Scalar = 1
    ) -> "LaurentPoly":
        return cls({(e_u, e_v, e_m): coeff})

    @classmethod
    def lift(cls, value: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return cls.constant(value)

    # --- inspection ---

    @property
    def terms(self) -> Mapping[Exponent, Coefficient]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_exponents(self) -> Exponent:
        """
        Componentwise minimum exponent vector (zero vector for the zero polynomial)
        """
        if not self._terms:
            return (0, 0, 0)
        keys = list(self._terms)
        return (
            min(k[0] for k in keys),
            min(k[1] for k in keys),
            min(k[2] for k in keys),
        )

    def shifted(self, shift: Exponent) -> "LaurentPoly":
        su, sv, sm = shift
        return LaurentPoly._from_clean(
            {(u + su, v + sv, m + sm): c for (u, v, m), c in self._terms.items()}
        )

    def coefficient(self, e_u: int = 0, e_v: int = 0, e_m: int = 0) -> Coefficient:
        return self._terms.get((e_u, e_v, e_m), 0)

    # --- ring operations ---

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if not isinstance(other, Rational):
                return NotImplemented
            other = LaurentPoly.constant(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            value = result.get(key, 0) + coeff
            if value:
                result[key] = _coerce(value)
            else:
                result.pop(key, None)
        return LaurentPoly._from_clean(result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, Rational)):
            return NotImplemented
        return self + (-LaurentPoly.lift(other))

    def __rsub__(self, other) -> "LaurentPoly":
        if not isinstance(other, Rational):
            return NotImplemented
        return LaurentPoly.constant(other) + (-self)

    def scale(self, factor: Scalar) -> "LaurentPoly":
        factor = _coerce(factor)
        if not factor:
            return LaurentPoly.zero()
        return LaurentPoly._from_clean(
            {k: _coerce(c * factor) for k, c in self._terms.items()}
        )

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if not isinstance(other, Rational):
                return NotImplemented
            return self.scale(other)
        if not self._terms or not other._terms:
            return LaurentPoly.zero()
        result: Dict[Exponent, Coefficient] = {}
        other_items = list(other._terms.items())
        for (u1, v1, m1), c1 in self._terms.items():
            for (u2, v2, m2), c2 in other_items:
                key = (u1 + u2, v1 + v2, m1 + m2)
                result[key] = result.get(key, 0) + c1 * c2
        return LaurentPoly._from_clean(
            {k: _coerce(c) for k, c in result.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial():
                raise NotDivisible(f"cannot invert non-monomial {self}")
            ((u, v, m), c), = self._terms.items()
            inverse = LaurentPoly._from_clean(
                {(-u, -v, -m): _coerce(Fraction(1) / Fraction(c))}
            )
            return inverse ** (-exponent)
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self) -> "LaurentPoly":
        return self ** -1

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """
        Return r with r * divisor == self.

        Monomials are units of the Laurent ring.  Otherwise both sides are
        shifted to lowest exponent zero and divided in Q[U, V, M]; the shifted
        divisor has no monomial factor, so any Laurent quotient is a polynomial.
        """
        divisor = LaurentPoly.lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        if divisor.is_monomial():
            return self * divisor.inverse()

        p_shift = self.min_exponents()
        q_shift = divisor.min_exponents()
        dividend = self.shifted(tuple(-e for e in p_shift))._to_ring()
        normalized = divisor.shifted(tuple(-e for e in q_shift))._to_ring()
        try:
            quotient = dividend.exquo(normalized)
        except ExactQuotientFailed:
            raise NotDivisible(f"{self} is not divisible by {divisor}")

        shift = tuple(p - q for p, q in zip(p_shift, q_shift))
        return LaurentPoly._from_ring(quotient).shifted(shift)

    def _to_ring(self) -> PolyElement:
        # only valid once every exponent is non-negative
        coefficients = {k: Fraction(c) for k, c in self._terms.items()}
        return _RING.from_dict(
            {k: QQ(c.numerator, c.denominator) for k, c in coefficients.items()}
        )

    @staticmethod
    def _from_ring(element: PolyElement) -> "LaurentPoly":
        return LaurentPoly(
            {
                tuple(monom): Fraction(int(c.numerator), int(c.denominator))
                for monom, c in element.terms()
            }
        )

    # --- comparisons ---

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- specializations ---

    def is_balanced(self) -> bool:
        """
        True iff the polynomial lies in Q[(UV)^±1]
        """
        return all(u == v and m == 0 for (u, v, m) in self._terms)

    def to_q(self) -> "QPoly":
        if not self.is_balanced():
            raise NotBalanced(f"{self} is not a polynomial in q = UV")
        return QPoly({u: c for (u, _, _), c in self._terms.items()})

    def evaluate(self, u: Scalar, v: Scalar, m: Scalar = 1) -> Fraction:
        """
        Exact value at rational U, V, M
        """
        values = (Fraction(u), Fraction(v), Fraction(m))
        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            term = Fraction(coeff)
            for value, e, name in zip(values, exponent, VARIABLES):
                if e < 0 and value == 0:
                    raise BadSpecialization(f"{name} = 0 in a negative power")
                term *= value**e
            total += term
        return total

    def substitute_dual(self) -> "LaurentPoly":
        """
        Apply U -> V^-1, V -> U^-1 (c -> 1/d, d -> 1/c); M is fixed
        """
        return LaurentPoly._from_clean(
            {(-v, -u, m): c for (u, v, m), c in self._terms.items()}
        )

    # --- rendering ---

    @staticmethod
    def _sort_key(exponent: Exponent) -> Tuple[int, int, int, int]:
        return (sum(exponent), exponent[0], exponent[1], exponent[2])

    @staticmethod
    def _monomial_text(exponent: Exponent) -> str:
        factors = []
        for name, e in zip(VARIABLES, exponent):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        ordered = sorted(self._terms, key=self._sort_key)
        return _format_terms(
            (self._terms[e], self._monomial_text(e)) for e in ordered
        )

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
U = LaurentPoly.monomial(1, 0, 0)
V = LaurentPoly.monomial(0, 1, 0)
M = LaurentPoly.monomial(0, 0, 1)
C = U * U
D = V * V
Q = U * V


def uv_power(exponent: int) -> LaurentPoly:
    """
    (UV)^exponent, i.e. sqrt(cd) raised to an integer power
    """
    return LaurentPoly.monomial(exponent, exponent, 0)


class QPoly:
    """
    Immutable Laurent polynomial in the single variable q
    """

    __slots__ = ("_terms",)

    _TERM = re.compile(
        r"([+-]?)(?:(\d+(?:/\d+)?)(?:\*?(q)(?:\^(-?\d+))?)?|(q)(?:\^(-?\d+))?)"
    )

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None):
        cleaned: Dict[int, Coefficient] = {}
        for exponent, coeff in (terms or {}).items():
            value = _coerce(coeff)
            if value:
                cleaned[int(exponent)] = value
        self._terms = cleaned

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "QPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_text(cls, text: str) -> "QPoly":
        """
        Parse the rendering produced by ``str``, e.g. ``q^-2 - 1 + 3*q^2``
        """
        compact = re.sub(r"\s+", "", text)
        if compact in ("", "0"):
            return cls()
        terms: Dict[int, Fraction] = {}
        position = 0
        while position < len(compact):
            match = cls._TERM.match(compact, position)
            if not match or match.end() == position:
                raise ValueError(f"cannot parse q-polynomial {text!r} at {position}")
            sign, coeff, q1, exp1, q2, exp2 = match.groups()
            if position > 0 and not sign:
                raise ValueError(f"missing sign in {text!r} at {position}")
            value = Fraction(coeff) if coeff else Fraction(1)
            if sign == "-":
                value = -value
            if q1 or q2:
                raw = exp1 if q1 else exp2
                exponent = int(raw) if raw is not None else 1
            else:
                exponent = 0
            terms[exponent] = terms.get(exponent, Fraction(0)) + value
            position = match.end()
        return cls(terms)

    @property
    def terms(self) -> Mapping[int, Coefficient]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def leading_coefficient(self) -> Coefficient:
        return self._terms[max(self._terms)] if self._terms else 0

    def __add__(self, other) -> "QPoly":
        other = QPoly._lift(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result.get(key, 0) + coeff
        return QPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "QPoly":
        other = QPoly._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        other = QPoly._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QPoly":
        other = QPoly._lift(other)
        if other is None:
            return NotImplemented
        result: Dict[int, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return QPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        if exponent < 0:
            if len(self._terms) != 1:
                raise NotDivisible(f"cannot invert non-monomial {self}")
            (e, c), = self._terms.items()
            return QPoly({-e: Fraction(1) / Fraction(c)}) ** (-exponent)
        result = QPoly({0: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = QPoly._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _lift(value) -> Optional["QPoly"]:
        if isinstance(value, QPoly):
            return value
        if isinstance(value, Rational) and not isinstance(value, bool):
            return QPoly({0: value})
        return None

    def mirror(self) -> "QPoly":
        """
        Substitute q -> q^-1
        """
        return QPoly({-e: c for e, c in self._terms.items()})

    def shift(self, k: int) -> "QPoly":
        """
        Multiply by q^k
        """
        return QPoly({e + k: c for e, c in self._terms.items()})

    def is_palindromic(self) -> bool:
        if not self._terms:
            return True
        centre = self.min_degree() + self.max_degree()
        return all(self._terms.get(centre - e) == c for e, c in self._terms.items())

    def evaluate(self, q: Scalar) -> Fraction:
        q = Fraction(q)
        if q == 0 and self._terms and self.min_degree() < 0:
            raise BadSpecialization("q = 0 in a negative power")
        return sum((Fraction(c) * q**e for e, c in self._terms.items()), Fraction(0))

    def __str__(self) -> str:
        return _format_terms(
            (self._terms[e], f"q^{e}" if e else "") for e in sorted(self._terms)
        )

    def __repr__(self) -> str:
        return f"QPoly({self})"


def check_specialization(c: Scalar, d: Scalar) -> Tuple[Fraction, Fraction]:
    """
    Validate numeric parameters for the Jones specialization (cd not in {0, -1})
    """
    c, d = Fraction(c), Fraction(d)
    if c * d == 0:
        raise BadSpecialization("cd must be nonzero")
    if c * d == -1:
        raise BadSpecialization("cd = -1 is excluded")
    return c, d
