"""
Knot and link invariants of braid closures.

Polynomials are reported in q = sqrt(cd).  The Jones polynomial satisfies
q^-2 J(L+) - q^2 J(L-) = (q^-1 - q) J(L0) with J(unknot) = 1, so q^2 = t for
knots and q = -t^(1/2) in general.
"""

import logging
import random
from fractions import Fraction
from math import isqrt
from typing import Dict

from src.braid import BraidWord, LinkData, concat, link_data, random_word
from src.errors import BadSpecialization
from src.poly import QPoly, Scalar, check_specialization, uv_power
from src.traces import markov_trace_5, trace_2

logger = logging.getLogger(__name__)

# Tr5 of the one-strand unknot, (1 + cd) / sqrt(cd)
UNKNOT_TR5 = uv_power(-1) + uv_power(1)


def jones(w: BraidWord) -> QPoly:
    value = markov_trace_5(w).exact_div(UNKNOT_TR5).to_q()
    logger.debug(f"Jones polynomial of {w}: {value}")
    return value


def normalize_units(p: QPoly) -> QPoly:
    """
    Canonical representative of p up to +-q^k.

    Exponents are centred on 0 when the exponent span is even, otherwise the
    lowest exponent becomes 0; the top coefficient is made positive.
    """
    if p.is_zero():
        return p
    low, high = p.min_degree(), p.max_degree()
    if (high - low) % 2 == 0:
        shifted = p.shift(-(low + high) // 2)
    else:
        shifted = p.shift(-low)
    if shifted.leading_coefficient() < 0:
        shifted = -shifted
    return shifted


def alexander(w: BraidWord) -> QPoly:
    value = normalize_units(trace_2(w).to_q())
    logger.debug(f"Alexander polynomial of {w}: {value}")
    return value


def linking_profile(w: BraidWord) -> LinkData:
    return link_data(w)


def _rational_sqrt(value: Fraction):
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = isqrt(num), isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def jones_at(w: BraidWord, c: Scalar, d: Scalar) -> Fraction:
    """
    Jones polynomial at rational parameters c, d.

    Odd powers of q = sqrt(cd) only occur for links with an even number of
    components; those need cd to be the square of a rational.
    """
    c, d = check_specialization(c, d)
    t = c * d
    poly = jones(w)
    if all(e % 2 == 0 for e in poly.terms):
        return sum(
            (Fraction(coeff) * t ** (e // 2) for e, coeff in poly.terms.items()),
            Fraction(0),
        )
    q = _rational_sqrt(t)
    if q is None:
        raise BadSpecialization(f"sqrt(cd) = sqrt({t}) is not rational")
    return poly.evaluate(q)


def jones_skein_check(
    rng: random.Random, n: int, count: int, max_length: int = 5
) -> Dict[str, bool]:
    """
    q^-2 J(x s_i) - q^2 J(x s_i^-1) = (q^-1 - q) J(x) on random words x
    """
    q_minus, q_plus = QPoly({-2: 1}), QPoly({2: 1})
    z = QPoly({-1: 1, 1: -1})
    ok = True
    for _ in range(count):
        x = random_word(n, rng.randint(0, max_length), rng)
        i = rng.randint(1, n - 1)
        plus = jones(concat(x, BraidWord(n, (i,))))
        minus = jones(concat(x, BraidWord(n, (-i,))))
        ok = ok and q_minus * plus - q_plus * minus == z * jones(x)
    return {f"Jones skein relation on {count} words in B_{n}": ok}
