"""
Trace functions on CP_n and the two Markov traces built from them.
"""

import logging
import random
import time
from typing import Dict, List

from sympy.utilities.iterables import partitions

from src.braid import (
    BraidWord,
    concat,
    random_word,
    rotate,
    stabilize,
    writhe,
)
from src.diagram import vertical_line_count
from src.element import AlgebraElement
from src.errors import BadPartition, CheckFailed, IndexOutOfRange
from src.homs import FamilySpec, phi_word
from src.poly import ONE, LaurentPoly, uv_power

logger = logging.getLogger(__name__)

HECKE = FamilySpec(5)
ALEXANDER = FamilySpec(2, rescaled=True)

# (1 + cd) / cd
BETA_5 = uv_power(-2) + ONE


def bubble_trace(beta: LaurentPoly, x: AlgebraElement) -> LaurentPoly:
    """
    Sum of coeff(d) * beta^k(d), k(d) the number of vertical lines of d
    """
    total = LaurentPoly.zero()
    powers: Dict[int, LaurentPoly] = {}
    for d, coeff in x.terms.items():
        k = vertical_line_count(d)
        if k not in powers:
            powers[k] = beta**k
        total = total + coeff * powers[k]
    return total


def single_line_trace(x: AlgebraElement) -> LaurentPoly:
    """
    Sum of the coefficients of diagrams with exactly one vertical line
    """
    total = LaurentPoly.zero()
    for d, coeff in x.terms.items():
        if vertical_line_count(d) == 1:
            total = total + coeff
    return total


def markov_trace_5(w: BraidWord) -> LaurentPoly:
    return uv_power(writhe(w) + w.n) * bubble_trace(BETA_5, phi_word(HECKE, w))


def vip_closed_form(n: int) -> LaurentPoly:
    """
    (-1/sqrt(cd))^(n-1) * (1 + cd + ... + (cd)^(n-1))
    """
    if n < 1:
        raise IndexOutOfRange(f"strand count must be at least 1, got {n}")
    total = LaurentPoly.zero()
    for i in range(n):
        total = total + uv_power(2 * i)
    sign = -1 if (n - 1) % 2 else 1
    return (uv_power(-(n - 1)) * total).scale(sign)


def trace_2(w: BraidWord) -> LaurentPoly:
    numerator = single_line_trace(phi_word(ALEXANDER, w))
    return numerator.exact_div(vip_closed_form(w.n))


def ascending_word(n: int) -> BraidWord:
    """
    x_n = sigma_1 sigma_2 ... sigma_(n-1)
    """
    return BraidWord(n, tuple(range(1, n)))


def vip_checks(n: int, strict: bool = True) -> Dict[str, bool]:
    """
    Coefficient sums of the rescaled phi_2 image of x_n
    """
    if n < 2:
        raise IndexOutOfRange(f"vip checks need n >= 2, got {n}")
    start = time.time()
    x = phi_word(ALEXANDER, ascending_word(n))
    no_lines = LaurentPoly.zero()
    only_last = LaurentPoly.zero()
    for d, coeff in x.terms.items():
        lines = d.vertical_lines()
        if not lines:
            no_lines = no_lines + coeff
        elif lines == (n,):
            only_last = only_last + coeff

    expected_last = uv_power(n - 1).scale(-1 if (n - 1) % 2 else 1)
    line_trace = single_line_trace(x)
    results = {
        f"n={n}: no-vertical-line coefficients sum to 0": no_lines.is_zero(),
        f"n={n}: line-at-n coefficients sum to (-sqrt(cd))^(n-1)": (
            only_last == expected_last
        ),
        f"n={n}: single-line trace of x_n matches the closed form": (
            line_trace == vip_closed_form(n)
        ),
    }
    logger.info(f"Closed-form checks for n={n} done in {time.time() - start:.2f}s")
    failed = [name for name, ok in results.items() if not ok]
    if failed and strict:
        raise CheckFailed("; ".join(failed))
    return results


def tau_lambda(partition: List[int]) -> BraidWord:
    """
    Block braid: one ascending run sigma_1 ... sigma_(p-1) per part p, side by side
    """
    if not partition:
        raise BadPartition("a partition needs at least one part")
    letters: List[int] = []
    offset = 0
    for part in partition:
        if isinstance(part, bool) or not isinstance(part, int) or part < 1:
            raise BadPartition(f"parts must be positive integers, got {part!r}")
        letters.extend(offset + j for j in range(1, part))
        offset += part
    return BraidWord(offset, tuple(letters))


def all_partitions(n: int) -> List[List[int]]:
    result = []
    for p in partitions(n):
        parts: List[int] = []
        for value, multiplicity in sorted(p.items(), reverse=True):
            parts.extend([value] * multiplicity)
        result.append(parts)
    return result


def partition_check(n: int, strict: bool = True) -> Dict[str, bool]:
    """
    Tr2 of tau_lambda vanishes for every partition except (n), where it is 1
    """
    results: Dict[str, bool] = {}
    for parts in all_partitions(n):
        value = trace_2(tau_lambda(parts))
        expected = ONE if parts == [n] else LaurentPoly.zero()
        results[f"Tr2(tau{tuple(parts)}) = {expected}"] = value == expected
    failed = [name for name, ok in results.items() if not ok]
    if failed and strict:
        raise CheckFailed("; ".join(failed))
    return results


def markov_check(
    rng: random.Random, n: int, count: int, max_length: int = 5
) -> Dict[str, bool]:
    """
    Conjugation and both stabilizations on random words
    """
    conj5 = stab5_pos = stab5_neg = True
    conj2 = stab2 = True
    for _ in range(count):
        u = random_word(n, rng.randint(0, max_length), rng)
        v = random_word(n, rng.randint(0, max_length), rng)
        uv, vu = concat(u, v), concat(v, u)
        conj5 = conj5 and markov_trace_5(uv) == markov_trace_5(vu)
        conj2 = conj2 and trace_2(uv) == trace_2(rotate(uv, len(u)))

        x = random_word(n, rng.randint(0, max_length), rng)
        base5 = markov_trace_5(x)
        stab5_pos = stab5_pos and markov_trace_5(stabilize(x, 1)) == base5
        stab5_neg = stab5_neg and markov_trace_5(stabilize(x, -1)) == base5
        base2 = trace_2(x)
        stab2 = (
            stab2
            and trace_2(stabilize(x, 1)) == base2
            and trace_2(stabilize(x, -1)) == base2
        )
    return {
        f"Tr5 conjugation invariance in B_{n}": conj5,
        f"Tr5 positive stabilization from B_{n}": stab5_pos,
        f"Tr5 negative stabilization from B_{n}": stab5_neg,
        f"Tr2 conjugation invariance in B_{n}": conj2,
        f"Tr2 stabilization from B_{n}": stab2,
    }


def alexander_skein_check(
    rng: random.Random, n: int, count: int, max_length: int = 5
) -> Dict[str, bool]:
    """
    Tr2(x s_i) - Tr2(x s_i^-1) = (1/sqrt(cd) - sqrt(cd)) Tr2(x)
    """
    z = uv_power(-1) - uv_power(1)
    ok = True
    for _ in range(count):
        x = random_word(n, rng.randint(0, max_length), rng)
        i = rng.randint(1, n - 1)
        plus = trace_2(concat(x, BraidWord(n, (i,))))
        minus = trace_2(concat(x, BraidWord(n, (-i,))))
        ok = ok and plus - minus == z * trace_2(x)
    return {f"Tr2 skein on {count} words in B_{n}": ok}
