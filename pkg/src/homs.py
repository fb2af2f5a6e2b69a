"""
The five braid group homomorphisms into the units of CP_n.

Each generator sigma_i is sent to a*d1 + b*d2 + c*d3 + d*d4 + e*d5 + f*d6,
the six diagrams of P_2 placed on strands i and i+1.  With c = U^2, d = V^2 and
M = a + c + d - 1 every coefficient below, and every inverse coefficient, is a
Laurent polynomial.
"""

import logging
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

import sympy

from src.braid import BraidWord, concat, random_word
from src.diagram import p2_basis
from src.element import AlgebraElement, elem_mul, embed_p2
from src.errors import IndexOutOfRange, InvalidFamily, RelationFailed
from src.poly import C, D, M, ONE, U, V, LaurentPoly

logger = logging.getLogger(__name__)

Coefficients = Tuple[LaurentPoly, ...]

SLOTS = "abcdef"

_CI = C.inverse()
_DI = D.inverse()
_CD = C * D
_CDI = _CD.inverse()
_UV = U * V
_UVI = _UV.inverse()

_FORWARD: Dict[int, Coefficients] = {
    1: (M + 1 - C - D, -ONE, C, D, -ONE, ONE),
    2: (-C - D, -ONE, C, D, -_CD, ONE),
    3: (-C - D, -_CD, C, D, -ONE, ONE),
    4: (1 - C - D + _CD, -_CD, C, D, -ONE, ONE),
    5: (1 - C - D + _CD, -ONE, C, D, -_CD, ONE),
}

_INVERSE: Dict[int, Coefficients] = {
    1: (1 - _DI - _CI + M.inverse(), -ONE, _DI, _CI, -ONE, ONE),
    2: (-_CI - _DI, -_CDI, _DI, _CI, -ONE, ONE),
    3: (-_CI - _DI, -ONE, _DI, _CI, -_CDI, ONE),
    4: (1 - _CI - _DI + _CDI, -ONE, _DI, _CI, -_CDI, ONE),
    5: (1 - _CI - _DI + _CDI, -_CDI, _DI, _CI, -ONE, ONE),
}

_U_OVER_V = U * V.inverse()
_V_OVER_U = V * U.inverse()

# phi_2 scaled by 1/sqrt(cd)
_RESCALED_FORWARD: Coefficients = (
    -_U_OVER_V - _V_OVER_U,
    -_UVI,
    _U_OVER_V,
    _V_OVER_U,
    -_UV,
    _UVI,
)
_RESCALED_INVERSE: Coefficients = (
    -_U_OVER_V - _V_OVER_U,
    -_UVI,
    _U_OVER_V,
    _V_OVER_U,
    -_UV,
    _UV,
)


@dataclass(frozen=True)
class FamilySpec:
    """
    Which homomorphism to use.

    perturbation replaces named forward coefficients (slots 'a'..'f'); it exists
    to build broken families that the relation checks must reject.
    """

    family: int
    rescaled: bool = False
    perturbation: Tuple[Tuple[str, LaurentPoly], ...] = ()

    def __post_init__(self):
        if self.family not in _FORWARD:
            raise InvalidFamily(f"family must be 1..5, got {self.family}")
        if self.rescaled and self.family != 2:
            raise InvalidFamily("only family 2 has a rescaled form")
        for slot, _ in self.perturbation:
            if slot not in SLOTS:
                raise InvalidFamily(f"unknown coefficient slot '{slot}'")

    def label(self) -> str:
        text = f"phi_{self.family}"
        if self.rescaled:
            text += " (rescaled)"
        if self.perturbation:
            text += " (perturbed)"
        return text


def family_coefficients(spec: FamilySpec, sign: int) -> Coefficients:
    if sign > 0:
        coeffs = _RESCALED_FORWARD if spec.rescaled else _FORWARD[spec.family]
        if spec.perturbation:
            replaced = list(coeffs)
            for slot, value in spec.perturbation:
                replaced[SLOTS.index(slot)] = LaurentPoly.lift(value)
            coeffs = tuple(replaced)
        return coeffs
    return _RESCALED_INVERSE if spec.rescaled else _INVERSE[spec.family]


@lru_cache(maxsize=None)
def _local_image(spec: FamilySpec, sign: int) -> AlgebraElement:
    return AlgebraElement(2, dict(zip(p2_basis(), family_coefficients(spec, sign))))


@lru_cache(maxsize=4096)
def phi_generator(spec: FamilySpec, i: int, sign: int, n: int) -> AlgebraElement:
    """
    Image of sigma_i^sign in CP_n
    """
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator {i} outside 1..{n - 1}")
    return embed_p2(_local_image(spec, 1 if sign > 0 else -1), i, n)


def phi_word(spec: FamilySpec, w: BraidWord) -> AlgebraElement:
    """
    Ordered product of generator images; the empty word maps to the identity
    """
    result = AlgebraElement.identity(w.n)
    for letter in w.letters:
        result = result * phi_generator(spec, abs(letter), letter, w.n)
    logger.debug(f"{spec.label()} of {w}: {len(result)} diagrams")
    return result


def _image(spec: FamilySpec, n: int, *letters: int) -> AlgebraElement:
    return phi_word(spec, BraidWord(n, letters))


def braid_relation_results(spec: FamilySpec) -> Dict[str, bool]:
    identity3 = AlgebraElement.identity(3)
    results = {
        "braid relation s1 s2 s1 = s2 s1 s2 in CP_3": _image(spec, 3, 1, 2, 1)
        == _image(spec, 3, 2, 1, 2),
        "far commutation s1 s3 = s3 s1 in CP_4": _image(spec, 4, 1, 3)
        == _image(spec, 4, 3, 1),
    }
    for i in (1, 2):
        results[f"s{i} s{i}^-1 = 1 in CP_3"] = _image(spec, 3, i, -i) == identity3
        results[f"s{i}^-1 s{i} = 1 in CP_3"] = _image(spec, 3, -i, i) == identity3
    return results


def verify_braid_relations(spec: FamilySpec, strict: bool = True) -> Dict[str, bool]:
    """
    Exact check of the braid, far commutation and inverse relations
    """
    start = time.time()
    results = braid_relation_results(spec)
    logger.info(
        f"Braid relations for {spec.label()} checked in {time.time() - start:.2f}s"
    )
    failed = [name for name, ok in results.items() if not ok]
    if failed and strict:
        raise RelationFailed(f"{spec.label()}: {', '.join(failed)}")
    return results


def dual_element(x: AlgebraElement) -> AlgebraElement:
    return x.map_coefficients(LaurentPoly.substitute_dual)


def duality_check(n: int = 3, strict: bool = True) -> Dict[str, bool]:
    """
    phi_2(s) = dual(phi_3(s^-1)) and phi_5(s) = dual(phi_4(s^-1)) for every generator
    """
    pairs = ((2, 3), (5, 4), (3, 2), (4, 5))
    results: Dict[str, bool] = {}
    for left, right in pairs:
        ok = all(
            phi_generator(FamilySpec(left), i, 1, n)
            == dual_element(phi_generator(FamilySpec(right), i, -1, n))
            for i in range(1, n)
        )
        results[f"phi_{left}(s_i) = dual phi_{right}(s_i^-1)"] = ok

    coeffs = [c for f in _FORWARD.values() for c in f]
    results["dual substitution is an involution"] = all(
        c.substitute_dual().substitute_dual() == c for c in coeffs
    )
    failed = [name for name, ok in results.items() if not ok]
    if failed and strict:
        raise RelationFailed(", ".join(failed))
    return results


def quadratic_check() -> Dict[str, bool]:
    """
    Hecke quadratics of phi_5 and of the rescaled phi_2
    """
    zero = AlgebraElement.zero(2)
    one = AlgebraElement.identity(2)
    s5 = phi_generator(FamilySpec(5), 1, 1, 2)
    s2 = phi_generator(FamilySpec(2, rescaled=True), 1, 1, 2)
    return {
        "(phi_5(s) - 1)(phi_5(s) + cd) = 0": (s5 - one) * (s5 + one.scale(_CD))
        == zero,
        "(phi_2(s) - 1/sqrt(cd))(phi_2(s) + sqrt(cd)) = 0": (s2 - one.scale(_UVI))
        * (s2 + one.scale(_UV))
        == zero,
    }


def skein_check(
    rng: random.Random, n: int, count: int, max_length: int = 6
) -> Dict[str, bool]:
    """
    phi_5(x s) - cd phi_5(x s^-1) = (1 - cd) phi_5(x) and
    phi_2(x s) - phi_2(x s^-1) = (1/sqrt(cd) - sqrt(cd)) phi_2(x) on random x
    """
    hecke5 = FamilySpec(5)
    rescaled2 = FamilySpec(2, rescaled=True)
    z = _UVI - _UV
    ok5 = True
    ok2 = True
    for _ in range(count):
        x = random_word(n, rng.randint(0, max_length), rng)
        i = rng.randint(1, n - 1)

        base = phi_word(hecke5, x)
        plus = base * phi_generator(hecke5, i, 1, n)
        minus = base * phi_generator(hecke5, i, -1, n)
        ok5 = ok5 and plus - minus.scale(_CD) == base.scale(1 - _CD)

        base = phi_word(rescaled2, x)
        plus = base * phi_generator(rescaled2, i, 1, n)
        minus = base * phi_generator(rescaled2, i, -1, n)
        ok2 = ok2 and plus - minus == base.scale(z)
    return {
        f"phi_5 skein on {count} words in B_{n}": ok5,
        f"rescaled phi_2 skein on {count} words in B_{n}": ok2,
    }


def non_homflypt_check(point: Tuple[int, int, int] = (2, 3, 5)) -> Dict[str, bool]:
    """
    phi_1(s)^2 is not a combination of phi_1(s) and 1.

    The coefficient vectors over d1..d6 are evaluated at a rational point
    (U, V, M); rank 3 there rules out any scalar quadratic.
    """
    u, v, m = point
    s = phi_generator(FamilySpec(1), 1, 1, 2)
    basis = p2_basis()
    vectors = [s * s, s, AlgebraElement.identity(2)]
    rows = [[c.evaluate(u, v, m) for c in x.coefficient_vector(basis)] for x in vectors]
    rank = sympy.Matrix(rows).rank()
    return {"phi_1(s)^2 outside span(phi_1(s), 1)": rank == 3}


def homomorphism_check(
    spec: FamilySpec, rng: random.Random, n: int, count: int, max_length: int = 5
) -> Dict[str, bool]:
    ok = True
    for _ in range(count):
        u = random_word(n, rng.randint(0, max_length), rng)
        v = random_word(n, rng.randint(0, max_length), rng)
        ok = ok and phi_word(spec, concat(u, v)) == elem_mul(
            phi_word(spec, u), phi_word(spec, v)
        )
    return {f"{spec.label()}(uv) = {spec.label()}(u){spec.label()}(v) in B_{n}": ok}
