"""
The representations rho_k of CP_n on the span of k-subsets of {1..n}.

rho_k(d) sends v_S to v_f(S) when every element of S is the bottom end of an
edge of d (f follows the edges upwards) and to 0 otherwise.  Matrices are
numpy object arrays of LaurentPoly entries, columns indexed by source subsets.
"""

import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.braid import BraidWord, colored_counts, link_data, permutation, random_word
from src.diagram import PlanarDiagram, compose, enumerate_planar
from src.element import AlgebraElement
from src.errors import CapExceeded, CheckFailed, IndexOutOfRange
from src.homs import FamilySpec, phi_generator, phi_word
from src.poly import M, ONE, VARIABLES, ZERO, LaurentPoly, uv_power
from src.traces import bubble_trace

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]

LINKING = FamilySpec(1)

# nonzero, so negative powers of U, V, M stay defined
RATIONAL_POINTS = (
    Fraction(-3),
    Fraction(-1),
    Fraction(1, 2),
    Fraction(2),
    Fraction(5, 3),
)


@lru_cache(maxsize=None)
def subset_basis(n: int, k: int) -> Tuple[Subset, ...]:
    """
    k-subsets of {1..n} as sorted tuples, in lexicographic order
    """
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"subset size {k} outside 0..{n}")
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def _basis_index(n: int, k: int) -> Dict[Subset, int]:
    return {s: j for j, s in enumerate(subset_basis(n, k))}


@dataclass
class RepMatrix:
    """
    Square matrix of rho_k over LaurentPoly
    """

    n: int
    k: int
    entries: np.ndarray

    @classmethod
    def zero(cls, n: int, k: int) -> "RepMatrix":
        size = len(subset_basis(n, k))
        return cls(n, k, np.full((size, size), ZERO, dtype=object))

    @classmethod
    def identity(cls, n: int, k: int) -> "RepMatrix":
        matrix = cls.zero(n, k)
        for j in range(matrix.dimension):
            matrix.entries[j, j] = ONE
        return matrix

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def basis(self) -> Tuple[Subset, ...]:
        return subset_basis(self.n, self.k)

    def entry(self, target: Iterable[int], source: Iterable[int]) -> LaurentPoly:
        index = _basis_index(self.n, self.k)
        return self.entries[index[tuple(sorted(target))], index[tuple(sorted(source))]]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.n, self.k, self.entries @ other.entries)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.n, self.k, self.entries + other.entries)

    def scale(self, coeff: LaurentPoly) -> "RepMatrix":
        result = np.empty_like(self.entries)
        for index, value in np.ndenumerate(self.entries):
            result[index] = value * coeff
        return RepMatrix(self.n, self.k, result)

    def trace(self) -> LaurentPoly:
        total = LaurentPoly.zero()
        for j in range(self.dimension):
            total = total + self.entries[j, j]
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return (
            (self.n, self.k) == (other.n, other.k)
            and self.entries.shape == other.entries.shape
            and all(a == b for a, b in zip(self.entries.flat, other.entries.flat))
        )

    __hash__ = None

    def signature(self) -> Tuple[LaurentPoly, ...]:
        return tuple(self.entries.flat)

    def to_rows(self) -> List[List[str]]:
        return [[str(value) for value in row] for row in self.entries]

    def __str__(self) -> str:
        labels = ["{" + ",".join(map(str, s)) + "}" for s in self.basis]
        lines = [f"rho_{self.k} on CP_{self.n}, basis {' '.join(labels)}"]
        for row in self.to_rows():
            lines.append("[ " + " | ".join(row) + " ]")
        return "\n".join(lines)


@lru_cache(maxsize=1 << 14)
def rho_diagram(k: int, d: PlanarDiagram) -> RepMatrix:
    matrix = RepMatrix.zero(d.n, k)
    index = _basis_index(d.n, k)
    up = d.as_map()
    for j, source in enumerate(subset_basis(d.n, k)):
        if all(s in up for s in source):
            target = tuple(sorted(up[s] for s in source))
            matrix.entries[index[target], j] = ONE
    return matrix


def rho_element(k: int, x: AlgebraElement) -> RepMatrix:
    result = RepMatrix.zero(x.n, k)
    index = _basis_index(x.n, k)
    for d, coeff in x.terms.items():
        up = d.as_map()
        for j, source in enumerate(subset_basis(x.n, k)):
            if all(s in up for s in source):
                row = index[tuple(sorted(up[s] for s in source))]
                result.entries[row, j] = result.entries[row, j] + coeff
    return result


def rho_word(k: int, spec: FamilySpec, w: BraidWord) -> RepMatrix:
    """
    Product of the generator matrices, first letter leftmost
    """
    result = RepMatrix.identity(w.n, k)
    for letter in w.letters:
        generator = phi_generator(spec, abs(letter), letter, w.n)
        result = result @ rho_element(k, generator)
    return result


def _joint_rows(diagrams: Sequence[PlanarDiagram]) -> np.ndarray:
    """
    One 0/1 row per diagram: all rho_k(d) flattened side by side
    """
    rows = []
    for d in diagrams:
        row: List[int] = []
        for k in range(d.n + 1):
            signature = rho_diagram(k, d).signature()
            row.extend(0 if value.is_zero() else 1 for value in signature)
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def isomorphism_check(
    n: int,
    rng: Optional[random.Random] = None,
    sample: int = 200,
    strict: bool = True,
) -> Dict[str, bool]:
    """
    CP_n is the direct sum of the End(V_k): dimensions, injectivity, multiplicativity
    """
    if n > 4:
        raise CapExceeded(f"isomorphism check is limited to n <= 4, got {n}")
    start = time.time()
    diagrams = enumerate_planar(n)
    squares = sum(comb(n, k) ** 2 for k in range(n + 1))
    results = {
        f"n={n}: sum of squared dimensions = |P_n| = C(2n, n)": (
            squares == len(diagrams) == comb(2 * n, n)
        ),
    }

    signatures = {
        tuple(rho_diagram(k, d).signature() for k in range(n + 1)) for d in diagrams
    }
    results[f"n={n}: joint map is injective on P_n"] = len(signatures) == len(
        diagrams
    )
    rank = int(np.linalg.matrix_rank(_joint_rows(diagrams)))
    results[f"n={n}: images of P_n are linearly independent"] = rank == len(diagrams)

    if n <= 3:
        pairs: Iterable[Tuple[PlanarDiagram, PlanarDiagram]] = product(
            diagrams, repeat=2
        )
    else:
        rng = rng or random.Random(0)
        pairs = [(rng.choice(diagrams), rng.choice(diagrams)) for _ in range(sample)]
    multiplicative = all(
        rho_diagram(k, compose(d1, d2)) == rho_diagram(k, d1) @ rho_diagram(k, d2)
        for d1, d2 in pairs
        for k in range(n + 1)
    )
    results[f"n={n}: rho_k(d1 d2) = rho_k(d1) rho_k(d2)"] = multiplicative

    logger.info(f"Isomorphism check for n={n} done in {time.time() - start:.2f}s")
    failed = [name for name, ok in results.items() if not ok]
    if failed and strict:
        raise CheckFailed("; ".join(failed))
    return results


def lambda_formula(
    w: BraidWord, subset: Iterable[int]
) -> Tuple[FrozenSet[int], LaurentPoly]:
    """
    T = pi(w)(S) and M^r (UV)^r' (U/V)^(sum T - sum S)
    """
    source = frozenset(subset)
    red, mixed, target = colored_counts(w, source)
    shift = sum(target) - sum(source)
    scalar = M**red * uv_power(mixed) * LaurentPoly.monomial(shift, -shift, 0)
    return target, scalar


def lambda_formula_check(
    rng: random.Random, n: int, count: int, max_length: int = 5
) -> Dict[str, bool]:
    """
    rho_k(phi_1(w)) v_S = lambda v_T on random words, every k and S.

    Also compares both sides at a random nonzero rational point (U, V, M).
    """
    formula_ok = True
    functorial = True
    pointwise = True
    for trial in range(count):
        w = random_word(n, rng.randint(0, max_length), rng)
        point = tuple(rng.choice(RATIONAL_POINTS) for _ in VARIABLES)
        for k in range(n + 1):
            matrix = rho_word(k, LINKING, w)
            values = specialize(matrix, *point)
            index = _basis_index(n, k)
            for j, source in enumerate(subset_basis(n, k)):
                target, scalar = lambda_formula(w, source)
                row = index[tuple(sorted(target))]
                column = matrix.entries[:, j]
                formula_ok = formula_ok and all(
                    (value == scalar) if r == row else value.is_zero()
                    for r, value in enumerate(column)
                )
                pointwise = pointwise and values[row][j] == scalar.evaluate(*point)
            if trial < 3:
                functorial = functorial and matrix == rho_element(
                    k, phi_word(LINKING, w)
                )
    return {
        f"rho_k(phi_1(w)) matches the lambda formula on {count} words in B_{n}": (
            formula_ok
        ),
        f"generator products agree with rho_k of the algebra image in B_{n}": (
            functorial
        ),
        f"lambda formula holds at rational points in B_{n}": pointwise,
    }


def random_element(
    n: int, rng: random.Random, terms: int = 5, cap: int = 6
) -> AlgebraElement:
    """
    Random combination of diagrams with small monomial coefficients in U, V
    """
    diagrams = enumerate_planar(n, cap)
    coeffs: Dict[PlanarDiagram, LaurentPoly] = {}
    for _ in range(terms):
        d = rng.choice(diagrams)
        value = LaurentPoly.monomial(
            rng.randint(-2, 2), rng.randint(-2, 2), 0, rng.choice((-2, -1, 1, 3))
        )
        coeffs[d] = coeffs.get(d, ZERO) + value
    return AlgebraElement(n, coeffs)


def trace_decomposition_check(
    n: int, rng: random.Random, count: int = 5, strict: bool = True
) -> Dict[str, bool]:
    """
    bubble_trace(beta, x) = sum_k (beta - 1)^k tr rho_k(x), with beta = M symbolic
    """
    if n > 4:
        raise CapExceeded(f"trace decomposition check is limited to n <= 4, got {n}")
    beta = M
    ok = True
    for _ in range(count):
        x = random_element(n, rng)
        right = LaurentPoly.zero()
        for k in range(n + 1):
            right = right + (beta - 1) ** k * rho_element(k, x).trace()
        ok = ok and bubble_trace(beta, x) == right
    results = {f"bubble trace is a combination of rho_k traces on CP_{n}": ok}
    if not ok and strict:
        raise CheckFailed(next(iter(results)))
    return results


def _exponents_from_link_data(
    w: BraidWord, subset: FrozenSet[int]
) -> Tuple[int, int]:
    """
    (r, r') for a union of closure components, read from linking data only
    """
    data = link_data(w)
    green = {
        index for index, comp in enumerate(data.components) if set(comp) <= subset
    }
    red = [i for i in range(len(data.components)) if i not in green]
    r = sum(data.self_writhe[i] for i in red)
    r += 2 * sum(data.linking[i][j] for i in red for j in red if i < j)
    r_mixed = 2 * sum(data.linking[i][j] for i in red for j in green)
    return r, r_mixed


def linking_dependence_check(w: BraidWord, strict: bool = True) -> Dict[str, bool]:
    """
    Diagonal entries of rho_k(phi_1(w)) at permutation-fixed S depend only on
    the linking data of the closure
    """
    perm = permutation(w)
    results: Dict[str, bool] = {}
    for k in range(w.n + 1):
        matrix = rho_word(k, LINKING, w)
        for source in subset_basis(w.n, k):
            subset = frozenset(source)
            if frozenset(perm[s - 1] for s in subset) != subset:
                continue
            target, scalar = lambda_formula(w, subset)
            r, r_mixed = _exponents_from_link_data(w, subset)
            from_links = M**r * uv_power(r_mixed)
            label = "{" + ",".join(map(str, source)) + "}"
            results[f"k={k} S={label}"] = (
                target == subset
                and matrix.entry(source, source) == scalar
                and scalar == from_links
            )
    failed = [name for name, ok in results.items() if not ok]
    if failed and strict:
        raise CheckFailed(f"{w}: {'; '.join(failed)}")
    return results


def linking_check(
    rng: random.Random, n: int, count: int, max_length: int = 5
) -> Dict[str, bool]:
    ok = True
    for _ in range(count):
        w = random_word(n, rng.randint(0, max_length), rng)
        ok = ok and all(linking_dependence_check(w, strict=False).values())
    return {f"fixed-subset scalars follow from linking data on {count} words": ok}


def specialize(matrix: RepMatrix, u, v, m) -> List[List]:
    """
    Exact rational matrix at a point (U, V, M)
    """
    return [[value.evaluate(u, v, m) for value in row] for row in matrix.entries]
