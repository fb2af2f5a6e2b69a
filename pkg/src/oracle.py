"""
Reference invariants computed independently of the algebra engine.

kauffman_jones runs the bracket state sum over the closure diagram and
burau_alexander takes a determinant of the reduced Burau matrix.  Both do their
arithmetic in sympy and only convert to QPoly at the end.
"""

import logging
import time
from collections import Counter
from functools import lru_cache
from fractions import Fraction
from itertools import product
from typing import Dict, List, Protocol, Tuple

import sympy

from src.errors import CheckFailed, TooManyCrossings
from src.poly import QPoly

logger = logging.getLogger(__name__)

A = sympy.Symbol("A")
T = sympy.Symbol("t")

DEFAULT_MAX_CROSSINGS = 24

Node = Tuple[int, int]


class ClosedBraid(Protocol):
    """
    Anything with a strand count and signed generator letters
    """

    n: int
    letters: Tuple[int, ...]


class _UnionFind:
    def __init__(self):
        self.parent: Dict[Node, Node] = {}

    def find(self, x: Node) -> Node:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: Node, b: Node):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _count_loops(n: int, letters: Tuple[int, ...], smoothing: Tuple[int, ...]) -> int:
    """
    Loops of one state of the closed braid.

    Nodes are (layer, position); letter j sits between layers j and j+1, the
    closure glues the last layer back to layer 0.  smoothing[j] is 0 for the
    vertical resolution and 1 for the cup-cap resolution.
    """
    uf = _UnionFind()
    layers = len(letters)
    for j, (letter, choice) in enumerate(zip(letters, smoothing)):
        i = abs(letter)
        for p in range(1, n + 1):
            if p in (i, i + 1):
                continue
            uf.union((j, p), (j + 1, p))
        if choice == 0:
            uf.union((j, i), (j + 1, i))
            uf.union((j, i + 1), (j + 1, i + 1))
        else:
            uf.union((j, i), (j, i + 1))
            uf.union((j + 1, i), (j + 1, i + 1))
    for p in range(1, n + 1):
        uf.union((layers, p), (0, p))
    roots = {
        uf.find((layer, p)) for layer in range(layers + 1) for p in range(1, n + 1)
    }
    return len(roots)


def _a_to_q(expr: sympy.Expr) -> QPoly:
    """
    Rewrite a Laurent polynomial in A with A^-2 = -q
    """
    terms: Dict[int, int] = {}
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, exponent = term.as_coeff_exponent(A)
        exponent = int(exponent)
        if exponent % 2:
            raise CheckFailed(f"odd power A^{exponent} in a normalized bracket")
        half = exponent // 2
        sign = -1 if half % 2 else 1
        terms[-half] = terms.get(-half, 0) + sign * int(coeff)
    return QPoly(terms)


def kauffman_jones(w: ClosedBraid, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> QPoly:
    """
    Jones polynomial of the closure from the Kauffman bracket state sum
    """
    crossings = len(w.letters)
    if crossings > max_crossings:
        raise TooManyCrossings(
            f"{crossings} crossings exceed the state-sum cap of {max_crossings}"
        )
    start = time.time()
    states: Counter = Counter()
    for smoothing in product((0, 1), repeat=crossings):
        a_power = 0
        for letter, choice in zip(w.letters, smoothing):
            # sigma = A id + A^-1 cupcap, sigma^-1 = A^-1 id + A cupcap
            positive = letter > 0
            a_power += 1 if positive == (choice == 0) else -1
        states[(a_power, _count_loops(w.n, w.letters, smoothing))] += 1

    loop = -A**2 - A**-2
    bracket = sympy.Integer(0)
    for (a_power, loops), count in states.items():
        bracket += count * A**a_power * loop ** (loops - 1)
    framing = sum(1 if k > 0 else -1 for k in w.letters)
    value = _a_to_q(sympy.expand((-A**3) ** (-framing) * bracket))
    logger.info(
        f"Kauffman state sum over {2 ** crossings} states for {w} "
        f"took {time.time() - start:.2f}s"
    )
    return value


@lru_cache(maxsize=None)
def _burau_generator(n: int, i: int) -> sympy.Matrix:
    """
    Reduced Burau matrix of sigma_i in B_n, size n - 1
    """
    size = n - 1
    matrix = sympy.eye(size)
    if size == 1:
        matrix[0, 0] = -T
        return matrix
    k = i - 1
    matrix[k, k] = -T
    if k > 0:
        matrix[k - 1, k] = T
    if k < size - 1:
        matrix[k + 1, k] = 1
    return matrix


def burau_alexander(w: ClosedBraid) -> QPoly:
    """
    det(I - B(w)) (1 - t) / (1 - t^n) in t, reported in q with t = q^2
    """
    n = w.n
    if n == 1:
        return QPoly({0: 1})
    burau = sympy.eye(n - 1)
    for letter in w.letters:
        generator = _burau_generator(n, abs(letter))
        if letter < 0:
            generator = generator.inv()
        burau = burau * generator
    determinant = (sympy.eye(n - 1) - burau).det()
    value = sympy.cancel(determinant * (1 - T) / (1 - T**n))
    numerator, denominator = sympy.fraction(value)
    if numerator == 0:
        return QPoly()

    den_poly = sympy.Poly(denominator, T)
    if len(den_poly.terms()) != 1:
        raise CheckFailed(f"Burau quotient {value} is not a Laurent polynomial")
    ((den_exp,), den_coeff), = den_poly.terms()
    terms: Dict[int, Fraction] = {}
    for (exp,), coeff in sympy.Poly(numerator, T).terms():
        ratio = sympy.Rational(coeff) / sympy.Rational(den_coeff)
        terms[2 * (exp - den_exp)] = _to_fraction(ratio)
    return QPoly(terms)


def _to_fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def equal_up_to_units(p: QPoly, r: QPoly, allow_inversion: bool = False) -> bool:
    """
    True iff p = +-q^k r for some k, optionally also against r(q^-1)
    """
    candidates: List[QPoly] = [r, r.mirror()] if allow_inversion else [r]
    for candidate in candidates:
        if p.is_zero() or candidate.is_zero():
            if p.is_zero() and candidate.is_zero():
                return True
            continue
        shifted = candidate.shift(p.min_degree() - candidate.min_degree())
        if p == shifted or p == -shifted:
            return True
    return False
