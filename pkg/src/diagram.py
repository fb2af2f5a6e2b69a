"""
Planar rook diagrams.

A diagram on n strands is an order-preserving partial injection from the
bottom row to the top row, stored as sorted (bottom, top) pairs with 1-based
labels.  Increasing bottoms together with increasing tops is exactly the
condition for the edges to be drawable without crossings.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from src.errors import CapExceeded, SizeMismatch

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

DEFAULT_ENUMERATION_CAP = 6


def is_planar(pairs: Iterable[Edge]) -> bool:
    """
    True iff the pairs form an order-preserving partial injection
    """
    ordered = sorted(pairs)
    for (b1, t1), (b2, t2) in zip(ordered, ordered[1:]):
        if b1 >= b2 or t1 >= t2:
            return False
    return True


@dataclass(frozen=True)
class PlanarDiagram:
    """
    Element of the planar rook monoid P_n
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"strand count must be nonnegative, got {self.n}")
        edges = tuple(sorted((int(b), int(t)) for b, t in self.edges))
        for bottom, top in edges:
            if not (1 <= bottom <= self.n and 1 <= top <= self.n):
                raise ValueError(f"edge {bottom}->{top} outside 1..{self.n}")
        if not is_planar(edges):
            raise ValueError(f"edges {edges} are not planar")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def _trusted(cls, n: int, edges: Tuple[Edge, ...]) -> "PlanarDiagram":
        diagram = cls.__new__(cls)
        object.__setattr__(diagram, "n", n)
        object.__setattr__(diagram, "edges", edges)
        return diagram

    def bottoms(self) -> FrozenSet[int]:
        return frozenset(b for b, _ in self.edges)

    def tops(self) -> FrozenSet[int]:
        return frozenset(t for _, t in self.edges)

    def as_map(self) -> Dict[int, int]:
        return dict(self.edges)

    def vertical_lines(self) -> Tuple[int, ...]:
        return tuple(b for b, t in self.edges if b == t)

    def rank(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        pairs = ", ".join(f"{b}->{t}" for b, t in self.edges)
        return f"{self.n}; {pairs}" if pairs else f"{self.n};"


def from_pairs(n: int, pairs: Iterable[Edge]) -> PlanarDiagram:
    return PlanarDiagram(n, tuple(pairs))


def identity(n: int) -> PlanarDiagram:
    return PlanarDiagram._trusted(n, tuple((i, i) for i in range(1, n + 1)))


def empty(n: int) -> PlanarDiagram:
    return PlanarDiagram._trusted(n, ())


@lru_cache(maxsize=1 << 16)
def compose(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """
    Product d1 d2: d1 stacked on top of d2.

    As partial maps bottom -> top the result is d1 after d2; any edge that
    runs into a dead end of the other diagram disappears.
    """
    if d1.n != d2.n:
        raise SizeMismatch(f"cannot compose P_{d1.n} with P_{d2.n}")
    upper = dict(d1.edges)
    edges = tuple((b, upper[j]) for b, j in d2.edges if j in upper)
    return PlanarDiagram._trusted(d1.n, edges)


def tensor(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """
    Place d2 to the right of d1
    """
    shift = d1.n
    edges = d1.edges + tuple((b + shift, t + shift) for b, t in d2.edges)
    return PlanarDiagram._trusted(d1.n + d2.n, edges)


def tensor_all(diagrams: Sequence[PlanarDiagram]) -> PlanarDiagram:
    result = empty(0)
    for diagram in diagrams:
        result = tensor(result, diagram)
    return result


def vertical_line_count(d: PlanarDiagram) -> int:
    return sum(1 for b, t in d.edges if b == t)


def broken_at(d: PlanarDiagram, i: int) -> PlanarDiagram:
    """
    Drop the vertical line at i, if there is one
    """
    return PlanarDiagram._trusted(
        d.n, tuple((b, t) for b, t in d.edges if not (b == t == i))
    )


def enumerate_planar(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> List[PlanarDiagram]:
    """
    All of P_n, grouped by rank, bottoms and tops in lexicographic order
    """
    if n > cap:
        raise CapExceeded(f"enumeration of P_{n} exceeds cap {cap}")
    labels = range(1, n + 1)
    diagrams = []
    for rank in range(n + 1):
        for bottoms in combinations(labels, rank):
            for tops in combinations(labels, rank):
                diagrams.append(PlanarDiagram._trusted(n, tuple(zip(bottoms, tops))))
    logger.debug(f"Enumerated {len(diagrams)} diagrams in P_{n}")
    return diagrams


def p2_basis() -> List[PlanarDiagram]:
    """
    The six diagrams d1..d6 of P_2, in order
    """
    return [
        empty(2),
        PlanarDiagram._trusted(2, ((1, 1),)),
        PlanarDiagram._trusted(2, ((1, 2),)),
        PlanarDiagram._trusted(2, ((2, 1),)),
        PlanarDiagram._trusted(2, ((2, 2),)),
        identity(2),
    ]
