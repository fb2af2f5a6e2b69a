"""
Braid words and the bookkeeping read off from their strands.

A word a_1 ... a_L stands for the product sigma_{a_1} ... sigma_{a_L}; the
first letter is drawn on top.  Strands start at the bottom row, so anything
that follows a strand (permutation, colours, linking) meets the letters from
the last one to the first.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Tuple

from src.errors import (
    BadToken,
    CheckFailed,
    GeneratorOutOfRange,
    IndexOutOfRange,
    SizeMismatch,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidWord:
    """
    Word in the generators of B_n; letter k > 0 is sigma_k, k < 0 is sigma_|k|^-1
    """

    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise GeneratorOutOfRange(f"strand count must be at least 1, got {self.n}")
        letters = tuple(self.letters)
        for letter in letters:
            if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0:
                raise BadToken(f"braid letters are nonzero integers, got {letter!r}")
            if abs(letter) >= self.n:
                raise GeneratorOutOfRange(
                    f"generator {letter} needs more than {self.n} strands"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def to_text(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def __str__(self) -> str:
        return f"B_{self.n}[{self.to_text()}]"


@dataclass
class LinkData:
    """
    Components of the closure with their self-writhes and pairwise linking numbers
    """

    components: List[Tuple[int, ...]]
    self_writhe: List[int]
    linking: List[List[int]] = field(default_factory=list)

    def component_of(self, strand: int) -> int:
        for index, component in enumerate(self.components):
            if strand in component:
                return index
        raise KeyError(strand)

    def to_dict(self) -> Dict[str, list]:
        return {
            "components": [list(c) for c in self.components],
            "self_writhe": list(self.self_writhe),
            "linking": [list(row) for row in self.linking],
        }


def parse_word(text: str, n: int) -> BraidWord:
    """
    Parse whitespace separated signed generator indices
    """
    letters = []
    for token in text.split():
        try:
            letter = int(token)
        except ValueError:
            raise BadToken(f"'{token}' is not an integer")
        if letter == 0:
            raise BadToken("generator index 0 is not allowed")
        letters.append(letter)
    return BraidWord(n, tuple(letters))


def writhe(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)


def _crossings(w: BraidWord) -> Iterable[Tuple[int, int, int]]:
    """
    Yield (sign, strand_a, strand_b) bottom-up, strands named by start position
    """
    strands = list(range(1, w.n + 1))
    for letter in reversed(w.letters):
        i = abs(letter)
        yield (1 if letter > 0 else -1), strands[i - 1], strands[i]
        strands[i - 1], strands[i] = strands[i], strands[i - 1]


def permutation(w: BraidWord) -> Tuple[int, ...]:
    """
    perm[j - 1] is the top position reached by the strand starting at bottom j
    """
    strands = list(range(1, w.n + 1))
    for letter in reversed(w.letters):
        i = abs(letter)
        strands[i - 1], strands[i] = strands[i], strands[i - 1]
    perm = [0] * w.n
    for position, strand in enumerate(strands, start=1):
        perm[strand - 1] = position
    return tuple(perm)


def cycles(w: BraidWord) -> List[Tuple[int, ...]]:
    perm = permutation(w)
    seen = set()
    result = []
    for start in range(1, w.n + 1):
        if start in seen:
            continue
        cycle = []
        j = start
        while j not in seen:
            seen.add(j)
            cycle.append(j)
            j = perm[j - 1]
        result.append(tuple(sorted(cycle)))
    return result


def link_data(w: BraidWord) -> LinkData:
    components = cycles(w)
    owner = {s: index for index, comp in enumerate(components) for s in comp}
    size = len(components)
    counts = [[0] * size for _ in range(size)]
    for sign, a, b in _crossings(w):
        ca, cb = owner[a], owner[b]
        counts[ca][cb] += sign
        if ca != cb:
            counts[cb][ca] += sign

    linking = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == j:
                row.append(0)
                continue
            value = Fraction(counts[i][j], 2)
            if value.denominator != 1:
                raise CheckFailed(
                    f"odd crossing count {counts[i][j]} between components "
                    f"{i + 1} and {j + 1}"
                )
            row.append(int(value))
        linking.append(row)
    return LinkData(
        components=components,
        self_writhe=[counts[i][i] for i in range(size)],
        linking=linking,
    )


def colored_counts(
    w: BraidWord, subset: Iterable[int]
) -> Tuple[int, int, FrozenSet[int]]:
    """
    Colour strands starting in subset green, the rest red.

    Returns (red-red signed crossings, red-green signed crossings, end positions
    of the green strands).
    """
    green = frozenset(subset)
    for s in green:
        if not 1 <= s <= w.n:
            raise IndexOutOfRange(f"strand {s} outside 1..{w.n}")
    red_red = 0
    red_green = 0
    for sign, a, b in _crossings(w):
        colours = (a in green) + (b in green)
        if colours == 0:
            red_red += sign
        elif colours == 1:
            red_green += sign
    perm = permutation(w)
    return red_red, red_green, frozenset(perm[s - 1] for s in green)


def free_reduce(w: BraidWord) -> BraidWord:
    stack: List[int] = []
    for letter in w.letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(w.n, tuple(stack))


def mirror(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-k for k in w.letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-k for k in reversed(w.letters)))


def concat(u: BraidWord, v: BraidWord) -> BraidWord:
    if u.n != v.n:
        raise SizeMismatch(f"cannot concatenate words in B_{u.n} and B_{v.n}")
    return BraidWord(u.n, u.letters + v.letters)


def stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    """
    w sigma_n^(+-1) in B_(n+1)
    """
    if sign not in (1, -1):
        raise ValueError(f"stabilization sign must be +1 or -1, got {sign}")
    return BraidWord(w.n + 1, w.letters + (sign * w.n,))


def destabilize(w: BraidWord) -> BraidWord:
    """
    Undo a trailing stabilization; the word is returned unchanged when none applies
    """
    top = w.n - 1
    if top < 1 or not w.letters or abs(w.letters[-1]) != top:
        return w
    if any(abs(k) == top for k in w.letters[:-1]):
        return w
    return BraidWord(w.n - 1, w.letters[:-1])


def conjugate(w: BraidWord, k: int) -> BraidWord:
    """
    sigma_k w sigma_k^-1 (signed k)
    """
    return BraidWord(w.n, (k,) + w.letters + (-k,))


def rotate(w: BraidWord, k: int) -> BraidWord:
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.n, w.letters[k:] + w.letters[:k])


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]
    return BraidWord(n, tuple(letters))


def random_markov_rewrite(
    w: BraidWord, rng: random.Random, max_n: int = 5
) -> BraidWord:
    """
    Apply one random conjugation, rotation, stabilization or destabilization
    """
    moves = ["rotate", "destabilize"]
    if w.n >= 2:
        moves.append("conjugate")
    if w.n < max_n:
        moves.append("stabilize")
    move = rng.choice(moves)
    if move == "rotate":
        result = rotate(w, rng.randint(0, max(len(w.letters) - 1, 0)))
    elif move == "conjugate":
        result = conjugate(w, rng.choice((1, -1)) * rng.randint(1, w.n - 1))
    elif move == "stabilize":
        result = stabilize(w, rng.choice((1, -1)))
    else:
        result = destabilize(w)
    logger.debug(f"Markov move {move}: {w} -> {result}")
    return result