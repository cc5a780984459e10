"""Words over vertex alphabets and the alternation semantics behind them.

A word represents a graph when two vertices are adjacent exactly when their
letters alternate in the word. The brute-force word finder here is a
deliberately independent oracle: it can prove a graph representable but never
the opposite, so every negative verdict in this package comes from the
orientation-based deciders instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import graphs
from .errors import (
    AlphabetMismatch,
    BudgetExceeded,
    LetterOutOfRange,
    MissingLetter,
    SameLetter,
    TooManyVertices,
)
from .graphs import Graph

# Enumeration guards for find_word_bruteforce: beyond these the multiset
# permutation space stops being a desk-scale computation.
_FIND_CAP_HIGH_MULT = 5  # k_max >= 3
_FIND_CAP_LOW_MULT = 6   # k_max <= 2

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters drawn from the alphabet 0..alphabet_size-1."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        if self.alphabet_size < 0:
            raise ValueError("alphabet size must be non-negative")
        for c in self.letters:
            if not 0 <= c < self.alphabet_size:
                raise LetterOutOfRange(f"letter {c} not in 0..{self.alphabet_size - 1}")

    def __len__(self):
        return len(self.letters)


def _check_pair(w: Word, i: int, j: int) -> None:
    if i == j:
        raise SameLetter(f"need two distinct letters, got {i} twice")
    for c in (i, j):
        if not 0 <= c < w.alphabet_size:
            raise LetterOutOfRange(f"letter {c} not in 0..{w.alphabet_size - 1}")


def restrict(w: Word, i: int, j: int) -> Word:
    """The subsequence of w consisting of the occurrences of i and j."""
    _check_pair(w, i, j)
    return Word(tuple(c for c in w.letters if c == i or c == j), w.alphabet_size)


def alternate(w: Word, i: int, j: int) -> bool:
    """True iff i and j alternate in w.

    A letter that never occurs alternates with everything by convention.
    """
    _check_pair(w, i, j)
    sub = [c for c in w.letters if c == i or c == j]
    if i not in sub or j not in sub:
        return True
    return all(a != b for a, b in zip(sub, sub[1:]))


def _adjacency_from_letters(letters: Sequence[int], n: int) -> list[int]:
    """Alternation adjacency rows, assuming every letter 0..n-1 occurs.

    A pair (x, y) fails to alternate exactly when some gap between consecutive
    occurrences of x (or of y) contains no occurrence of the other letter, so
    one pass over the gaps of each letter finds every failing pair.
    """
    positions: list[list[int]] = [[] for _ in range(n)]
    for p, c in enumerate(letters):
        positions[c].append(p)
    full = (1 << n) - 1
    fail = [0] * n
    for x in range(n):
        occ = positions[x]
        for a, b in zip(occ, occ[1:]):
            gap = 0
            for p in range(a + 1, b):
                gap |= 1 << letters[p]
            missing = full & ~gap & ~(1 << x)
            fail[x] |= missing
            for y in graphs.bits(missing):
                fail[y] |= 1 << x
    return [full & ~fail[v] & ~(1 << v) for v in range(n)]


def graph_of_word(w: Word) -> Graph:
    """The graph on w's alphabet whose edges are the alternating letter pairs."""
    n = w.alphabet_size
    if n > graphs.MAX_VERTICES:
        raise TooManyVertices(f"alphabet of size {n} exceeds {graphs.MAX_VERTICES} vertices")
    seen = 0
    for c in w.letters:
        seen |= 1 << c
    if seen != (1 << n) - 1:
        absent = [v for v in range(n) if not seen >> v & 1]
        raise MissingLetter(f"letters {absent} never occur in the word")
    return Graph(n, tuple(_adjacency_from_letters(w.letters, n)))


def represents(w: Word, g: Graph) -> bool:
    """True iff the word's alternation graph equals g exactly."""
    if w.alphabet_size != g.n:
        raise AlphabetMismatch(f"alphabet size {w.alphabet_size} != vertex count {g.n}")
    return graph_of_word(w) == g


def _multiplicity_vectors(n: int, total: int, k_max: int) -> Iterator[tuple[int, ...]]:
    """All (m_0..m_{n-1}) with 1 <= m_i <= k_max summing to total, lexicographic."""
    vec = [0] * n

    def rec(i, remaining):
        if i == n:
            if remaining == 0:
                yield tuple(vec)
            return
        rest = n - i - 1
        low = max(1, remaining - rest * k_max)
        high = min(k_max, remaining - rest)
        for m in range(low, high + 1):
            vec[i] = m
            yield from rec(i + 1, remaining - m)

    yield from rec(0, total)


def _multiset_permutations(counts: list[int]) -> Iterator[list[int]]:
    """All words using each letter exactly counts[letter] times, lexicographic."""
    total = sum(counts)
    word = [0] * total

    def rec(pos):
        if pos == total:
            yield word
            return
        for c in range(len(counts)):
            if counts[c]:
                counts[c] -= 1
                word[pos] = c
                yield from rec(pos + 1)
                counts[c] += 1

    yield from rec(0)


def find_word_bruteforce(g: Graph, k_max: int) -> Word | None:
    """Shortest representing word with every letter used 1..k_max times, or None.

    Enumeration order is deterministic: total length ascending, multiplicity
    vectors lexicographic, multiset permutations lexicographic; the first hit
    is returned. A None result only means nothing exists within the cap; it is
    not a proof of non-representability.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    n = g.n
    cap = _FIND_CAP_LOW_MULT if k_max <= 2 else _FIND_CAP_HIGH_MULT
    if n > cap:
        raise BudgetExceeded(f"word enumeration is capped at n = {cap} for k_max = {k_max}")
    if n == 0:
        return Word((), 0)
    target = list(g.adj)
    for total in range(n, n * k_max + 1):
        for multiplicities in _multiplicity_vectors(n, total, k_max):
            for letters in _multiset_permutations(list(multiplicities)):
                if _adjacency_from_letters(letters, n) == target:
                    return Word(tuple(letters), n)
    return None


def word_to_string(w: Word) -> str:
    """Render a word with 1-based letter labels.

    Alphabets of at most 36 letters print as one base-36 digit per letter
    (label 1 -> '1', label 10 -> 'a', label 36 -> '0'); larger alphabets print
    as comma-separated 1-based decimal integers.
    """
    if w.alphabet_size <= 36:
        return "".join(_DIGITS[(c + 1) % 36] for c in w.letters)
    return ",".join(str(c + 1) for c in w.letters)


def word_from_string(text: str, alphabet_size: int | None = None) -> Word:
    """Parse a word in the format produced by word_to_string.

    With no explicit alphabet_size the alphabet is the largest label seen.
    """
    text = text.strip()
    if "," in text:
        labels = [int(part) for part in text.split(",")]
    else:
        labels = []
        for ch in text.lower():
            if ch not in _DIGITS:
                raise LetterOutOfRange(f"invalid word character {ch!r}")
            value = _DIGITS.index(ch)
            labels.append(36 if value == 0 else value)
    if any(label < 1 for label in labels):
        raise LetterOutOfRange("labels are 1-based")
    if alphabet_size is None:
        alphabet_size = max(labels, default=0)
    return Word(tuple(label - 1 for label in labels), alphabet_size)
