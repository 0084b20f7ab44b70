"""Lyndon words, standard bracketings, and the Lie-membership test.

The standard bracketings of Lyndon words form a basis of each homogeneous
piece of the free Lie algebra, and the expansion of such a bracketing is
unitriangular against the word basis: the Lyndon word itself appears with
coefficient 1 and every other word is lexicographically larger.  That makes
Lie membership a linear elimination with no generic linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Alphabet, NCPoly, Word
from .scalars import moebius


def is_lyndon(word: Word) -> bool:
    """True when the word is strictly smaller than all of its proper suffixes."""
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] for i in range(1, n))


@lru_cache(maxsize=None)
def _lyndon_words(k: int, n: int) -> tuple[Word, ...]:
    """Duval's generation of all Lyndon words of length n over k letters."""
    out: list[Word] = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            out.append(tuple(w))
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return tuple(sorted(out))


@dataclass(frozen=True)
class LyndonWord:
    """A Lyndon word with its standard factorisation split point."""

    word: Word
    split: int  # length of the left factor; 0 for single letters

    def __len__(self) -> int:
        return len(self.word)


def standard_factorization(word: Word) -> int:
    """Split position of the standard factorisation w = uv.

    v is the lexicographically least proper suffix; both halves are Lyndon.
    """
    n = len(word)
    if n < 2:
        return 0
    best = min(range(1, n), key=lambda i: word[i:])
    return best


def lyndon_words(alphabet: Alphabet | int, n: int) -> list[LyndonWord]:
    """All Lyndon words of degree n, lexicographically ordered."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    k = alphabet if isinstance(alphabet, int) else alphabet.size
    return [LyndonWord(w, standard_factorization(w)) for w in _lyndon_words(k, n)]


@lru_cache(maxsize=None)
def _standard_bracketing_word(word: Word) -> dict[Word, int]:
    if len(word) == 1:
        return {word: 1}
    split = standard_factorization(word)
    left = _standard_bracketing_word(word[:split])
    right = _standard_bracketing_word(word[split:])
    out: dict[Word, int] = {}
    for wl, cl in left.items():
        for wr, cr in right.items():
            c = cl * cr
            key = wl + wr
            out[key] = out.get(key, 0) + c
            key = wr + wl
            out[key] = out.get(key, 0) - c
    return {w: c for w, c in out.items() if c}


def standard_bracketing(alphabet: Alphabet, lw: LyndonWord | Word) -> NCPoly:
    """The Lie element obtained by bracketing at the standard factorisation."""
    word = lw.word if isinstance(lw, LyndonWord) else tuple(lw)
    if not is_lyndon(word):
        raise ValueError(f"{word} is not a Lyndon word")
    return NCPoly(alphabet, {w: Fraction(c) for w, c in _standard_bracketing_word(word).items()})


def witt_dimension(k: int, n: int) -> int:
    """dim of the degree-n piece of the free Lie algebra on k letters:
    (1/n) sum_{d | n} mu(d) k^(n/d)."""
    if k < 1 or n < 1:
        raise ValueError("witt_dimension requires k >= 1 and n >= 1")
    total = sum(moebius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


@dataclass(frozen=True)
class LieCoordinates:
    """Coordinates of a homogeneous Lie element in the Lyndon basis."""

    degree: int
    coords: dict[Word, Fraction]


class NotLieElementError(ValueError):
    """The polynomial is not in the span of standard bracketings.

    ``residual`` holds the nonzero remainder left by the elimination,
    for diagnostics.
    """

    def __init__(self, residual: NCPoly):
        super().__init__(f"not a Lie element; residual {residual!r}")
        self.residual = residual


def to_lie_coordinates(p: NCPoly) -> LieCoordinates:
    """Express a homogeneous polynomial in the Lyndon basis, or fail.

    Repeatedly reads the lexicographically least remaining word; by
    unitriangularity it must be Lyndon with the coordinate as coefficient,
    and subtracting that bracketing only leaves larger words.
    """
    if not p.is_homogeneous():
        raise ValueError("to_lie_coordinates requires a homogeneous polynomial")
    if not p:
        return LieCoordinates(0, {})
    degree = p.max_degree()
    coords: dict[Word, Fraction] = {}
    residual = p
    while residual:
        word = min(residual.terms)
        coeff = residual.terms[word]
        if not is_lyndon(word):
            raise NotLieElementError(residual)
        coords[word] = coeff
        residual = residual - standard_bracketing(p.alphabet, word).scaled(coeff)
    return LieCoordinates(degree, coords)


def from_lie_coordinates(alphabet: Alphabet, coords: LieCoordinates) -> NCPoly:
    total = NCPoly.zero(alphabet)
    for word, coeff in coords.coords.items():
        total = total + standard_bracketing(alphabet, word).scaled(coeff)
    return total


def is_lie_element(p: NCPoly) -> bool:
    if not p:
        return True
    try:
        for d in p.degrees():
            to_lie_coordinates(p.homogeneous_component(d))
    except NotLieElementError:
        return False
    return True
