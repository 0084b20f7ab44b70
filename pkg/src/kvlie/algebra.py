"""Words and noncommutative polynomials over the rationals.

The tensor algebra on an alphabet is modelled as the algebra of
noncommutative polynomials: a word is a tuple of letter indices, and a
polynomial (:class:`NCPoly`) is a finitely supported map from words to
nonzero rationals.  The concatenation product, the Lie bracket, the
co-shuffle coproduct, letter-part extraction and signed letter substitution
all live here.

Values are immutable once constructed; every operation returns a fresh
polynomial, so instances are safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import format_rational, parse_rational

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


class Alphabet:
    """An ordered set of distinct single-character letters.

    The fixed order induces the lexicographic order on words used for
    canonical output and for the Lyndon machinery.
    """

    __slots__ = ("letters", "_index")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must not be empty")
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet letters must be distinct")
        for sym in letters:
            if len(sym) != 1:
                raise ValueError(f"letters must be single characters, got {sym!r}")
        self.letters = letters
        self._index = {sym: i for i, sym in enumerate(letters)}

    @property
    def size(self) -> int:
        return len(self.letters)

    def index(self, letter: str) -> int:
        try:
            return self._index[letter]
        except KeyError:
            raise ValueError(f"letter {letter!r} not in alphabet {self.letters}") from None

    def word(self, text: str) -> Word:
        return tuple(self.index(ch) for ch in text)

    def word_text(self, word: Word) -> str:
        return "".join(self.letters[i] for i in word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.letters)!r})"


XY = Alphabet("xy")

_LETTER_POOL = "xyzuvwabcdefgh"


def default_alphabet(k: int) -> Alphabet:
    """The alphabet used for k generators: x, y, z, u, v, w, ..."""
    if not 1 <= k <= len(_LETTER_POOL):
        raise ValueError(f"no default alphabet with {k} letters")
    return Alphabet(_LETTER_POOL[:k])


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


class NCPoly:
    """A noncommutative polynomial: finitely many words with rational coefficients.

    ``terms`` never stores zero coefficients, so ``==`` is exact term-wise
    equality.  Addition and subtraction use ``+``/``-``; ``*`` is the
    concatenation product when both operands are polynomials and scalar
    multiplication when one side is a rational or integer.
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, Fraction] | None = None):
        self.alphabet = alphabet
        clean: dict[Word, Fraction] = {}
        if terms:
            size = alphabet.size
            for word, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if not coeff:
                    continue
                if any(not 0 <= i < size for i in word):
                    raise ValueError(f"word {word} has letters outside the alphabet")
                clean[word] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet)

    @classmethod
    def unit(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet, {EMPTY_WORD: Fraction(1)})

    @classmethod
    def letter(cls, alphabet: Alphabet, symbol: str) -> "NCPoly":
        return cls(alphabet, {(alphabet.index(symbol),): Fraction(1)})

    @classmethod
    def from_word(cls, alphabet: Alphabet, word: Word, coeff=Fraction(1)) -> "NCPoly":
        return cls(alphabet, {tuple(word): _as_fraction(coeff)})

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"NCPoly({to_text(self)!r})"

    def _check_same_alphabet(self, other: "NCPoly") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch between polynomials")

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check_same_alphabet(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = terms.get(word, _ZERO) + coeff
            if acc:
                terms[word] = acc
            else:
                terms.pop(word, None)
        return NCPoly._raw(self.alphabet, terms)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw(self.alphabet, {w: -c for w, c in self.terms.items()})

    def scaled(self, scalar) -> "NCPoly":
        scalar = _as_fraction(scalar)
        if not scalar:
            return NCPoly.zero(self.alphabet)
        return NCPoly._raw(self.alphabet, {w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return concat(self, other)
        return self.scaled(other)

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    @classmethod
    def _raw(cls, alphabet: Alphabet, terms: dict[Word, Fraction]) -> "NCPoly":
        poly = cls.__new__(cls)
        poly.alphabet = alphabet
        poly.terms = terms
        return poly

    # -- inspection --------------------------------------------------------

    def coefficient(self, word: Word) -> Fraction:
        return self.terms.get(tuple(word), _ZERO)

    def max_degree(self) -> int:
        """Highest word length present; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {len(w) for w in self.terms}
        return len(degrees) <= 1

    def homogeneous_component(self, degree: int) -> "NCPoly":
        return NCPoly._raw(
            self.alphabet, {w: c for w, c in self.terms.items() if len(w) == degree}
        )

    def degrees(self) -> list[int]:
        return sorted({len(w) for w in self.terms})

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        """Terms in the canonical order: by degree, then lexicographically."""
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def constant_term(self) -> Fraction:
        return self.terms.get(EMPTY_WORD, _ZERO)


_ZERO = Fraction(0)


# -- products and brackets ---------------------------------------------------


def concat(p: NCPoly, q: NCPoly) -> NCPoly:
    """Concatenation product, the bilinear extension of word concatenation."""
    p._check_same_alphabet(q)
    terms: dict[Word, Fraction] = {}
    for wp, cp in p.terms.items():
        for wq, cq in q.terms.items():
            word = wp + wq
            acc = terms.get(word, _ZERO) + cp * cq
            if acc:
                terms[word] = acc
            else:
                terms.pop(word, None)
    return NCPoly._raw(p.alphabet, terms)


def bracket(p: NCPoly, q: NCPoly) -> NCPoly:
    """Lie bracket [p, q] = pq - qp."""
    return concat(p, q) - concat(q, p)


def _coerce_poly(alphabet: Alphabet, z) -> NCPoly:
    if isinstance(z, NCPoly):
        return z
    if isinstance(z, str):
        return NCPoly.letter(alphabet, z)
    raise TypeError("expected a letter symbol or a polynomial")


def ad(z, p: NCPoly) -> NCPoly:
    """ad(z): p -> [z, p], where z is a letter symbol or a polynomial."""
    return bracket(_coerce_poly(p.alphabet, z), p)


def ad_pow(z, k: int, p: NCPoly) -> NCPoly:
    """k-fold application of ad(z); ad_pow(z, 0, p) == p."""
    if k < 0:
        raise ValueError("ad_pow requires k >= 0")
    zp = _coerce_poly(p.alphabet, z)
    out = p
    for _ in range(k):
        out = bracket(zp, out)
    return out


def letter_part(p: NCPoly, letter: str) -> NCPoly:
    """The right factor b in the decomposition p = sum_z z*b_z + constant.

    Keeps only the words of p beginning with ``letter``, stripped of that
    leading letter; every other word, and the constant term, is discarded.
    """
    idx = p.alphabet.index(letter)
    terms = {w[1:]: c for w, c in p.terms.items() if w and w[0] == idx}
    return NCPoly._raw(p.alphabet, terms)


def substitute(p: NCPoly, images: Mapping[str, str]) -> NCPoly:
    """Letter-wise signed substitution, extended multiplicatively.

    ``images`` maps every letter occurring in p to a letter or its negation,
    written "y" or "-y"; a word picks up -1 for each negated image.
    """
    alphabet = p.alphabet
    table: dict[int, tuple[int, int]] = {}
    for src, dst in images.items():
        sign = 1
        dst = dst.strip()
        if dst.startswith("-"):
            sign = -1
            dst = dst[1:].strip()
        table[alphabet.index(src)] = (alphabet.index(dst), sign)
    terms: dict[Word, Fraction] = {}
    for word, coeff in p.terms.items():
        sign = 1
        out = []
        for i in word:
            if i not in table:
                raise ValueError(
                    f"no image for letter {alphabet.letters[i]!r} in substitution"
                )
            j, s = table[i]
            out.append(j)
            sign *= s
        new_word = tuple(out)
        acc = terms.get(new_word, _ZERO) + sign * coeff
        if acc:
            terms[new_word] = acc
        else:
            terms.pop(new_word, None)
    return NCPoly._raw(alphabet, terms)


def permute_word(word: Word, perm) -> Word:
    """Right action of a permutation: position i of the result carries word[perm(i)].

    ``perm`` is a Permutation or a tuple of 1-based images.
    """
    images = perm.images if hasattr(perm, "images") else tuple(perm)
    if len(images) != len(word):
        raise ValueError("permutation size does not match word degree")
    return tuple(word[s - 1] for s in images)


def apply_word_map(p: NCPoly, word_map) -> NCPoly:
    """Linear extension of a map word -> dict(word -> Fraction)."""
    terms: dict[Word, Fraction] = {}
    for word, coeff in p.terms.items():
        for w2, c2 in word_map(word).items():
            acc = terms.get(w2, _ZERO) + coeff * c2
            if acc:
                terms[w2] = acc
            else:
                terms.pop(w2, None)
    return NCPoly._raw(p.alphabet, terms)


# -- co-shuffle --------------------------------------------------------------


class TensorSquare:
    """An element of T(V) (x) T(V): finitely supported map (word, word) -> rational."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[tuple[Word, Word], Fraction] | None = None):
        self.alphabet = alphabet
        self.terms = {k: _as_fraction(v) for k, v in (terms or {}).items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorSquare):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __add__(self, other: "TensorSquare") -> "TensorSquare":
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = terms.get(key, _ZERO) + coeff
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return TensorSquare(self.alphabet, terms)

    def __mul__(self, other: "TensorSquare") -> "TensorSquare":
        """Componentwise product (a (x) b)(c (x) d) = ac (x) bd."""
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        terms: dict[tuple[Word, Word], Fraction] = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                key = (l1 + l2, r1 + r2)
                acc = terms.get(key, _ZERO) + c1 * c2
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        return TensorSquare(self.alphabet, terms)

    def __repr__(self) -> str:
        bits = []
        for (l, r), c in sorted(self.terms.items()):
            lt = self.alphabet.word_text(l) or "1"
            rt = self.alphabet.word_text(r) or "1"
            bits.append(f"{c}*{lt}(x){rt}")
        return "TensorSquare(" + " + ".join(bits) + ")"


def word_coshuffle(word: Word) -> dict[tuple[Word, Word], int]:
    """Co-shuffle of a single word: sum over subsequence/complement splits."""
    n = len(word)
    out: dict[tuple[Word, Word], int] = {}
    for mask in range(1 << n):
        left = tuple(word[i] for i in range(n) if mask >> i & 1)
        right = tuple(word[i] for i in range(n) if not mask >> i & 1)
        key = (left, right)
        out[key] = out.get(key, 0) + 1
    return out


def coshuffle(p: NCPoly) -> TensorSquare:
    """The coproduct determined by making every letter primitive.

    Delta(v) = 1 (x) v + v (x) 1 on letters, extended as an algebra morphism;
    on a word this is the sum over all subsequence/complement splittings.
    """
    terms: dict[tuple[Word, Word], Fraction] = {}
    for word, coeff in p.terms.items():
        for key, mult in word_coshuffle(word).items():
            acc = terms.get(key, _ZERO) + coeff * mult
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
    return TensorSquare(p.alphabet, terms)


# -- text, JSON and LaTeX forms ----------------------------------------------


def to_text(p: NCPoly) -> str:
    """Canonical text form, e.g. "1/4*y + 1/24*xy - 1/24*yx"."""
    items = p.sorted_terms()
    if not items:
        return "0"
    pieces: list[str] = []
    for k, (word, coeff) in enumerate(items):
        negative = coeff < 0
        mag = -coeff if negative else coeff
        wtext = p.alphabet.word_text(word)
        if not wtext:
            body = format_rational(mag)
        elif mag == 1:
            body = wtext
        else:
            body = f"{format_rational(mag)}*{wtext}"
        if k == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


def to_json_terms(p: NCPoly) -> list[dict[str, str]]:
    return [
        {"word": p.alphabet.word_text(word), "coeff": format_rational(coeff)}
        for word, coeff in p.sorted_terms()
    ]


def from_json_terms(alphabet: Alphabet, items: Iterable[Mapping[str, str]]) -> NCPoly:
    terms: dict[Word, Fraction] = {}
    for item in items:
        word = alphabet.word(item["word"])
        terms[word] = terms.get(word, _ZERO) + parse_rational(item["coeff"])
    return NCPoly(alphabet, terms)


def to_latex(p: NCPoly) -> str:
    items = p.sorted_terms()
    if not items:
        return "0"
    pieces: list[str] = []
    for k, (word, coeff) in enumerate(items):
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if mag.denominator == 1:
            ctext = "" if mag == 1 else str(mag)
        else:
            ctext = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        wtext = p.alphabet.word_text(word)
        body = (ctext + wtext) or "1"
        if k == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


class PolyParseError(ValueError):
    """Raised when polynomial text does not match the grammar; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_poly(alphabet: Alphabet, text: str) -> NCPoly:
    """Parse the polynomial text grammar.

    term := [sign] [rational '*'] word | [sign] rational; word := letter+.
    Whitespace-insensitive; reparses anything produced by :func:`to_text`.
    """
    terms: dict[Word, Fraction] = {}
    i, n = 0, len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    if i == n:
        raise PolyParseError("empty polynomial", 0)
    first = True
    while i < n:
        sign = Fraction(1)
        i = skip_ws(i)
        if i < n and text[i] in "+-":
            if text[i] == "-":
                sign = -sign
            i = skip_ws(i + 1)
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms", i)
        first = False
        if i >= n:
            raise PolyParseError("dangling sign", i)
        coeff = Fraction(1)
        have_coeff = False
        if text[i].isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = 1
            j2 = skip_ws(j)
            if j2 < n and text[j2] == "/":
                j2 = skip_ws(j2 + 1)
                if j2 >= n or not text[j2].isdigit():
                    raise PolyParseError("expected denominator digits", j2)
                j3 = j2
                while j3 < n and text[j3].isdigit():
                    j3 += 1
                den = int(text[j2:j3])
                if den == 0:
                    raise PolyParseError("zero denominator", j2)
                j = j3
            coeff = Fraction(num, den)
            have_coeff = True
            i = skip_ws(j)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                if i >= n:
                    raise PolyParseError("expected word after '*'", i)
        word: list[int] = []
        while i < n and text[i] not in "+-":
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            try:
                word.append(alphabet.index(ch))
            except ValueError:
                raise PolyParseError(f"unknown letter {ch!r}", i) from None
            i += 1
        if not word and not have_coeff:
            raise PolyParseError("expected a term", i)
        key = tuple(word)
        acc = terms.get(key, _ZERO) + sign * coeff
        if acc:
            terms[key] = acc
        else:
            terms.pop(key, None)
        i = skip_ws(i)
    return NCPoly(alphabet, terms)
