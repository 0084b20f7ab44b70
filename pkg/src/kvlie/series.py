"""Graded formal series: degree-indexed families of homogeneous polynomials.

A :class:`GradedSeries` holds one homogeneous polynomial per degree 0..order
and never reads above its truncation order.  exp and log are the truncated
formal exponential/logarithm used as the direct-expansion oracle for the
Baker-Campbell-Hausdorff series.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from .algebra import Alphabet, NCPoly, Word, concat, substitute, to_text


class GradedSeries:
    """A series truncated at ``order``: components[d] is homogeneous of degree d."""

    __slots__ = ("alphabet", "order", "parts")

    def __init__(self, alphabet: Alphabet, order: int, parts: Sequence[NCPoly] | None = None):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        self.alphabet = alphabet
        self.order = order
        zero = NCPoly.zero(alphabet)
        built = [zero] * (order + 1)
        if parts is not None:
            if len(parts) > order + 1:
                raise ValueError("more components than the truncation order allows")
            for d, p in enumerate(parts):
                if p.alphabet != alphabet:
                    raise ValueError("alphabet mismatch in series component")
                if p and (not p.is_homogeneous() or p.max_degree() != d):
                    raise ValueError(f"component {d} is not homogeneous of degree {d}")
                built[d] = p
        self.parts = tuple(built)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, alphabet: Alphabet, order: int) -> "GradedSeries":
        return cls(alphabet, order)

    @classmethod
    def one(cls, alphabet: Alphabet, order: int) -> "GradedSeries":
        return cls.from_poly(NCPoly.unit(alphabet), order)

    @classmethod
    def from_poly(cls, p: NCPoly, order: int) -> "GradedSeries":
        """Split a polynomial into homogeneous components, discarding degrees > order."""
        parts = [p.homogeneous_component(d) for d in range(order + 1)]
        return cls(p.alphabet, order, parts)

    @classmethod
    def generator(cls, alphabet: Alphabet, symbol: str, order: int) -> "GradedSeries":
        return cls.from_poly(NCPoly.letter(alphabet, symbol), order)

    # -- protocol --------------------------------------------------------------

    def component(self, degree: int) -> NCPoly:
        if degree > self.order:
            raise ValueError(f"degree {degree} above truncation order {self.order}")
        return self.parts[degree]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.order == other.order
            and self.parts == other.parts
        )

    def __bool__(self) -> bool:
        return any(self.parts)

    def __repr__(self) -> str:
        return f"GradedSeries(order={self.order}, {to_text(self.to_poly())!r})"

    def _check_compatible(self, other: "GradedSeries") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch between series")
        if self.order != other.order:
            raise ValueError("truncation order mismatch between series")

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._check_compatible(other)
        return GradedSeries(
            self.alphabet, self.order, [a + b for a, b in zip(self.parts, other.parts)]
        )

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        self._check_compatible(other)
        return GradedSeries(
            self.alphabet, self.order, [a - b for a, b in zip(self.parts, other.parts)]
        )

    def __neg__(self) -> "GradedSeries":
        return GradedSeries(self.alphabet, self.order, [-p for p in self.parts])

    def scaled(self, scalar) -> "GradedSeries":
        return GradedSeries(self.alphabet, self.order, [p.scaled(scalar) for p in self.parts])

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            return self.scaled(other)
        self._check_compatible(other)
        parts = [NCPoly.zero(self.alphabet) for _ in range(self.order + 1)]
        for a, pa in enumerate(self.parts):
            if not pa:
                continue
            for b in range(self.order + 1 - a):
                pb = other.parts[b]
                if pb:
                    parts[a + b] = parts[a + b] + concat(pa, pb)
        return GradedSeries(self.alphabet, self.order, parts)

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    # -- operations --------------------------------------------------------------

    def truncate(self, order: int) -> "GradedSeries":
        """Discard all components above ``order`` (or zero-pad up to it)."""
        keep = min(order, self.order)
        return GradedSeries(self.alphabet, order, list(self.parts[: keep + 1]))

    def substitute(self, images: Mapping[str, str]) -> "GradedSeries":
        return GradedSeries(
            self.alphabet, self.order, [substitute(p, images) for p in self.parts]
        )

    def map_components(self, fn: Callable[[NCPoly], NCPoly]) -> "GradedSeries":
        return GradedSeries(self.alphabet, self.order, [fn(p) for p in self.parts])

    def to_poly(self) -> NCPoly:
        total = NCPoly.zero(self.alphabet)
        for p in self.parts:
            total = total + p
        return total

    def is_zero(self) -> bool:
        return not any(self.parts)

    def first_nonzero(self) -> tuple[int, Word, Fraction] | None:
        """Lowest (degree, word, coefficient) present, or None if zero."""
        for d, p in enumerate(self.parts):
            if p:
                word, coeff = p.sorted_terms()[0]
                return d, word, coeff
        return None

    def iter_terms(self) -> Iterator[tuple[int, Word, Fraction]]:
        for d, p in enumerate(self.parts):
            for word, coeff in p.sorted_terms():
                yield d, word, coeff


def series_exp(s: GradedSeries) -> GradedSeries:
    """Truncated exponential; requires a vanishing constant component."""
    if s.parts[0]:
        raise ValueError("series_exp requires component 0 to vanish")
    out = GradedSeries.one(s.alphabet, s.order)
    power = GradedSeries.one(s.alphabet, s.order)
    fact = 1
    for k in range(1, s.order + 1):
        power = power * s
        fact *= k
        out = out + power.scaled(Fraction(1, fact))
        if power.is_zero():
            break
    return out


def series_log(s: GradedSeries) -> GradedSeries:
    """Truncated logarithm; requires constant component equal to 1."""
    if s.parts[0] != NCPoly.unit(s.alphabet):
        raise ValueError("series_log requires component 0 equal to 1")
    u = s - GradedSeries.one(s.alphabet, s.order)
    out = GradedSeries.zero(s.alphabet, s.order)
    power = GradedSeries.one(s.alphabet, s.order)
    for k in range(1, s.order + 1):
        power = power * u
        out = out + power.scaled(Fraction((-1) ** (k - 1), k))
        if power.is_zero():
            break
    return out
