"""Exact scalar arithmetic: rationals, Bernoulli numbers, and small number theory.

All coefficients in this package are exact rationals.  ``Rational`` is an
alias for :class:`fractions.Fraction`, which already guarantees the canonical
form we rely on everywhere (lowest terms, positive denominator, zero stored
as 0/1), so polynomial equality reduces to term-by-term comparison.

Bernoulli numbers follow the generating function t/(e^t - 1), i.e. B1 = -1/2.
This is the convention under which the operator series Ber(x) = sum_k B_k
ad(x)^k / k! is a two-sided inverse of E(x) = exp(ad x) - 1 up to ad(x); that
identity is what the test suite uses to pin the sign convention.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

Rational = Fraction

_bernoulli_values: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, convention t/(e^t - 1) (so bernoulli(1) == -1/2).

    Computed by the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1,
    with the whole prefix cached.
    """
    if k < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if k >= len(_bernoulli_values):
        with _bernoulli_lock:
            values = list(_bernoulli_values)
            for m in range(len(values), k + 1):
                acc = sum(
                    Fraction(math.comb(m + 1, j)) * values[j] for j in range(m)
                )
                values.append(-acc / (m + 1))
            _bernoulli_values[:] = values
    return _bernoulli_values[k]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) out of range")
    return math.comb(n, k)


def moebius(n: int) -> int:
    """Moebius function mu(n), by trial-division factorisation."""
    if n < 1:
        raise ValueError("moebius requires n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" (optional sign) into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as "a/b", or "a" when the denominator is 1."""
    return str(value)
