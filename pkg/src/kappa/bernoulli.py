"""Exact Bernoulli numbers and the denominators den(B_i / 2i).

Two indexing conventions appear here.  ``bernoulli_std(n)`` is the usual
B_n from t/(e^t - 1) = sum B_n t^n / n!  (so B_1 = -1/2).  The divisor
formulas use B_i := |B_{2i}|, which gives den(B_1/2) = 12,
den(B_2/4) = 120, den(B_3/6) = 252.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .numtheory import primes_with_pminus1_dividing

__all__ = [
    "BernoulliValue",
    "bernoulli_akiyama_tanigawa",
    "bernoulli_paper",
    "bernoulli_recurrence",
    "bernoulli_std",
    "den_b_over_2i",
    "vsc_denominator",
]


class _Table:
    """Growing list of B_0..B_n; writers only ever append identical values."""

    def __init__(self) -> None:
        self.values: List[Fraction] = [Fraction(1)]
        self.lock = threading.Lock()

    def extend_to(self, n: int) -> None:
        with self.lock:
            values = self.values
            for m in range(len(values), n + 1):
                if m >= 3 and m % 2:
                    values.append(Fraction(0))
                    continue
                s = sum(math.comb(m + 1, j) * values[j] for j in range(m) if values[j])
                values.append(-s / (m + 1))


_RECURRENCE = _Table()


def bernoulli_recurrence(n: int) -> List[Fraction]:
    """B_0..B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0, memoized."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _RECURRENCE.extend_to(n)
    return _RECURRENCE.values[: n + 1]


def bernoulli_akiyama_tanigawa(n: int) -> List[Fraction]:
    """B_0..B_n from the Akiyama-Tanigawa triangle.

    The triangle yields B_1 = +1/2; the sign is flipped so the output matches
    ``bernoulli_recurrence``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [Fraction(0)] * (n + 1)
    out: List[Fraction] = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def bernoulli_std(n: int) -> Fraction:
    """Standard B_n (B_1 = -1/2, odd n >= 3 give 0)."""
    return bernoulli_recurrence(n)[n]


@dataclass(frozen=True)
class BernoulliValue:
    index: int
    paper_value: Fraction
    std_value: Fraction


def bernoulli_paper(i: int) -> BernoulliValue:
    """B_i = |B_{2i}| for i >= 1."""
    if i < 1:
        raise ValueError("index must be >= 1")
    std = bernoulli_std(2 * i)
    return BernoulliValue(i, abs(std), std)


def vsc_denominator(i: int) -> int:
    """Product of the primes p with (p - 1) | 2i (von Staudt-Clausen)."""
    if i < 1:
        raise ValueError("index must be >= 1")
    return math.prod(primes_with_pminus1_dividing(2 * i))


def den_b_over_2i(i: int) -> int:
    """Denominator of B_i / 2i in lowest terms."""
    return (bernoulli_paper(i).paper_value / (2 * i)).denominator
