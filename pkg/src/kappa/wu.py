"""Truncated power series over F_p in the Euler class e.

The total Wu class of the complement of the tautological line bundle is
(1 + e^{p-1})^{-1} for odd p and (1 + e)^{-1} for p = 2.  Series are always
indexed by powers of e, so both cases read off the coefficient of e^{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .numtheory import is_prime

__all__ = [
    "FpSeries",
    "series_inverse",
    "series_mul",
    "wu_total_inverse",
    "wu_vanishing_criterion",
]


@dataclass(frozen=True)
class FpSeries:
    p: int
    cap: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime")
        if self.cap < 0:
            raise ValueError("cap must be >= 0")
        coeffs = tuple(c % self.p for c in self.coeffs[: self.cap + 1])
        coeffs += (0,) * (self.cap + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, p: int, cap: int, coeffs: Sequence[int]) -> "FpSeries":
        return cls(p, cap, tuple(coeffs))

    @classmethod
    def one(cls, p: int, cap: int) -> "FpSeries":
        return cls(p, cap, (1,))

    def __getitem__(self, m: int) -> int:
        return self.coeffs[m]

    def __mul__(self, other: "FpSeries") -> "FpSeries":
        return series_mul(self, other)


def _check_compatible(a: FpSeries, b: FpSeries) -> None:
    if a.p != b.p:
        raise ValueError(f"mismatched primes {a.p} and {b.p}")
    if a.cap != b.cap:
        raise ValueError(f"mismatched caps {a.cap} and {b.cap}")


def series_mul(a: FpSeries, b: FpSeries) -> FpSeries:
    """Cauchy product truncated at the common cap."""
    _check_compatible(a, b)
    n, p = a.cap, a.p
    out = [0] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(n + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return FpSeries(p, n, tuple(c % p for c in out))


def series_inverse(a: FpSeries) -> FpSeries:
    """Inverse of a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("series_inverse needs constant term 1")
    p, n = a.p, a.cap
    inv = [1] + [0] * n
    for m in range(1, n + 1):
        inv[m] = -sum(a.coeffs[j] * inv[m - j] for j in range(1, m + 1)) % p
    return FpSeries(p, n, tuple(inv))


def wu_total_inverse(p: int, cap: int) -> FpSeries:
    if cap < 1:
        raise ValueError("cap must be >= 1")
    step = 1 if p == 2 else p - 1
    line = [0] * (cap + 1)
    line[0] = 1
    if step <= cap:
        line[step] = 1
    return series_inverse(FpSeries(p, cap, tuple(line)))


def wu_vanishing_criterion(p: int, i: int) -> bool:
    """True when e^{i+1} times the Thom class is hit, i.e. kappa_i = 0 mod p."""
    if i < 1:
        raise ValueError("index must be >= 1")
    return wu_total_inverse(p, i + 1)[i + 1] != 0
