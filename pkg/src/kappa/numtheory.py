"""Exact integer helpers: valuations, primes, orders and the Adams parameter k(p).

Integers are plain Python ``int`` (arbitrary precision); rationals are
``fractions.Fraction``, which is always kept in lowest terms with a positive
denominator.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Union

__all__ = [
    "INFINITE",
    "KChoice",
    "Rational",
    "choose_k",
    "factorize",
    "is_prime",
    "multiply_back",
    "order_mod",
    "primes_up_to",
    "primes_with_pminus1_dividing",
    "valid_k_values",
    "vp",
]

Rational = Union[int, Fraction]

#: valuation of zero
INFINITE = math.inf

DEFAULT_SIEVE_BOUND = 10**6


class _Sieve:
    """Lazily grown prime sieve; once built it is only ever read."""

    def __init__(self) -> None:
        self.bound = 1
        self.flags = bytearray(2)
        self.primes: List[int] = []

    def ensure(self, bound: int) -> None:
        if bound <= self.bound:
            return
        bound = max(bound, 2 * self.bound, 1024)
        flags = bytearray([1]) * (bound + 1)
        flags[0] = flags[1] = 0
        for q in range(2, math.isqrt(bound) + 1):
            if flags[q]:
                flags[q * q :: q] = bytearray(len(range(q * q, bound + 1, q)))
        self.flags = flags
        self.primes = [q for q in range(bound + 1) if flags[q]]
        self.bound = bound


_SIEVE = _Sieve()


def primes_up_to(n: int) -> List[int]:
    """All primes ``<= n`` in ascending order."""
    if n < 2:
        return []
    _SIEVE.ensure(n)
    return _SIEVE.primes[: bisect.bisect_right(_SIEVE.primes, n)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n <= DEFAULT_SIEVE_BOUND:
        _SIEVE.ensure(n)
        return bool(_SIEVE.flags[n])
    # beyond the sieve: trial division by sieve primes (fine for n <= 10**12)
    _SIEVE.ensure(DEFAULT_SIEVE_BOUND)
    r = math.isqrt(n)
    for q in _SIEVE.primes:
        if q > r:
            return True
        if n % q == 0:
            return False
    raise ValueError(f"primality of {n} is outside the supported range")


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def vp(p: int, x: Rational) -> Union[int, float]:
    """Exponent of the prime ``p`` in the rational ``x``.

    Negative for rationals with ``p`` in the denominator; ``INFINITE`` for 0.

    >>> vp(2, -24), vp(3, Fraction(1, 12)), vp(5, 252)
    (3, -1, 0)
    """
    _require_prime(p)
    x = Fraction(x)
    if x == 0:
        return INFINITE
    return _vp_int(p, x.numerator) - _vp_int(p, x.denominator)


def _vp_int(p: int, n: int) -> int:
    n = abs(n)
    v = 0
    # strip p^(2^m) blocks so huge inputs such as 1 - 5**300 stay cheap
    while n % p == 0:
        v_block = 1
        pw = p
        while n % (pw * pw) == 0:
            pw *= pw
            v_block *= 2
        n //= pw
        v += v_block
    return v


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization of a positive integer as ``{prime: exponent}``, ascending."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n!r}")
    out: Dict[int, int] = {}
    if n == 1:
        return out
    _SIEVE.ensure(min(math.isqrt(n) + 1, DEFAULT_SIEVE_BOUND))
    for q in _SIEVE.primes:
        if q * q > n:
            break
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            out[q] = e
    else:
        if n > 1 and _SIEVE.primes[-1] ** 2 < n:
            raise ValueError("cofactor too large for trial division")
    if n > 1:
        out[n] = 1
    return out


def multiply_back(factors: Dict[int, int]) -> int:
    return math.prod(p**e for p, e in factors.items())


def _totient(m: int) -> int:
    phi = m
    for q in factorize(m):
        phi -= phi // q
    return phi


def order_mod(a: int, m: int) -> int:
    """Multiplicative order of ``a`` modulo ``m``.

    Computed by stripping prime factors off the group order phi(m).
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1")
    a %= m
    t = _totient(m)
    for q in factorize(t):
        while t % q == 0 and pow(a, t // q, m) == 1:
            t //= q
    return t


@dataclass(frozen=True)
class KChoice:
    """A prime together with the parameter k used in the self-map 1 + k psi^{-k}."""

    p: int
    k: int

    def __post_init__(self) -> None:
        _require_prime(self.p)
        if self.k < 1:
            raise ValueError("k must be positive")
        if not is_valid_k(self.p, self.k):
            raise ValueError(f"k={self.k} is not a valid choice at p={self.p}")


def is_valid_k(p: int, k: int) -> bool:
    """True when -k generates (Z/p^2)^x (odd p), or k is 5 mod 8 (p = 2)."""
    if p == 2:
        return k % 8 == 5
    m = p * p
    if k % p == 0:
        return False
    return order_mod(-k % m, m) == p * (p - 1)


@lru_cache(maxsize=None)
def choose_k(p: int) -> KChoice:
    """Smallest admissible k for ``p``; k = 5 when p = 2."""
    _require_prime(p)
    if p == 2:
        return KChoice(2, 5)
    k = 1
    while not is_valid_k(p, k):
        k += 1
    return KChoice(p, k)


def valid_k_values(p: int, count: int) -> List[int]:
    """The first ``count`` positive integers that are valid k for ``p``."""
    _require_prime(p)
    out: List[int] = []
    k = 1
    while len(out) < count:
        if is_valid_k(p, k):
            out.append(k)
        k += 1
    return out


def primes_with_pminus1_dividing(n: int) -> List[int]:
    """Primes p with (p - 1) | n, ascending. Every such p is at most n + 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            for e in {d, n // d}:
                if is_prime(e + 1):
                    out.append(e + 1)
    return sorted(out)
