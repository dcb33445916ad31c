"""Divisors D_i of the stable kappa classes.

The classes themselves are never modelled; everything is keyed by the index
i and reduced to number theory:

* ``d_formula``: nu_p(D_i) = 1 + nu_p(i+1) when (p-1) | (i+1), else 0.
* ``lower_bound``: 2 for even i, den(B_m/2m) for i = 2m - 1.
* ``upper_bound``: prod_p p^{nu_p(1 - (-k)^(i+1))} with k = k(p).
* ``resolve``: cross-checks the three and settles the factor of 2 at p = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Union

from .bernoulli import den_b_over_2i
from .numtheory import (
    INFINITE,
    KChoice,
    choose_k,
    is_prime,
    is_valid_k,
    multiply_back,
    primes_up_to,
    vp,
)

__all__ = [
    "DivisorReport",
    "InconsistencyError",
    "ValuationLemmaQuery",
    "adams_valuation_closed",
    "adams_valuation_direct",
    "akita_vanishes",
    "d_formula",
    "default_k_choices",
    "dz_predicates",
    "lower_bound",
    "resolve",
    "upper_bound",
]

Valuation = Union[int, float]

CITE_FORMULA = "nu_p(D_i) = 1 + nu_p(i+1) if (p-1) | (i+1), else 0"
CITE_LOWER_ODD = "lower bound for odd i = 2m-1: den(B_m/2m), from eta^*(s_{2m-1}) = (-1)^m (B_m/2m) kappa_{2m-1}"
CITE_LOWER_EVEN = "lower bound for even i: 2, from the mod 2 Wu class vanishing of kappa_i"
CITE_UPPER = "upper bound: nu_p(D_i) <= nu_p(1 - (-k)^(i+1)), (1 + k psi^{-k})^* = 1 - (-k)^(j+1) in degree 2j"
CITE_FACTOR2 = "factor of 2: nu_2(D_{2m-1}) = 1 + nu_2(2m), so D equals the lower bound"
CITE_AKITA = "kappa_i = 0 in mod p cohomology iff (p-1) | (i+1)"


class InconsistencyError(AssertionError):
    """Two independent routes to D_i disagree; always an implementation bug."""


@dataclass(frozen=True)
class ValuationLemmaQuery:
    p: int
    k: int
    s: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime")
        if self.k < 1 or self.s < 1:
            raise ValueError("k and s must be positive")
        if math.gcd(self.k, self.p) != 1:
            raise ValueError(f"gcd(k={self.k}, p={self.p}) != 1")


def adams_valuation_closed(q: ValuationLemmaQuery) -> int:
    """nu_p(1 - (-k)^s) from the closed-form table (generator choices of k only)."""
    p, k, s = q.p, q.k, q.s
    if not is_valid_k(p, k):
        raise ValueError(f"closed form needs a generator choice of k; k={k} at p={p} is not one")
    if p == 2:
        return 2 + vp(2, s) if s % 2 == 0 else 1
    return 1 + vp(p, s) if s % (p - 1) == 0 else 0


def adams_valuation_direct(q: ValuationLemmaQuery) -> Valuation:
    """nu_p of the integer 1 - (-k)^s, computed literally."""
    return vp(q.p, 1 - (-q.k) ** q.s)


def akita_vanishes(p: int, i: int) -> bool:
    """Whether kappa_i reduces to zero mod p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    if i < 1:
        raise ValueError("index must be >= 1")
    return (i + 1) % (p - 1) == 0


def d_formula(i: int) -> Dict[int, int]:
    """Factorization of D_i from the valuation formula.

    A prime contributes only if (p-1) | (i+1), which forces p <= i + 2.
    """
    if i < 1:
        raise ValueError("index must be >= 1")
    return {p: 1 + vp(p, i + 1) for p in primes_up_to(i + 2) if (i + 1) % (p - 1) == 0}


def lower_bound(i: int) -> int:
    if i < 1:
        raise ValueError("index must be >= 1")
    if i % 2 == 0:
        return 2
    return den_b_over_2i((i + 1) // 2)


def default_k_choices(i: int) -> Dict[int, KChoice]:
    return {p: choose_k(p) for p in primes_up_to(i + 2)}


def upper_bound(i: int, ks: Optional[Mapping[int, KChoice]] = None) -> int:
    """prod_p p^{nu_p(1 - (-k(p))^(i+1))} over primes p <= i + 2.

    Larger primes contribute 0 by the closed form: (p-1) does not divide i+1.
    """
    if i < 1:
        raise ValueError("index must be >= 1")
    if ks is None:
        ks = default_k_choices(i)
    out = 1
    for p in primes_up_to(i + 2):
        choice = ks.get(p)
        if choice is None:
            raise ValueError(f"no k supplied for p={p}")
        if choice.p != p or not is_valid_k(p, choice.k):
            raise ValueError(f"invalid k choice {choice} for p={p}")
        e = adams_valuation_direct(ValuationLemmaQuery(p, choice.k, i + 1))
        if e == INFINITE:
            raise InconsistencyError(f"1 - (-k)^(i+1) vanished for p={p}")
        out *= p**e
    return out


@dataclass
class DivisorReport:
    i: int
    D: Dict[int, int]
    lower_bound: int
    upper_bound: int
    k_choices: List[KChoice]
    akita: Dict[int, bool]
    citations: List[str] = field(default_factory=list)

    @property
    def parity(self) -> str:
        return "even" if self.i % 2 == 0 else "odd"

    @property
    def value(self) -> int:
        return multiply_back(self.D)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "D": {str(p): e for p, e in self.D.items()},
            "D_value": str(self.value),
            "lower": str(self.lower_bound),
            "upper": str(self.upper_bound),
            "akita": {str(p): v for p, v in self.akita.items()},
            "citations": list(self.citations),
        }


def resolve(i: int) -> DivisorReport:
    """Assemble D_i from the formula and both bounds, checking they fit together."""
    ks = default_k_choices(i)
    D = d_formula(i)
    lo = lower_bound(i)
    hi = upper_bound(i, ks)
    value = multiply_back(D)
    if value != lo:
        raise InconsistencyError(f"i={i}: formula gives {value}, lower bound {lo}")
    if i % 2 == 0:
        if hi != lo or lo != 2:
            raise InconsistencyError(f"i={i}: even bounds {lo}, {hi} should both be 2")
        citations = [CITE_LOWER_EVEN, CITE_UPPER, CITE_FORMULA]
    else:
        if hi != 2 * lo:
            raise InconsistencyError(f"i={i}: upper {hi} is not twice lower {lo}")
        if D.get(2, 0) != 1 + vp(2, i + 1):
            raise InconsistencyError(f"i={i}: nu_2(D) = {D.get(2, 0)}")
        citations = [CITE_LOWER_ODD, CITE_UPPER, CITE_FACTOR2, CITE_FORMULA]
    akita = {p: akita_vanishes(p, i) for p in primes_up_to(i + 2)}
    for p, flag in akita.items():
        if flag != (D.get(p, 0) >= 1):
            raise InconsistencyError(f"i={i}, p={p}: vanishing mod p disagrees with p | D_i")
    citations.append(CITE_AKITA)
    return DivisorReport(i, D, lo, hi, list(ks.values()), akita, citations)


def dz_predicates(p: int, i: int) -> Dict[str, bool]:
    """Whether p, resp. p^2, divides the integral divisor D_i^Z.

    Both are equivalent to the same statement for D_i, so they are read off
    the exponent of p in D_i; D_i^Z itself is not computed.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    e = d_formula(i).get(p, 0)
    return {"p_divides_DZ": e >= 1, "p2_divides_DZ": e >= 2}
