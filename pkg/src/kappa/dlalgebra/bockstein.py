"""The first Bockstein d^1 and d^1-boundary tests.

d^1 is a derivation with d^1 a_j = 0 and, at p = 2,
d^1 Q^s y = (s - 1) Q^{s-1} y, normalized by instability.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Optional

from . import gf2
from .core import DEFAULT_CAP, ZERO, DLElement, DLGenerator, DLMonomial, a, enumerate_basis, gen, q_op

__all__ = ["BoundaryResult", "bockstein_d1", "is_d1_boundary", "nishida_coefficient"]


def nishida_coefficient(s: int) -> int:
    return (s - 1) & 1


Coefficient = Callable[[int], int]


@lru_cache(maxsize=None)
def _d1_generator(g: DLGenerator, coefficient: Coefficient) -> DLElement:
    if not g.word or not coefficient(g.word[0]) & 1:
        return ZERO
    rest = g.word[1:]
    inner = gen(DLGenerator(rest, g.j)) if rest or g.j else a(0)
    return q_op(g.word[0] - 1, inner)


@lru_cache(maxsize=None)
def _d1_monomial(m: DLMonomial, coefficient: Coefficient) -> DLElement:
    out = ZERO
    fs = m.factors
    for idx, g in enumerate(fs):
        dg = _d1_generator(g, coefficient)
        if dg:
            others = DLElement.of(DLMonomial(fs[:idx] + fs[idx + 1 :], m.translation))
            out = out + dg * others
    return out


def bockstein_d1(x: DLElement, coefficient: Coefficient = nishida_coefficient) -> DLElement:
    """d^1 of a homogeneous element.

    ``coefficient(s)`` gives the parity multiplying Q^{s-1} in d^1 Q^s; it
    exists so mutation tests can swap in a wrong rule.
    """
    x.degree
    out = ZERO
    for m in x.monomials:
        out = out + _d1_monomial(m, coefficient)
    return out


@dataclass(frozen=True)
class BoundaryResult:
    is_boundary: bool
    witness: Optional[DLElement]


def is_d1_boundary(
    x: DLElement,
    cap: int = DEFAULT_CAP,
    coefficient: Coefficient = nishida_coefficient,
) -> BoundaryResult:
    """Solve d^1 w = x over the monomial basis one degree up."""
    if not x:
        return BoundaryResult(True, ZERO)
    d = x.degree
    if x.component != 0:
        raise ValueError("boundary tests are done in component 0")
    if d + 1 > cap:
        raise ValueError(f"degree {d} needs basis degree {d + 1} > cap {cap}")
    target_basis = enumerate_basis(d, 0, cap)
    index: Dict[DLMonomial, int] = {m: i for i, m in enumerate(target_basis)}
    source_basis = enumerate_basis(d + 1, 0, cap)

    def vector(y: DLElement) -> int:
        v = 0
        for m in y.monomials:
            if m not in index:
                raise AssertionError(f"{m} is not in the degree-{d} basis")
            v |= 1 << index[m]
        return v

    columns = [vector(bockstein_d1(DLElement.of(w), coefficient)) for w in source_basis]
    combo = gf2.solve(columns, vector(x))
    if combo is None:
        return BoundaryResult(False, None)
    witness = DLElement(w for i, w in enumerate(source_basis) if combo >> i & 1)
    return BoundaryResult(True, witness)
