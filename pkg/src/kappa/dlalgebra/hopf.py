"""Coproduct, counit and primitivity.

psi(a_j) = sum_{u+v=j} a_u (x) a_v, a_0 is grouplike, psi is multiplicative,
and psi(Q^s y) = sum_{s'+s''=s} Q^{s'} y' (x) Q^{s''} y'' (Cartan).
Tensors are F_2 sets of monomial tuples, so the same type serves for
the double and triple tensor powers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet, Iterable, Tuple

from .core import ONE, DLElement, DLGenerator, DLMonomial, a, q_op

__all__ = [
    "Tensor",
    "coproduct",
    "counit",
    "is_primitive",
    "reduced_coproduct",
    "tensor",
    "tensor_power_coassoc",
]

Tensor = FrozenSet[Tuple[DLMonomial, ...]]


def _xor(terms: Iterable[Tuple[DLMonomial, ...]]) -> Tensor:
    acc: set = set()
    for t in terms:
        acc ^= {t}
    return frozenset(acc)


def tensor(*elements: DLElement) -> Tensor:
    """x_1 (x) ... (x) x_n expanded over monomials."""
    out = [()]
    for x in elements:
        out = [t + (m,) for t in out for m in x.monomials]
    return _xor(out)


def _tensor_mul(u: Tensor, v: Tensor) -> Tensor:
    return _xor(tuple(x * y for x, y in zip(s, t)) for s in u for t in v)


def _tensor_add(u: Tensor, v: Tensor) -> Tensor:
    return u.symmetric_difference(v)


def _a_monomial(j: int) -> DLMonomial:
    (m,) = a(j).monomials
    return m


@lru_cache(maxsize=None)
def _coproduct_generator(g: DLGenerator) -> Tensor:
    if not g.word:
        return _xor((_a_monomial(u), _a_monomial(g.j - u)) for u in range(g.j + 1))
    s, rest = g.word[0], g.word[1:]
    inner = DLGenerator(rest, g.j) if rest or g.j else None
    inner_psi = _coproduct_generator(inner) if inner is not None else tensor(a(0), a(0))
    out: Tensor = frozenset()
    for left, right in inner_psi:
        for s1 in range(s + 1):
            ql = q_op(s1, DLElement.of(left))
            if not ql:
                continue
            qr = q_op(s - s1, DLElement.of(right))
            if qr:
                out = _tensor_add(out, tensor(ql, qr))
    return out


@lru_cache(maxsize=None)
def _coproduct_monomial(m: DLMonomial) -> Tensor:
    t = m.translation
    out: Tensor = frozenset({(DLMonomial((), t), DLMonomial((), t))})
    for g in m.factors:
        out = _tensor_mul(out, _coproduct_generator(g))
    return out


def coproduct(x: DLElement) -> Tensor:
    out: Tensor = frozenset()
    for m in x.monomials:
        out = _tensor_add(out, _coproduct_monomial(m))
    return out


def counit(x: DLElement) -> int:
    """Sum of the coefficients of the degree-0 monomials (a_0^t is grouplike)."""
    return sum(1 for m in x.monomials if m.degree == 0) & 1


def reduced_coproduct(x: DLElement) -> Tensor:
    """psi(x) - x (x) 1 - 1 (x) x for x in component 0."""
    if x and x.component != 0:
        raise ValueError("reduced coproduct is taken in component 0")
    return coproduct(x) ^ tensor(x, ONE) ^ tensor(ONE, x)


def is_primitive(x: DLElement) -> bool:
    x.degree  # homogeneity check
    return not reduced_coproduct(x)


def tensor_power_coassoc(x: DLElement) -> Tuple[Tensor, Tensor]:
    """((psi (x) 1) psi x, (1 (x) psi) psi x) as triple tensors."""
    psi = coproduct(x)
    left = frozenset()
    right = frozenset()
    for u, v in psi:
        left = _tensor_add(left, frozenset(t + (v,) for t in _coproduct_monomial(u)))
        right = _tensor_add(right, frozenset((u,) + t for t in _coproduct_monomial(v)))
    return left, right
