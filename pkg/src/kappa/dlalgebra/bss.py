"""Low-degree Bockstein spectral sequence checks for Omega^oo_0 CP^oo_{-1} at p = 2.

The named classes below are the F_2-basis of H_*(Omega^oo_0 CP^oo_{-1}; F_2)
in positive degrees < 5, written inside H_*(Q(CP^oo_+); F_2).  d^2 is not
implemented as an operator: the known value of d^2 y_4 is taken as input and
only its consequences modulo im d^1 are checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from . import gf2
from .bockstein import Coefficient, bockstein_d1, is_d1_boundary, nishida_coefficient
from .core import DEFAULT_CAP, ZERO, DLElement, a, enumerate_basis, parse_element
from .hopf import is_primitive

__all__ = [
    "BSSReport",
    "D2_Y4_TERMS",
    "REMAINDER",
    "bss_report",
    "convolve_selfmap",
    "named_classes",
    "verify_d2_identity",
]

X3_TERMS = (
    "Q^3[a0]*a0^-2",
    "Q^2Q^1[a0]*a0^-4",
    "Q^2[a0]*Q^1[a0]*a0^-4",
    "(Q^1[a0])^3*a0^-6",
)
# d^2 y_4 as displayed: x_3 plus two correction terms
D2_Y4_TERMS = X3_TERMS + ("Q^3[a0]*a0^-2", "(Q^1[a0])^3*a0^-6")
REMAINDER = "Q^3[a0]*a0^-2 + (Q^1[a0])^3*a0^-6"

# ranks of the torsion-free homology in degrees 2, 3, 4 (same as BU)
FREE_RANKS = {2: 1, 3: 0, 4: 2}


def _sum(terms: Sequence[str]) -> DLElement:
    out = ZERO
    for t in terms:
        out = out + parse_element(t)
    return out


def named_classes() -> Dict[str, DLElement]:
    x2 = parse_element("(Q^1[a0])^2*a0^-4")
    return {
        "x2": x2,
        "x3": _sum(X3_TERMS),
        "x4": parse_element("a1^2*a0^-2"),
        "y4": parse_element("(Q^2[a0])^2*a0^-4"),
        "x2^2": x2 * x2,
    }


def verify_d2_identity(
    terms: Sequence[str] = D2_Y4_TERMS,
    x3: Optional[DLElement] = None,
    cap: int = DEFAULT_CAP,
    coefficient: Coefficient = nishida_coefficient,
) -> bool:
    """Check that the given value of d^2 y_4 is x_3 in E^2.

    It must be a d^1-cycle, differ from x_3 by a d^1-boundary, and x_3 must
    not itself be a boundary (otherwise the differential would be zero).
    """
    if x3 is None:
        x3 = _sum(X3_TERMS)
    datum = _sum(terms)
    if bockstein_d1(datum, coefficient) or bockstein_d1(x3, coefficient):
        return False
    if not is_d1_boundary(datum + x3, cap, coefficient).is_boundary:
        return False
    return not is_d1_boundary(x3, cap, coefficient).is_boundary


def convolve_selfmap(j: int, scalars: Sequence[int], component0: bool = True) -> DLElement:
    """(f + g)_* a_j = sum_{s+t=j} f_*(a_s) g_*(a_t) with f = inclusion, g_* a_t = scalars[t] a_t."""
    if len(scalars) != j + 1:
        raise ValueError(f"need {j + 1} scalars, got {len(scalars)}")
    out = ZERO
    for t in range(j + 1):
        if scalars[t] % 2:
            out = out + a(j - t) * a(t)
    return out.translate(-2) if component0 else out


@dataclass
class BSSReport:
    cap: int
    basis_sizes: Dict[str, int]
    cycles: Dict[str, bool]
    boundaries: List[dict]
    primitive: Dict[str, bool]
    independent: bool
    d2_identity: bool
    free_ranks: Dict[int, int] = field(default_factory=lambda: dict(FREE_RANKS))

    @property
    def flags(self) -> Dict[str, bool]:
        squaring = self.primitive["x4"] and self.primitive["x2^2"]
        return {
            "h3_two_torsion_is_Z4": self.d2_identity,
            "squaring_map_not_injective": squaring,
            "not_polynomial": squaring,
        }

    def to_json(self) -> dict:
        return {
            "basis_sizes": dict(self.basis_sizes),
            "cycles": dict(self.cycles),
            "boundaries": list(self.boundaries),
            "primitive": dict(self.primitive),
            "independent": self.independent,
            "free_ranks": {str(d): r for d, r in self.free_ranks.items()},
            "flags": self.flags,
        }


def _independent(elements: Sequence[DLElement]) -> bool:
    index: Dict = {}
    cols = []
    for x in elements:
        v = 0
        for m in x.monomials:
            v |= 1 << index.setdefault(m, len(index))
        cols.append(v)
    return gf2.rank(cols) == len(cols)


def bss_report(cap: int = DEFAULT_CAP, coefficient: Coefficient = nishida_coefficient) -> BSSReport:
    if cap < 5:
        raise ValueError("cap must be at least 5")
    classes = named_classes()
    sizes = {f"{d},0": len(enumerate_basis(d, 0, cap)) for d in range(cap + 1)}
    cycles = {name: not bockstein_d1(x, coefficient) for name, x in classes.items()}
    boundaries = []
    for x in (parse_element(REMAINDER), classes["x3"]):
        res = is_d1_boundary(x, cap, coefficient)
        if res.is_boundary and bockstein_d1(res.witness, coefficient) != x:
            raise AssertionError(f"witness for {x} does not verify")
        boundaries.append(
            {
                "element": str(x),
                "is_boundary": res.is_boundary,
                "witness": None if res.witness is None else str(res.witness),
            }
        )
    primitive = {name: is_primitive(x) for name, x in classes.items()}
    return BSSReport(
        cap=cap,
        basis_sizes=sizes,
        cycles=cycles,
        boundaries=boundaries,
        primitive=primitive,
        independent=_independent(list(classes.values())),
        d2_identity=verify_d2_identity(cap=cap, coefficient=coefficient),
    )
