"""Desk-scale model of H_*(Q(CP^oo_+); F_2) with its Hopf and Bockstein structure."""

from .bockstein import BoundaryResult, bockstein_d1, is_d1_boundary, nishida_coefficient
from .bss import BSSReport, bss_report, convolve_selfmap, named_classes, verify_d2_identity
from .core import (
    ONE,
    ZERO,
    DLElement,
    DLGenerator,
    DLMonomial,
    a,
    enumerate_basis,
    excess,
    generators_up_to,
    is_admissible,
    parse_element,
    q_op,
)
from .hopf import coproduct, counit, is_primitive, reduced_coproduct, tensor

__all__ = [
    "BSSReport",
    "BoundaryResult",
    "DLElement",
    "DLGenerator",
    "DLMonomial",
    "ONE",
    "ZERO",
    "a",
    "bockstein_d1",
    "bss_report",
    "convolve_selfmap",
    "coproduct",
    "counit",
    "enumerate_basis",
    "excess",
    "generators_up_to",
    "is_admissible",
    "is_d1_boundary",
    "is_primitive",
    "nishida_coefficient",
    "named_classes",
    "parse_element",
    "q_op",
    "reduced_coproduct",
    "tensor",
    "verify_d2_identity",
]
