"""Self-checks behind ``kappa verify``.

Each check is a named zero-argument predicate together with the statement it
confirms.  Suites are plain lists so the CLI and tests can run them alike.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, TextIO

from .bernoulli import (
    bernoulli_akiyama_tanigawa,
    bernoulli_recurrence,
    den_b_over_2i,
    vsc_denominator,
)
from .divisor import (
    ValuationLemmaQuery,
    adams_valuation_closed,
    adams_valuation_direct,
    akita_vanishes,
    d_formula,
    lower_bound,
    resolve,
    upper_bound,
)
from .dlalgebra import (
    ZERO,
    bockstein_d1,
    bss_report,
    convolve_selfmap,
    enumerate_basis,
    is_d1_boundary,
    is_primitive,
    named_classes,
    parse_element,
    verify_d2_identity,
)
from .dlalgebra.core import DLElement
from .numtheory import choose_k, multiply_back, primes_up_to, valid_k_values, vp
from .wu import wu_vanishing_criterion

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    id: str
    citation: str
    run: Callable[[], bool]


def _golden_divisors() -> bool:
    golden = {1: 12, 3: 120, 5: 252}
    if any(resolve(i).value != v for i, v in golden.items()):
        return False
    return all(resolve(2 * i).value == 2 for i in range(1, 51))


def _main_equality() -> bool:
    return all(multiply_back(d_formula(2 * i - 1)) == den_b_over_2i(i) for i in range(1, 101))


def _bound_shape() -> bool:
    for i in range(1, 101):
        lo, hi = lower_bound(i), upper_bound(i)
        if hi != (lo if i % 2 == 0 else 2 * lo):
            return False
        rep = resolve(i)
        if rep.value != lo:
            return False
        if i % 2 and rep.D.get(2, 0) != 1 + vp(2, i + 1):
            return False
    return True


def _adams_closed_vs_direct() -> bool:
    for p in primes_up_to(100):
        k = choose_k(p).k
        for s in range(1, 301):
            q = ValuationLemmaQuery(p, k, s)
            if adams_valuation_closed(q) != adams_valuation_direct(q):
                return False
    return True


def _adams_generator_invariance() -> bool:
    for p in primes_up_to(50)[1:]:
        ks = valid_k_values(p, 3)
        for s in range(1, 301):
            vals = {adams_valuation_direct(ValuationLemmaQuery(p, k, s)) for k in ks}
            if len(vals) != 1:
                return False
    return True


def _akita_two_ways() -> bool:
    formulas = {i: d_formula(i) for i in range(1, 201)}
    for p in primes_up_to(50):
        for i in range(1, 201):
            a = akita_vanishes(p, i)
            if a != wu_vanishing_criterion(p, i) or a != (p in formulas[i]):
                return False
    return True


def _bernoulli_algorithms() -> bool:
    return bernoulli_recurrence(480) == bernoulli_akiyama_tanigawa(480)


def _von_staudt_clausen() -> bool:
    values = bernoulli_recurrence(480)
    return all(values[2 * i].denominator == vsc_denominator(i) for i in range(1, 241))


def _survive_to_e2() -> bool:
    c = named_classes()
    return all(not bockstein_d1(c[n]) for n in ("x2", "x3", "x4", "y4"))


def _remainder_is_boundary() -> bool:
    x = parse_element("Q^3[a0]*a0^-2 + (Q^1[a0])^3*a0^-6")
    res = is_d1_boundary(x)
    return res.is_boundary and bockstein_d1(res.witness) == x


def _x3_not_boundary() -> bool:
    return not is_d1_boundary(named_classes()["x3"]).is_boundary


def _primitives() -> bool:
    c = named_classes()
    return is_primitive(c["x4"]) and is_primitive(c["x2^2"])


def _bss_flags() -> bool:
    return all(bss_report(6).flags.values())


def _d1_squared() -> bool:
    for d in range(7):
        for m in enumerate_basis(d):
            if bockstein_d1(bockstein_d1(DLElement.of(m))):
                return False
    return True


def _convolution() -> bool:
    odd = all(convolve_selfmap(j, [1] * (j + 1)) == ZERO for j in range(1, 10, 2))
    even = all(convolve_selfmap(j, [1] * (j + 1)) != ZERO for j in (2, 4, 6))
    return odd and even


SUITES: Dict[str, List[Check]] = {
    "divisor": [
        Check("divisor.golden", "D_1 = 2^2*3, D_3 = 2^3*3*5, D_5 = 2^2*3^2*7, D_2i = 2", _golden_divisors),
        Check("divisor.main_equality", "prod p^(1+nu_p(2i)) over (p-1)|2i equals den(B_i/2i)", _main_equality),
        Check("divisor.bound_shape", "upper/lower = 1 (even i), 2 (odd i); nu_2(D_2i-1) = 1+nu_2(2i)", _bound_shape),
        Check("divisor.adams_closed", "nu_p(1-(-k)^s) closed form equals direct valuation", _adams_closed_vs_direct),
        Check("divisor.adams_invariance", "nu_p(1-(-k)^s) does not depend on the generator k", _adams_generator_invariance),
    ],
    "akita": [
        Check("akita.two_ways", "kappa_i = 0 mod p iff (p-1)|(i+1) iff p | D_i", _akita_two_ways),
    ],
    "wu": [
        Check("wu.criterion", "coefficient of e^(i+1) in (1+e^(p-1))^-1 is nonzero iff (p-1)|(i+1)", _akita_two_ways),
        Check("wu.convolution", "(1 + 5 psi^-5)_* a_j = 0 mod 2 for odd j", _convolution),
    ],
    "bernoulli": [
        Check("bernoulli.algorithms", "recurrence and Akiyama-Tanigawa agree for n <= 480", _bernoulli_algorithms),
        Check("bernoulli.vsc", "den(B_2i) = prod of primes p with (p-1)|2i", _von_staudt_clausen),
    ],
    "bss": [
        Check("bss.e2_survivors", "d1 x2 = d1 x3 = d1 x4 = d1 y4 = 0", _survive_to_e2),
        Check("bss.remainder_boundary", "Q^3a0 a0^-2 + (Q^1a0)^3 a0^-6 lies in im d1", _remainder_is_boundary),
        Check("bss.x3_not_boundary", "x3 is not in im d1", _x3_not_boundary),
        Check("bss.d2_identity", "d2 y4 = x3 in E^2", verify_d2_identity),
        Check("bss.primitives", "x2^2 and x4 are primitive", _primitives),
        Check("bss.flags", "H_3 two-torsion Z/4; squaring not injective; not polynomial", _bss_flags),
        Check("bss.d1_squared", "d1 o d1 = 0 through degree 6", _d1_squared),
    ],
}


def run_suite(name: str, out: TextIO) -> bool:
    """Run one suite (or ``all``), writing one line per check; True if all pass."""
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(name)
    ok = True
    for n in names:
        for check in SUITES[n]:
            try:
                passed = bool(check.run())
            except Exception:  # a crash is a failure, not a usage error
                log.exception("check %s raised", check.id)
                passed = False
            ok &= passed
            out.write(f"{'PASS' if passed else 'FAIL'}  {check.id}  {check.citation}\n")
    return ok
