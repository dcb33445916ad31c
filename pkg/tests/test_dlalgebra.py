import itertools
import json

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kappa.dlalgebra import (
    ONE,
    ZERO,
    DLElement,
    DLGenerator,
    DLMonomial,
    a,
    bockstein_d1,
    bss_report,
    convolve_selfmap,
    coproduct,
    counit,
    enumerate_basis,
    excess,
    generators_up_to,
    is_admissible,
    is_d1_boundary,
    is_primitive,
    named_classes,
    parse_element,
    q_op,
    tensor,
    verify_d2_identity,
)
from kappa.dlalgebra.bss import D2_Y4_TERMS, REMAINDER, X3_TERMS
from kappa.dlalgebra.core import adem_coefficient, gen
from kappa.dlalgebra.hopf import tensor_power_coassoc

P = parse_element

BSS_SCHEMA = {
    "type": "object",
    "required": ["basis_sizes", "cycles", "boundaries", "primitive", "flags"],
    "properties": {
        "basis_sizes": {"type": "object", "additionalProperties": {"type": "integer"}},
        "cycles": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "boundaries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["element", "witness"],
                "properties": {"element": {"type": "string"}, "witness": {"type": ["string", "null"]}},
            },
        },
        "primitive": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "flags": {
            "type": "object",
            "required": ["h3_two_torsion_is_Z4", "squaring_map_not_injective", "not_polynomial"],
            "additionalProperties": {"type": "boolean"},
        },
    },
}


# -- brute-force basis oracle ------------------------------------------------


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def brute_generators(cap):
    out = []
    for j in range(cap // 2 + 1):
        for total in range(cap - 2 * j + 1):
            for word in compositions(total):
                if (word, j) == ((), 0):
                    continue
                adm = all(word[m] <= 2 * word[m + 1] for m in range(len(word) - 1))
                if adm and (not word or word[0] - sum(word[1:]) > 2 * j):
                    out.append((word, j))
    return out


def brute_basis(d, c=0):
    gens = [(w, j) for w, j in brute_generators(d) if 2 * j + sum(w) <= d]
    found = set()
    for r in range(d + 1):
        for combo in itertools.combinations_with_replacement(gens, r):
            if sum(2 * j + sum(w) for w, j in combo) == d:
                comp = sum(2 ** len(w) for w, _ in combo)
                found.add((tuple(sorted(combo)), c - comp))
    return found


def as_raw(m: DLMonomial):
    return (tuple(sorted((g.word, g.j) for g in m.factors)), m.translation)


@pytest.mark.parametrize("d", range(7))
def test_basis_matches_brute_force(d):
    assert {as_raw(m) for m in enumerate_basis(d)} == brute_basis(d)


@pytest.mark.parametrize("c", [-3, 0, 5])
def test_basis_other_components(c):
    basis = enumerate_basis(4, c)
    assert {as_raw(m) for m in basis} == brute_basis(4, c)
    assert all(m.component == c for m in basis)


def test_basis_examples():
    assert enumerate_basis(0) == [DLMonomial()]
    assert {str(m) for m in enumerate_basis(2)} == {"(Q^1[a0])^2*a0^-4", "Q^2[a0]*a0^-2", "a1*a0^-1"}
    assert {str(m) for m in enumerate_basis(3)} == {
        "Q^3[a0]*a0^-2",
        "Q^2Q^1[a0]*a0^-4",
        "Q^1[a0]*Q^2[a0]*a0^-4",
        "(Q^1[a0])^3*a0^-6",
        "Q^1[a0]*a1*a0^-3",
    }


def test_basis_deterministic_and_capped():
    assert enumerate_basis(5) == enumerate_basis(5)
    with pytest.raises(ValueError):
        enumerate_basis(7)
    with pytest.raises(ValueError):
        enumerate_basis(-1)


def test_generator_invariants():
    for g in generators_up_to(8):
        assert is_admissible(g.word)
        assert excess(g.word) > 2 * g.j
        assert g.degree == 2 * g.j + sum(g.word)
        assert g.component == 2 ** len(g.word)
    assert excess(()) == float("inf")
    with pytest.raises(ValueError):
        DLGenerator((1, 1), 0)  # excess 0: that is the square (Q^1 a_0)^2
    with pytest.raises(ValueError):
        DLGenerator((3, 1), 0)  # inadmissible


# -- products, operations -----------------------------------------------------


def test_product_examples():
    x = P("Q^2[a0]*a0^-2")
    assert x * ONE == x
    assert P("Q^1[a0]*a0^-2") * P("Q^1[a0]*a0^-2") == P("(Q^1[a0])^2*a0^-4")
    assert x + x == ZERO


def test_elements_stay_in_one_component():
    with pytest.raises(ValueError):
        a(1) + a(2, 1)


def test_instability():
    for g in generators_up_to(5):
        y = gen(g)
        for s in range(g.degree):
            assert q_op(s, y) == ZERO
        assert q_op(g.degree, y) == y * y


def test_q_on_a0():
    assert q_op(0, a(0)) == a(0) * a(0)
    assert q_op(1, a(0)) == gen(DLGenerator((1,), 0))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_adem_q2s_plus_1_qs_vanishes(s):
    assert q_op(2 * s + 1, q_op(s, a(0))) == ZERO


def test_adem_example():
    assert adem_coefficient(4, 1, 2) == 1
    assert P("Q^4Q^1[a0]") == P("Q^3Q^2[a0]")


def test_q_cartan_on_squares():
    x = P("Q^1[a0]")
    for s in range(0, 7):
        expected = q_op(s // 2, x) ** 2 if s % 2 == 0 else ZERO
        assert q_op(s, x * x) == expected


def test_parse_render_round_trip():
    for d in range(7):
        for m in enumerate_basis(d):
            x = DLElement.of(m)
            assert P(str(x)) == x
    assert str(ZERO) == "0" and P("0") == ZERO and str(ONE) == "1"


# -- coproduct ------------------------------------------------------------------


def test_coproduct_examples():
    x = P("a1*a0^-1")
    assert coproduct(x) == tensor(x, ONE) ^ tensor(ONE, x)
    assert is_primitive(P("Q^1[a0]*a0^-2"))
    assert is_primitive(P("a1^2*a0^-2"))
    assert not is_primitive(P("a2*a0^-1"))
    cross = tensor(P("a1*a0^-1"), P("a1*a0^-1"))
    assert cross <= coproduct(P("a2*a0^-1"))


def test_coproduct_of_a_j():
    psi = coproduct(a(3))
    assert psi == frozenset().union(*(tensor(a(u), a(3 - u)) for u in range(4)))


def basis_upto(d, c=0):
    return [DLElement.of(m) for k in range(d + 1) for m in enumerate_basis(k, c)]


@pytest.mark.parametrize("x", basis_upto(4), ids=str)
def test_coassociative_counital_cocommutative(x):
    left, right = tensor_power_coassoc(x)
    assert left == right
    psi = coproduct(x)
    assert frozenset((v, u) for u, v in psi) == psi
    left_unit = DLElement(v for u, v in psi if u.degree == 0)
    right_unit = DLElement(u for u, v in psi if v.degree == 0)
    assert left_unit == x == right_unit
    for u, v in psi:
        assert u.degree + v.degree == x.degree
        assert u.component == v.component == x.component


def test_coassociative_other_components():
    for x in basis_upto(4, 3):
        left, right = tensor_power_coassoc(x)
        assert left == right


def test_counit():
    assert counit(ONE) == 1
    assert counit(a(0, 4)) == 1
    assert counit(P("a1*a0^-1")) == 0


def test_named_primitives():
    c = named_classes()
    assert is_primitive(c["x4"])
    assert is_primitive(c["x2^2"])
    assert not is_primitive(c["y4"])


def test_primitive_needs_homogeneous():
    with pytest.raises(ValueError):
        is_primitive(P("a1*a0^-1 + Q^1[a0]*a0^-2"))


# -- Bockstein ------------------------------------------------------------------


def test_d1_examples():
    assert bockstein_d1(P("Q^2[a0]*a0^-2")) == P("Q^1[a0]*a0^-2")
    assert bockstein_d1(P("Q^2Q^1[a0]*a0^-4")) == P("(Q^1[a0])^2*a0^-4")
    assert bockstein_d1(P("Q^3[a0]*a0^-2")) == ZERO
    assert bockstein_d1(P("a2*a0^-1")) == ZERO
    for name in ("x2", "x3", "x4", "y4", "x2^2"):
        assert bockstein_d1(named_classes()[name]) == ZERO


def test_d1_uses_adem():
    # d1 Q^4Q^2 = Q^3Q^2; the inner d1 would give Q^4Q^1 = Q^3Q^2 and cancel
    assert bockstein_d1(P("Q^4Q^2[a0]*a0^-4")) == P("Q^3Q^2[a0]*a0^-4")


@pytest.mark.parametrize("x", basis_upto(6), ids=str)
def test_d1_squared_zero(x):
    assert bockstein_d1(bockstein_d1(x)) == ZERO


def test_d1_derivation_on_basis_pairs():
    elems = basis_upto(3)
    for x, y in itertools.product(elems, repeat=2):
        assert bockstein_d1(x * y) == bockstein_d1(x) * y + x * bockstein_d1(y)


@st.composite
def homogeneous(draw, max_degree=3):
    d = draw(st.integers(0, max_degree))
    basis = enumerate_basis(d)
    picks = draw(st.lists(st.sampled_from(basis), max_size=4))
    return DLElement(picks)


@settings(max_examples=150)
@given(homogeneous(), homogeneous())
def test_d1_derivation_random(x, y):
    assert bockstein_d1(x * y) == bockstein_d1(x) * y + x * bockstein_d1(y)


@settings(max_examples=100)
@given(homogeneous(), homogeneous(), homogeneous())
def test_product_ring_laws(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_d1_preserves_component_lowers_degree():
    for x in basis_upto(6):
        dx = bockstein_d1(x)
        if dx:
            assert dx.degree == x.degree - 1 and dx.component == x.component


# -- boundaries -----------------------------------------------------------------


def test_boundary_examples():
    assert is_d1_boundary(ZERO).is_boundary and is_d1_boundary(ZERO).witness == ZERO
    res = is_d1_boundary(P(REMAINDER))
    assert res.is_boundary
    assert res.witness == P("Q^4[a0]*a0^-2 + Q^2[a0]*(Q^1[a0])^2*a0^-6")
    res = is_d1_boundary(named_classes()["x3"])
    assert not res.is_boundary and res.witness is None


def test_boundary_degree_cap():
    with pytest.raises(ValueError):
        is_d1_boundary(P("a3*a0^-1"), cap=6)
    with pytest.raises(ValueError):
        is_d1_boundary(P("a1"))


@pytest.mark.parametrize("w", basis_upto(5), ids=str)
def test_every_d1_image_is_a_boundary_with_witness(w):
    x = bockstein_d1(w)
    res = is_d1_boundary(x)
    assert res.is_boundary
    assert bockstein_d1(res.witness) == x


@settings(max_examples=100)
@given(homogeneous(max_degree=4))
def test_witnesses_verify(x):
    res = is_d1_boundary(x)
    if res.is_boundary:
        assert bockstein_d1(res.witness) == x
    else:
        assert res.witness is None


# -- the low-degree BSS computation ------------------------------------------------


def test_named_classes_shape():
    c = named_classes()
    degrees = {n: x.degree for n, x in c.items()}
    assert degrees == {"x2": 2, "x3": 3, "x4": 4, "y4": 4, "x2^2": 4}
    assert all(x.component == 0 for x in c.values())
    assert len(set(c.values())) == 5
    assert c["x2"] == P("Q^1[a0]*a0^-2") ** 2


def test_d2_identity():
    assert verify_d2_identity()


def test_d2_identity_perturbed():
    dropped = tuple(t for t in D2_Y4_TERMS if t != "Q^2Q^1[a0]*a0^-4")
    assert not verify_d2_identity(dropped)
    without_x3 = D2_Y4_TERMS[len(X3_TERMS):]
    assert not verify_d2_identity(without_x3)


def test_d2_datum_collapses_in_f2():
    datum = ZERO
    for t in D2_Y4_TERMS:
        datum = datum + P(t)
    assert datum == P("Q^2Q^1[a0]*a0^-4 + Q^2[a0]*Q^1[a0]*a0^-4")


@pytest.mark.parametrize("j", range(1, 10, 2))
def test_convolution_odd_vanishes(j):
    assert convolve_selfmap(j, [1] * (j + 1)) == ZERO


def test_convolution_examples():
    assert convolve_selfmap(2, [1, 1, 1]) == P("a1^2*a0^-2")
    assert convolve_selfmap(2, [1, 1, 1], component0=False) == a(1) * a(1)
    assert convolve_selfmap(0, [1], component0=False) == a(0) * a(0)
    for j in (2, 4, 6):
        assert convolve_selfmap(j, [1] * (j + 1)) == a(j // 2, -1) ** 2
    with pytest.raises(ValueError):
        convolve_selfmap(3, [1, 1])


def test_convolution_general_scalars():
    # scalars zero in odd positions: only the even t survive and nothing cancels
    assert convolve_selfmap(3, [1, 0, 1, 0], component0=False) == a(3) * a(0) + a(1) * a(2)


def test_bss_report_flags():
    r = bss_report(6)
    assert all(r.flags.values())
    assert all(r.cycles.values())
    assert r.independent
    assert r.free_ranks == {2: 1, 3: 0, 4: 2}
    assert r.basis_sizes["2,0"] == 3 and r.basis_sizes["3,0"] == 5


def test_bss_report_cap5_same_flags():
    assert bss_report(5).flags == bss_report(6).flags


def test_bss_report_rejects_small_cap():
    with pytest.raises(ValueError):
        bss_report(4)


def test_bss_mutation_breaks_cycles():
    r = bss_report(6, coefficient=lambda s: s)
    assert not r.cycles["x3"]
    assert not r.flags["h3_two_torsion_is_Z4"]


def test_bss_json_schema():
    doc = json.loads(json.dumps(bss_report(6).to_json()))
    jsonschema.validate(doc, BSS_SCHEMA)
    assert doc["boundaries"][0]["witness"] is not None
    assert doc["boundaries"][1]["witness"] is None
