"""Elements of H_*(Q(CP^oo_+); F_2).

The ring is polynomial on the classes Q^I a_j with I admissible
(s_m <= 2 s_{m+1}) and excess s_1 - (s_2 + ... + s_l) > 2j, with a_0 made
invertible.  a_0 itself is grouplike of degree 0 and lives in component 1,
so it is carried as an integer exponent (``translation``) rather than as a
factor.  Q^I a_j sits in degree 2j + sum(I) and component 2^len(I).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, List, Optional, Tuple

__all__ = [
    "DLElement",
    "DLGenerator",
    "DLMonomial",
    "ONE",
    "ZERO",
    "a",
    "adem_coefficient",
    "enumerate_basis",
    "excess",
    "generators_up_to",
    "is_admissible",
    "parse_element",
    "q_op",
]

DEFAULT_CAP = 6


def is_admissible(word: Tuple[int, ...]) -> bool:
    return all(word[m] <= 2 * word[m + 1] for m in range(len(word) - 1))


def excess(word: Tuple[int, ...]) -> float:
    if not word:
        return float("inf")
    return word[0] - sum(word[1:])


@dataclass(frozen=True)
class DLGenerator:
    """The polynomial generator Q^{s_1}...Q^{s_l} a_j."""

    word: Tuple[int, ...]
    j: int

    def __post_init__(self) -> None:
        if self.j < 0 or any(s < 1 for s in self.word):
            raise ValueError(f"bad generator {self.word}, a_{self.j}")
        if not is_admissible(self.word):
            raise ValueError(f"word {self.word} is not admissible")
        if self.word and excess(self.word) <= 2 * self.j:
            raise ValueError(f"excess of {self.word} must exceed {2 * self.j}")

    @property
    def degree(self) -> int:
        return 2 * self.j + sum(self.word)

    @property
    def component(self) -> int:
        return 2 ** len(self.word)

    @property
    def key(self) -> tuple:
        return (self.degree, self.word, self.j)

    def __lt__(self, other: "DLGenerator") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        if not self.word:
            return f"a{self.j}"
        return "".join(f"Q^{s}" for s in self.word) + f"[a{self.j}]"


@dataclass(frozen=True)
class DLMonomial:
    """Product of generators times a_0^translation; factors kept sorted."""

    factors: Tuple[DLGenerator, ...] = ()
    translation: int = 0

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.factors, key=lambda g: g.key))
        if ordered != self.factors:
            object.__setattr__(self, "factors", ordered)
        if any(g.word == () and g.j == 0 for g in ordered):
            raise ValueError("a_0 must be carried as a translation, not a factor")

    @property
    def degree(self) -> int:
        return sum(g.degree for g in self.factors)

    @property
    def component(self) -> int:
        return sum(g.component for g in self.factors) + self.translation

    @property
    def key(self) -> tuple:
        return (self.degree, tuple(g.key for g in self.factors), self.translation)

    def __mul__(self, other: "DLMonomial") -> "DLMonomial":
        return DLMonomial(self.factors + other.factors, self.translation + other.translation)

    def translate(self, t: int) -> "DLMonomial":
        return DLMonomial(self.factors, self.translation + t)

    def __str__(self) -> str:
        parts: List[str] = []
        i = 0
        fs = self.factors
        while i < len(fs):
            n = 1
            while i + n < len(fs) and fs[i + n] == fs[i]:
                n += 1
            g = str(fs[i])
            if n > 1:
                g = f"({g})^{n}" if fs[i].word else f"{g}^{n}"
            parts.append(g)
            i += n
        if self.translation == 1:
            parts.append("a0")
        elif self.translation:
            parts.append(f"a0^{self.translation}")
        return "*".join(parts) if parts else "1"


class DLElement:
    """F_2-linear combination of monomials in a single path component."""

    __slots__ = ("monomials", "_hash")

    def __init__(self, monomials: Iterable[DLMonomial] = ()) -> None:
        acc: set = set()
        for m in monomials:
            acc ^= {m}
        comps = {m.component for m in acc}
        if len(comps) > 1:
            raise ValueError(f"element mixes components {sorted(comps)}")
        self.monomials = frozenset(acc)
        self._hash = hash(self.monomials)

    @classmethod
    def of(cls, *monomials: DLMonomial) -> "DLElement":
        return cls(monomials)

    def __iter__(self) -> Iterator[DLMonomial]:
        return iter(sorted(self.monomials, key=lambda m: m.key))

    def __len__(self) -> int:
        return len(self.monomials)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.monomials
        return isinstance(other, DLElement) and self.monomials == other.monomials

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "DLElement") -> "DLElement":
        return DLElement(self.monomials.symmetric_difference(other.monomials))

    __sub__ = __add__

    def __mul__(self, other: "DLElement") -> "DLElement":
        acc: set = set()
        for m in self.monomials:
            for n in other.monomials:
                acc ^= {m * n}
        return DLElement(acc)

    def __pow__(self, n: int) -> "DLElement":
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def translate(self, t: int) -> "DLElement":
        return DLElement(m.translate(t) for m in self.monomials)

    @property
    def degrees(self) -> set:
        return {m.degree for m in self.monomials}

    @property
    def degree(self) -> Optional[int]:
        """The common degree, or None for 0; raises for inhomogeneous elements."""
        ds = self.degrees
        if len(ds) > 1:
            raise ValueError(f"inhomogeneous element (degrees {sorted(ds)})")
        return next(iter(ds), None)

    @property
    def component(self) -> Optional[int]:
        return next(iter(self.monomials)).component if self.monomials else None

    def __str__(self) -> str:
        return " + ".join(str(m) for m in self) if self.monomials else "0"

    def __repr__(self) -> str:
        return f"DLElement({str(self)!r})"


ZERO = DLElement()
ONE = DLElement.of(DLMonomial())


def a(j: int, translation: int = 0) -> DLElement:
    """The class a_j (translated by a_0^translation)."""
    if j == 0:
        return DLElement.of(DLMonomial((), 1 + translation))
    return DLElement.of(DLMonomial((DLGenerator((), j),), translation))


def gen(g: DLGenerator) -> DLElement:
    return DLElement.of(DLMonomial((g,)))


def adem_coefficient(r: int, s: int, i: int) -> int:
    """Coefficient of Q^{r+s-i} Q^i in Q^r Q^s (r > 2s), mod 2."""
    top, bottom = i - s - 1, 2 * i - r
    if bottom < 0 or top < bottom:
        return 0
    return comb(top, bottom) & 1


@lru_cache(maxsize=None)
def _q_generator(s: int, g: DLGenerator) -> DLElement:
    """Q^s on a single generator, normalized by instability and Adem relations."""
    d = g.degree
    if s < d:
        return ZERO
    if s == d:
        return gen(g) * gen(g)
    if not g.word or s <= 2 * g.word[0]:
        return gen(DLGenerator((s,) + g.word, g.j))
    # Q^s Q^t z with s > 2t: rewrite by the Adem relation
    t, rest = g.word[0], g.word[1:]
    inner = gen(DLGenerator(rest, g.j)) if rest or g.j else a(0)
    out = ZERO
    for i in range((s + 1) // 2, s - t):
        if adem_coefficient(s, t, i):
            out = out + q_op(s + t - i, q_op(i, inner))
    return out


@lru_cache(maxsize=None)
def _q_monomial(s: int, m: DLMonomial) -> DLElement:
    """Q^s on a monomial with non-negative translation, by the Cartan formula."""
    if m.translation < 0:
        raise ValueError("Q^s is only modelled on monomials with non-negative a_0 power")
    factors: List = list(m.factors) + [None] * m.translation  # None stands for a_0
    return _cartan(s, tuple(factors))


@lru_cache(maxsize=None)
def _cartan(s: int, factors: tuple) -> DLElement:
    if not factors:
        return ONE if s == 0 else ZERO
    head, rest = factors[0], factors[1:]
    out = ZERO
    for i in range(s + 1):
        left = _q_a0(i) if head is None else _q_generator(i, head)
        if not left:
            continue
        right = _cartan(s - i, rest)
        if right:
            out = out + left * right
    return out


def _q_a0(s: int) -> DLElement:
    if s == 0:
        return a(0, 1)
    return gen(DLGenerator((s,), 0))


def q_op(s: int, x: DLElement) -> DLElement:
    """The Dyer-Lashof operation Q^s, extended linearly."""
    if s < 0:
        return ZERO
    out = ZERO
    for m in x.monomials:
        out = out + _q_monomial(s, m)
    return out


@lru_cache(maxsize=None)
def generators_up_to(cap: int) -> Tuple[DLGenerator, ...]:
    """All positive-degree generators of degree <= cap, in canonical order."""
    found: List[DLGenerator] = [DLGenerator((), j) for j in range(1, cap // 2 + 1)]
    frontier = [DLGenerator((), j) for j in range(0, cap // 2 + 1)]
    while frontier:
        nxt = []
        for g in frontier:
            hi = 2 * g.word[0] if g.word else cap
            for s in range(g.degree + 1, min(hi, cap - g.degree) + 1):
                h = DLGenerator((s,) + g.word, g.j)
                nxt.append(h)
        found.extend(nxt)
        frontier = nxt
    return tuple(sorted(found, key=lambda g: g.key))


@lru_cache(maxsize=None)
def _basis(degree: int, component: int) -> Tuple[DLMonomial, ...]:
    gens = [g for g in generators_up_to(max(degree, 1)) if g.degree <= degree]
    out: List[DLMonomial] = []

    def walk(start: int, remaining: int, chosen: Tuple[DLGenerator, ...]) -> None:
        if remaining == 0:
            comp = sum(g.component for g in chosen)
            out.append(DLMonomial(chosen, component - comp))
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            if g.degree <= remaining:
                walk(idx, remaining - g.degree, chosen + (g,))

    walk(0, degree, ())
    return tuple(sorted(out, key=lambda m: m.key))


def enumerate_basis(degree: int, component: int = 0, cap: int = DEFAULT_CAP) -> List[DLMonomial]:
    """Monomial basis of H_degree in the given component."""
    if not 0 <= degree <= cap:
        raise ValueError(f"degree {degree} outside 0..{cap}")
    return list(_basis(degree, component))


_FACTOR = re.compile(
    r"^(?P<open>\()?(?P<word>(?:Q\^\d+)*)(?:\[a(?P<j1>\d+)\]|a(?P<j2>\d+))(?(open)\))(?:\^(?P<exp>-?\d+))?$"
)


def parse_element(text: str) -> DLElement:
    """Parse the rendered notation, e.g. ``"Q^2Q^1[a0]*a0^-4 + (Q^1[a0])^3*a0^-6"``.

    Words are applied right to left through ``q_op``, so squares and
    inadmissible words are normalized on the way in.
    """
    text = text.strip()
    if text == "0":
        return ZERO
    out = ZERO
    for term in text.split("+"):
        value = ONE
        for factor in term.strip().split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            mt = _FACTOR.match(factor)
            if not mt:
                raise ValueError(f"cannot parse factor {factor!r}")
            j = int(mt["j1"] if mt["j1"] is not None else mt["j2"])
            exp = int(mt["exp"]) if mt["exp"] is not None else 1
            word = [int(s) for s in re.findall(r"Q\^(\d+)", mt["word"])]
            if not word and j == 0:
                value = value.translate(exp)
                continue
            if exp < 0:
                raise ValueError(f"negative power only allowed on a0: {factor!r}")
            base = a(j)
            for s in reversed(word):
                base = q_op(s, base)
            value = value * base**exp
        out = out + value
    return out
