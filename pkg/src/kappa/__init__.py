"""Divisibility of the stable Miller-Morita-Mumford classes kappa_i."""

from .bernoulli import bernoulli_paper, bernoulli_std, den_b_over_2i, vsc_denominator
from .divisor import DivisorReport, akita_vanishes, d_formula, dz_predicates, resolve
from .numtheory import choose_k, factorize, order_mod, vp

__version__ = "0.1.0"

__all__ = [
    "DivisorReport",
    "akita_vanishes",
    "bernoulli_paper",
    "bernoulli_std",
    "choose_k",
    "d_formula",
    "den_b_over_2i",
    "dz_predicates",
    "factorize",
    "order_mod",
    "resolve",
    "vp",
    "vsc_denominator",
]
