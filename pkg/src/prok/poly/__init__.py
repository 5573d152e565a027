"""Exact polynomial arithmetic and ideal theory over ZZ, QQ and GF(p)."""

from .domains import GF, QQ, ZZ, BaseRing, base_ring_from_name
from .gb import DEFAULT_BUDGET, groebner_budget
from .ideal import (
    Ideal,
    eliminate,
    groebner,
    ideal_colon,
    ideal_intersection,
    ideal_op,
    ideal_power,
    normal_form,
)
from .orders import DEGREVLEX, LEX, MonomialOrder, elim
from .parse import ParseError, parse_expression
from .polynomial import Polynomial, PolyRing, poly_ring

__all__ = [
    "BaseRing",
    "DEFAULT_BUDGET",
    "DEGREVLEX",
    "GF",
    "Ideal",
    "LEX",
    "MonomialOrder",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "QQ",
    "ZZ",
    "base_ring_from_name",
    "elim",
    "eliminate",
    "groebner",
    "groebner_budget",
    "ideal_colon",
    "ideal_intersection",
    "ideal_op",
    "ideal_power",
    "normal_form",
    "parse_expression",
    "poly_ring",
]
