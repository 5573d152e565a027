"""Ideals of polynomial rings and the ideal-theoretic operations."""

from ..errors import ProkError, RingMismatch, UnsupportedRing
from . import submodule as sm
from .gb import GBasis
from .orders import DEGREVLEX, MonomialOrder
from .polynomial import Polynomial, PolyRing


class Ideal:
    """A finitely generated ideal; zero generators are dropped, duplicates merged."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens=()):
        clean = []
        for g in gens:
            g = ring(g)
            if g.is_zero() or g in clean:
                continue
            clean.append(g)
        self.ring = ring
        self.gens = tuple(clean)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))}) in {self.ring}"

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"

    def __hash__(self):
        # equality is ideal equality, so only the ring is hashable-stable
        return hash(self.ring)

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"{other.ring} vs {self.ring}")

    def gbasis(self, order=DEGREVLEX):
        """The engine-level basis (see :func:`groebner` for the Ideal form)."""
        return sm.gbasis(self.ring.base, [sm.poly_vec(g) for g in self.gens], ("pot", order))

    def groebner(self, order=DEGREVLEX):
        return groebner(self, order)

    def normal_form(self, f, order=DEGREVLEX):
        return normal_form(f, self, order)

    def contains(self, f):
        f = self.ring(f)
        return not self.gbasis().reduce(sm.poly_vec(f))

    def __contains__(self, f):
        return self.contains(f)

    def contains_ideal(self, other):
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return self.contains(self.ring.one())

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return other.ring == self.ring and groebner(self).gens == groebner(other).gens

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        self._check(other)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, s):
        return ideal_power(self, s)

    def intersection(self, other):
        return ideal_intersection(self, other)

    def colon(self, other):
        return ideal_colon(self, other)


def groebner(I, order=DEGREVLEX):
    """Reduced (over ZZ: reduced strong) Gröbner basis, returned as an Ideal."""
    if not isinstance(order, MonomialOrder):
        raise ProkError(f"not a monomial order: {order!r}")
    order.check(I.ring.nvars)
    G = I.gbasis(order)
    return Ideal(I.ring, [sm.vec_poly(g, I.ring) for g in G.elems])


def normal_form(f, I, order=DEGREVLEX):
    if isinstance(f, Polynomial) and f.ring != I.ring:
        raise RingMismatch(f"{f.ring} vs {I.ring}")
    f = I.ring(f)
    G = I.gbasis(order)
    return sm.vec_poly(G.reduce(sm.poly_vec(f)), I.ring)


def ideal_power(I, s):
    if s < 0:
        raise ProkError("ideal powers need s >= 0")
    result = Ideal(I.ring, [I.ring.one()])
    for _ in range(s):
        result = result * I
    return result


def ideal_intersection(I, J, relations=()):
    """``(I + rel) ∩ (J + rel)`` via the module trick in rank two."""
    I._check(J)
    R = I.ring
    z = R.zero()
    gens = [(f, f) for f in I.gens] + [(g, z) for g in J.gens]
    gens += [(r, z) for r in relations] + [(z, r) for r in relations]
    G = sm.submodule_gb(R, gens, 2)
    out = []
    for g, (pos, _) in zip(G.elems, G.lts):
        if pos == 1:
            out.append(sm.from_vec(g, R, 2)[1])
    return Ideal(R, out)


def ideal_colon(I, J, relations=()):
    """``(I + rel) : J``."""
    I._check(J)
    R = I.ring
    result = None
    for g in J.gens:
        col = element_colon(I, g, relations)
        result = col if result is None else ideal_intersection(result, col, relations)
    if result is None:
        return Ideal(R, [R.one()])
    return result


def element_colon(I, g, relations=()):
    R = I.ring
    gens = [(g,)] + [(f,) for f in I.gens]
    syz = sm.syzygies(R, gens, 1, relations)
    return Ideal(R, [v[0] for v in syz])


def eliminate(I, drop):
    """``I ∩ base[remaining variables]``, returned in that smaller ring."""
    R = I.ring
    drop = list(drop)
    for v in drop:
        if v not in R.vars:
            raise ProkError(f"cannot eliminate {v!r}: not a variable of {R}")
    if not drop:
        return Ideal(R, I.gens)
    keep = [v for v in R.vars if v not in drop]
    dropped = [v for v in R.vars if v in drop]
    # reorder so the dropped block comes first
    perm_ring = PolyRing(R.base, dropped + keep)
    gens = [g.change_ring(perm_ring) for g in I.gens]
    order = MonomialOrder("elim", len(dropped))
    G = sm.gbasis(R.base, [sm.poly_vec(g) for g in gens], ("pot", order))
    sub = PolyRing(R.base, keep)
    k = len(dropped)
    out = []
    for g in G.elems:
        if all(not any(e[:k]) for (_, e) in g):
            out.append(Polynomial(sub, {e[k:]: c for (_, e), c in g.items()}))
    return Ideal(sub, out)


def ideal_op(kind, I, J=None, s=None):
    """Dispatch: ``sum``, ``product``, ``power``, ``intersection``, ``colon``,
    ``equality-test``."""
    if kind == "power":
        return ideal_power(I, s if s is not None else J)
    if J is None:
        raise ProkError(f"{kind} needs two ideals")
    I._check(J)
    if kind == "sum":
        return I + J
    if kind == "product":
        return I * J
    if kind == "intersection":
        return ideal_intersection(I, J)
    if kind == "colon":
        return ideal_colon(I, J)
    if kind in ("equality-test", "equal"):
        return I == J
    raise ProkError(f"unknown ideal operation {kind!r}")


def require_supported(base):
    if base.kind not in ("ZZ", "QQ", "GF"):
        raise UnsupportedRing(str(base))


__all__ = [
    "GBasis",
    "Ideal",
    "eliminate",
    "groebner",
    "ideal_colon",
    "ideal_intersection",
    "ideal_op",
    "ideal_power",
    "normal_form",
]
