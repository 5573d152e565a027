"""Submodules of free modules over ``base[x]/(relations)``.

A vector is a tuple of Polynomials of common length ``rank``.  The quotient
ring enters only through ``relations``: each relation times each basis vector
is added to the generators, so every routine here works over a finitely
presented ring.
"""

from functools import lru_cache

from .gb import GBasis, buchberger, leading_term, reduce_vector
from .orders import DEGREVLEX, MonomialOrder, TermOrder, block_elim_module_order
from .polynomial import Polynomial


def to_vec(vector, offset=0):
    out = {}
    for i, p in enumerate(vector):
        for e, c in p.terms.items():
            out[(i + offset, e)] = c
    return out


def from_vec(v, ring, rank, offset=0):
    comps = [dict() for _ in range(rank)]
    for (pos, e), c in v.items():
        j = pos - offset
        if 0 <= j < rank:
            comps[j][e] = c
    return tuple(Polynomial(ring, d) for d in comps)


def poly_vec(p, pos=0):
    return {(pos, e): c for e, c in p.terms.items()}


def vec_poly(v, ring):
    return Polynomial(ring, {e: c for (_, e), c in v.items()})


@lru_cache(maxsize=None)
def term_order(desc):
    """Build a TermOrder from a hashable descriptor.

    ``("pot", MonomialOrder)``, ``("top", MonomialOrder)`` or
    ``("blockelim", nelim, npos)``.
    """
    if desc[0] in ("pot", "top"):
        return TermOrder(desc[1], mode=desc[0])
    if desc[0] == "blockelim":
        return block_elim_module_order(desc[1], desc[2])
    raise ValueError(desc)


POT = ("pot", DEGREVLEX)


def _freeze(v):
    return tuple(sorted(v.items()))


@lru_cache(maxsize=8192)
def _gb_cached(base, desc, frozen):
    order = term_order(desc)
    return buchberger([dict(f) for f in frozen], base, order)


def clear_caches():
    _gb_cached.cache_clear()


def gbasis(base, vecs, desc=POT):
    """Reduced (strong) Gröbner basis of the vectors; cached by value."""
    frozen = tuple(_freeze(v) for v in vecs if v)
    return _gb_cached(base, desc, frozen)


def relation_vectors(relations, rank, offset=0):
    out = []
    for r in relations:
        if r.is_zero():
            continue
        for i in range(rank):
            out.append(poly_vec(r, i + offset))
    return out


def submodule_gb(ring, gens, rank, relations=(), desc=POT):
    vecs = [to_vec(g) for g in gens] + relation_vectors(relations, rank)
    return gbasis(ring.base, vecs, desc)


def reduce_in(ring, gens, rank, relations, v, desc=POT):
    G = submodule_gb(ring, gens, rank, relations, desc)
    return from_vec(G.reduce(to_vec(v)), ring, rank)


def contains(ring, gens, rank, relations, v):
    G = submodule_gb(ring, gens, rank, relations)
    return not G.reduce(to_vec(v))


def _tagged_gb(ring, gens, rank, relations):
    k = len(gens)
    one = ring.base.one
    zero_exp = (0,) * ring.nvars
    vecs = []
    for j, g in enumerate(gens):
        v = to_vec(g)
        v[(rank + j, zero_exp)] = one
        vecs.append(v)
    vecs += relation_vectors(relations, rank)
    vecs += relation_vectors(relations, k, offset=rank)
    return gbasis(ring.base, vecs, POT)


def syzygies(ring, gens, rank, relations=()):
    """Generators of ``{a : sum a_j gens_j = 0}`` in ``R^len(gens)``.

    Returned vectors are reduced modulo the relations; zero ones are dropped.
    """
    k = len(gens)
    if k == 0:
        return []
    G = _tagged_gb(ring, gens, rank, relations)
    relG = _relation_gb(ring, relations)
    out = []
    for g, (pos, _) in zip(G.elems, G.lts):
        if pos < rank:
            continue
        vec = from_vec(g, ring, k, offset=rank)
        vec = tuple(_nf_poly(relG, p) for p in vec)
        if any(not p.is_zero() for p in vec) and vec not in out:
            out.append(vec)
    return out


def lift(ring, gens, rank, relations, v):
    """Coefficients ``a`` with ``v = sum a_j gens_j`` modulo relations, or None."""
    k = len(gens)
    if all(p.is_zero() for p in v):
        return tuple(ring.zero() for _ in range(k))
    if k == 0:
        G = submodule_gb(ring, [], rank, relations)
        return () if not G.reduce(to_vec(v)) else None
    G = _tagged_gb(ring, gens, rank, relations)
    r = G.reduce(to_vec(v))
    if any(pos < rank for (pos, _) in r):
        return None
    w = from_vec(r, ring, k, offset=rank)
    return tuple(-p for p in w)


def _relation_gb(ring, relations):
    return gbasis(ring.base, [poly_vec(r) for r in relations if not r.is_zero()], POT)


def _nf_poly(G, p):
    if not G.elems:
        return p
    return vec_poly(G.reduce(poly_vec(p)), p.ring)


def nf_mod(ring, relations, p):
    return _nf_poly(_relation_gb(ring, relations), p)


def trim(ring, gens, rank, relations=()):
    """Greedily drop generators that lie in the span of the others.

    Processes from the last generator to the first, so later (typically
    higher-degree) redundant generators go first.  Deterministic.
    """
    keep = [g for g in gens if any(not p.is_zero() for p in g)]
    # zero modulo the relations
    keep = [g for g in keep if not contains(ring, [], rank, relations, g)]
    i = len(keep) - 1
    while i >= 0:
        others = keep[:i] + keep[i + 1:]
        if contains(ring, others, rank, relations, keep[i]):
            keep = others
        i -= 1
    return keep


def leading(G, v):
    return leading_term(v, G.order)


__all__ = [
    "GBasis",
    "MonomialOrder",
    "POT",
    "contains",
    "from_vec",
    "gbasis",
    "lift",
    "nf_mod",
    "reduce_in",
    "reduce_vector",
    "submodule_gb",
    "syzygies",
    "to_vec",
    "trim",
]
