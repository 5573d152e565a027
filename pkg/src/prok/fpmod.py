"""Finitely presented modules over FPRings: Kähler differentials, tensor
products, free resolutions, Tor and regular sequences.

A module is ``R^ngens / span(relations)``; each relation is a length-``ngens``
tuple of polynomials (a column of the presentation matrix).
"""

from dataclasses import dataclass
from functools import lru_cache

from .abgrp import FGAbelianGroup, GroupMap
from .errors import MissingData, ProkError, RingMismatch, Unrealizable
from .fpring import FPRing, RingElement
from .poly import submodule as sm
from .poly.staircase import standard_terms


def _vec(R, v):
    out = []
    for p in v:
        if isinstance(p, RingElement):
            p = p.rep
        out.append(R.reduce(R.poly(p)))
    return tuple(out)


def _is_zero_vec(v):
    return all(p.is_zero() for p in v)


class FPModule:
    def __init__(self, ring, ngens, relations=()):
        self.ring = ring
        self.ngens = ngens
        rels = []
        for r in relations:
            r = _vec(ring, r)
            if len(r) != ngens:
                raise ProkError(f"relation of length {len(r)} on {ngens} generators")
            if not _is_zero_vec(r) and r not in rels:
                rels.append(r)
        self.relations = tuple(rels)
        self._real = None

    def __repr__(self):
        return f"FPModule({self.ngens} generators, {len(self.relations)} relations over {self.ring})"

    def __eq__(self, other):
        return (isinstance(other, FPModule) and self.ring == other.ring
                and self.ngens == other.ngens and self.relations == other.relations)

    def __hash__(self):
        return hash((self.ring, self.ngens, self.relations))

    def matrix(self):
        """Presentation matrix, relations as columns."""
        return [[r[i] for r in self.relations] for i in range(self.ngens)]

    def gb(self):
        R = self.ring
        return sm.submodule_gb(R.poly, list(self.relations), self.ngens, R.rels)

    def reduce(self, v):
        v = _vec(self.ring, v)
        return sm.from_vec(self.gb().reduce(sm.to_vec(v)), self.ring.poly, self.ngens)

    def contains(self, v):
        """Is ``v`` zero in the module?"""
        return not self.gb().reduce(sm.to_vec(_vec(self.ring, v)))

    def basis_vector(self, i):
        R = self.ring.poly
        return tuple(R.one() if j == i else R.zero() for j in range(self.ngens))

    def is_zero(self):
        return all(self.contains(self.basis_vector(i)) for i in range(self.ngens))

    def realization(self):
        """The module as a group/vector space over the coefficient ring."""
        if self._real is None:
            self._real = Realization(self)
        return self._real

    def try_realization(self):
        try:
            return self.realization()
        except Unrealizable:
            return None

    def describe(self):
        real = self.try_realization()
        if real is None:
            return {"structural": True, "generators": self.ngens, "relations": len(self.relations),
                    "is_zero": self.is_zero()}
        return real.to_json()


class Realization:
    """Coordinates of a module on the standard terms of its Gröbner basis."""

    def __init__(self, module):
        R = module.ring
        self.module = module
        self.G = module.gb()
        self.terms = standard_terms(self.G, module.ngens, R.nvars)
        self.index = {(p, e): i for i, (p, e, _) in enumerate(self.terms)}
        base = R.base
        if base.is_field:
            self.group = FGAbelianGroup(len(self.terms), (), base)
        else:
            rows = []
            for i, (p, e, mod) in enumerate(self.terms):
                if mod == 0:
                    continue
                nf = self.G.reduce({(p, e): mod})
                row = [-c for c in self._coords_of(nf)]
                row[i] += mod
                rows.append(row)
            self.group = FGAbelianGroup(len(self.terms), rows)

    def _coords_of(self, nf):
        out = [self.module.ring.base.zero] * len(self.terms)
        for t, c in nf.items():
            i = self.index.get(t)
            if i is None:
                raise ProkError("normal form left the staircase")
            out[i] = c
        return out

    def coords(self, v):
        v = _vec(self.module.ring, v)
        return self._coords_of(self.G.reduce(sm.to_vec(v)))

    def term_vector(self, i):
        p, e, _ = self.terms[i]
        R = self.module.ring.poly
        return tuple(R.monomial(e) if j == p else R.zero() for j in range(self.module.ngens))

    def to_json(self):
        return self.group.to_json()

    def describe(self):
        return self.group.describe()


class ModuleMap:
    """``source -> target``; ``matrix[i][j]`` is coordinate ``i`` of the image of generator ``j``."""

    def __init__(self, source, target, matrix, check=True):
        if source.ring != target.ring:
            raise RingMismatch("module maps need a common ring")
        R = source.ring
        self.source = source
        self.target = target
        self.matrix = [list(_vec(R, row)) for row in matrix] if target.ngens else []
        if len(self.matrix) != target.ngens or any(len(r) != source.ngens for r in self.matrix):
            raise ProkError("matrix shape does not match the modules")
        if check:
            for r in source.relations:
                if not target.contains(self.apply(r)):
                    raise ProkError("map does not respect the source relations")

    def column(self, j):
        return tuple(row[j] for row in self.matrix)

    def apply(self, v):
        R = self.source.ring
        out = []
        for row in self.matrix:
            acc = R.poly.zero()
            for a, b in zip(row, v):
                acc = acc + a * b
            out.append(R.reduce(acc))
        return tuple(out)

    def is_zero(self):
        return all(self.target.contains(self.column(j)) for j in range(self.source.ngens))

    def compose(self, other):
        """``self ∘ other``."""
        cols = [self.apply(other.column(j)) for j in range(other.source.ngens)]
        M = [[c[i] for c in cols] for i in range(self.target.ngens)]
        return ModuleMap(other.source, self.target, M, check=False)

    def cokernel(self):
        cols = [self.column(j) for j in range(self.source.ngens)]
        return FPModule(self.target.ring, self.target.ngens, list(self.target.relations) + cols)

    def is_surjective(self):
        return self.cokernel().is_zero()

    def realize(self):
        """The induced GroupMap between realizations."""
        rs = self.source.realization()
        rt = self.target.realization()
        cols = [rt.coords(self.apply(rs.term_vector(i))) for i in range(len(rs.terms))]
        M = [[c[i] for c in cols] for i in range(len(rt.terms))]
        return GroupMap(rs.group, rt.group, M)


def free_module(R, n):
    return FPModule(R, n, ())


def quotient_module(R, gens):
    """``R/(gens)`` as a cyclic module."""
    return FPModule(R, 1, [(g,) for g in gens])


def ideal_module(R, gens, sub_gens=()):
    """``(gens) / (sub_gens)`` presented on ``gens`` (requires sub ⊆ span)."""
    gens = [R.reduce(R.poly(g)) for g in gens]
    k = len(gens)
    allg = [(g,) for g in gens] + [(R.reduce(R.poly(h)),) for h in sub_gens]
    syz = sm.syzygies(R.poly, allg, 1, R.rels)
    rels = [v[:k] for v in syz]
    return FPModule(R, k, rels)


def kaehler(f, algebra_presentation=None):
    """``Ω¹_{B/A}`` for ``f : A -> B``.

    Default algebra presentation: the variables of B over A, with the
    relations of B and ``x_i - f(x_i)``; since ``d x_i = 0`` the relation rows
    are the Jacobians of the relations of B and of the images ``f(x_i)``.
    ``algebra_presentation`` may instead list the B-polynomials whose
    differentials generate the relations.
    """
    B = f.target
    if algebra_presentation is None:
        polys = list(B.rels) + list(f.images)
    else:
        polys = [B.poly(p.rep if isinstance(p, RingElement) else p) for p in algebra_presentation]
    rows = []
    for p in polys:
        rows.append(tuple(p.diff(j) for j in range(B.nvars)))
    return FPModule(B, B.nvars, rows)


def tensor(M, N):
    if M.ring != N.ring:
        raise RingMismatch("tensor factors live over different rings")
    m, n = M.ngens, N.ngens
    z = M.ring.poly.zero()
    rels = []
    for r in M.relations:
        for j in range(n):
            v = [z] * (m * n)
            for i in range(m):
                v[i * n + j] = r[i]
            rels.append(v)
    for i in range(m):
        for q in N.relations:
            v = [z] * (m * n)
            for j in range(n):
                v[i * n + j] = q[j]
            rels.append(v)
    return FPModule(M.ring, m * n, rels)


# resolutions ---------------------------------------------------------------

@dataclass(frozen=True)
class Resolution:
    """``F_L -> ... -> F_1 -> F_0 -> M``.

    ``boundaries[k]`` is the list of columns of ``d_{k+1} : F_{k+1} -> F_k``.
    """

    ring: FPRing
    module: FPModule
    ranks: tuple
    boundaries: tuple

    def __len__(self):
        return len(self.ranks) - 1

    def boundary(self, k):
        """Columns of ``d_k`` (``k >= 1``); empty beyond the computed length."""
        if 1 <= k <= len(self.boundaries):
            return self.boundaries[k - 1]
        return ()

    def rank(self, k):
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def check_complex(self):
        """``d_k ∘ d_{k+1} = 0`` at every stage (modulo the ring relations)."""
        R = self.ring
        for k in range(1, len(self.boundaries)):
            d_k = self.boundaries[k - 1]
            for col in self.boundaries[k]:
                img = _apply_cols(R, d_k, col, self.ranks[k - 1])
                if not _is_zero_vec(img):
                    return False
        return True


def _apply_cols(R, cols, v, nrows):
    out = [R.poly.zero()] * nrows
    for c, a in zip(cols, v):
        if a.is_zero():
            continue
        for i in range(nrows):
            out[i] = out[i] + a * c[i]
    return tuple(R.reduce(p) for p in out)


def free_resolution(M, L):
    return _free_resolution(M, L)


def clear_caches():
    """Forget memoized resolutions, Tor modules and Gröbner bases."""
    _free_resolution.cache_clear()
    _tor.cache_clear()
    sm.clear_caches()


@lru_cache(maxsize=256)
def _free_resolution(M, L):
    R = M.ring
    ranks = [M.ngens]
    bounds = []
    cols = sm.trim(R.poly, list(M.relations), M.ngens, R.rels) if M.relations else []
    for k in range(L):
        cols = [tuple(c) for c in cols]
        if not cols:
            break
        bounds.append(tuple(cols))
        ranks.append(len(cols))
        if k + 1 == L:
            break
        syz = sm.syzygies(R.poly, cols, ranks[-2], R.rels)
        cols = sm.trim(R.poly, syz, len(cols), R.rels) if syz else []
    while len(ranks) < L + 1:
        ranks.append(0)
    res = Resolution(R, M, tuple(ranks), tuple(bounds))
    if not res.check_complex():
        raise ProkError("resolution boundaries do not compose to zero")
    return res


# Tor -------------------------------------------------------------------------

class TorModule(FPModule):
    """``Tor_n(M, N)`` presented on cycle representatives in ``F_n ⊗ N``."""

    def __init__(self, ring, cycles, relations, chain_module, boundaries, degree):
        super().__init__(ring, len(cycles), relations)
        self.cycles = tuple(cycles)
        self.chain_module = chain_module
        self.boundary_gens = tuple(boundaries)
        self.degree = degree

    def lift_class(self, v):
        """Coefficients of ``v`` (a cycle in ``F_n ⊗ N``) on the cycle generators."""
        R = self.ring
        gens = list(self.cycles) + list(self.boundary_gens) + list(self.chain_module.relations)
        coeffs = sm.lift(R.poly, gens, self.chain_module.ngens, R.rels, v)
        if coeffs is None:
            raise ProkError("vector is not a cycle")
        return coeffs[: len(self.cycles)]


def _tensor_map(R, cols, rsrc, rtgt, q):
    """Columns of ``d ⊗ 1_N`` on ``R^(rsrc*q) -> R^(rtgt*q)``."""
    z = R.poly.zero()
    out = []
    for i in range(rsrc):
        for a in range(q):
            v = [z] * (rtgt * q)
            for j in range(rtgt):
                v[j * q + a] = cols[i][j]
            out.append(tuple(v))
    return out


def _sum_module(N, r):
    """``N^r`` with generator ``(i, a)`` at index ``i*q + a``."""
    q = N.ngens
    z = N.ring.poly.zero()
    rels = []
    for i in range(r):
        for rel in N.relations:
            v = [z] * (r * q)
            for a in range(q):
                v[i * q + a] = rel[a]
            rels.append(v)
    return FPModule(N.ring, r * q, rels)


def tor(M, N, n):
    if M.ring != N.ring:
        raise RingMismatch("Tor arguments live over different rings")
    return _tor(M, N, n)


@lru_cache(maxsize=256)
def _tor(M, N, n):
    R = M.ring
    res = free_resolution(M, n + 1)
    q = N.ngens
    rn, rn1 = res.rank(n), res.rank(n - 1) if n >= 1 else 0
    Cn = _sum_module(N, rn)
    dim = rn * q
    # cycles of d_n ⊗ N
    if n >= 1 and rn1 and dim:
        Cn1 = _sum_module(N, rn1)
        dn = _tensor_map(R, res.boundary(n), rn, rn1, q)
        gens = dn + list(Cn1.relations)
        syz = sm.syzygies(R.poly, gens, rn1 * q, R.rels)
        cycles = [v[:dim] for v in syz if not _is_zero_vec(v[:dim])]
    else:
        cycles = [Cn.basis_vector(i) for i in range(dim)]
    # boundaries of d_{n+1} ⊗ N
    rn2 = res.rank(n + 1)
    bnd = _tensor_map(R, res.boundary(n + 1), rn2, rn, q) if rn2 else []
    bnd = [b for b in bnd if not _is_zero_vec(b)]
    sub = bnd + list(Cn.relations)
    # drop cycles that are redundant modulo boundaries
    keep = [c for c in cycles if not sm.contains(R.poly, sub, dim, R.rels, c)]
    i = len(keep) - 1
    while i >= 0:
        others = keep[:i] + keep[i + 1:]
        if sm.contains(R.poly, others + sub, dim, R.rels, keep[i]):
            keep = others
        i -= 1
    k = len(keep)
    if k == 0:
        return TorModule(R, [], [], Cn, bnd, n)
    syz = sm.syzygies(R.poly, keep + sub, dim, R.rels)
    rels = [v[:k] for v in syz]
    return TorModule(R, keep, rels, Cn, bnd, n)


def _chain_lift(R, resF, resG, phi0, upto):
    """Chain map ``F -> G`` lifting ``phi0 : F_0 -> G_0`` (matrix columns)."""
    maps = [phi0]
    for k in range(1, upto + 1):
        dF = resF.boundary(k)
        dG = resG.boundary(k)
        prev = maps[-1]
        cols = []
        for col in dF:
            target = _apply_cols(R, prev, col, resG.rank(k - 1))
            if _is_zero_vec(target):
                cols.append(tuple(R.poly.zero() for _ in range(resG.rank(k))))
                continue
            coeffs = sm.lift(R.poly, list(dG), resG.rank(k - 1), R.rels, target)
            if coeffs is None:
                raise ProkError("chain map does not lift (target resolution not exact)")
            cols.append(tuple(coeffs))
        maps.append(cols)
    return maps


def tor_transition(A, I, s, n, r=None):
    """The map ``Tor_n(A/I^r, A/I^r) -> Tor_n(A/I^s, A/I^s)`` induced by the
    canonical surjection, ``r = 2s`` by default."""
    if r is None:
        r = 2 * s
    if r < s:
        raise ProkError("transitions go from a higher to a lower power")
    Mr = quotient_module(A, A.ideal_power(I, r).gens)
    Ms = quotient_module(A, A.ideal_power(I, s).gens)
    return induced_tor_map(Mr, Ms, n)


def induced_tor_map(Mr, Ms, n):
    """Map on ``Tor_n(M, M)`` induced by the identity-on-generators surjection
    ``Mr -> Ms`` of cyclic modules (applied to both arguments)."""
    R = Mr.ring
    src = tor(Mr, Mr, n)
    tgt = tor(Ms, Ms, n)
    resF = free_resolution(Mr, n + 1)
    resG = free_resolution(Ms, n + 1)
    one = R.poly.one()
    phi0 = [tuple(one if i == j else R.poly.zero() for i in range(resG.rank(0)))
            for j in range(resF.rank(0))]
    maps = _chain_lift(R, resF, resG, phi0, n)
    phin = maps[n]
    q = Mr.ngens
    cols = []
    for z in src.cycles:
        # (phi_n ⊗ pi)(z): block (i, a) -> sum_j phi_n[i][j] (j, a)
        img = [R.poly.zero()] * (resG.rank(n) * q)
        for i in range(resF.rank(n)):
            for a in range(q):
                c = z[i * q + a]
                if c.is_zero():
                    continue
                for j in range(resG.rank(n)):
                    img[j * q + a] = img[j * q + a] + c * phin[i][j]
        img = tuple(R.reduce(p) for p in img)
        cols.append(tgt.lift_class(img))
    M = [[c[i] for c in cols] for i in range(tgt.ngens)]
    return ModuleMap(src, tgt, M)


def is_regular_sequence(R, elems):
    elems = [e.rep if isinstance(e, RingElement) else R.reduce(R.poly(e)) for e in elems]
    if R.ideal_contains(R.ideal(elems), 1):
        return False
    for i, t in enumerate(elems):
        prev = R.ideal(elems[:i])
        if not R.ideal_equal(R.colon(prev, t), prev):
            return False
    return True


def base_change(M, f):
    """``M ⊗_A B`` along ``f : A -> B``."""
    if M.ring != f.source:
        raise RingMismatch("module is not over the source of the map")
    return FPModule(f.target, M.ngens, [tuple(f.apply_poly(p) for p in r) for r in M.relations])


def require_presentation(pres):
    if pres is None:
        raise MissingData("an algebra presentation is required")
    return pres


__all__ = [
    "FPModule",
    "ModuleMap",
    "Realization",
    "Resolution",
    "TorModule",
    "base_change",
    "free_module",
    "free_resolution",
    "ideal_module",
    "induced_tor_map",
    "is_regular_sequence",
    "kaehler",
    "quotient_module",
    "tensor",
    "tor",
    "tor_transition",
]
