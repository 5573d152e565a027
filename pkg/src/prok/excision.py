"""Excision situations ``(f : A -> B, I)``, Milnor squares, the birelative
K_1 module ``Ω¹_{B/A} ⊗_B I/I²``, the Swan–Vorst map, Mennicke matrices and
the rule-based low-degree evaluators."""

from dataclasses import dataclass, field
from itertools import product as iproduct

from .abgrp import FGAbelianGroup, GroupMap
from .errors import ExcisionRejected, MissingData, ProkError, UnsupportedRing
from .fpmod import FPModule, ideal_module, kaehler, tensor
from .fpring import (
    FPRing,
    RingElement,
    RingHom,
    amodule_relations,
    artinian_basis,
    conductor,
    hom_kernel,
    preimage_in_ideal,
)
from .poly.ideal import Ideal


@dataclass
class ExcisionSituation:
    f: RingHom
    I: Ideal
    kernel: tuple = ()
    ideal_witness: dict = field(default_factory=dict)
    name: str = ""

    @property
    def A(self):
        return self.f.source

    @property
    def B(self):
        return self.f.target

    @property
    def module_gens(self):
        return self.f.module_gens

    def image_gens(self):
        """Generators of ``f(I)`` (an ideal of B)."""
        return [self.f.apply_poly(g) for g in self.I.gens]

    def certificates(self):
        return {
            "kernel": [str(k) for k in self.kernel],
            "kernel_meets_ideal": [],
            "ideal_of_target": {k: str(v) for k, v in self.ideal_witness.items()},
        }

    def revalidate(self):
        return validate_excision(self.f, self.I, name=self.name)


def _as_ideal(A, I):
    if isinstance(I, Ideal):
        return A.ideal(I.gens)
    return A.ideal(list(I))


def validate_excision(f, I, name=""):
    """Certify ``I ∩ ker f = 0`` and that ``f(I)`` is an ideal of B."""
    A, B = f.source, f.target
    I = _as_ideal(A, I)
    K = hom_kernel(f)
    meet = A.ideal_intersection(I, K) if K.gens else A.ideal([])
    for g in meet.gens:
        w = A.reduce(g)
        if not w.is_zero():
            raise ExcisionRejected("kernel-overlap", str(w),
                                   f"kernel-overlap: {w} lies in I and in the kernel")
    if f.module_gens is None:
        raise MissingData("generators of B as an A-module are needed to check that f(I) is an ideal")
    witness = {}
    for x in I.gens:
        fx = f.apply_poly(x)
        for m in f.module_gens:
            b = B.reduce(m * fx)
            a = preimage_in_ideal(f, b, I)
            label = f"({m})*({fx})"
            if a is None:
                raise ExcisionRejected("not-an-ideal", label,
                                       f"not-an-ideal: {label} = {b} is not in f(I)")
            witness[label] = a
    return ExcisionSituation(f, I, tuple(K.gens), witness, name)


def power_situation(E, s):
    if s < 1:
        raise ProkError("powers start at s = 1")
    if s == 1:
        return E
    J = E.A.ideal_power(E.I, s)
    return validate_excision(E.f, J, name=f"{E.name}^{s}" if E.name else "")


# Milnor squares ----------------------------------------------------------------

@dataclass
class MilnorSquare:
    A: FPRing
    B: FPRing
    A_mod_I: FPRing
    B_mod_I: FPRing
    top: RingHom
    left: RingHom
    right: RingHom
    bottom: RingHom

    def commutes(self):
        for x in self.A.poly.gens():
            one = self.right.apply_poly(self.top.apply_poly(x))
            two = self.bottom.apply_poly(self.left.apply_poly(x))
            if one != two:
                return False
        return True

    def is_cartesian(self):
        """Kernel criterion: ``ker(A -> A/I ⊕ B) = I ∩ ker f = 0``."""
        I = self.A.ideal(self.A_mod_I.rels)
        K = hom_kernel(self.top)
        meet = self.A.ideal_intersection(I, K)
        return self.A.ideal_is_zero(meet)


def milnor_square(E):
    A, B, f = E.A, E.B, E.f
    AI = A.quotient(E.I)
    BI = B.quotient(B.ideal(E.image_gens()))
    left = RingHom(A, AI, AI.poly.gens())
    right = RingHom(B, BI, BI.poly.gens())
    bottom = RingHom(AI, BI, [BI.reduce(im.change_ring(BI.poly)) for im in f.images])
    return MilnorSquare(A, B, AI, BI, f, left, right, bottom)


# the birelative module -----------------------------------------------------------

@dataclass
class GWModule:
    module: FPModule
    omega: FPModule
    conormal: FPModule
    realization: object = None

    def to_json(self):
        if self.realization is not None:
            return self.realization.to_json()
        return {"structural": True, "is_zero": self.module.is_zero()}

    def is_zero(self):
        return self.module.is_zero()

    def recheck(self):
        """Recompute the realization from the presentation and compare invariants."""
        if self.realization is None:
            return True
        fresh = FPModule(self.module.ring, self.module.ngens, self.module.relations).realization()
        return fresh.group.same_invariants(self.realization.group)


def conormal_module(E):
    """``I·B / I²·B`` presented on the images of the generators of I."""
    B = E.B
    gens = E.image_gens()
    squares = [B.reduce(a * b) for i, a in enumerate(gens) for b in gens[i:]]
    return ideal_module(B, gens, squares)


def gw_birelative_k1(E):
    omega = kaehler(E.f)
    conormal = conormal_module(E)
    M = tensor(omega, conormal)
    return GWModule(M, omega, conormal, M.try_realization())


# Swan–Vorst ------------------------------------------------------------------------

def _tensor_groups(G1, G2):
    """``G1 ⊗ G2`` over the common coefficient ring, generators ``i*n2 + j``."""
    D = G1.domain
    n1, n2 = G1.ngens, G2.ngens
    rels = []
    for r in G1.relations:
        for j in range(n2):
            v = [D.zero] * (n1 * n2)
            for i in range(n1):
                v[i * n2 + j] = r[i]
            rels.append(v)
    for i in range(n1):
        for r in G2.relations:
            v = [D.zero] * (n1 * n2)
            for j in range(n2):
                v[i * n2 + j] = r[j]
            rels.append(v)
    return FGAbelianGroup(n1 * n2, rels, D)


def cokernel_module(E):
    """``B / f(A)`` as an A-module on the generators ``(1, m_1, ...)``."""
    f = E.f
    if f.module_gens is None:
        raise MissingData("generators of B as an A-module are needed")
    one = f.target.poly.one()
    gens = (one,) + tuple(g for g in f.module_gens if g != one)
    rels = amodule_relations(f, gens)
    A = f.source
    e0 = tuple(A.poly.one() if i == 0 else A.poly.zero() for i in range(len(gens)))
    return FPModule(A, len(gens), list(rels) + [e0]), gens


@dataclass
class SwanSequence:
    source: FGAbelianGroup
    target: FGAbelianGroup
    swan_vorst: GroupMap
    gw: GWModule

    def is_surjective(self):
        return self.swan_vorst.is_surjective()

    def cokernel(self):
        return self.swan_vorst.cokernel()


def swan_sequence(E):
    """Source ``B/f(A) ⊗ I/I²`` (over the coefficient ring) with the map
    ``b ⊗ x -> db ⊗ x`` onto the birelative module."""
    f, A, B = E.f, E.A, E.B
    quot, mgens = cokernel_module(E)
    q_real = quot.realization()
    Igens = list(E.I.gens)
    sq = [A.reduce(a * b) for i, a in enumerate(Igens) for b in Igens[i:]]
    conA = ideal_module(A, Igens, sq)
    c_real = conA.realization()
    gw = gw_birelative_k1(E)
    if gw.realization is None:
        raise ProkError("the birelative module has no finite realization")
    g_real = gw.realization
    source = _tensor_groups(q_real.group, c_real.group)
    q = len(Igens)
    cols = []
    for (pk, ek, _) in q_real.terms:
        b = B.reduce(f.apply_poly(A.poly.monomial(ek)) * mgens[pk])
        db = [b.diff(j) for j in range(B.nvars)]
        for (pl, el, _) in c_real.terms:
            fx = f.apply_poly(A.poly.monomial(el))
            vec = [B.poly.zero()] * (B.nvars * q)
            for j in range(B.nvars):
                vec[j * q + pl] = db[j] * fx
            cols.append(g_real.coords(vec))
    M = [[c[i] for c in cols] for i in range(len(g_real.terms))]
    sv = GroupMap(source, g_real.group, M)
    return SwanSequence(source, g_real.group, sv, gw)


# Mennicke matrices ----------------------------------------------------------------

@dataclass
class MennickeMatrix:
    b: object
    x: object
    entries: tuple      # 2x2 over A (polynomials)
    images: tuple       # the same entries mapped into B
    determinant: object

    def to_json(self):
        return {
            "b": str(self.b),
            "x": str(self.x),
            "matrix": [[str(e) for e in row] for row in self.entries],
            "matrix_in_target": [[str(e) for e in row] for row in self.images],
            "determinant": str(self.determinant),
        }


def mennicke(E, b, x):
    f, A, B = E.f, E.A, E.B
    b = B.reduce(B.poly(b.rep if isinstance(b, RingElement) else b))
    x = A.reduce(A.poly(x.rep if isinstance(x, RingElement) else x))
    if not A.ideal_contains(E.I, x):
        raise ProkError(f"{x} is not in the ideal")
    fx = f.apply_poly(x)
    a = preimage_in_ideal(f, B.reduce(b * fx), E.I)
    c = preimage_in_ideal(f, B.reduce(b * b * fx), E.I)
    if a is None or c is None:
        raise ProkError("products do not lie in f(I); not an excision situation")
    one = A.poly.one()
    entries = ((A.reduce(one - a), x), (A.reduce(-c), A.reduce(one + a)))
    det = A.reduce(entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0])
    if det != one:
        raise ProkError(f"determinant {det} is not 1")
    for d in (entries[0][0], entries[1][1]):
        if not A.ideal_contains(E.I, d - one):
            raise ProkError("diagonal entry not congruent to 1")
    for o in (entries[0][1], entries[1][0]):
        if not A.ideal_contains(E.I, o):
            raise ProkError("off-diagonal entry outside the ideal")
    images = tuple(tuple(f.apply_poly(e) for e in row) for row in entries)
    return MennickeMatrix(b, x, entries, images, det)


# low degrees ------------------------------------------------------------------------

def _nilpotency(R, I, limit):
    J = R.ideal([1])
    for k in range(1, limit + 1):
        J = R.ideal_product(J, I)
        if R.ideal_is_zero(J):
            return k
    return None


def _unit_group_enumerate(R, I, limit=1 << 14):
    """Invariants of ``1 + I`` for a finite ring by enumeration."""
    p = R.base.p
    Imod = ideal_module(R, I.gens)
    real = Imod.realization()
    d = len(real.terms)
    if p ** d > limit:
        raise UnsupportedRing(f"1+I has {p}^{d} elements; enumeration limit exceeded")
    basis = [sum((t * g for t, g in zip(real.term_vector(i), I.gens)), R.poly.zero())
             for i in range(d)]
    basis = [R.reduce(b) for b in basis]
    elems = []
    for coeffs in iproduct(range(p), repeat=d):
        v = R.poly.one()
        for c, b in zip(coeffs, basis):
            if c:
                v = v + b * c
        elems.append(R.reduce(v))

    def power(u, n):
        out = R.poly.one()
        base = u
        while n:
            if n & 1:
                out = R.reduce(out * base)
            base = R.reduce(base * base)
            n >>= 1
        return out

    one = R.poly.one()
    counts = [1]
    k = 1
    while counts[-1] < len(elems):
        counts.append(sum(1 for u in elems if power(u, p ** k) == one))
        k += 1
    # number of cyclic factors of order >= p^k is log_p(N_k / N_{k-1})
    ge = []
    for a, b in zip(counts, counts[1:]):
        r = 0
        q = b // a
        while q > 1:
            q //= p
            r += 1
        ge.append(r)
    factors = []
    for k in range(len(ge)):
        nxt = ge[k + 1] if k + 1 < len(ge) else 0
        factors += [p ** (k + 1)] * (ge[k] - nxt)
    factors.sort()
    rels = [[d if i == j else 0 for j in range(len(factors))] for i, d in enumerate(factors)]
    return FGAbelianGroup(len(factors), rels), len(elems)


def k_low_rules(E, n):
    """Rule-based report for ``K_n`` with ``n <= 1``."""
    if n > 1:
        raise ProkError("low-degree rules cover n <= 1")
    if n <= 0:
        return {
            "degree": n,
            "rule": "Bass",
            "statement": f"K_{n}(A,I) -> K_{n}(B,I) is an isomorphism",
            "provenance": "cited-rule",
        }
    A, I = E.A, E.I
    if A.ideal_is_zero(I):
        return {"degree": 1, "rule": "trivial-ideal", "group": {"rank": 0, "torsion": []},
                "provenance": "computed"}
    basis = artinian_basis(A)
    if basis != "infinite" and A.base.is_field:
        dim = len(basis)
        nil = _nilpotency(A, I, dim + 1)
        local = all(_nilpotency(A, A.ideal([v]), dim + 1) for v in A.poly.gens())
        if nil is not None and local:
            if A.base.kind == "GF":
                group, size = _unit_group_enumerate(A, I)
                return {"degree": 1, "rule": "one-units", "method": "enumeration",
                        "order": size, "group": group.to_json(), "provenance": "computed"}
            d = len(ideal_module(A, I.gens).realization().terms)
            return {"degree": 1, "rule": "one-units", "method": "truncated-logarithm",
                    "nilpotency": nil, "group": {"field": str(A.base), "dimension": d},
                    "provenance": "computed"}
    if basis != "infinite" and not A.base.is_field:
        raise UnsupportedRing("one-unit groups are only computed over a field")
    gw = gw_birelative_k1(E)
    return {"degree": 1, "rule": "birelative-module", "group": gw.to_json(), "provenance": "computed"}


__all__ = [
    "ExcisionSituation",
    "GWModule",
    "MennickeMatrix",
    "MilnorSquare",
    "SwanSequence",
    "conductor",
    "gw_birelative_k1",
    "k_low_rules",
    "mennicke",
    "milnor_square",
    "power_situation",
    "swan_sequence",
    "validate_excision",
]
