"""Finitely presented commutative rings and homomorphisms between them."""

from dataclasses import dataclass, field

from .errors import InvalidHom, MissingData, ProkError, RingMismatch, Unrealizable
from .poly import submodule as sm
from .poly.domains import BaseRing, base_ring_from_name
from .poly.ideal import Ideal, element_colon, ideal_intersection
from .poly.polynomial import Polynomial, PolyRing
from .poly.staircase import standard_terms


class FPRing:
    """``base[vars] / relations``."""

    def __init__(self, base, variables, relations=()):
        if isinstance(base, str):
            base = base_ring_from_name(base)
        if not isinstance(base, BaseRing):
            raise ProkError(f"not a coefficient ring: {base!r}")
        self.base = base
        self.poly = PolyRing(base, variables)
        rels = Ideal(self.poly, [self.poly(r) for r in relations])
        # store the reduced basis so structurally equal rings compare equal
        self.relations = Ideal(self.poly, [sm.vec_poly(g, self.poly) for g in rels.gbasis().elems])

    @property
    def vars(self):
        return self.poly.vars

    @property
    def nvars(self):
        return self.poly.nvars

    @property
    def rels(self):
        return self.relations.gens

    def __eq__(self, other):
        return isinstance(other, FPRing) and self.poly == other.poly and self.rels == other.rels

    def __hash__(self):
        return hash((self.poly, self.rels))

    def __repr__(self):
        s = f"{self.base}[{','.join(self.vars)}]"
        if self.rels:
            s += "/(" + ", ".join(map(str, self.rels)) + ")"
        return s

    # elements -----------------------------------------------------------
    def reduce(self, p):
        """Canonical normal form of a polynomial representative."""
        p = self.poly(p)
        if not self.rels:
            return p
        return sm.vec_poly(self.relations.gbasis().reduce(sm.poly_vec(p)), self.poly)

    def __call__(self, x):
        if isinstance(x, RingElement):
            if x.ring != self:
                raise RingMismatch(f"{x.ring} vs {self}")
            return x
        return RingElement(self, self.reduce(x))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gens(self):
        return [self(g) for g in self.poly.gens()]

    def is_zero_ring(self):
        return self.relations.is_unit()

    def ideal(self, gens):
        """Ideal of this ring, represented in the ambient polynomial ring.

        Generators are reduced; the relations are implicit.
        """
        out = []
        for g in gens:
            if isinstance(g, RingElement):
                g = g.rep
            g = self.reduce(g)
            if not g.is_zero():
                out.append(g)
        return Ideal(self.poly, out)

    def full_ideal(self, I):
        """``I + relations`` in the polynomial ring."""
        return Ideal(self.poly, tuple(I.gens) + self.rels)

    def ideal_contains(self, I, f):
        if isinstance(f, RingElement):
            f = f.rep
        return self.full_ideal(I).contains(self.poly(f))

    def ideal_equal(self, I, J):
        return self.full_ideal(I) == self.full_ideal(J)

    def ideal_is_zero(self, I):
        return all(self.reduce(g).is_zero() for g in I.gens)

    def ideal_power(self, I, s):
        """``I^s`` with reduced, deduplicated generators."""
        J = self.ideal([1])
        for _ in range(s):
            J = self.ideal([f * g for f in J.gens for g in I.gens])
        return J

    def ideal_product(self, I, J):
        return self.ideal([f * g for f in I.gens for g in J.gens])

    def ideal_intersection(self, I, J):
        return self.ideal(ideal_intersection(I, J, self.rels).gens)

    def colon(self, I, g):
        """``(I : g)`` in this ring."""
        if isinstance(g, RingElement):
            g = g.rep
        return self.ideal(element_colon(I, self.poly(g), self.rels).gens)

    def quotient(self, I):
        return FPRing(self.base, self.vars, tuple(self.rels) + tuple(self.ideal(I.gens).gens))

    def trim_ideal(self, I):
        """Drop redundant generators (greedy, deterministic)."""
        vecs = sm.trim(self.poly, [(g,) for g in I.gens], 1, self.rels)
        return Ideal(self.poly, [v[0] for v in vecs])


class RingElement:
    __slots__ = ("ring", "rep")

    def __init__(self, ring, rep):
        self.ring = ring
        self.rep = rep

    def _other(self, o):
        if isinstance(o, RingElement):
            if o.ring != self.ring:
                raise RingMismatch(f"{o.ring} vs {self.ring}")
            return o.rep
        return self.ring.poly(o)

    def __add__(self, o):
        return self.ring(self.rep + self._other(o))

    __radd__ = __add__

    def __sub__(self, o):
        return self.ring(self.rep - self._other(o))

    def __rsub__(self, o):
        return self.ring(self._other(o) - self.rep)

    def __mul__(self, o):
        return self.ring(self.rep * self._other(o))

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring(-self.rep)

    def __pow__(self, n):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, RingElement):
            return self.ring == o.ring and self.rep == o.rep
        try:
            return self.rep == self.ring.reduce(o)
        except ProkError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.rep))

    def is_zero(self):
        return self.rep.is_zero()

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"RingElement({self.rep} in {self.ring})"


@dataclass
class FinitenessResult:
    """Outcome of a module-finiteness check.

    ``status``: True (certified), False (refuted, with ``failed`` naming the
    product that is not in the span) or None (inconclusive: budget).
    """

    status: object
    certificate: dict = field(default_factory=dict)
    failed: object = None
    reason: str = ""

    def __bool__(self):
        return self.status is True


class RingHom:
    """``source -> target`` given by the images of the source variables.

    ``module_gens`` optionally lists target polynomials generating the target
    as a source-module (required for conductor and ideal-of-B checks).
    """

    def __init__(self, source, target, images, module_gens=None, check=True):
        if source.base != target.base:
            raise RingMismatch("source and target need the same coefficient ring")
        if len(images) != source.nvars:
            raise InvalidHom(f"{len(images)} images for {source.nvars} source variables")
        self.source = source
        self.target = target
        self.images = tuple(target.reduce(target.poly(im.rep if isinstance(im, RingElement) else im))
                            for im in images)
        self.module_gens = None if module_gens is None else tuple(
            target.reduce(target.poly(m.rep if isinstance(m, RingElement) else m)) for m in module_gens)
        self._cache = {}
        if check:
            for r in source.rels:
                if not self.apply_poly(r).is_zero():
                    raise InvalidHom(f"relation {r} does not map to zero")

    def __repr__(self):
        maps = ", ".join(f"{v} -> {im}" for v, im in zip(self.source.vars, self.images))
        return f"RingHom({self.source} -> {self.target}: {maps})"

    def __eq__(self, other):
        return (isinstance(other, RingHom) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __hash__(self):
        return hash((self.source, self.target, self.images))

    def apply_poly(self, p):
        """Image of a source polynomial, reduced in the target."""
        p = self.source.poly(p)
        if not self.images:
            return self.target.reduce(self.target.poly.const(p.constant_coeff()))
        return self.target.reduce(p.compose(list(self.images), self.target.poly))

    def __call__(self, x):
        if isinstance(x, RingElement):
            x = x.rep
        return self.target(self.apply_poly(x))

    def with_module_gens(self, gens):
        return RingHom(self.source, self.target, self.images, gens, check=False)

    def is_identity(self):
        return self.source == self.target and all(
            im == g for im, g in zip(self.images, self.source.poly.gens()))

    # graph ring D[t, x]: target variables first ----------------------------
    def _graph_ring(self):
        if "graph_ring" not in self._cache:
            names = [f"_t{i}" for i in range(self.target.nvars)] + [f"_x{i}" for i in range(self.source.nvars)]
            self._cache["graph_ring"] = PolyRing(self.source.base, names)
        return self._cache["graph_ring"]

    def _embed_target(self, p):
        k = self.source.nvars
        return Polynomial(self._graph_ring(), {e + (0,) * k: c for e, c in p.terms.items()})

    def _embed_source(self, p):
        m = self.target.nvars
        return Polynomial(self._graph_ring(), {(0,) * m + e: c for e, c in p.terms.items()})

    def _graph_gens(self):
        G = self._graph_ring()
        gens = [self._embed_target(r) for r in self.target.rels]
        for i, im in enumerate(self.images):
            gens.append(G.gen(self.target.nvars + i) - self._embed_target(im))
        return gens

    def _elim_basis(self, extra=()):
        from .poly.orders import MonomialOrder

        order = MonomialOrder("elim", self.target.nvars)
        gens = self._graph_gens() + list(extra)
        return sm.gbasis(self.source.base, [sm.poly_vec(g) for g in gens], ("pot", order))

    def _to_source(self, p):
        m = self.target.nvars
        return Polynomial(self.source.poly, {e[m:]: c for e, c in p.terms.items()})

    def kernel(self):
        return hom_kernel(self)

    def preimage(self, b):
        """A source polynomial mapping to ``b``, or None when ``b`` is not in the image."""
        if isinstance(b, RingElement):
            b = b.rep
        b = self.target.reduce(self.target.poly(b))
        G = self._elim_basis()
        r = G.reduce(sm.poly_vec(self._embed_target(b)))
        m = self.target.nvars
        if any(any(e[:m]) for (_, e) in r):
            return None
        return self.source.reduce(self._to_source(sm.vec_poly(r, self._graph_ring())))

    def preimage_ideal(self, J_gens):
        """``f^{-1}(J)`` for target generators ``J_gens``."""
        extra = [self._embed_target(self.target.poly(g)) for g in J_gens]
        G = self._elim_basis(extra)
        m = self.target.nvars
        out = []
        for g in G.elems:
            if all(not any(e[:m]) for (_, e) in g):
                out.append(self._to_source(sm.vec_poly(g, self._graph_ring())))
        return self.source.ideal(out)


def identity_hom(R, module_gens=(1,)):
    return RingHom(R, R, R.poly.gens(), module_gens=module_gens)


def hom_kernel(f):
    """Generators of ``ker f`` as an ideal of the source (graph ideal + elimination)."""
    if "kernel" not in f._cache:
        f._cache["kernel"] = f.preimage_ideal([])
    return f._cache["kernel"]


def subring_membership(f, b):
    """Is ``b`` in ``f(source)``?  Returns the preimage polynomial or None."""
    return f.preimage(b)


# A-module structure of the target -------------------------------------------

def _amodule_data(f, gens):
    """Module Gröbner basis presenting span_A(gens) inside B.

    Vectors live in ``D[t, x]^(1+N)``: position 0 holds the B-element, position
    ``k+1`` tags the A-coefficient of ``gens[k]``.  The order eliminates the
    t-variables and position 0.
    """
    key = ("amodule", tuple(gens))
    if key in f._cache:
        return f._cache[key]
    N = len(gens)
    vecs = []
    one = f.source.base.one
    zero_exp = (0,) * (f.target.nvars + f.source.nvars)
    for k, m in enumerate(gens):
        v = sm.poly_vec(f._embed_target(m), 0)
        v[(k + 1, zero_exp)] = one
        vecs.append(v)
    for h in f._graph_gens():
        vecs.append(sm.poly_vec(h, 0))
    G = sm.gbasis(f.source.base, vecs, ("blockelim", f.target.nvars, 1))
    f._cache[key] = G
    return G


def _amodule_lift(f, gens, b):
    """A-coefficients ``a_k`` (source polynomials) with ``b = sum f(a_k) gens_k``."""
    G = _amodule_data(f, gens)
    b = f.target.reduce(f.target.poly(b))
    r = G.reduce(sm.poly_vec(f._embed_target(b), 0))
    m = f.target.nvars
    for (pos, e) in r:
        if pos == 0 or any(e[:m]):
            return None
    R = f._graph_ring()
    comps = sm.from_vec(r, R, len(gens), offset=1)
    return tuple(f.source.reduce(-f._to_source(c)) for c in comps)


def amodule_relations(f, gens):
    """Relations among ``gens`` over the source: kernel of ``A^N -> B``."""
    G = _amodule_data(f, gens)
    m = f.target.nvars
    R = f._graph_ring()
    out = []
    for g, (pos, e) in zip(G.elems, G.lts):
        if pos == 0 or any(e[:m]):
            continue
        comps = sm.from_vec(g, R, len(gens), offset=1)
        vec = tuple(f.source.reduce(f._to_source(c)) for c in comps)
        if any(not p.is_zero() for p in vec):
            out.append(vec)
    return out


def is_module_finite(f, gens=None):
    """Is the target generated by ``gens`` as a source-module?"""
    from .errors import BudgetExceeded

    if gens is None:
        gens = f.module_gens
    if gens is None:
        raise MissingData("module generators are required")
    gens = tuple(f.target.reduce(f.target.poly(g.rep if isinstance(g, RingElement) else g)) for g in gens)
    cert = {}
    try:
        needed = [("1", f.target.poly.one())]
        for j, t in enumerate(f.target.poly.gens()):
            for k, m in enumerate(gens):
                needed.append((f"{f.target.vars[j]}*({m})", t * m))
        for label, b in needed:
            coeffs = _amodule_lift(f, gens, b)
            if coeffs is None:
                return FinitenessResult(False, cert, failed=label,
                                        reason=f"{label} is not in the span of the generators")
            cert[label] = coeffs
    except BudgetExceeded as exc:
        return FinitenessResult(None, cert, reason=str(exc))
    return FinitenessResult(True, cert)


def _require_gens(f, module_gens):
    gens = module_gens if module_gens is not None else f.module_gens
    if gens is None:
        raise MissingData("module-finiteness data (generators of B over A) is required")
    return tuple(f.target.reduce(f.target.poly(g.rep if isinstance(g, RingElement) else g)) for g in gens)


def subring_image_membership(f, b, I, module_gens=None):
    """Decide ``b in f(I)`` for an ideal ``I`` of the source."""
    _require_gens(f, module_gens)
    if isinstance(b, RingElement):
        b = b.rep
    b = f.target.reduce(f.target.poly(b))
    if b.is_zero():
        return True
    a = f.preimage(b)
    if a is None:
        return False
    K = hom_kernel(f)
    return f.source.ideal_contains(Ideal(f.source.poly, I.gens + K.gens), a)


def preimage_in_ideal(f, b, I):
    """Source element ``a`` in ``I`` with ``f(a) = b`` (None if there is none)."""
    if isinstance(b, RingElement):
        b = b.rep
    a = f.preimage(b)
    if a is None:
        return None
    K = hom_kernel(f)
    R = f.source
    gens = [(g,) for g in I.gens] + [(k,) for k in K.gens]
    coeffs = sm.lift(R.poly, gens, 1, R.rels, (a,))
    if coeffs is None:
        return None
    out = R.poly.zero()
    for c, g in zip(coeffs[: len(I.gens)], I.gens):
        out = out + c * g
    return R.reduce(out)


# Artinian bases ------------------------------------------------------------

@dataclass(frozen=True)
class ArtinianBasis:
    """Monomial basis of a ring that is finite over its coefficient ring.

    ``moduli[i]`` is 0 over a field; over ZZ it is the additive order bound of
    the i-th monomial (the ring is finite, so never 0).
    """

    ring: FPRing
    monomials: tuple
    moduli: tuple

    def __len__(self):
        return len(self.monomials)

    @property
    def cardinality(self):
        """Number of elements, or None when the coefficient field is infinite."""
        base = self.ring.base
        if base.kind == "QQ":
            return None
        if base.kind == "GF":
            return base.p ** len(self.monomials)
        n = 1
        for d in self.moduli:
            n *= d
        return n


def artinian_basis(R):
    """Standard-monomial basis of ``R`` or the string ``"infinite"``."""
    G = R.relations.gbasis()
    try:
        terms = standard_terms(G, 1, R.nvars)
    except Unrealizable:
        return "infinite"
    if R.base.kind == "ZZ" and any(mod == 0 for _, _, mod in terms):
        return "infinite"
    terms = terms[::-1]
    monos = tuple(R.poly.monomial(e) for _, e, _ in terms)
    return ArtinianBasis(R, monos, tuple(mod for _, _, mod in terms))


def conductor(f, module_gens=None):
    """``Ann_A(B/A)`` for an injective ``f`` with A-module generators of B."""
    gens = _require_gens(f, module_gens)
    one = f.target.poly.one()
    gens = tuple(g for g in gens if g != one)
    gens = (one,) + gens
    rels = amodule_relations(f, gens)
    A = f.source
    N = len(gens)
    zero = A.poly.zero()
    e0 = tuple(A.poly.one() if i == 0 else zero for i in range(N))
    U = list(rels) + [e0]
    result = None
    for k in range(1, N):
        ek = tuple(A.poly.one() if i == k else zero for i in range(N))
        syz = sm.syzygies(A.poly, [ek] + U, N, A.rels)
        col = A.ideal([v[0] for v in syz])
        result = col if result is None else A.ideal_intersection(result, col)
    if result is None:
        return A.ideal([1])
    return A.trim_ideal(result)
