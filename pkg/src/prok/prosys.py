"""Pro systems indexed by s >= 1, bounded pro-zero and pro-iso certification,
ideal chains, and the criteria chain for pro excision."""

from dataclasses import dataclass, field

from .abgrp import FGAbelianGroup, GroupMap, identity_map, maps_equal, solve, transpose
from .errors import BoundExhausted, BudgetExceeded, MissingData, NotInIdeal, ProkError
from .excision import (
    gw_birelative_k1,
    power_situation,
    swan_sequence,
)
from .fpmod import (
    ModuleMap,
    free_resolution,
    induced_tor_map,
    is_regular_sequence,
    quotient_module,
    tor,
)
from .fpring import FPRing, RingHom
from .poly import submodule as sm

DEFAULT_PRO_BUDGET = (3, 12)


def _identity(level):
    if isinstance(level, FGAbelianGroup):
        return identity_map(level)
    R = level.ring.poly
    n = level.ngens
    M = [[R.one() if i == j else R.zero() for j in range(n)] for i in range(n)]
    return ModuleMap(level, level, M, check=False)


def _maps_equal(f, g):
    if isinstance(f, GroupMap):
        return maps_equal(f, g)
    for j in range(f.source.ngens):
        diff = tuple(a - b for a, b in zip(f.column(j), g.column(j)))
        if not f.target.contains(diff):
            return False
    return True


def _surviving(f):
    """Indices of source generators with nonzero image."""
    out = []
    for j in range(f.source.ngens):
        col = f.column(j)
        zero = f.target.contains_relation(col) if isinstance(f, GroupMap) else f.target.contains(col)
        if not zero:
            out.append(j)
    return out


def _level_is_zero(level):
    if isinstance(level, FGAbelianGroup):
        return level.is_trivial()
    return level.is_zero()


def _describe_level(level):
    if isinstance(level, FGAbelianGroup):
        return level.to_json()
    return level.describe()


class ProSystem:
    """Lazily evaluated levels and transitions ``r -> s`` (``r >= s``).

    ``canonical(s)`` optionally proposes the transition index expected to kill
    level ``s``; certification still checks it.
    """

    def __init__(self, kind, level, transition, canonical=None, recipe=None):
        self.kind = kind
        self._level = level
        self._transition = transition
        self.canonical = canonical
        self.recipe = recipe or {}
        self._levels = {}
        self._maps = {}

    def __repr__(self):
        return f"ProSystem({self.kind})"

    def level(self, s):
        if s < 1:
            raise ProkError("levels are indexed by s >= 1")
        if s not in self._levels:
            self._levels[s] = self._level(s)
        return self._levels[s]

    def transition(self, r, s):
        if r < s:
            raise ProkError("transitions go from a higher to a lower index")
        if (r, s) not in self._maps:
            if r == s:
                self._maps[(r, s)] = _identity(self.level(s))
            else:
                self._maps[(r, s)] = self._transition(r, s)
        return self._maps[(r, s)]

    def is_zero_transition(self, r, s):
        return self.transition(r, s).is_zero()

    def check_functoriality(self, q, r, s):
        """``transition(q -> s) == transition(r -> s) ∘ transition(q -> r)``."""
        direct = self.transition(q, s)
        composite = self.transition(r, s).compose(self.transition(q, r))
        return _maps_equal(direct, composite)


@dataclass
class ProZeroCertificate:
    S: int
    r_max: int
    status: str                      # certified | refuted | budget
    witness: dict = field(default_factory=dict)
    least: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    system: object = None

    kind = "pro-zero"

    @property
    def certified(self):
        return self.status == "certified"

    def revalidate(self):
        """Recompute every witnessed transition from scratch and check it is zero."""
        if self.system is None:
            return False
        for s, r in self.witness.items():
            self.system._maps.pop((r, s), None)
            if not self.system.is_zero_transition(r, s):
                return False
        return True

    def to_json(self):
        out = {
            "kind": "pro-zero",
            "S": self.S,
            "r_max": self.r_max,
            "status": self.status,
            "witness": {str(s): r for s, r in sorted(self.witness.items())},
            "least": {str(s): r for s, r in sorted(self.least.items())},
        }
        if self.failures:
            out["failures"] = {str(s): v for s, v in sorted(self.failures.items())}
        return out


def pro_zero_certify(P, S_max=None, r_max=None):
    """For each ``s <= S_max`` find ``r <= r_max`` with ``transition(r -> s) = 0``.

    ``least[s]`` is the smallest such ``r``.  ``witness[s]`` is the system's
    canonical index when that map is zero and within the bound, else the least.
    """
    S_max = S_max or DEFAULT_PRO_BUDGET[0]
    r_max = r_max or DEFAULT_PRO_BUDGET[1]
    witness, least, failures = {}, {}, {}
    status = "certified"
    for s in range(1, S_max + 1):
        try:
            found = None
            for r in range(s, r_max + 1):
                if P.is_zero_transition(r, s):
                    found = r
                    break
            if found is None:
                top = P.transition(r_max, s) if r_max >= s else None
                failures[s] = {
                    "reason": "no zero transition up to the bound",
                    "r_max": r_max,
                    "surviving": _surviving(top) if top is not None else [],
                    "level": _describe_level(P.level(s)),
                }
                status = "refuted"
                continue
            least[s] = found
            w = found
            if P.canonical is not None:
                c = P.canonical(s)
                if found <= c <= r_max and P.is_zero_transition(c, s):
                    w = c
            witness[s] = w
        except BudgetExceeded as exc:
            failures[s] = {"reason": "budget", "detail": str(exc)}
            status = "budget"
            break
    return ProZeroCertificate(S_max, r_max, status, witness, least, failures, P)


# level maps and pro-isomorphisms -----------------------------------------------------

class LevelMap:
    """A levelwise map ``P -> Q`` of systems of groups."""

    def __init__(self, source, target, component):
        self.source = source
        self.target = target
        self._component = component
        self._cache = {}

    def at(self, s):
        if s not in self._cache:
            self._cache[s] = self._component(s)
        return self._cache[s]


def kernel_system(phi):
    P = phi.source

    def level(s):
        return phi.at(s).kernel_with_basis()

    def transition(r, s):
        Kr, Lr = system._kb(r)
        Ks, Ls = system._kb(s)
        T = P.transition(r, s)
        cols = []
        for v in Lr:
            w = T.apply(v)
            if not Ls:
                cols.append([])
                continue
            x = solve(transpose(Ls), w, Ks.domain)
            if x is None:
                # w is in the kernel lattice only up to target relations
                x = _solve_mod(Ls, w, P.level(s))
            cols.append(x)
        M = [[c[i] for c in cols] for i in range(Ks.ngens)]
        return GroupMap(Kr, Ks, M, check=False)

    system = ProSystem("kernel", lambda s: system._kb(s)[0], transition, recipe={"of": P.kind})
    kb = {}

    def _kb(s):
        if s not in kb:
            kb[s] = level(s)
        return kb[s]

    system._kb = _kb
    return system


def _solve_mod(L, w, G):
    """Coefficients of ``w`` on the lattice basis ``L`` modulo the relations of ``G``."""
    gens = list(L) + list(G.relations)
    x = solve(transpose(gens), w, G.domain)
    if x is None:
        raise ProkError("transition does not preserve the kernel")
    return x[: len(L)]


def cokernel_system(phi):
    Q = phi.target

    def level(s):
        return phi.at(s).cokernel()

    def transition(r, s):
        T = Q.transition(r, s)
        return GroupMap(system.level(r), system.level(s), T.matrix, check=False)

    system = ProSystem("cokernel", level, transition, recipe={"of": Q.kind})
    return system


@dataclass
class ProIsoCertificate:
    kernel: ProZeroCertificate
    cokernel: ProZeroCertificate

    @property
    def status(self):
        if self.kernel.status == "certified" and self.cokernel.status == "certified":
            return "certified"
        if "budget" in (self.kernel.status, self.cokernel.status):
            return "budget"
        return "refuted"

    def to_json(self):
        return {"kind": "pro-iso", "status": self.status,
                "kernel": self.kernel.to_json(), "cokernel": self.cokernel.to_json()}


def pro_iso_certify(phi, S_max=None, r_max=None):
    return ProIsoCertificate(pro_zero_certify(kernel_system(phi), S_max, r_max),
                             pro_zero_certify(cokernel_system(phi), S_max, r_max))


# ideal chains ---------------------------------------------------------------------------

class IdealChain:
    def __init__(self, ring, chain, name=""):
        self.ring = ring
        self._chain = chain
        self._cache = {}
        self.name = name

    def __call__(self, s):
        if s not in self._cache:
            self._cache[s] = self._chain(s)
        return self._cache[s]

    def check_decreasing(self, S):
        R = self.ring
        return all(R.full_ideal(self(s)).contains_ideal(self(s + 1)) for s in range(1, S))


def powers_chain(R, I, step=1):
    return IdealChain(R, lambda s: R.ideal_power(I, step * s))


def _ideal_subset(R, J, K):
    F = R.full_ideal(K)
    return all(F.contains(g) for g in J.gens)


@dataclass
class IntertwineResult:
    status: str
    forward: dict
    backward: dict
    failed_at: object = None

    def to_json(self):
        return {"kind": "intertwine", "status": self.status,
                "forward": {str(k): v for k, v in self.forward.items()},
                "backward": {str(k): v for k, v in self.backward.items()},
                "failed_at": self.failed_at}


def intertwine_check(C1, C2, bound, r_max=None):
    """Least ``r`` with ``C1(r) ⊆ C2(s)`` and least ``r'`` with ``C2(r') ⊆ C1(s)``."""
    r_max = r_max or 4 * bound
    R = C1.ring
    fwd, bwd = {}, {}
    for s in range(1, bound + 1):
        for table, a, b in ((fwd, C1, C2), (bwd, C2, C1)):
            hit = None
            for r in range(1, r_max + 1):
                if _ideal_subset(R, a(r), b(s)):
                    hit = r
                    break
            if hit is None:
                return IntertwineResult("bound-exhausted", fwd, bwd, s)
            table[s] = hit
    return IntertwineResult("certified", fwd, bwd)


# canonical systems ----------------------------------------------------------------------

def _lift_ideal_gens(R, src, tgt):
    """Columns expressing each ``src`` generator over the ``tgt`` generators."""
    cols = []
    vecs = [(g,) for g in tgt]
    for g in src:
        c = sm.lift(R.poly, vecs, 1, R.rels, (g,))
        if c is None:
            raise NotInIdeal(f"{g} is not in the target ideal")
        cols.append(c)
    return cols


def gw_system(E):
    """``{Ω¹_{B/A} ⊗_B I^s B / I^{2s} B}_s`` with the maps induced by ``I^r ⊆ I^s``."""
    B = E.B
    situations = {}

    def sit(s):
        if s not in situations:
            situations[s] = power_situation(E, s)
        return situations[s]

    def level(s):
        return gw_birelative_k1(sit(s)).module

    def transition(r, s):
        Er, Es = sit(r), sit(s)
        src = Er.image_gens()
        tgt = Es.image_gens()
        cols = _lift_ideal_gens(B, src, tgt)
        nb = B.nvars
        qr, qs = len(src), len(tgt)
        z = B.poly.zero()
        M = [[z] * (nb * qr) for _ in range(nb * qs)]
        for j in range(nb):
            for l, c in enumerate(cols):
                for l2 in range(qs):
                    M[j * qs + l2][j * qr + l] = c[l2]
        return ModuleMap(system.level(r), system.level(s), M)

    system = ProSystem("gw", level, transition, canonical=lambda s: 2 * s,
                       recipe={"situation": E.name})
    system.situation = sit
    return system


def tor_system(A, I, n):
    """``{Tor_n^A(A/I^s, A/I^s)}_s`` with the maps induced by ``A/I^r -> A/I^s``."""
    mods = {}

    def quo(s):
        if s not in mods:
            mods[s] = quotient_module(A, A.ideal_power(I, s).gens)
        return mods[s]

    def level(s):
        return tor(quo(s), quo(s), n)

    def transition(r, s):
        return induced_tor_map(quo(r), quo(s), n)

    return ProSystem("tor", level, transition, canonical=lambda s: 2 * s,
                     recipe={"degree": n, "ring": str(A), "ideal": [str(g) for g in I.gens]})


def constant_system(G):
    return ProSystem("constant", lambda s: G, lambda r, s: identity_map(G))


def swan_source_system(E):
    """Realized Swan–Vorst sources with the level map onto the realized GW system."""
    gw = gw_system(E)
    seqs = {}

    def seq(s):
        if s not in seqs:
            seqs[s] = swan_sequence(gw.situation(s))
        return seqs[s]

    def level(s):
        return seq(s).source

    def transition(r, s):
        return _swan_source_transition(E, gw, r, s)

    src = ProSystem("swan-source", level, transition, canonical=lambda s: 2 * s,
                    recipe={"situation": E.name})
    real_gw = realized_system(gw)
    phi = LevelMap(src, real_gw, lambda s: seq(s).swan_vorst)
    src.level_map = phi
    return src


def realized_system(P):
    """The same system with levels replaced by their realizations."""

    def level(s):
        return P.level(s).realization().group

    def transition(r, s):
        return P.transition(r, s).realize()

    return ProSystem(P.kind + "-realized", level, transition, canonical=P.canonical,
                     recipe=P.recipe)


def _swan_source_transition(E, gw, r, s):
    """``B/A ⊗ I^r/I^{2r} -> B/A ⊗ I^s/I^{2s}``: identity on the first factor."""
    from .excision import cokernel_module
    from .fpmod import ideal_module

    A = E.A
    Er, Es = gw.situation(r), gw.situation(s)
    quot, _ = cokernel_module(E)
    q_real = quot.realization()

    def conA(Ek):
        g = list(Ek.I.gens)
        sq = [A.reduce(a * b) for i, a in enumerate(g) for b in g[i:]]
        return ideal_module(A, g, sq)

    cr, cs = conA(Er), conA(Es)
    cols = _lift_ideal_gens(A, list(Er.I.gens), list(Es.I.gens))
    Mz = [[cols[j][i] for j in range(cr.ngens)] for i in range(cs.ngens)]
    inner = ModuleMap(cr, cs, Mz).realize()
    n1 = len(q_real.terms)
    n2r, n2s = inner.source.ngens, inner.target.ngens
    D = inner.domain
    big = [[D.zero] * (n1 * n2r) for _ in range(n1 * n2s)]
    for i in range(n1):
        for a in range(n2s):
            for b in range(n2r):
                big[i * n2s + a][i * n2r + b] = inner.matrix[a][b]
    seq_r = swan_sequence(Er)
    seq_s = swan_sequence(Es)
    return GroupMap(seq_r.source, seq_s.source, big)


# unitalization Tor ----------------------------------------------------------------------

class UnitalizationPresentation:
    """User-supplied rings ``U_s`` presenting ``ZZ ⋉ I^s``.

    ``level(s)`` returns an injective RingHom ``U_s -> C`` into a common ring
    ``C`` whose source variables generate the augmentation ideal.
    Transitions ``U_r -> U_s`` are obtained by subring preimages in ``C``.
    """

    def __init__(self, level, name=""):
        self._level = level
        self._cache = {}
        self.name = name

    def embedding(self, s):
        if s not in self._cache:
            self._cache[s] = self._level(s)
        return self._cache[s]

    def transition_hom(self, r, s):
        er, es = self.embedding(r), self.embedding(s)
        imgs = []
        for im in er.images:
            pre = es.preimage(im)
            if pre is None:
                raise ProkError(f"{im} is not in the level-{s} ring")
            imgs.append(pre)
        return RingHom(er.source, es.source, imgs)


def semigroup_unitalization(s, base="ZZ"):
    """``ZZ ⋉ (t)^s ≅ ZZ[t^s, ..., t^(2s-1)] ⊆ ZZ[t]``."""
    from .fpring import hom_kernel

    C = FPRing(base, ["t"])
    names = [f"u{i}" for i in range(s)]
    free = FPRing(base, names)
    images = [f"t^{s + i}" for i in range(s)]
    K = hom_kernel(RingHom(free, C, images))
    U = FPRing(base, names, K.gens)
    return RingHom(U, C, images)


def _augment(R, p):
    return R.base(p.constant_coeff())


def _integer_homology(d_n, d_n1, rn, rn1, D):
    """``ker d_n / im d_{n+1}`` for integer matrices given as column lists."""
    src = FGAbelianGroup(rn, (), D)
    tgt = FGAbelianGroup(rn1, (), D)
    Mn = [[c[i] for c in d_n] for i in range(rn1)] if rn1 else []
    if rn1 and rn:
        K, L = GroupMap(src, tgt, Mn, check=False).kernel_with_basis()
    else:
        L = [[D.one if i == j else D.zero for i in range(rn)] for j in range(rn)]
    rels = []
    for col in d_n1:
        if not L:
            break
        x = solve(transpose(L), list(col), D)
        if x is None:
            raise ProkError("boundary outside the cycles")
        rels.append(x)
    return FGAbelianGroup(len(L), rels, D), L


def unitalization_tor_system(pres, n):
    """``{Tor_n^{U_s}(ZZ, ZZ)}_s`` with maps induced by ``U_r -> U_s``."""
    data = {}

    def resolution(s):
        if s not in data:
            U = pres.embedding(s).source
            M = quotient_module(U, U.poly.gens())
            res = free_resolution(M, n + 1)
            ev = lambda cols: [[_augment(U, p) for p in c] for c in cols]
            H, L = _integer_homology(ev(res.boundary(n)) if n >= 1 else [],
                                     ev(res.boundary(n + 1)), res.rank(n),
                                     res.rank(n - 1) if n >= 1 else 0, U.base)
            data[s] = (U, res, H, L)
        return data[s]

    def level(s):
        return resolution(s)[2]

    def transition(r, s):
        Ur, resF, Hr, Lr = resolution(r)
        Us, resG, Hs, Ls = resolution(s)
        g = pres.transition_hom(r, s)
        phi = [[(Us.poly.one(),)]]
        for k in range(1, n + 1):
            prev = phi[-1]
            cols = []
            for col in resF.boundary(k):
                mapped = [g.apply_poly(p) for p in col]
                tgt = [Us.poly.zero()] * resG.rank(k - 1)
                for a, c in zip(mapped, prev):
                    for i in range(resG.rank(k - 1)):
                        tgt[i] = tgt[i] + a * c[i]
                tgt = tuple(Us.reduce(p) for p in tgt)
                if all(p.is_zero() for p in tgt):
                    cols.append(tuple(Us.poly.zero() for _ in range(resG.rank(k))))
                    continue
                lift = sm.lift(Us.poly, list(resG.boundary(k)), resG.rank(k - 1), Us.rels, tgt)
                if lift is None:
                    raise ProkError("chain map does not lift")
                cols.append(tuple(lift))
            phi.append(cols)
        En = [[_augment(Us, p) for p in c] for c in phi[n]]
        D = Us.base
        out = []
        for v in Lr:
            w = [sum(v[j] * En[j][i] for j in range(len(v))) for i in range(resG.rank(n))]
            if not Ls:
                out.append([])
                continue
            x = solve(transpose(Ls), w, D)
            if x is None:
                raise ProkError("induced map leaves the cycles")
            out.append(x)
        M = [[c[i] for c in out] for i in range(Hs.ngens)]
        return GroupMap(Hr, Hs, M, check=False)

    return ProSystem("unitalization-tor", level, transition, canonical=lambda s: 2 * s,
                     recipe={"degree": n, "presentation": pres.name})


def build_system(kind, *args, **kw):
    if kind == "gw":
        return gw_system(*args, **kw)
    if kind == "tor":
        return tor_system(*args, **kw)
    if kind == "unitalization-tor":
        pres = kw.pop("presentation", None) if "presentation" in kw else (args[0] if args else None)
        if pres is None:
            raise MissingData("a presentation of the unitalization is required")
        n = kw.get("n", args[1] if len(args) > 1 else 1)
        return unitalization_tor_system(pres, n)
    if kind == "swan-source":
        return swan_source_system(*args, **kw)
    if kind == "constant":
        return constant_system(*args, **kw)
    raise ProkError(f"unknown system kind {kind!r}")


# criteria chain ---------------------------------------------------------------------------

def criteria_report(E, n_max=2, S_max=None, r_max=None, unitalization=None):
    """Evaluate the implication chain bottom-up and label each layer."""
    S_max = S_max or DEFAULT_PRO_BUDGET[0]
    r_max = r_max or DEFAULT_PRO_BUDGET[1]
    A, I = E.A, E.I
    layers = []
    layers.append({"layer": 1, "name": "noetherian", "value": True, "status": "structural",
                   "provenance": "structural"})
    try:
        reg = is_regular_sequence(A, list(I.gens))
        layers.append({"layer": 2, "name": "quasiregular", "value": reg,
                       "test": "regular sequence on the given generators (sufficient)",
                       "status": "computed", "provenance": "computed"})
    except BudgetExceeded as exc:
        reg = False
        layers.append({"layer": 2, "name": "quasiregular", "value": None, "status": "budget",
                       "detail": str(exc), "provenance": "computed"})
    certs = {}
    status3 = "certified"
    for n in range(1, n_max + 1):
        cert = pro_zero_certify(tor_system(A, I, n), S_max, r_max)
        certs[n] = cert
        if cert.status != "certified":
            status3 = cert.status if status3 == "certified" else status3
    layers.append({"layer": 3, "name": "tor-pro-vanishing", "degrees": list(range(1, n_max + 1)),
                   "status": status3, "value": status3 == "certified",
                   "certificates": {str(n): c.to_json() for n, c in certs.items()},
                   "provenance": "computed"})
    if unitalization is not None:
        ucerts = {}
        ustatus = "certified"
        for n in range(1, n_max + 1):
            c = pro_zero_certify(unitalization_tor_system(unitalization, n), S_max, r_max)
            ucerts[n] = c
            if c.status != "certified":
                ustatus = c.status
        layers.append({"layer": 4, "name": "unitalization-tor-pro-vanishing", "status": ustatus,
                       "value": ustatus == "certified",
                       "certificates": {str(n): c.to_json() for n, c in ucerts.items()},
                       "provenance": "computed"})
    else:
        layers.append({"layer": 4, "name": "unitalization-tor-pro-vanishing",
                       "status": "not-requested", "value": None, "provenance": "computed"})
    layers.append({"layer": 5, "name": "geisser-hesselholt", "status": "cited",
                   "statement": "pro-vanishing of unitalization Tor implies pro excision",
                   "provenance": "cited-rule"})
    layers.append({"layer": 6, "name": "pro-excision", "status": "cited",
                   "statement": "the relative K-groups of the powers of I form a pro-isomorphism",
                   "provenance": "cited-rule"})
    return {"kind": "criteria", "situation": E.name, "layers": layers,
            "certificates": certs}


# Artin–Rees and reductions ------------------------------------------------------------------

@dataclass
class ArtinReesWitness:
    s: int
    torsion_exponent: int
    minimality: object      # nonzero element of I^(s-1) ∩ K, or None when s = 1 and K = 0

    def to_json(self):
        return {"kind": "artin-rees", "s": self.s, "torsion_exponent": self.torsion_exponent,
                "minimality_witness": None if self.minimality is None else str(self.minimality)}


def artin_rees_witness(R, I, K, bound):
    """Least ``s <= bound`` with ``I^s ∩ K = 0`` (K must be killed by a power of I)."""
    if R.ideal_is_zero(K):
        return ArtinReesWitness(1, 0, None)
    tors = None
    for k in range(1, bound + 1):
        if R.ideal_is_zero(R.ideal_product(R.ideal_power(I, k), K)):
            tors = k
            break
    if tors is None:
        raise BoundExhausted(f"K is not killed by I^k for k <= {bound}")
    prev = K  # I^0 ∩ K
    for s in range(1, bound + 1):
        meet = R.ideal_intersection(R.ideal_power(I, s), K)
        if R.ideal_is_zero(meet):
            wit = next(R.reduce(g) for g in prev.gens if not R.reduce(g).is_zero())
            return ArtinReesWitness(s, tors, wit)
        prev = meet
    raise BoundExhausted(f"no s <= {bound} with I^s ∩ K = 0")


@dataclass
class ReductionResult:
    n: object
    status: str
    bound: int

    def to_json(self):
        return {"kind": "reduction", "n": self.n, "status": self.status, "bound": self.bound}


def reduction_index(R, Jp, J, bound=6):
    """Least ``n`` in ``1..bound`` with ``J'·J^n = J^(n+1)``."""
    if not _ideal_subset(R, Jp, J):
        raise NotInIdeal("J' is not contained in J")
    Jn = J
    for n in range(1, bound + 1):
        Jn1 = R.ideal_product(Jn, J)
        if R.ideal_equal(R.ideal_product(Jp, Jn), Jn1):
            return ReductionResult(n, "certified", bound)
        Jn = Jn1
    return ReductionResult(None, "bound-exhausted", bound)


__all__ = [
    "IdealChain",
    "LevelMap",
    "ProSystem",
    "ProZeroCertificate",
    "UnitalizationPresentation",
    "artin_rees_witness",
    "build_system",
    "criteria_report",
    "intertwine_check",
    "pro_iso_certify",
    "pro_zero_certify",
    "reduction_index",
    "semigroup_unitalization",
    "unitalization_tor_system",
]
