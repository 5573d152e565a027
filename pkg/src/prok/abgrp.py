"""Finitely generated abelian groups (and finite-dimensional vector spaces)
presented by matrices, with Smith normal form as the workhorse.

Conventions: a group on ``n`` generators is ``D^n / rowspace(relations)``
where ``D`` is ZZ or a field.  Elements are length-``n`` tuples.  A map
``G -> H`` is an ``H.ngens x G.ngens`` matrix acting on column vectors, so
column ``j`` is the image of generator ``j``.
"""

from .errors import ProkError
from .poly.domains import ZZ


def _ident(n, D):
    return [[D.one if i == j else D.zero for j in range(n)] for i in range(n)]


def smith_normal_form(M, domain=ZZ):
    """Return ``(S, U, V)`` with ``U*M*V == S``.

    ``U`` and ``V`` are invertible over ``domain``; ``S`` is diagonal with
    ``d1 | d2 | ...``, all nonnegative (over a field: 0 or 1).
    """
    D = domain
    m = len(M)
    n = len(M[0]) if m else 0
    S = [[D(x) for x in row] for row in M]
    U = _ident(m, D)
    V = _ident(n, D)
    norm = D.euclid_norm

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in S:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        S[dst] = [D.red(a + c * b) for a, b in zip(S[dst], S[src])]
        U[dst] = [D.red(a + c * b) for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for R in S:
            R[dst] = D.red(R[dst] + c * R[src])
        for R in V:
            R[dst] = D.red(R[dst] + c * R[src])

    def quo(a, b):
        if D.is_field:
            return D.div(a, b)
        return a // b

    t = 0
    while t < min(m, n):
        # smallest nonzero pivot in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] != 0 and (best is None or norm(S[i][j]) < norm(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t] != 0:
                    add_row(t, i, -quo(S[i][t], p))
                    if S[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if S[t][j] != 0:
                    add_col(t, j, -quo(S[t][j], p))
                    if S[t][j] != 0:
                        dirty = True
            if dirty:
                # a remainder is smaller than the pivot: move it into place
                best = None
                for i in range(t, m):
                    if S[i][t] != 0 and (best is None or norm(S[i][t]) < norm(S[best][t])):
                        best = i
                if best != t:
                    swap_rows(t, best)
                    continue
                bc = None
                for j in range(t, n):
                    if S[t][j] != 0 and (bc is None or norm(S[t][j]) < norm(S[t][bc])):
                        bc = j
                swap_cols(t, bc)
                continue
            # divisibility of the rest of the block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if not D.divides(p, S[i][j]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, D.one)
        u = D.normal_unit(S[t][t])
        if u != D.one:
            S[t] = [D.red(u * x) for x in S[t]]
            U[t] = [D.red(u * x) for x in U[t]]
        t += 1
    return S, U, V


def diagonal(S):
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def matmul(A, B, D=ZZ):
    if not A:
        return []
    k = len(B)
    ncols = len(B[0]) if B else 0
    return [[D.red(sum(A[i][l] * B[l][j] for l in range(k))) if k else D.zero
             for j in range(ncols)] for i in range(len(A))]


def transpose(M, ncols=None):
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*M)]


def determinant(M, D=ZZ):
    """Exact determinant via fraction-free elimination (Bareiss)."""
    n = len(M)
    if n == 0:
        return D.one
    A = [[D(x) for x in r] for r in M]
    if D.is_field:
        det = D.one
        for k in range(n):
            piv = next((i for i in range(k, n) if A[i][k] != 0), None)
            if piv is None:
                return D.zero
            if piv != k:
                A[k], A[piv] = A[piv], A[k]
                det = -det
            det = D.red(det * A[k][k])
            inv = D.div(D.one, A[k][k])
            for i in range(k + 1, n):
                c = D.red(A[i][k] * inv)
                A[i] = [D.red(a - c * b) for a, b in zip(A[i], A[k])]
        return D.red(det)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def solve(A, b, D=ZZ):
    """Some ``x`` with ``A x = b`` over ``D``, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [D.zero] * n
    S, U, V = smith_normal_form(A, D)
    c = [D.red(sum(U[i][k] * D(b[k]) for k in range(m))) for i in range(m)]
    y = [D.zero] * n
    for i in range(m):
        d = S[i][i] if i < n else D.zero
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if not D.divides(d, c[i]):
                return None
            y[i] = D.div(c[i], d)
    return [D.red(sum(V[i][j] * y[j] for j in range(n))) for i in range(n)]


def nullspace(A, n, D=ZZ):
    """Basis (list of vectors) of ``{x in D^n : A x = 0}``."""
    if not A:
        return [[D.one if i == j else D.zero for i in range(n)] for j in range(n)]
    S, U, V = smith_normal_form(A, D)
    r = sum(1 for d in diagonal(S) if d != 0)
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


class FGAbelianGroup:
    """``D^ngens / rowspace(relations)`` for ``D`` = ZZ or a field."""

    def __init__(self, ngens, relations=(), domain=ZZ):
        self.ngens = ngens
        self.domain = domain
        rels = []
        for r in relations:
            r = [domain(x) for x in r]
            if len(r) != ngens:
                raise ProkError(f"relation of length {len(r)} on {ngens} generators")
            if any(x != 0 for x in r):
                rels.append(r)
        self.relations = rels
        self._snf = None

    def __repr__(self):
        return f"FGAbelianGroup({self.describe()})"

    def snf(self):
        if self._snf is None:
            if self.relations:
                S, U, V = smith_normal_form(self.relations, self.domain)
                d = diagonal(S)
            else:
                d, V = [], _ident(self.ngens, self.domain)
            d = d + [self.domain.zero] * (self.ngens - len(d))
            self._snf = (d, V)
        return self._snf

    def invariants(self):
        """``(free rank, [d1, d2, ...])`` with ``1 < d1 | d2 | ...``.

        Over a field the torsion list is empty and the rank is the dimension.
        """
        d, _ = self.snf()
        rank = sum(1 for x in d if x == 0)
        if self.domain.is_field:
            return rank, []
        return rank, [int(x) for x in d if x != 0 and abs(x) != 1]

    @property
    def rank(self):
        return self.invariants()[0]

    @property
    def torsion(self):
        return self.invariants()[1]

    def dimension(self):
        if not self.domain.is_field:
            raise ProkError("dimension is defined over a field")
        return self.rank

    def is_trivial(self):
        r, t = self.invariants()
        return r == 0 and not t

    def order(self):
        """Cardinality, or None when infinite."""
        r, t = self.invariants()
        if self.domain.kind == "GF":
            return self.domain.p ** r
        if r:
            return None
        n = 1
        for x in t:
            n *= x
        return n

    def as_integer_group(self):
        """A finite F_p-space viewed as an abelian group; ZZ groups unchanged."""
        if self.domain.kind == "GF":
            p = self.domain.p
            k = self.rank
            return FGAbelianGroup(k, [[p if i == j else 0 for j in range(k)] for i in range(k)])
        if self.domain.kind == "QQ":
            raise ProkError("a rational vector space is not a finitely generated abelian group")
        return self

    def describe(self):
        r, t = self.invariants()
        if self.domain.is_field:
            return f"{self.domain}^{r}"
        parts = [f"Z/{x}" for x in t] + (["Z" if r == 1 else f"Z^{r}"] if r else [])
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        r, t = self.invariants()
        if self.domain.kind == "QQ":
            return {"field": "QQ", "dimension": r}
        if self.domain.kind == "GF":
            p = self.domain.p
            return {"field": str(self.domain), "dimension": r, "rank": 0, "torsion": [p] * r}
        return {"rank": r, "torsion": t}

    def same_invariants(self, other):
        return (self.domain == other.domain) and self.invariants() == other.invariants()

    # elements ---------------------------------------------------------------
    def contains_relation(self, v):
        """Is ``v`` zero in the group (i.e. in the relation lattice)?"""
        D = self.domain
        v = [D(x) for x in v]
        if all(x == 0 for x in v):
            return True
        if not self.relations:
            return False
        return solve(transpose(self.relations), v, D) is not None

    def is_zero_element(self, v):
        return self.contains_relation(v)


def VectorSpace(field, dimension):
    """A free module of the given dimension over a field."""
    if not field.is_field:
        raise ProkError(f"{field} is not a field")
    return FGAbelianGroup(dimension, (), field)


def identity_map(G):
    D = G.domain
    return GroupMap(G, G, _ident(G.ngens, D), check=False)


def maps_equal(f, g):
    """Do two maps with common source and target agree?"""
    D = f.domain
    for j in range(f.source.ngens):
        diff = [D.red(a - b) for a, b in zip(f.column(j), g.column(j))]
        if not f.target.contains_relation(diff):
            return False
    return True


def cyclic(n):
    return FGAbelianGroup(1, [[n]] if n else [])


class GroupMap:
    """``source -> target``; ``matrix`` is target.ngens x source.ngens."""

    def __init__(self, source, target, matrix, check=True):
        if source.domain != target.domain:
            raise ProkError("maps must stay over one coefficient ring")
        D = source.domain
        self.source = source
        self.target = target
        self.matrix = [[D(x) for x in row] for row in matrix] if target.ngens else []
        if target.ngens and any(len(r) != source.ngens for r in self.matrix):
            raise ProkError("matrix shape does not match the groups")
        if len(self.matrix) != target.ngens:
            raise ProkError("matrix shape does not match the groups")
        if check:
            for r in source.relations:
                if not target.contains_relation(self.apply(r)):
                    raise ProkError("map does not respect the source relations")

    def __repr__(self):
        return f"GroupMap({self.source.describe()} -> {self.target.describe()})"

    @property
    def domain(self):
        return self.source.domain

    def apply(self, v):
        D = self.domain
        return [D.red(sum(row[j] * D(v[j]) for j in range(self.source.ngens))) for row in self.matrix]

    def column(self, j):
        return [row[j] for row in self.matrix]

    def compose(self, other):
        """``self ∘ other``."""
        if other.target.ngens != self.source.ngens:
            raise ProkError("maps are not composable")
        M = matmul(self.matrix, other.matrix, self.domain) if self.matrix else []
        if not M and self.target.ngens:
            M = [[self.domain.zero] * other.source.ngens for _ in range(self.target.ngens)]
        return GroupMap(other.source, self.target, M, check=False)

    # algebra ------------------------------------------------------------------
    def _preimage_lattice(self):
        """Basis of ``{a : M a in target relations}`` in ``D^source.ngens``."""
        D = self.domain
        m = self.source.ngens
        n = self.target.ngens
        if m == 0:
            return []
        rels = self.target.relations
        if n == 0:
            return _ident(m, D)
        # columns: M (n x m) then relation vectors as columns (n x k)
        big = [list(self.matrix[i]) + [D(-r[i]) for r in rels] for i in range(n)]
        basis = nullspace(big, m + len(rels), D)
        vecs = [v[:m] for v in basis]
        return _lattice_basis(vecs, m, D)

    def kernel(self):
        """Kernel as a group, presented on a basis of its preimage lattice."""
        return self.kernel_with_basis()[0]

    def kernel_with_basis(self):
        """``(K, L)``: the kernel and the lattice basis (source coordinates) of its generators."""
        D = self.domain
        L = self._preimage_lattice()
        if not L:
            return FGAbelianGroup(0, (), D), []
        rels = []
        for r in self.source.relations:
            x = solve(transpose(L), r, D)
            if x is None:
                raise ProkError("source relation outside the kernel lattice")
            rels.append(x)
        return FGAbelianGroup(len(L), rels, D), L

    def cokernel(self):
        cols = [self.column(j) for j in range(self.source.ngens)] if self.target.ngens else []
        return FGAbelianGroup(self.target.ngens, list(self.target.relations) + cols, self.domain)

    def image(self):
        D = self.domain
        L = self._preimage_lattice()
        m = self.source.ngens
        return FGAbelianGroup(m, L, D)

    def is_zero(self):
        return all(self.target.contains_relation(self.column(j)) for j in range(self.source.ngens))

    def is_surjective(self):
        return self.cokernel().is_trivial()

    def is_injective(self):
        return self.kernel().is_trivial()

    def is_iso(self):
        return self.is_injective() and self.is_surjective()


def _lattice_basis(vecs, n, D):
    """A basis of the lattice spanned by ``vecs`` (rows) in ``D^n``."""
    vecs = [v for v in vecs if any(x != 0 for x in v)]
    if not vecs:
        return []
    S, U, V = smith_normal_form(vecs, D)
    # rowspace(vecs) = rowspace(U^-1 S V^-1); a basis is rows of S V^-1
    Vinv = _inverse(V, D)
    out = []
    for i, d in enumerate(diagonal(S)):
        if d == 0:
            break
        out.append([D.red(d * x) for x in Vinv[i]])
    return out


def _inverse(M, D):
    n = len(M)
    cols = []
    for j in range(n):
        e = [D.one if i == j else D.zero for i in range(n)]
        x = solve(M, e, D)
        if x is None:
            raise ProkError("matrix is not invertible")
        cols.append(x)
    return transpose(cols)


def map_algebra(kind, f):
    if kind == "kernel":
        return f.kernel()
    if kind == "cokernel":
        return f.cokernel()
    if kind == "image":
        return f.image()
    if kind == "is_zero":
        return f.is_zero()
    if kind == "is_iso":
        return f.is_iso()
    raise ProkError(f"unknown map operation {kind!r}")


def invariants(G):
    return G.invariants()
