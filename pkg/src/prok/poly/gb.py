"""Buchberger's algorithm on sparse vectors over a polynomial ring.

A vector is a dict ``{(pos, exp): coeff}``; an ideal is the rank-one case
(every ``pos`` is 0).  Over a field the output is the reduced Gröbner basis;
over ZZ it is the reduced strong Gröbner basis (positive leading
coefficients, tails reduced into ``[0, lc)``), which makes normal forms
canonical.
"""

import heapq
from contextlib import contextmanager
from contextvars import ContextVar
from math import gcd

from ..errors import BudgetExceeded

DEFAULT_BUDGET = 100_000

_budget = ContextVar("groebner_budget", default=DEFAULT_BUDGET)


def current_budget():
    return _budget.get()


@contextmanager
def groebner_budget(n):
    """Limit every Buchberger run inside the block to ``n`` S-pair reductions."""
    token = _budget.set(int(n))
    try:
        yield
    finally:
        _budget.reset(token)


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm_exp(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def leading_term(v, order):
    return max(v, key=order.key)


def add_scaled(p, q, c, shift, base):
    """In place: ``p += c * x^shift * q``."""
    red = base.red
    for (pos, e), a in q.items():
        t = (pos, tuple(x + y for x, y in zip(e, shift)))
        s = red(p.get(t, 0) + c * a)
        if s:
            p[t] = s
        elif t in p:
            del p[t]


def scale(v, c, base):
    red = base.red
    out = {}
    for t, a in v.items():
        s = red(a * c)
        if s:
            out[t] = s
    return out


class GBasis:
    """A finished Gröbner basis together with its leading data."""

    def __init__(self, base, order, elems):
        self.base = base
        self.order = order
        self.elems = elems
        self.lts = [leading_term(g, order) for g in elems]
        self.lcs = [g[t] for g, t in zip(elems, self.lts)]

    def __len__(self):
        return len(self.elems)

    def reducer(self, term, coeff, exclude=None):
        """Index of the element used to reduce ``coeff*term``, or None."""
        pos, e = term
        base = self.base
        best = None
        for i, (p, m) in enumerate(self.lts):
            if i == exclude or p != pos or not _divides(m, e):
                continue
            if base.is_field:
                return i
            lc = self.lcs[i]
            if coeff % lc == 0:
                return i
            if best is None or abs(lc) < abs(self.lcs[best]):
                best = i
        return best

    def reduce(self, v, exclude=None):
        return reduce_vector(v, self, exclude=exclude)

    def contains(self, v):
        return not self.reduce(v)


def reduce_vector(v, G, exclude=None, tail_from=None):
    """Full normal form of ``v`` modulo ``G``.

    ``tail_from``: a term; only terms strictly below it are reduced (used for
    tail reduction of basis elements).
    """
    base, order = G.base, G.order
    key = order.key
    p = dict(v)
    r = {}
    limit = key(tail_from) if tail_from is not None else None
    while p:
        t = max(p, key=key)
        c = p[t]
        if limit is not None and key(t) >= limit:
            r[t] = c
            del p[t]
            continue
        i = G.reducer(t, c, exclude)
        if i is None:
            r[t] = c
            del p[t]
            continue
        lc = G.lcs[i]
        if base.is_field:
            q = base.div(c, lc)
        else:
            q = c // lc
            if q == 0:
                r[t] = c
                del p[t]
                continue
        shift = _sub_exp(t[1], G.lts[i][1])
        add_scaled(p, G.elems[i], -q, shift, base)
        if not base.is_field and t in p:
            r[t] = p.pop(t)
    return r


class _Work:
    """Growing basis used during Buchberger; supports the same reducer API."""

    def __init__(self, base, order):
        self.base = base
        self.order = order
        self.elems = []
        self.lts = []
        self.lcs = []

    def add(self, g):
        t = leading_term(g, self.order)
        c = g[t]
        if self.base.is_field:
            g = scale(g, self.base.div(self.base.one, c), self.base)
            c = self.base.one
        elif c < 0:
            g = scale(g, -1, self.base)
            c = -c
        self.elems.append(g)
        self.lts.append(t)
        self.lcs.append(c)
        return len(self.elems) - 1

    reducer = GBasis.reducer


def _spoly(W, i, j):
    base = W.base
    (pi, mi), (pj, mj) = W.lts[i], W.lts[j]
    L = _lcm_exp(mi, mj)
    a, b = W.lcs[i], W.lcs[j]
    if base.is_field:
        ca, cb = base.div(base.one, a), base.div(base.one, b)
    else:
        c = base.lcm(a, b)
        ca, cb = c // a, c // b
    s = {}
    add_scaled(s, W.elems[i], ca, _sub_exp(L, mi), base)
    add_scaled(s, W.elems[j], -cb, _sub_exp(L, mj), base)
    return s


def _gpoly(W, i, j):
    """Gcd-polynomial of a pair over ZZ, or None when it is redundant."""
    (pi, mi), (pj, mj) = W.lts[i], W.lts[j]
    a, b = W.lcs[i], W.lcs[j]
    if a % b == 0 or b % a == 0:
        return None
    from .domains import xgcd

    _, u, w = xgcd(a, b)
    L = _lcm_exp(mi, mj)
    g = {}
    add_scaled(g, W.elems[i], u, _sub_exp(L, mi), W.base)
    add_scaled(g, W.elems[j], w, _sub_exp(L, mj), W.base)
    return g


def buchberger(gens, base, order, budget=None, rank_one=None):
    """Return the reduced (strong, over ZZ) Gröbner basis of ``gens``.

    Raises BudgetExceeded after ``budget`` S-pair reductions.
    """
    if budget is None:
        budget = current_budget()
    gens = [dict(g) for g in gens if g]
    if rank_one is None:
        rank_one = all(t[0] == 0 for g in gens for t in g)
    W = _Work(base, order)
    key = order.key
    heap = []
    done = set()

    def push_pairs(k):
        pk, mk = W.lts[k]
        for i in range(k):
            pi, mi = W.lts[i]
            if pi != pk:
                continue
            L = _lcm_exp(mi, mk)
            heapq.heappush(heap, (key((pk, L)), i, k))

    def insert(v):
        k = W.add(v)
        push_pairs(k)

    for g in gens:
        r = reduce_vector(g, W)
        if r:
            insert(r)

    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        done.add((i, j))
        (pi, mi), (pj, mj) = W.lts[i], W.lts[j]
        if base.is_field:
            if rank_one and _coprime(mi, mj):
                continue
            L = _lcm_exp(mi, mj)
            skip = False
            for k in range(len(W.elems)):
                if k in (i, j) or W.lts[k][0] != pi or not _divides(W.lts[k][1], L):
                    continue
                if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
                    skip = True
                    break
            if skip:
                continue
        polys = [_spoly(W, i, j)]
        if not base.is_field:
            gp = _gpoly(W, i, j)
            if gp is not None:
                polys.append(gp)
        for s in polys:
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"Gröbner budget of {budget} S-pair reductions exceeded")
            r = reduce_vector(s, W)
            if r:
                insert(r)
    return _finish(W)


def _finish(W):
    base, order = W.base, W.order
    key = order.key
    n = len(W.elems)
    keep = []
    for i in range(n):
        pi, mi = W.lts[i]
        redundant = False
        for j in range(n):
            if j == i:
                continue
            pj, mj = W.lts[j]
            if pj != pi or not _divides(mj, mi):
                continue
            if not base.divides(W.lcs[j], W.lcs[i]):
                continue
            same = mj == mi and (base.is_field or W.lcs[j] == W.lcs[i])
            if same and j > i:
                continue
            redundant = True
            break
        if not redundant:
            keep.append(i)
    elems = [W.elems[i] for i in keep]
    G = GBasis(base, order, elems)
    out = []
    for idx, g in enumerate(elems):
        t = G.lts[idx]
        r = reduce_vector(g, G, exclude=idx, tail_from=t)
        out.append(r)
    out.sort(key=lambda g: key(leading_term(g, order)), reverse=True)
    return GBasis(base, order, out)


def content_gcd(v):
    g = 0
    for c in v.values():
        g = gcd(g, int(c))
    return g
