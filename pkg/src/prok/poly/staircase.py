"""Standard terms of a module Gröbner basis and the base-ring structure of
the quotient ``base[x]^rank / U``.

Over a field every standard term is a free coordinate.  Over ZZ a standard
term ``m`` carries the modulus ``c_m`` = the smallest leading coefficient
among basis elements whose leading monomial divides ``m`` (0 if none); terms
with ``c_m == 1`` are not standard.  Normal forms have coefficient in
``[0, c_m)`` at each term, so the quotient is the abelian group on the
standard terms with the triangular relations ``c_m*m - NF(c_m*m)``.
"""

from itertools import product

from ..errors import Unrealizable
from .gb import _divides


def standard_terms(G, rank, nvars):
    """List of ``(pos, exp, modulus)`` in decreasing term order.

    Raises Unrealizable when the set is infinite.
    """
    base = G.base
    out = []
    for pos in range(rank):
        unit_lms = [m for (p, m), c in zip(G.lts, G.lcs) if p == pos and base.is_unit(c)]
        if any(not any(m) for m in unit_lms):
            continue
        bounds = []
        for i in range(nvars):
            best = None
            for m in unit_lms:
                if m[i] > 0 and all(m[j] == 0 for j in range(nvars) if j != i):
                    best = m[i] if best is None else min(best, m[i])
            if best is None:
                raise Unrealizable(f"infinitely many standard monomials in position {pos}")
            bounds.append(best)
        if nvars == 0:
            cands = [()]
        else:
            cands = product(*[range(b) for b in bounds])
        for e in cands:
            if any(_divides(m, e) for m in unit_lms):
                continue
            mod = 0
            for (p, m), c in zip(G.lts, G.lcs):
                if p == pos and _divides(m, e):
                    c = abs(c)
                    mod = c if mod == 0 else min(mod, c)
            if base.is_field:
                mod = 0
            out.append((pos, tuple(e), mod))
    out.sort(key=lambda t: G.order.key((t[0], t[1])), reverse=True)
    return out
