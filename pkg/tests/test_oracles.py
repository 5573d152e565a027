"""Cross-checks against independent computations (sympy and brute force)."""

import random
from itertools import combinations, product
from math import gcd

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from prok.abgrp import FGAbelianGroup, diagonal, smith_normal_form
from prok.builtins import swan
from prok.excision import gw_birelative_k1
from prok.fpmod import quotient_module, tor
from prok.fpring import FPRing, artinian_basis
from prok.poly import Ideal, poly_ring

NAMES = ["x", "y", "z"]


def monomials(nvars, degree):
    return [e for e in product(range(degree + 1), repeat=nvars) if sum(e) == degree]


def mono_str(e, names):
    parts = [f"{v}^{k}" for v, k in zip(names, e) if k]
    return "*".join(parts) or "1"


def random_form(rng, nvars, degree, names):
    terms = [f"({rng.randint(-4, 4)})*{mono_str(e, names)}" for e in monomials(nvars, degree)
             if rng.random() < 0.6]
    return " + ".join(terms) or mono_str(monomials(nvars, degree)[0], names)


def sympy_expr(text, names):
    return sympy.Poly(sympy.sympify(text.replace("^", "**")), *sympy.symbols(names))


def in_span_of_degree(f, gens, names, degree):
    """Homogeneous membership: f in the QQ-span of m*g with deg(m*g) = degree."""
    nv = len(names)
    basis = monomials(nv, degree)
    index = {e: i for i, e in enumerate(basis)}
    syms = sympy.symbols(names)

    def vec(p):
        v = [0] * len(basis)
        for e, c in p.terms():
            v[index[e]] = c
        return v

    rows = []
    for g in gens:
        dg = g.total_degree()
        if dg > degree:
            continue
        for e in monomials(nv, degree - dg):
            m = sympy.Poly(sympy.Mul(*[s ** k for s, k in zip(syms, e)]), *syms)
            rows.append(vec(m * g))
    target = vec(f)
    if not rows:
        return all(c == 0 for c in target)
    M = sympy.Matrix(rows)
    return M.rank() == M.col_join(sympy.Matrix([target])).rank()


def test_groebner_membership_matches_linear_algebra():
    # homogeneous ideals make membership a finite linear-algebra question per degree
    rng = random.Random(7)
    agree = 0
    for trial in range(50):
        nv = rng.randint(1, 3)
        names = NAMES[:nv]
        R = poly_ring(f"QQ[{','.join(names)}]")
        gens_text = [random_form(rng, nv, rng.randint(1, 3), names) for _ in range(rng.randint(1, 3))]
        I = Ideal(R, [R(g) for g in gens_text])
        sgens = [sympy_expr(g, names) for g in gens_text]
        sgens = [g for g in sgens if not g.is_zero]
        d = rng.randint(1, 4)
        if trial % 2 == 0 and sgens:
            # a combination of the generators, so usually a member
            parts = []
            for g in gens_text:
                dg = sympy_expr(g, names).total_degree()
                if dg <= d:
                    parts.append(f"({random_form(rng, nv, d - dg, names)})*({g})")
            f_text = " + ".join(parts) or "0"
        else:
            f_text = random_form(rng, nv, d, names)
        f_sym = sympy_expr(f_text, names)
        if f_sym.is_zero:
            expected = True
        else:
            expected = in_span_of_degree(f_sym, sgens, names, f_sym.total_degree())
        assert I.contains(R(f_text)) == expected, (gens_text, f_text)
        agree += 1
    assert agree == 50


def determinantal_invariants(M):
    """Invariant factors d_k / d_(k-1) from gcds of k x k minors."""
    m, n = len(M), len(M[0])
    prev, out = 1, []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, int(sympy.Matrix([[M[i][j] for j in cols] for i in rows]).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def test_snf_matches_determinantal_divisors_and_sympy():
    rng = random.Random(11)
    for _ in range(100):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        S, _, _ = smith_normal_form(M)
        d = [abs(int(x)) for x in diagonal(S) if x != 0]
        assert d == determinantal_invariants(M), M
        ref = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
        ref_d = sorted(abs(int(ref[i, i])) for i in range(min(m, n)) if ref[i, i] != 0)
        assert d == ref_d, M


def random_finite_module(rng, R):
    a, b = rng.randint(1, 3), rng.randint(1, 3)
    gens = [f"x^{a}", f"y^{b}"]
    if rng.random() < 0.5:
        gens.append(f"x^{rng.randint(0, a)}*y^{rng.randint(0, b)}")
    if rng.random() < 0.3:
        gens.append(f"x - {rng.randint(0, 1)}*y")
    return quotient_module(R, gens)


def test_tor_symmetry():
    R = FPRing("QQ", ["x", "y"])
    rng = random.Random(5)
    for _ in range(20):
        M, N = random_finite_module(rng, R), random_finite_module(rng, R)
        for n in (0, 1, 2):
            left = tor(M, N, n).realization().to_json()
            right = tor(N, M, n).realization().to_json()
            assert left == right


def test_artinian_basis_matches_box_linear_algebra():
    rng = random.Random(3)
    for _ in range(15):
        a, b = rng.randint(1, 4), rng.randint(1, 4)
        extra = [random_form(rng, 2, rng.randint(1, 3), ["x", "y"]) for _ in range(rng.randint(0, 2))]
        R = FPRing("QQ", ["x", "y"], [f"x^{a}", f"y^{b}"] + extra)
        # the finite algebra QQ[x,y]/(x^a, y^b) has the box monomials as a basis
        box = [(i, j) for i in range(a) for j in range(b)]
        idx = {e: k for k, e in enumerate(box)}
        x, y = sympy.symbols("x y")
        rows = []
        for g in extra:
            gp = sympy_expr(g, ["x", "y"])
            for (i, j) in box:
                v = [0] * len(box)
                for (ei, ej), c in (gp * sympy.Poly(x ** i * y ** j, x, y)).terms():
                    if (ei, ej) in idx:
                        v[idx[(ei, ej)]] += c
                rows.append(v)
        rank = sympy.Matrix(rows).rank() if rows else 0
        basis = artinian_basis(R)
        assert len(basis.monomials) == len(box) - rank


@pytest.mark.parametrize("p", [3, 5])
def test_swan_gw_order_matches_cyclotomic_gcd(p):
    # the module is F_p[z]/gcd(Φ_p, Φ_p') tensored with the free rank-1 module pB/p²B
    z = sympy.symbols("z")
    phi = sympy.Poly(sum(z ** i for i in range(p)), z, modulus=p)
    degree = sympy.gcd(phi, phi.diff(z)).degree()
    G = gw_birelative_k1(swan(p)).realization.group
    assert G.order() == p ** degree
    assert G.to_json() == {"rank": 0, "torsion": [p] * degree}
