"""The cusp y² = x³ inside its normalization QQ[t].

Run: python demos/cusp.py
"""

from prok.builtins import cusp
from prok.excision import conductor, gw_birelative_k1, mennicke, swan_sequence
from prok.prosys import build_system, pro_zero_certify

E = cusp()
print("map:", E.f)
print("conductor:", conductor(E.f))

# K_1 excision fails by exactly this module
G = gw_birelative_k1(E)
print("birelative module:", G.to_json())

# every class comes from B/A ⊗ I/I², via b ⊗ x -> db ⊗ x
S = swan_sequence(E)
print("source:", S.source.to_json(), "surjective:", S.is_surjective())

M = mennicke(E, "t", "x")
print("Mennicke matrix in B:", M.to_json()["matrix_in_target"], "det", M.determinant)

# over the powers I^s the obstruction dies: level 2s maps to zero in level s
cert = pro_zero_certify(build_system("gw", E), 3, 8)
print("pro-zero:", cert.to_json())
