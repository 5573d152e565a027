"""ZZ + pB inside B = ZZ[ζ_p]: a torsion obstruction that grows with p.

Run: python demos/swan.py
"""

from prok.builtins import swan
from prok.excision import gw_birelative_k1, mennicke
from prok.prosys import build_system, pro_zero_certify

for p in (3, 5):
    E = swan(p)
    G = gw_birelative_k1(E).realization.group
    print(f"p = {p}: birelative module {G.to_json()}, order {G.order()}")

E = swan(3)
print("Mennicke matrix for b = z, x = 3:", mennicke(E, "z", "3").to_json()["matrix_in_target"])
print("pro-zero:", pro_zero_certify(build_system("gw", E), 3, 8).to_json()["witness"])
