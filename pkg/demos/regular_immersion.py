"""Tor of powers of a regular ideal, reductions and Artin-Rees numbers.

Run: python demos/regular_immersion.py
"""

from prok.fpmod import tor_transition
from prok.fpring import FPRing
from prok.prosys import artin_rees_witness, build_system, pro_zero_certify, reduction_index

A = FPRing("QQ", ["t"])
I = A.ideal(["t"])
for n in (0, 1, 2):
    phi = tor_transition(A, I, 1, n).realize()
    print(f"Tor_{n}(A/t², A/t²) -> Tor_{n}(A/t, A/t): zero={phi.is_zero()} onto={phi.is_surjective()}")
print("pro-zero Tor_1:", pro_zero_certify(build_system("tor", A, I, 1), 3, 8).to_json()["witness"])

R = FPRing("QQ", ["x", "y", "z"])
for c in (1, 2, 3):
    t = ["x", "y", "z"][:c]
    row = [reduction_index(R, R.ideal([f"{v}^{s}" for v in t]), R.ideal_power(R.ideal(t), s)).n
           for s in (1, 2, 3)]
    print(f"c = {c}: least reduction index for s = 1, 2, 3 -> {row}")

R = FPRing("QQ", ["x", "y"], ["x^2", "x*y^2"])
w = artin_rees_witness(R, R.ideal(["y"]), R.ideal(["x"]), 6)
print("Artin-Rees:", w.to_json())
