import random

import pytest

from prok.errors import ExcisionRejected, ProkError, UnsupportedRing
from prok.excision import (
    conductor,
    gw_birelative_k1,
    k_low_rules,
    mennicke,
    milnor_square,
    power_situation,
    swan_sequence,
    validate_excision,
)
from prok.builtins import load_builtin, truncated
from prok.fpring import FPRing, RingHom, identity_hom


def test_builtins_validate(cusp_situation, node_situation, swan3):
    for E in (cusp_situation, node_situation, swan3):
        assert E.revalidate().I.gens == E.I.gens
        cert = E.certificates()
        assert cert["kernel_meets_ideal"] == []
        assert cert["ideal_of_target"]


def test_kernel_overlap_is_rejected():
    A = FPRing("QQ", ["x", "y"])
    B = FPRing("QQ", ["x", "y"], ["x"])
    f = RingHom(A, B, ["x", "y"], module_gens=["1"])
    with pytest.raises(ExcisionRejected) as info:
        validate_excision(f, A.ideal(["x"]))
    assert info.value.axiom == "kernel-overlap"
    assert "x" in info.value.witness


def test_not_an_ideal_is_rejected():
    # (x) in QQ[x] -> QQ[t], x -> t^2 has image (t^2) which is not t-stable
    A = FPRing("QQ", ["x"])
    B = FPRing("QQ", ["t"])
    f = RingHom(A, B, ["t^2"], module_gens=["1", "t"])
    with pytest.raises(ExcisionRejected) as info:
        validate_excision(f, A.ideal(["x"]))
    assert info.value.axiom == "not-an-ideal"


def test_power_situation(cusp_situation, swan3):
    E2 = power_situation(cusp_situation, 2)
    A = cusp_situation.A
    assert A.ideal_equal(E2.I, A.ideal(["x^2", "x*y", "y^2"]))
    assert power_situation(cusp_situation, 1) is cusp_situation
    S2 = power_situation(swan3, 2)
    B = swan3.B
    assert B.ideal_equal(B.ideal(S2.image_gens()), B.ideal(["9"]))


def test_conductor_examples(cusp_situation, node_situation):
    A = cusp_situation.A
    assert A.ideal_equal(conductor(cusp_situation.f), A.ideal(["x", "y"]))
    A = node_situation.A
    assert A.ideal_equal(conductor(node_situation.f), A.ideal(["x", "y"]))
    R = FPRing("QQ", ["x"])
    assert R.ideal_equal(conductor(identity_hom(R), ["1"]), R.ideal(["1"]))


def test_conductor_is_an_ideal_of_the_target(cusp_situation, node_situation):
    for E in (cusp_situation, node_situation):
        C = conductor(E.f)
        # re-validating as an excision situation certifies f(C) is a B-ideal
        validate_excision(E.f, C)


def test_milnor_squares(cusp_situation, node_situation, swan3):
    for E in (cusp_situation, node_situation, swan3):
        sq = milnor_square(E)
        assert sq.commutes()
        assert sq.is_cartesian()


def test_gw_values(cusp_situation, node_situation, swan3):
    G = gw_birelative_k1(cusp_situation)
    assert G.to_json() == {"field": "QQ", "dimension": 1}
    assert G.recheck()
    assert gw_birelative_k1(node_situation).is_zero()
    assert gw_birelative_k1(swan3).to_json() == {"rank": 0, "torsion": [3]}


def test_gw_vanishes_for_isomorphisms(truncated3):
    assert gw_birelative_k1(truncated3).is_zero()
    S = swan_sequence(truncated3)
    assert S.source.is_trivial() and S.is_surjective()


def test_swan_sequence_examples(cusp_situation, node_situation, swan3):
    S = swan_sequence(cusp_situation)
    assert S.source.to_json() == {"field": "QQ", "dimension": 2}
    assert S.target.to_json() == {"field": "QQ", "dimension": 1}
    assert S.is_surjective()
    S = swan_sequence(node_situation)
    assert S.target.is_trivial() and S.is_surjective()
    S = swan_sequence(swan3)
    assert S.source.order() == 9
    assert S.target.order() == 3
    assert S.cokernel().is_trivial()


def test_power_and_direct_gw_agree(cusp_situation):
    E2 = power_situation(cusp_situation, 2)
    direct = validate_excision(cusp_situation.f, cusp_situation.A.ideal(["x^2", "x*y", "y^2"]))
    assert gw_birelative_k1(E2).to_json() == gw_birelative_k1(direct).to_json()


def test_mennicke_examples(cusp_situation, swan3):
    # b = 0 leaves the elementary matrix (1, x; 0, 1), a trivial K_1 class
    M = mennicke(cusp_situation, "0", "x")
    assert [[str(e) for e in r] for r in M.entries] == [["1", "x"], ["0", "1"]]
    M = mennicke(cusp_situation, "t", "x")
    assert M.to_json()["matrix_in_target"] == [["-t^3 + 1", "t^2"], ["-t^4", "t^3 + 1"]]
    assert str(M.determinant) == "1"
    M = mennicke(swan3, "z", "3")
    assert M.to_json()["matrix_in_target"] == [["-3*z + 1", "3"], ["3*z + 3", "3*z + 1"]]
    assert str(M.determinant) == "1"


def test_mennicke_rejects_x_outside_ideal(cusp_situation):
    with pytest.raises(ProkError):
        mennicke(cusp_situation, "t", "1")


def _random_poly(rng, names, degree, lo=-3, hi=3):
    terms = []
    for _ in range(rng.randint(1, 3)):
        c = rng.randint(lo, hi)
        mono = "*".join(f"{v}^{rng.randint(0, degree)}" for v in names)
        terms.append(f"({c})*{mono}")
    return " + ".join(terms)


@pytest.mark.parametrize("name", ["cusp", "node", "swan(3)", "truncated(3)"])
def test_mennicke_determinant_random(name):
    E = load_builtin(name)
    rng = random.Random(name)
    bnames = [str(v) for v in E.B.vars]
    inames = [str(g) for g in E.I.gens]
    anames = [str(v) for v in E.A.vars]
    for _ in range(20):
        b = _random_poly(rng, bnames, 2)
        x = " + ".join(f"({_random_poly(rng, anames, 1)})*({g})" for g in inames)
        M = mennicke(E, b, x)
        assert str(M.determinant) == "1"


def test_k_low_rules():
    R = FPRing("GF(2)", ["x"], ["x^2"])
    E = validate_excision(identity_hom(R), R.ideal(["x"]))
    out = k_low_rules(E, 1)
    assert out["order"] == 2 and out["group"] == {"rank": 0, "torsion": [2]}
    out = k_low_rules(validate_excision(identity_hom(R), R.ideal([])), 1)
    assert out["group"] == {"rank": 0, "torsion": []}
    out = k_low_rules(truncated(3), 1)
    assert out["method"] == "truncated-logarithm"
    assert out["group"] == {"field": "QQ", "dimension": 2}
    assert out["nilpotency"] == 3
    assert k_low_rules(truncated(3), 0)["provenance"] == "cited-rule"
    assert k_low_rules(truncated(3), -2)["rule"] == "Bass"
    with pytest.raises(ProkError):
        k_low_rules(truncated(3), 2)


def test_k_low_rules_enumerates_larger_groups():
    out = k_low_rules(truncated(3, "GF(3)"), 1)
    assert out["order"] == 9
    assert out["group"] == {"rank": 0, "torsion": [3, 3]}
    # (1 + x) has order 4 in F_2[x]/(x^3)
    out = k_low_rules(truncated(3, "GF(2)"), 1)
    assert out["group"] == {"rank": 0, "torsion": [4]}


def test_k_low_falls_back_to_birelative(cusp_situation):
    out = k_low_rules(cusp_situation, 1)
    assert out["rule"] == "birelative-module"
    assert out["group"] == {"field": "QQ", "dimension": 1}
