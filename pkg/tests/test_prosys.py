import pytest

from prok.abgrp import FGAbelianGroup, GroupMap, identity_map
from prok.errors import BoundExhausted, MissingData, NotInIdeal, ProkError
from prok.excision import validate_excision
from prok.fpring import FPRing, identity_hom
from prok.prosys import (
    IdealChain,
    LevelMap,
    ProSystem,
    UnitalizationPresentation,
    artin_rees_witness,
    build_system,
    criteria_report,
    intertwine_check,
    pro_iso_certify,
    pro_zero_certify,
    reduction_index,
    semigroup_unitalization,
)

QT = FPRing("QQ", ["t"])
QXY = FPRing("QQ", ["x", "y"])


def dyadic():
    """{ZZ/2^s} with reduction transitions."""
    def group(s):
        return FGAbelianGroup(1, [[2 ** s]])
    return ProSystem("dyadic", group, lambda r, s: GroupMap(group(r), group(s), [[1]]))


def test_gw_system_prozero(cusp_situation, swan3):
    for E in (cusp_situation, swan3):
        cert = pro_zero_certify(build_system("gw", E), 3, 8)
        assert cert.certified
        assert cert.witness == {1: 2, 2: 4, 3: 6}
        assert cert.least == {1: 2, 2: 3, 3: 4}
        assert cert.revalidate()


def test_constant_system_is_not_prozero():
    G = FGAbelianGroup(1, [])
    cert = pro_zero_certify(build_system("constant", G), 2, 5)
    assert cert.status == "refuted"
    assert set(cert.failures) == {1, 2}
    assert all(f["surviving"] == [0] for f in cert.failures.values())


def test_tor_system_prozero():
    P = build_system("tor", QT, QT.ideal(["t"]), 1)
    assert [P.level(s).realization().to_json()["dimension"] for s in (1, 2, 3)] == [1, 2, 3]
    cert = pro_zero_certify(P, 3, 8)
    assert cert.witness == {1: 2, 2: 4, 3: 6}
    assert cert.revalidate()


def test_zero_ideal_gives_zero_system():
    P = build_system("tor", QXY, QXY.ideal([]), 1)
    assert all(P.level(s).is_zero() for s in (1, 2, 3))
    cert = pro_zero_certify(P, 3, 8)
    assert cert.least == {1: 1, 2: 2, 3: 3}


def test_gw_level_one(cusp_situation):
    P = build_system("gw", cusp_situation)
    assert P.level(1).realization().to_json() == {"field": "QQ", "dimension": 1}


def test_gw_system_vanishes_for_isomorphisms(truncated3):
    P = build_system("gw", truncated3)
    assert all(P.level(s).is_zero() for s in (1, 2, 3))


def test_transition_functoriality(cusp_situation):
    for P in (build_system("tor", QT, QT.ideal(["t"]), 1), build_system("gw", cusp_situation)):
        assert P.check_functoriality(3, 2, 1)
        assert P.check_functoriality(4, 3, 2)
        assert P.transition(2, 2).is_zero() == P.level(2).is_zero()


def test_transition_direction():
    with pytest.raises(ProkError):
        dyadic().transition(1, 2)
    with pytest.raises(ProkError):
        dyadic().level(0)


def test_identity_is_a_pro_isomorphism():
    P = dyadic()
    phi = LevelMap(P, P, lambda s: identity_map(P.level(s)))
    cert = pro_iso_certify(phi, 3, 6)
    assert cert.status == "certified"
    assert cert.kernel.least == {1: 1, 2: 2, 3: 3}
    assert cert.cokernel.least == {1: 1, 2: 2, 3: 3}


def test_doubling_on_dyadic_system():
    # kernel 2^(s-1)ZZ/2^s dies one step up; cokernel ZZ/2 survives forever
    P = dyadic()
    phi = LevelMap(P, P, lambda s: GroupMap(P.level(s), P.level(s), [[2]]))
    cert = pro_iso_certify(phi, 3, 8)
    assert cert.kernel.least == {1: 2, 2: 3, 3: 4}
    assert cert.cokernel.status == "refuted"
    assert cert.status == "refuted"


def test_swan_source_level_map(cusp_situation):
    src = build_system("swan-source", cusp_situation)
    cert = pro_iso_certify(src.level_map, 3, 8)
    assert cert.cokernel.least == {1: 1, 2: 2, 3: 3}
    assert cert.kernel.certified
    assert cert.status == "certified"


def test_unitalization_tor():
    pres = UnitalizationPresentation(semigroup_unitalization, "semigroup")
    P = build_system("unitalization-tor", pres, 1)
    assert [P.level(s).to_json() for s in (1, 2)] == [{"rank": 1, "torsion": []},
                                                      {"rank": 2, "torsion": []}]
    cert = pro_zero_certify(P, 2, 5)
    assert cert.witness == {1: 2, 2: 4}
    with pytest.raises(MissingData):
        build_system("unitalization-tor")


def test_intertwine_examples():
    R = FPRing("QQ", ["x"])
    C1 = IdealChain(R, lambda s: R.ideal([f"x^{s}"]))
    C2 = IdealChain(R, lambda s: R.ideal([f"x^{2 * s}"]))
    out = intertwine_check(C1, C2, 3)
    assert out.forward == {1: 2, 2: 4, 3: 6}
    assert out.backward == {1: 1, 2: 1, 3: 2}
    out = intertwine_check(C1, C1, 3)
    assert out.forward == out.backward == {1: 1, 2: 2, 3: 3}
    assert C1.check_decreasing(4)


def test_intertwine_bound_exhausted():
    R = FPRing("QQ", ["x", "y"])
    C1 = IdealChain(R, lambda s: R.ideal([f"x^{s}"]))
    C2 = IdealChain(R, lambda s: R.ideal([f"y^{s}"]))
    out = intertwine_check(C1, C2, 2)
    assert out.status == "bound-exhausted" and out.failed_at == 1


def test_criteria_cusp(cusp_situation):
    rep = criteria_report(cusp_situation, n_max=2, S_max=2, r_max=8)
    layers = {l["layer"]: l for l in rep["layers"]}
    assert layers[1]["value"] is True
    assert layers[2]["value"] is False
    assert layers[3]["status"] == "certified"
    assert all(c.revalidate() for c in rep["certificates"].values())
    assert layers[5]["status"] == layers[6]["status"] == "cited"


def test_criteria_nonzerodivisor_and_zero_ideal():
    E = validate_excision(identity_hom(QT), QT.ideal(["t"]))
    layers = criteria_report(E, 2, 2, 6)["layers"]
    assert layers[1]["value"] is True
    assert layers[2]["status"] == "certified"
    E = validate_excision(identity_hom(QT), QT.ideal([]))
    layers = criteria_report(E, 2, 2, 6)["layers"]
    assert layers[2]["status"] == "certified"


def test_criteria_with_unitalization(cusp_situation):
    pres = UnitalizationPresentation(semigroup_unitalization, "semigroup")
    rep = criteria_report(cusp_situation, 1, 2, 6, unitalization=pres)
    assert rep["layers"][3]["status"] == "certified"


def test_artin_rees_examples():
    R = FPRing("QQ", ["x", "y"], ["x*y"])
    w = artin_rees_witness(R, R.ideal(["y"]), R.ideal(["x"]), 6)
    assert w.s == 1
    R = FPRing("QQ", ["x", "y"], ["x^2", "x*y^2"])
    w = artin_rees_witness(R, R.ideal(["y"]), R.ideal(["x"]), 6)
    assert w.s == 2
    # minimality: the witness is a nonzero element of I ∩ K
    assert str(w.minimality) == "x*y"
    assert artin_rees_witness(R, R.ideal(["y"]), R.ideal([]), 6).s == 1


def test_artin_rees_needs_torsion():
    with pytest.raises(BoundExhausted):
        artin_rees_witness(QXY, QXY.ideal(["x"]), QXY.ideal(["y"]), 4)


def test_reduction_index_examples():
    J = QXY.ideal(["x", "y"])
    J2 = QXY.ideal_power(J, 2)
    assert reduction_index(QXY, QXY.ideal(["x^2", "y^2"]), J2).n == 1
    assert reduction_index(QXY, J, J).n == 1
    out = reduction_index(QXY, QXY.ideal(["x^2"]), J2, bound=6)
    assert out.status == "bound-exhausted" and out.n is None
    with pytest.raises(NotInIdeal):
        reduction_index(QXY, QXY.ideal(["x"]), J2)
