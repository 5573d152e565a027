import pytest

from prok.errors import InvalidHom, MissingData, RingMismatch
from prok.fpring import (
    FPRing,
    RingHom,
    artinian_basis,
    conductor,
    hom_kernel,
    identity_hom,
    is_module_finite,
    preimage_in_ideal,
    subring_image_membership,
    subring_membership,
)


def cusp_map():
    A = FPRing("QQ", ["x", "y"])
    B = FPRing("QQ", ["t"])
    return RingHom(A, B, ["t^2", "t^3"], module_gens=["1", "t"])


def test_relations_are_canonical():
    R1 = FPRing("QQ", ["x"], ["x^2 - 1", "x^3 - x"])
    R2 = FPRing("QQ", ["x"], ["1 - x^2"])
    assert R1 == R2
    assert R1("x^3") == R1("x")


def test_elements_compare_by_normal_form():
    R = FPRing("QQ", ["x", "y"], ["y^2 - x^3"])
    assert R("y^2") == R("x^3")
    assert R("y^2") != R("x^2")
    assert hash(R("y^2 + x")) == hash(R("x^3 + x"))
    assert (R("y") * R("y") - R("x") ** 3).is_zero()


def test_zero_ring():
    Z = FPRing("QQ", ["x"], ["x", "x - 1"])
    assert Z.is_zero_ring()
    assert Z("x + 5").is_zero()


def test_hom_checks_relations():
    A = FPRing("QQ", ["x", "y"], ["y^2 - x^3"])
    B = FPRing("QQ", ["t"])
    RingHom(A, B, ["t^2", "t^3"])
    with pytest.raises(InvalidHom):
        RingHom(A, B, ["t", "t"])
    with pytest.raises(InvalidHom):
        RingHom(A, B, ["t"])
    with pytest.raises(RingMismatch):
        RingHom(A, FPRing("ZZ", ["t"]), ["t^2", "t^3"])


def test_kernel_examples():
    f = cusp_map()
    K = hom_kernel(f)
    assert f.source.ideal_equal(K, f.source.ideal(["y^2 - x^3"]))
    for g in K.gens:
        assert f.apply_poly(g).is_zero()
    R = FPRing("QQ", ["x", "y"], ["y^2 - x^3"])
    assert hom_kernel(identity_hom(R)).gens == ()
    ev = RingHom(FPRing("QQ", ["x"]), FPRing("QQ", []), ["0"])
    assert ev.source.ideal_equal(hom_kernel(ev), ev.source.ideal(["x"]))


def test_kernel_over_integers():
    A = FPRing("ZZ", ["a"])
    B = FPRing("ZZ", ["z"], ["z^2 + z + 1"])
    f = RingHom(A, B, ["3*z"])
    K = hom_kernel(f)
    assert A.ideal_equal(K, A.ideal(["a^2 + 3*a + 9"]))


def test_preimage_and_subring_membership():
    f = cusp_map()
    assert subring_membership(f, "t^5")
    assert not subring_membership(f, "t")
    a = f.preimage(f.target.poly("t^4 + t^6"))
    assert f.apply_poly(a) == f.target.poly("t^4 + t^6")


def test_module_finite():
    assert is_module_finite(cusp_map()).status is True
    inc = RingHom(FPRing("QQ", ["x"]), FPRing("QQ", ["x", "y"]), ["x"], module_gens=["1", "y"])
    res = is_module_finite(inc)
    assert res.status is False and res.failed
    R = FPRing("QQ", ["x"], ["x^3"])
    assert is_module_finite(identity_hom(R)).status is True
    with pytest.raises(MissingData):
        is_module_finite(RingHom(R, R, ["x"]))


def test_subring_image_membership():
    f = cusp_map()
    I = f.source.ideal(["x", "y"])
    assert subring_image_membership(f, "t^4", I)
    assert not subring_image_membership(f, "t", I)
    assert subring_image_membership(f, "0", I)
    assert not subring_image_membership(f, "1", I)


def test_preimage_in_ideal():
    f = cusp_map()
    I = f.source.ideal(["x", "y"])
    a = preimage_in_ideal(f, f.target.poly("t^5"), I)
    assert f.apply_poly(a) == f.target.poly("t^5")
    assert f.source.ideal_contains(I, a)
    assert preimage_in_ideal(f, f.target.poly("1"), I) is None


def test_artinian_basis_examples():
    B = artinian_basis(FPRing("QQ", ["x"], ["x^3"]))
    assert [str(m) for m in B.monomials] == ["1", "x", "x^2"]
    B = artinian_basis(FPRing("GF(2)", ["x", "y"], ["x^2", "y^2"]))
    assert sorted(str(m) for m in B.monomials) == ["1", "x", "x*y", "y"]
    assert B.cardinality == 16
    B = artinian_basis(FPRing("ZZ", ["x"], ["x^2 + x + 1", "3"]))
    assert B.cardinality == 9
    assert [str(m) for m in B.monomials] == ["1", "x"]
    assert artinian_basis(FPRing("QQ", ["x", "y"], ["x^2"])) == "infinite"
    assert artinian_basis(FPRing("ZZ", ["x"], ["x^2"])) == "infinite"


def test_conductor_examples(cusp_situation, node_situation, swan3):
    for E in (cusp_situation, node_situation):
        C = conductor(E.f)
        assert E.A.ideal_equal(C, E.A.ideal(["x", "y"]))
    C = conductor(swan3.f)
    assert swan3.A.ideal_equal(C, swan3.A.ideal(["3", "a1"]))


def test_ideal_helpers():
    R = FPRing("QQ", ["x", "y"], ["x*y"])
    I = R.ideal(["x"])
    J = R.ideal(["y"])
    assert R.ideal_is_zero(R.ideal_product(I, J))
    assert R.ideal_is_zero(R.ideal_intersection(I, J))
    assert R.ideal_equal(R.colon(R.ideal([]), "x"), J)
    Q = R.quotient(I)
    assert Q("x").is_zero()
