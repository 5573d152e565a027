import random

import pytest
from hypothesis import given, settings, strategies as st

from prok.abgrp import (
    FGAbelianGroup,
    GroupMap,
    VectorSpace,
    cyclic,
    determinant,
    diagonal,
    invariants,
    map_algebra,
    matmul,
    nullspace,
    smith_normal_form,
    solve,
)
from prok.errors import ProkError
from prok.poly import GF, QQ


def check_snf(M):
    S, U, V = smith_normal_form(M)
    assert matmul(matmul(U, M), V) == S
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    d = diagonal(S)
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    for i, row in enumerate(S):
        for j, v in enumerate(row):
            if i != j:
                assert v == 0
    return d


def test_snf_examples():
    S, U, V = smith_normal_form([[1, 0], [0, 1]])
    assert S == [[1, 0], [0, 1]] and U == S and V == S
    assert check_snf([[2, 4], [6, 8]]) == [2, 4]
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]


def test_snf_degenerate_shapes():
    assert check_snf([[0, 0, 0]]) == [0]
    assert check_snf([[5], [10], [15]]) == [5]
    assert check_snf([[0]]) == [0]


def test_snf_over_fields():
    S, U, V = smith_normal_form([[QQ(2), QQ(4)], [QQ(1), QQ(2)]], QQ)
    assert diagonal(S) == [1, 0]
    F = GF(3)
    # 3 vanishes in GF(3), leaving a rank-one matrix
    S, U, V = smith_normal_form([[F(3), F(1)], [F(0), F(2)]], F)
    assert [x != 0 for x in diagonal(S)] == [True, False]


def test_invariants_examples():
    assert invariants(FGAbelianGroup(2)) == (2, [])
    assert invariants(FGAbelianGroup(2, [[2, 0], [0, 3]])) == (0, [6])
    assert invariants(cyclic(3)) == (0, [3])
    assert FGAbelianGroup(1, [[1]]).is_trivial()
    assert FGAbelianGroup(2, [[4, 0], [0, 6]]).order() == 24
    assert FGAbelianGroup(2, [[4, 0]]).to_json() == {"rank": 1, "torsion": [4]}


def test_vector_space_json():
    assert VectorSpace(QQ, 3).to_json() == {"field": "QQ", "dimension": 3}
    assert VectorSpace(GF(2), 2).to_json()["torsion"] == [2, 2]


def test_map_algebra_examples():
    Z = FGAbelianGroup(1)
    times3 = GroupMap(Z, Z, [[3]])
    assert invariants(map_algebra("cokernel", times3)) == (0, [3])
    proj = GroupMap(FGAbelianGroup(2), Z, [[1, 0]])
    assert invariants(map_algebra("kernel", proj)) == (1, [])
    Z2 = cyclic(2)
    assert map_algebra("is_zero", GroupMap(Z2, Z2, [[2]]))
    assert not map_algebra("is_zero", GroupMap(Z2, Z2, [[1]]))
    assert map_algebra("is_iso", GroupMap(Z2, Z2, [[1]]))


def test_map_must_respect_relations():
    with pytest.raises(ProkError):
        GroupMap(cyclic(2), cyclic(3), [[1]])
    GroupMap(cyclic(2), cyclic(4), [[2]])


def test_kernel_image_cokernel_of_multiplication():
    # Z/4 --x2--> Z/4: kernel Z/2, image Z/2, cokernel Z/2
    f = GroupMap(cyclic(4), cyclic(4), [[2]])
    assert invariants(f.kernel()) == (0, [2])
    assert invariants(f.image()) == (0, [2])
    assert invariants(f.cokernel()) == (0, [2])


def test_solve_and_nullspace():
    A = [[2, 0], [0, 3]]
    assert solve(A, [4, 9]) == [2, 3]
    assert solve(A, [1, 0]) is None
    N = nullspace([[1, 2, 3]], 3)
    for v in N:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    assert len(N) == 2


matrices = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=m, max_size=m)))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_snf_certificate(M):
    check_snf(M)


@settings(max_examples=40, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_invariants_ignore_shuffles(M, rnd):
    n = len(M[0])
    G = FGAbelianGroup(n, M)
    rows = [list(r) for r in M]
    rnd.shuffle(rows)
    perm = list(range(n))
    rnd.shuffle(perm)
    H = FGAbelianGroup(n, [[r[p] for p in perm] for r in rows])
    assert invariants(G) == invariants(H)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 11), st.integers(0, 11))
def test_composite_zero_agrees_with_matrix_product(n1, n2, a, b):
    # Z/n1 --a--> Z/n2 --b--> Z/n2 when the first map is well defined
    if (a * n1) % n2:
        return
    f = GroupMap(cyclic(n1), cyclic(n2), [[a]])
    g = GroupMap(cyclic(n2), cyclic(n2), [[b]])
    assert g.compose(f).is_zero() == ((a * b) % n2 == 0)


def test_random_snf_reproducible():
    rnd = random.Random(7)
    for _ in range(30):
        M = [[rnd.randint(-20, 20) for _ in range(3)] for _ in range(3)]
        assert smith_normal_form(M) == smith_normal_form(M)
