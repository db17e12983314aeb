import random

import pytest
from hypothesis import given, settings, strategies as st

from powq.errors import SizeBound
from powq.groups import (
    abelianization,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    klein,
    symmetric,
)
from powq.intlinalg import (
    IntMatrix,
    b_group,
    bar_homology,
    cokernel_invariants,
    det,
    h1_matches_abelianization,
    lattice_coordinates,
    row_lattice_basis,
    smith_normal_form,
    snf_diagonal,
)


def check_snf(data):
    A = IntMatrix(data)
    res = smith_normal_form(A)
    assert res.u @ A @ res.v == res.s
    assert abs(det(res.u)) == 1 and abs(det(res.v)) == 1
    assert res.u @ res.u_inv == IntMatrix.identity(A.rows)
    assert res.v @ res.v_inv == IntMatrix.identity(A.cols)
    diag = res.diagonal()
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    # zero diagonal entries only after all nonzero ones
    assert diag == nz + [0] * (len(diag) - len(nz))
    for i in range(res.s.rows):
        for j in range(res.s.cols):
            if i != j:
                assert res.s.data[i][j] == 0
    assert snf_diagonal(A) == diag


def test_snf_known_values():
    assert snf_diagonal([[2, 0], [0, 3]]) == [1, 6]
    assert snf_diagonal([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) == [2, 2, 156]
    assert snf_diagonal([[0, 0], [0, 0]]) == [0, 0]
    check_snf([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])


@settings(max_examples=300, deadline=None)
@given(
    st.integers(1, 5),
    st.integers(1, 5),
    st.randoms(use_true_random=False),
)
def test_snf_properties(r, c, rng):
    data = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
    check_snf(data)


def test_cokernel_invariants():
    inv = cokernel_invariants([[2, 0, 0], [0, 3, 0]])
    assert inv.factors == (6,) and inv.free_rank == 1
    inv = cokernel_invariants([[1, 0], [0, 1]])
    assert inv.factors == () and inv.free_rank == 0


def test_hermite_and_membership():
    basis = row_lattice_basis([[2, 1, 0], [0, 3, 1], [4, 2, 0]], 3)
    for vec, inside in [((2, 1, 0), True), ((2, 4, 1), True), ((1, 0, 0), False)]:
        coords = lattice_coordinates(basis, vec)
        assert (coords is not None) == inside
        if inside:
            rebuilt = [0, 0, 0]
            for q, row in zip(coords, basis):
                rebuilt = [a + q * b for a, b in zip(rebuilt, row)]
            assert tuple(rebuilt) == vec


def test_b_group_values():
    assert str(b_group(symmetric(3))) == "[2]"
    assert str(b_group(dicyclic(8))) == "[2,2,2]"
    assert str(b_group(dihedral(8))) == "[2,2,2]"
    assert str(b_group(cyclic(6))) == "[6]"
    assert str(b_group(alternating(4))) == "[6]"
    assert str(b_group(klein())) == "[2,2,2]"
    assert str(b_group(cyclic(1))) == "[]"
    # B(C_n) = Z/n for every cyclic group
    for n in range(1, 13):
        assert b_group(cyclic(n)).factors == ((n,) if n > 1 else ())


def test_h1_matches_abelianization():
    for G in [cyclic(5), klein(), symmetric(3), dicyclic(8), dihedral(12), alternating(4)]:
        assert h1_matches_abelianization(G)


def test_h2_known_values():
    # independent bar-complex oracles, frozen: the Schur multiplier of a
    # cyclic group is trivial, of C2xC2 is Z/2, of D8 is Z/2, of Q8 trivial,
    # of A4 is Z/2, of (C2)^3 is (Z/2)^3
    assert str(bar_homology(cyclic(8), 2)) == "[]"
    assert str(bar_homology(klein(), 2)) == "[2]"
    assert str(bar_homology(dihedral(8), 2)) == "[2]"
    assert str(bar_homology(dicyclic(8), 2)) == "[]"
    assert str(bar_homology(alternating(4), 2)) == "[2]"
    assert str(bar_homology(direct_product(klein(), cyclic(2)), 2)) == "[2,2,2]"
    assert str(bar_homology(symmetric(3), 2)) == "[]"


def test_bar_homology_bound():
    with pytest.raises(SizeBound):
        bar_homology(symmetric(4), 2, max_order=16)
    with pytest.raises(ValueError):
        bar_homology(cyclic(2), 3)
