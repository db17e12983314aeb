import pytest

from powq.errors import AxiomViolation
from powq.groups import (
    center,
    conjugacy_classes,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    group_iso,
    klein,
    symmetric,
)
from powq.pq import (
    PowerQuandle,
    canonical_exponent,
    count_pq_morphisms,
    fingerprint,
    is_pq_morphism,
    orbits,
    pq_abelianization,
    pq_center,
    pq_from_json,
    pq_iso,
    pq_of_group,
    pq_to_json,
    validate_pq,
)

THREE_ELT = dict(size=3, unit=0, conj=[[0, 1, 2]] * 3, pow_=[[0, 1, 2]])


def test_group_pq_satisfies_axioms():
    for G in [cyclic(1), cyclic(9), klein(), symmetric(4), dicyclic(12), dihedral(10)]:
        P = pq_of_group(G)
        validate_pq(P.size, P.unit, P.conj, P.pow)


def test_three_element_example_validates():
    P = validate_pq(**THREE_ELT)
    assert P.exponent == 1
    # every nonzero power acts as the identity; only pi^0 hits the unit
    assert P.power(2, 7) == 2 and P.power(1, 0) == 0


def test_perturbed_conj_raises_a2():
    P = pq_of_group(symmetric(3))
    conj = [list(row) for row in P.conj]
    a = next(x for x in range(6) if conj[x] != list(range(6)))
    b = next(y for y in range(6) if conj[a][y] not in (y, a))
    conj[a][b] = conj[a][(b + 1) % 6]  # duplicate entry: lambda_a not bijective
    with pytest.raises(AxiomViolation) as err:
        validate_pq(6, 0, conj, P.pow)
    assert err.value.axiom == "A2"


def test_orbits_refine_to_conjugacy_classes():
    for G in [symmetric(3), dicyclic(8), dihedral(12)]:
        P = pq_of_group(G)
        assert orbits(P).classes == tuple(conjugacy_classes(G))


def test_pq_center_matches_group_center():
    for G in [symmetric(3), dicyclic(8), cyclic(6), dihedral(12)]:
        assert pq_center(pq_of_group(G)) == center(G).members


def test_canonical_exponent():
    P = pq_of_group(klein())
    # duplicate the period: tau rows repeat with N' = 2
    Q = PowerQuandle(P.size, P.unit, P.conj, list(P.pow) * 3, validate=True)
    R = canonical_exponent(Q)
    assert R.exponent == 2 and R.pow == P.pow


def test_fingerprint_involutions():
    assert fingerprint(pq_of_group(dihedral(8))).involutions == 5
    assert fingerprint(pq_of_group(dicyclic(8))).involutions == 1
    assert fingerprint(pq_of_group(klein())).involutions == 3


def test_pq_iso():
    assert pq_iso(pq_of_group(dihedral(8)), pq_of_group(dicyclic(8))) is None
    m = pq_iso(pq_of_group(symmetric(3)), pq_of_group(dihedral(6)))
    assert m is not None
    assert is_pq_morphism(pq_of_group(symmetric(3)), pq_of_group(dihedral(6)), m)
    assert pq_iso(pq_of_group(cyclic(4)), pq_of_group(klein())) is None


def test_group_iso_implies_pq_iso():
    pairs = [(symmetric(3), dihedral(6)), (cyclic(6), direct_product(cyclic(2), cyclic(3)))]
    for G, H in pairs:
        assert group_iso(G, H) is not None
        assert pq_iso(pq_of_group(G), pq_of_group(H)) is not None


def test_count_pq_morphisms():
    K = pq_of_group(klein())
    assert count_pq_morphisms(K, K) == 64
    C2 = pq_of_group(cyclic(2))
    assert count_pq_morphisms(C2, C2) == 2
    # one-element target absorbs everything
    assert count_pq_morphisms(K, pq_of_group(cyclic(1))) == 1


def test_pq_abelianization_shape():
    pres = pq_abelianization(pq_of_group(symmetric(3)))
    assert pres.rank == 3  # one orbit per conjugacy class
    assert all(len(mat) == 3 for mat in pres.action)


def test_json_roundtrip():
    P = pq_of_group(dicyclic(8))
    Q = pq_from_json(pq_to_json(P))
    assert Q.conj == P.conj and Q.pow == P.pow and Q.unit == P.unit
