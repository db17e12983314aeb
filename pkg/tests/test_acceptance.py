"""The acceptance gate: eight criteria, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
pass; any failure fails the corresponding test.
"""
import random
import sys
import time

import pytest

from powq.groups import (
    abelian_invariants_of,
    cyclic,
    dicyclic,
    dihedral,
    count_group_homs,
    direct_product,
    exponent,
    group_iso,
    klein,
    power_fingerprint,
    abelian_from_fingerprint,
    quotient,
    center,
    symmetric,
)
from powq.intlinalg import IntMatrix, b_group, det, smith_normal_form
from powq.pq import (
    PowerQuandle,
    count_pq_morphisms,
    fingerprint,
    pq_iso,
    pq_of_group,
    validate_pq,
)
from powq.presentation import (
    abelian_adjoint_summary,
    check_split,
    gr_pq,
    presentation_of_pq,
    todd_coxeter,
    verify_five_term,
)
from powq.sweeps import abelian_types, catalog_families, sweep_adjoint, sweep_forgetful

PASS = "\n  criterion {}: PASS — {}"


def report(n, msg):
    print(PASS.format(n, msg), file=sys.stderr)


def test_criterion_1_klein_counts():
    t0 = time.monotonic()
    K = klein()
    assert count_group_homs(K, K) == 16
    assert count_pq_morphisms(pq_of_group(K), pq_of_group(K)) == 64
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    report(1, f"Klein counts 16 group / 64 pq morphisms in {elapsed:.3f}s")


def test_criterion_2_d8_vs_q8():
    t0 = time.monotonic()
    D8, Q8 = dihedral(8), dicyclic(8)
    assert fingerprint(pq_of_group(D8)).involutions == 5
    assert fingerprint(pq_of_group(Q8)).involutions == 1
    assert pq_iso(pq_of_group(D8), pq_of_group(Q8)) is None
    qa, _ = quotient(D8, center(D8))
    qb, _ = quotient(Q8, center(Q8))
    assert qa.order == 4 and exponent(qa) == 2
    assert qb.order == 4 and exponent(qb) == 2
    assert group_iso(qa, qb) is not None
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    report(2, f"D8/Q8 involutions 5/1, pq-distinct, central quotients isomorphic ({elapsed:.3f}s)")


def test_criterion_3_forgetful_sweep():
    t0 = time.monotonic()
    rep = sweep_forgetful(16)
    elapsed = time.monotonic() - t0
    assert rep.counterexamples == []
    assert rep.check_failures == []
    assert rep.exit_code() == 0
    for p in rep.pairs:
        if p["pq_iso"]:
            assert p["centers_iso"] and p["central_quotients_iso"]
    assert elapsed < 300
    report(3, f"sweep_forgetful(16): {len(rep.pairs)} pairs, zero counterexamples, {elapsed:.1f}s")


@pytest.fixture(scope="module")
def adjoint_report():
    return sweep_adjoint(12, limit=2_000_000, extra=[("dicyclic(8)", dicyclic(8))])


def test_criterion_4_adjoint_sweep(adjoint_report):
    rep = adjoint_report
    assert rep.check_failures == []
    for g in rep.groups:
        assert not g.get("limit_exceeded"), g["label"]
        assert g["kernel_central"], g["label"]
        assert g["ab_routes_agree"], g["label"]
    assert rep.elapsed_seconds < 600
    report(4, f"sweep_adjoint(12)+Q8: {len(rep.groups)} groups, Ab(E)=B(G) on both routes, {rep.elapsed_seconds}s")


def test_criterion_5_five_term(adjoint_report):
    rep = adjoint_report
    by_label = {g["label"]: g for g in rep.groups}
    for g in rep.groups:
        if g.get("route") == "enumeration":
            assert g["five_term_ok"], g["label"]
    # regression-pinned values, first derived by the pipeline itself with
    # bar-complex H2 as the independent oracle
    for n in range(1, 13):
        assert by_label[f"cyclic({n})"]["a_order"] == 1
    assert by_label["symmetric(3)"]["a_order"] == 1
    assert by_label["dicyclic(8)"]["a_order"] == 2
    report(5, "five-term identity and H2 divisibility hold; pinned kernels match")


def test_criterion_6_splitting():
    cases = [(label, G) for label, G in catalog_families(16) if G.is_abelian()]
    cases += [("symmetric(3)", symmetric(3)), ("symmetric(4)", symmetric(4))]
    for label, G in cases:
        if G.is_abelian() and b_group(G).group_order() > 2048:
            summary = abelian_adjoint_summary(G)
            assert summary.split_ok and summary.product_ok, label
        else:
            ext = gr_pq(G)
            assert check_split(ext) is not None, label  # also verifies E = G x A
    report(6, f"check_split and E = G x A(G) for {len(cases)} pq-generated groups")


def test_criterion_7_abelian_reconstruction():
    t0 = time.monotonic()
    count = 0
    for n in range(1, 65):
        for label, G in abelian_types(n):
            inv = abelian_invariants_of(G)
            assert abelian_from_fingerprint(power_fingerprint(G), G.order) == inv, label
            count += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 10
    report(7, f"fingerprint reconstruction exact on {count} abelian groups <= 64 in {elapsed:.1f}s")


def test_criterion_8_property_suites():
    rng = random.Random(20240824)
    for _ in range(10_000):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        A = IntMatrix([[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)])
        res = smith_normal_form(A)
        assert res.u @ A @ res.v == res.s
        assert abs(det(res.u)) == 1 and abs(det(res.v)) == 1
        nz = [d for d in res.diagonal() if d]
        assert all(d > 0 for d in nz)
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))

    for label, G in catalog_families(64):
        P = pq_of_group(G)
        validate_pq(P.size, P.unit, P.conj, P.pow)

    P3 = validate_pq(3, 0, [[0, 1, 2]] * 3, [[0, 1, 2]])
    assert todd_coxeter(presentation_of_pq(P3)).group.order == 1
    report(8, "10k SNF property checks, axioms on the catalog <= 64, 3-element example")
