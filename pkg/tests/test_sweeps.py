import json

import pytest

from powq.errors import UnsupportedFormat
from powq.groups import dicyclic
from powq.sweeps import (
    VerificationReport,
    abelian_types,
    catalog_families,
    emit_report,
    report_from_json,
    sweep_adjoint,
    sweep_forgetful,
)


def test_abelian_types_counts():
    # number of abelian groups of order n = product over p of partitions of exponents
    assert [label for label, _ in abelian_types(1)] == ["cyclic(1)"]
    assert len(abelian_types(16)) == 5
    assert len(abelian_types(36)) == 4
    assert len(abelian_types(64)) == 11
    labels = [label for label, _ in abelian_types(8)]
    assert labels == ["abelian(2,2,2)", "abelian(2,4)", "cyclic(8)"]


def test_catalog_families_sorted_and_deduped():
    fams = catalog_families(16)
    labels = [label for label, _ in fams]
    assert len(labels) == len(set(labels))
    orders = [G.order for _, G in fams]
    assert orders == sorted(orders)
    assert "heisenberg(2)" not in labels
    assert "dihedral(8)" in labels and "dicyclic(16)" in labels


def test_sweep_forgetful_trivial():
    rep = sweep_forgetful(1)
    assert rep.counterexamples == [] and rep.exit_code() == 0
    assert len(rep.pairs) == 1  # the self-pair of the trivial group


def test_sweep_forgetful_8():
    rep = sweep_forgetful(8)
    assert rep.exit_code() == 0
    d8q8 = next(
        p for p in rep.pairs if {p["a"], p["b"]} == {"dihedral(8)", "dicyclic(8)"}
    )
    assert d8q8["pq_iso"] is False and d8q8["group_iso"] is False
    s3d6 = next(
        p for p in rep.pairs if {p["a"], p["b"]} == {"symmetric(3)", "dihedral(6)"}
    )
    assert s3d6["pq_iso"] and s3d6["group_iso"]
    assert s3d6["centers_iso"] and s3d6["central_quotients_iso"]


def test_sweep_adjoint_small():
    rep = sweep_adjoint(8, extra=[("dicyclic(8)", dicyclic(8))])
    assert rep.exit_code() == 0
    by_label = {g["label"]: g for g in rep.groups}
    q8 = by_label["dicyclic(8)"]
    assert q8["e_order"] == 16 and q8["a_order"] == 2 and q8["kernel_central"]
    assert all(g.get("ab_routes_agree") for g in rep.groups)


def test_emit_report_formats():
    rep = sweep_forgetful(4)
    doc = emit_report(rep, "json")
    assert doc == emit_report(rep, "json")  # deterministic
    parsed = json.loads(doc)
    assert parsed["kind"] == "forgetful"
    text = emit_report(rep, "text")
    assert "no counterexamples" in text
    with pytest.raises(UnsupportedFormat):
        emit_report(rep, "yaml")


def test_report_roundtrip_and_exit_codes():
    rep = sweep_forgetful(4)
    back = report_from_json(emit_report(rep, "json"))
    assert back.pairs == rep.pairs and back.exit_code() == 0
    assert VerificationReport(kind="x", counterexamples=["a/b"]).exit_code() == 2
    assert VerificationReport(kind="x", check_failures=["boom"]).exit_code() == 3
