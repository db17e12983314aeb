import json

from click.testing import CliRunner

from powq.cli import main


def invoke(*args, **kw):
    return CliRunner().invoke(main, args, **kw)


def write_group(tmp_path, spec, name="g.json"):
    path = tmp_path / name
    res = invoke("group", "catalog", spec, "-o", str(path))
    assert res.exit_code == 0, res.output
    return str(path)


def test_group_catalog_and_validate(tmp_path):
    path = write_group(tmp_path, "cyclic(6)")
    res = invoke("group", "validate", path)
    assert res.exit_code == 0 and "order 6" in res.output


def test_group_validate_rejects_garbage(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"order": 2, "mul": [0, 1, 1, 1]}))
    res = invoke("group", "validate", str(path))
    assert res.exit_code == 3


def test_group_iso(tmp_path):
    a = write_group(tmp_path, "symmetric(3)", "a.json")
    b = write_group(tmp_path, "dihedral(6)", "b.json")
    c = write_group(tmp_path, "cyclic(6)", "c.json")
    assert invoke("group", "iso", a, b).exit_code == 0
    assert invoke("group", "iso", a, c).exit_code == 2


def test_pq_pipeline(tmp_path):
    g = write_group(tmp_path, "dicyclic(8)")
    pq = str(tmp_path / "pq.json")
    assert invoke("pq", "of-group", g, "-o", pq).exit_code == 0
    res = invoke("pq", "validate", pq)
    assert res.exit_code == 0 and "exponent 4" in res.output
    res = invoke("pq", "orbits", pq)
    assert res.exit_code == 0 and len(res.output.splitlines()) == 5
    res = invoke("pq", "morph-count", pq, pq)
    assert res.exit_code == 0 and res.output.strip().isdigit()


def test_pq_iso_cli(tmp_path):
    a = write_group(tmp_path, "dihedral(8)", "a.json")
    b = write_group(tmp_path, "dicyclic(8)", "b.json")
    pa, pb = str(tmp_path / "pa.json"), str(tmp_path / "pb.json")
    invoke("pq", "of-group", a, "-o", pa)
    invoke("pq", "of-group", b, "-o", pb)
    assert invoke("pq", "iso", pa, pb).exit_code == 2
    assert invoke("pq", "iso", pa, pa).exit_code == 0


def test_homology_and_bgroup(tmp_path):
    g = write_group(tmp_path, "klein")
    assert "H_2 = [2]" in invoke("homology", g, "--degree", "2").output
    assert "B(G) = [2,2,2]" in invoke("bgroup", g).output


def test_gr_and_grpq(tmp_path):
    g = write_group(tmp_path, "dicyclic(8)")
    res = invoke("grpq", g)
    assert res.exit_code == 0
    assert "|E| = 16" in res.output and "|A(G)| = 2" in res.output
    pq = str(tmp_path / "pq.json")
    invoke("pq", "of-group", g, "-o", pq)
    assert "|Gr(P)| = 16" in invoke("gr", pq).output


def test_verify_five_term(tmp_path):
    g = write_group(tmp_path, "symmetric(3)")
    res = invoke("verify", "five-term", g)
    assert res.exit_code == 0 and "FAIL" not in res.output


def test_sweep_and_report(tmp_path):
    out = str(tmp_path / "rep.json")
    res = invoke("sweep", "forgetful", "--max-order", "6", "-o", out)
    assert res.exit_code == 0
    res = invoke("report", out, "--format", "text")
    assert res.exit_code == 0 and "no counterexamples" in res.output
    assert invoke("report", out, "--format", "yaml").exit_code != 0


def test_sweep_adjoint_cli():
    res = invoke("sweep", "adjoint", "--max-order", "4")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["kind"] == "adjoint"
