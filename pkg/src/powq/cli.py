"""Command-line interface.

Exit codes: 0 = all checks pass, 2 = counterexample found, 3 = check failure.
"""
from __future__ import annotations

import sys

import click

from .errors import AxiomViolation, LimitExceeded, PowqError
from .groups import (
    abelianization,
    group_from_json,
    group_iso,
    group_to_json,
    parse_group_spec,
    validate_group,
)
from .intlinalg import b_group, bar_homology
from .pq import (
    count_pq_morphisms,
    orbits,
    pq_from_json,
    pq_iso,
    pq_of_group,
    pq_to_json,
    validate_pq,
)
from .presentation import (
    DEFAULT_LIMIT,
    gr_pq,
    presentation_of_pq,
    todd_coxeter,
    verify_five_term,
)
from .sweeps import VERSION, emit_report, report_from_json, sweep_adjoint, sweep_forgetful


def _read(path):
    with open(path) as fh:
        return fh.read()


def _load_group(path):
    return group_from_json(_read(path))


def _load_pq(path):
    return pq_from_json(_read(path))


@click.group()
@click.version_option(VERSION, prog_name="powq")
def main():
    """Finite groups, power quandles, and the adjunction between them."""


# ---------------------------------------------------------------------------
# groups

@main.group("group")
def group_cmd():
    """Operations on finite groups."""


@group_cmd.command("validate")
@click.argument("file", type=click.Path(exists=True))
def group_validate(file):
    """Check all group axioms on a multiplication-table file."""
    try:
        G = _load_group(file)
    except (PowqError, ValueError) as exc:
        click.echo(f"invalid: {exc}")
        sys.exit(3)
    click.echo(f"valid group of order {G.order}")


@group_cmd.command("catalog")
@click.argument("spec")
@click.option("-o", "--output", type=click.Path(), default=None)
def group_catalog(spec, output):
    """Construct a catalog group, e.g. 'cyclic(6)' or 'product(klein,cyclic(2))'."""
    G = parse_group_spec(spec)
    doc = group_to_json(G)
    if output:
        with open(output, "w") as fh:
            fh.write(doc + "\n")
        click.echo(f"wrote {spec}, order {G.order}, to {output}")
    else:
        click.echo(doc)


@group_cmd.command("iso")
@click.argument("file_a", type=click.Path(exists=True))
@click.argument("file_b", type=click.Path(exists=True))
def group_iso_cmd(file_a, file_b):
    """Search for a group isomorphism between two table files."""
    m = group_iso(_load_group(file_a), _load_group(file_b))
    if m is None:
        click.echo("not isomorphic")
        sys.exit(2)
    click.echo("isomorphic: " + " ".join(map(str, m)))


# ---------------------------------------------------------------------------
# power quandles

@main.group("pq")
def pq_cmd():
    """Operations on power quandles."""


@pq_cmd.command("validate")
@click.argument("file", type=click.Path(exists=True))
def pq_validate(file):
    """Check axioms A1-A9 on a power quandle file."""
    try:
        P = _load_pq(file)
    except AxiomViolation as exc:
        click.echo(f"invalid: {exc}")
        sys.exit(3)
    except (PowqError, ValueError) as exc:
        click.echo(f"invalid: {exc}")
        sys.exit(3)
    click.echo(f"valid power quandle: size {P.size}, exponent {P.exponent}")


@pq_cmd.command("of-group")
@click.argument("groupfile", type=click.Path(exists=True))
@click.option("-o", "--output", type=click.Path(), default=None)
def pq_of_group_cmd(groupfile, output):
    """The power quandle of a group (conjugation plus powers)."""
    P = pq_of_group(_load_group(groupfile))
    doc = pq_to_json(P)
    if output:
        with open(output, "w") as fh:
            fh.write(doc + "\n")
        click.echo(f"wrote power quandle of size {P.size} to {output}")
    else:
        click.echo(doc)


@pq_cmd.command("iso")
@click.argument("file_a", type=click.Path(exists=True))
@click.argument("file_b", type=click.Path(exists=True))
def pq_iso_cmd(file_a, file_b):
    """Search for a power quandle isomorphism between two files."""
    m = pq_iso(_load_pq(file_a), _load_pq(file_b))
    if m is None:
        click.echo("not isomorphic")
        sys.exit(2)
    click.echo("isomorphic: " + " ".join(map(str, m)))


@pq_cmd.command("orbits")
@click.argument("file", type=click.Path(exists=True))
def pq_orbits(file):
    """Orbit decomposition under conjugation and powers."""
    o = orbits(_load_pq(file))
    for i, cls in enumerate(o.classes):
        click.echo(f"orbit {i}: " + " ".join(map(str, cls)))


@pq_cmd.command("morph-count")
@click.argument("file_a", type=click.Path(exists=True))
@click.argument("file_b", type=click.Path(exists=True))
def pq_morph_count(file_a, file_b):
    """Count power quandle morphisms from A to B."""
    click.echo(count_pq_morphisms(_load_pq(file_a), _load_pq(file_b)))


# ---------------------------------------------------------------------------
# homology and B(G)

@main.command("homology")
@click.argument("groupfile", type=click.Path(exists=True))
@click.option("--degree", type=click.IntRange(1, 2), default=1)
@click.option("--max-order", type=int, default=16)
def homology_cmd(groupfile, degree, max_order):
    """Integer homology H_1 or H_2 from the normalized bar complex."""
    G = _load_group(groupfile)
    click.echo(f"H_{degree} = {bar_homology(G, degree, max_order)}")


@main.command("bgroup")
@click.argument("groupfile", type=click.Path(exists=True))
def bgroup_cmd(groupfile):
    """B(G): conjugacy classes modulo the power relations n[a] = [a^n]."""
    click.echo(f"B(G) = {b_group(_load_group(groupfile))}")


# ---------------------------------------------------------------------------
# the adjoint construction

@main.command("gr")
@click.argument("pqfile", type=click.Path(exists=True))
@click.option("--limit", type=int, default=DEFAULT_LIMIT)
def gr_cmd(pqfile, limit):
    """Enumerate the group generated by a power quandle."""
    P = _load_pq(pqfile)
    try:
        enum = todd_coxeter(presentation_of_pq(P), limit)
    except LimitExceeded:
        click.echo(f"limit {limit} exceeded; the group may be infinite")
        sys.exit(3)
    click.echo(f"|Gr(P)| = {enum.group.order}")


@main.command("grpq")
@click.argument("groupfile", type=click.Path(exists=True))
@click.option("--limit", type=int, default=DEFAULT_LIMIT)
def grpq_cmd(groupfile, limit):
    """The canonical central extension Gr Pq(G) -> G."""
    G = _load_group(groupfile)
    try:
        ext = gr_pq(G, limit)
    except LimitExceeded:
        click.echo(f"limit {limit} exceeded")
        sys.exit(3)
    click.echo(f"|E| = {ext.total.order}")
    click.echo(f"|A(G)| = {len(ext.kernel)}")
    click.echo("kernel central: yes")


@main.group("verify")
def verify_cmd():
    """Theorem verifications on a single group."""


@verify_cmd.command("five-term")
@click.argument("groupfile", type=click.Path(exists=True))
@click.option("--limit", type=int, default=DEFAULT_LIMIT)
def five_term_cmd(groupfile, limit):
    """Consequences of the exact sequence H2 -> A -> B -> H1 -> 0."""
    G = _load_group(groupfile)
    ext = gr_pq(G, limit)
    rep = verify_five_term(G, ext)
    click.echo(f"B(G) = {rep.b_invariants}   H1 = {rep.h1_invariants}")
    if rep.h2_invariants is not None:
        click.echo(f"H2 = {rep.h2_invariants}")
    click.echo(f"|A| = {rep.kernel_order}   |A cap [E,E]| = {rep.kernel_in_commutator}")
    for name, ok in (
        ("Ab(E) = B(G)", rep.ab_total_matches_b),
        ("coker(A -> Ab(E)) = H1", rep.coker_matches_h1),
        ("|A|*|H1| = |A cap [E,E]|*|B|", rep.cardinality_identity),
        ("|A cap [E,E]| divides |H2|", rep.schur_image_divides),
    ):
        if ok is None:
            click.echo(f"  {name}: skipped (H2 out of bound)")
        else:
            click.echo(f"  {name}: {'pass' if ok else 'FAIL'}")
    if not rep.ok():
        sys.exit(3)


# ---------------------------------------------------------------------------
# sweeps and reports

@main.group("sweep")
def sweep_cmd():
    """Catalog-wide theorem verification sweeps."""


@sweep_cmd.command("forgetful")
@click.option("--max-order", type=int, required=True)
@click.option("-o", "--output", type=click.Path(), default=None)
def sweep_forgetful_cmd(max_order, output):
    """Compare pq-isomorphism with group isomorphism over the catalog."""
    rep = sweep_forgetful(max_order)
    doc = emit_report(rep, "json")
    if output:
        with open(output, "w") as fh:
            fh.write(doc + "\n")
        click.echo(f"wrote report to {output}")
    else:
        click.echo(doc)
    sys.exit(rep.exit_code())


@sweep_cmd.command("adjoint")
@click.option("--max-order", type=int, required=True)
@click.option("--limit", type=int, default=DEFAULT_LIMIT)
@click.option("-o", "--output", type=click.Path(), default=None)
def sweep_adjoint_cmd(max_order, limit, output):
    """Run the Gr Pq(G) pipeline over the catalog."""
    rep = sweep_adjoint(max_order, limit)
    doc = emit_report(rep, "json")
    if output:
        with open(output, "w") as fh:
            fh.write(doc + "\n")
        click.echo(f"wrote report to {output}")
    else:
        click.echo(doc)
    sys.exit(rep.exit_code())


@main.command("report")
@click.argument("file", type=click.Path(exists=True))
@click.option("--format", "fmt", type=str, default="text")
def report_cmd(file, fmt):
    """Re-render a saved sweep report."""
    rep = report_from_json(_read(file))
    click.echo(emit_report(rep, fmt), nl=False)
    sys.exit(rep.exit_code())


if __name__ == "__main__":
    main()
