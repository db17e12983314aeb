"""Catalog sweeps: run the theorem checks over a curated family of small
groups, search for counterexamples, and emit deterministic reports.

The catalog is a curated family list, not a classification of all groups
of each order; counterexample verdicts are relative to it.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, asdict

from .errors import LimitExceeded, UnsupportedFormat
from .groups import (
    FiniteGroup,
    Subgroup,
    abelian_invariants_of,
    alternating,
    center,
    conjugacy_classes,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    group_iso,
    heisenberg,
    quotient,
    symmetric,
)
from .intlinalg import b_group, bar_homology
from .pq import fingerprint, pq_iso, pq_of_group
from .presentation import (
    DEFAULT_LIMIT,
    DEFAULT_TABLE_BOUND,
    abelian_adjoint_summary,
    check_split,
    gr_pq,
    verify_five_term,
)

VERSION = "0.1.0"
H2_BOUND = 16


def _divisor_chains(n, prev):
    """Descending chains d_1 >= d_2 >= ... with product n and d_{i+1} | d_i."""
    if n == 1:
        yield ()
        return
    for d in range(2, prev + 1):
        if n % d == 0 and prev % d == 0:
            for rest in _divisor_chains(n // d, d):
                yield (d,) + rest


def abelian_types(n):
    """All abelian groups of order n, one per invariant-factor list."""
    out = []
    for chain in sorted(_divisor_chains(n, n)):
        factors = tuple(reversed(chain))  # ascending divisibility chain
        G = cyclic(1)
        for d in factors:
            G = direct_product(G, cyclic(d))
        if len(factors) <= 1:
            label = f"cyclic({n})"
        else:
            label = "abelian(" + ",".join(str(d) for d in factors) + ")"
        out.append((label, G))
    return out


def catalog_families(max_order):
    """The sweep catalog: (label, group) pairs, sorted by (order, label).

    heisenberg(2) is omitted: it is isomorphic to dihedral(8), which is
    already present.
    """
    out = []
    for n in range(1, max_order + 1):
        out.extend(abelian_types(n))
    for n in range(6, max_order + 1, 2):
        out.append((f"dihedral({n})", dihedral(n)))
    for n in range(8, max_order + 1, 4):
        out.append((f"dicyclic({n})", dicyclic(n)))
    for n, size in ((3, 6), (4, 24), (5, 120)):
        if size <= max_order:
            out.append((f"symmetric({n})", symmetric(n)))
    for n, size in ((4, 12), (5, 60)):
        if size <= max_order:
            out.append((f"alternating({n})", alternating(n)))
    for p in (3, 5):
        if p**3 <= max_order:
            out.append((f"heisenberg({p})", heisenberg(p)))
    out.sort(key=lambda item: (item[1].order, item[0]))
    return out


@dataclass
class VerificationReport:
    """Everything a sweep learned, in canonical order for deterministic output."""

    kind: str
    version: str = VERSION
    max_order: int = 0
    limit: int = 0
    families: list = field(default_factory=list)
    groups: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    check_failures: list = field(default_factory=list)
    elapsed_seconds: float = 0.0
    note: str = (
        "counterexample verdicts are relative to the curated catalog; "
        "their absence is evidence, not proof"
    )

    def exit_code(self):
        if self.counterexamples:
            return 2
        if self.check_failures:
            return 3
        return 0


def _invariants_str(inv):
    return str(inv)


def _group_record(label, G):
    Z = center(G)
    return {
        "label": label,
        "order": G.order,
        "abelian": G.is_abelian(),
        "center_order": len(Z),
        "center": str(abelian_invariants_of(Z.as_group())),
        "class_count": len(conjugacy_classes(G)),
        "b_group": str(b_group(G)),
    }


def sweep_forgetful(max_order) -> VerificationReport:
    """For every same-order catalog pair: compare pq_iso with group_iso and
    check the center / central-quotient theorems on pq-isomorphic pairs."""
    t0 = time.monotonic()
    rep = VerificationReport(kind="forgetful", max_order=max_order)
    fams = catalog_families(max_order)
    rep.families = [label for label, _ in fams]
    pqs = []
    for label, G in fams:
        rec = _group_record(label, G)
        P = pq_of_group(G)
        rec["involutions"] = fingerprint(P).involutions
        rep.groups.append(rec)
        pqs.append(P)
    for i in range(len(fams)):
        for j in range(i, len(fams)):
            la, G = fams[i]
            lb, H = fams[j]
            if G.order != H.order:
                continue
            pq_ok = pq_iso(pqs[i], pqs[j]) is not None
            g_ok = group_iso(G, H) is not None
            pair = {"a": la, "b": lb, "pq_iso": pq_ok, "group_iso": g_ok}
            if pq_ok:
                za, zb = center(G), center(H)
                centers_iso = group_iso(za.as_group(), zb.as_group()) is not None
                qa, _ = quotient(G, za)
                qb, _ = quotient(H, zb)
                quotients_iso = group_iso(qa, qb) is not None
                pair["centers_iso"] = centers_iso
                pair["central_quotients_iso"] = quotients_iso
                if not centers_iso:
                    rep.check_failures.append(f"{la}/{lb}: centers not isomorphic")
                if not quotients_iso:
                    rep.check_failures.append(
                        f"{la}/{lb}: central quotients not isomorphic"
                    )
                if not g_ok:
                    rep.counterexamples.append(f"{la}/{lb}")
            if g_ok and not pq_ok:
                rep.check_failures.append(
                    f"{la}/{lb}: group-isomorphic but not pq-isomorphic"
                )
            rep.pairs.append(pair)
    rep.elapsed_seconds = round(time.monotonic() - t0, 3)
    return rep


def sweep_adjoint(
    max_order, limit=DEFAULT_LIMIT, extra=(), table_bound=DEFAULT_TABLE_BOUND
) -> VerificationReport:
    """Run the full Gr Pq(G) pipeline over the catalog: enumeration,
    centrality, the two abelianization routes, five-term checks, splitting.

    `extra` adds (label, group) entries beyond the order bound.  Abelian
    groups whose B(G) exceeds table_bound are handled on the lattice route
    instead of materializing E.
    """
    t0 = time.monotonic()
    rep = VerificationReport(kind="adjoint", max_order=max_order, limit=limit)
    fams = catalog_families(max_order)
    seen = {label for label, _ in fams}
    for label, G in extra:
        if label not in seen:
            fams.append((label, G))
    fams.sort(key=lambda item: (item[1].order, item[0]))
    rep.families = [label for label, _ in fams]
    for label, G in fams:
        rec = _group_record(label, G)
        bG = b_group(G)
        try:
            if G.is_abelian() and bG.group_order() > table_bound:
                summary = abelian_adjoint_summary(G)
                rec["route"] = "lattice"
                rec["e_order"] = summary.e_order
                rec["a_order"] = summary.a_order
                rec["kernel_central"] = True  # E is abelian on this route
                rec["ab_routes_agree"] = str(summary.e_invariants) == rec["b_group"]
                rec["split"] = summary.split_ok
                rec["product_iso"] = summary.product_ok
                if not summary.split_ok or not summary.product_ok:
                    rep.check_failures.append(f"{label}: abelian route split failed")
                if not rec["ab_routes_agree"]:
                    rep.check_failures.append(f"{label}: Ab(E) != B(G)")
            else:
                ext = gr_pq(G, limit)
                rec["route"] = "enumeration"
                rec["e_order"] = ext.total.order
                rec["a_order"] = len(ext.kernel)
                rec["kernel_central"] = True  # gr_pq raises otherwise
                five = verify_five_term(G, ext, H2_BOUND)
                rec["ab_routes_agree"] = five.ab_total_matches_b
                rec["h1"] = str(five.h1_invariants)
                if five.h2_invariants is not None:
                    rec["h2"] = str(five.h2_invariants)
                rec["five_term_ok"] = five.ok()
                rec["kernel_in_commutator"] = five.kernel_in_commutator
                if not five.ok():
                    rep.check_failures.append(f"{label}: five-term checks failed")
                if not five.ab_total_matches_b:
                    rep.check_failures.append(f"{label}: Ab(E) != B(G)")
                rec["split"] = check_split(ext) is not None
        except LimitExceeded:
            rec["route"] = "enumeration"
            rec["limit_exceeded"] = True
        rep.groups.append(rec)
    rep.elapsed_seconds = round(time.monotonic() - t0, 3)
    return rep


# ---------------------------------------------------------------------------
# serialization

def emit_report(report: VerificationReport, format="json") -> str:
    if format == "json":
        return json.dumps(asdict(report), sort_keys=True, indent=2)
    if format == "text":
        return _text_report(report)
    raise UnsupportedFormat(format)


def report_from_json(text) -> VerificationReport:
    doc = json.loads(text)
    return VerificationReport(**doc)


def _text_report(rep):
    lines = [
        f"powq {rep.version} — {rep.kind} sweep, max order {rep.max_order}",
        f"families: {len(rep.families)}   elapsed: {rep.elapsed_seconds}s",
        f"note: {rep.note}",
        "",
    ]
    if rep.kind == "forgetful":
        lines.append(f"{'pair':44} {'pq_iso':>7} {'grp_iso':>7} checks")
        for p in rep.pairs:
            checks = ""
            if p["pq_iso"]:
                checks = (
                    f"centers={'ok' if p.get('centers_iso') else 'FAIL'} "
                    f"quotients={'ok' if p.get('central_quotients_iso') else 'FAIL'}"
                )
            lines.append(
                f"{p['a'] + ' / ' + p['b']:44} "
                f"{'yes' if p['pq_iso'] else 'no':>7} "
                f"{'yes' if p['group_iso'] else 'no':>7} {checks}"
            )
    else:
        lines.append(f"{'group':28} {'|G|':>5} {'|E|':>8} {'|A|':>6} {'B(G)':14} verdicts")
        for g in rep.groups:
            if g.get("limit_exceeded"):
                lines.append(f"{g['label']:28} {g['order']:>5} limit exceeded")
                continue
            verdicts = []
            if "ab_routes_agree" in g:
                verdicts.append("ab=" + ("ok" if g["ab_routes_agree"] else "FAIL"))
            if "five_term_ok" in g:
                verdicts.append("5term=" + ("ok" if g["five_term_ok"] else "FAIL"))
            if "split" in g:
                verdicts.append("split=" + ("yes" if g["split"] else "no"))
            lines.append(
                f"{g['label']:28} {g['order']:>5} {g.get('e_order', ''):>8} "
                f"{g.get('a_order', ''):>6} {g['b_group']:14} " + " ".join(verdicts)
            )
    lines.append("")
    if rep.counterexamples:
        lines.append("COUNTEREXAMPLES: " + ", ".join(rep.counterexamples))
    else:
        lines.append("no counterexamples")
    if rep.check_failures:
        lines.append("CHECK FAILURES: " + "; ".join(rep.check_failures))
    return "\n".join(lines) + "\n"
