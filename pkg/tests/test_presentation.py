import pytest

from powq.errors import LimitExceeded, SectionNotPqMorphism
from powq.groups import (
    GroupHom,
    abelian_invariants_of,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    group_iso,
    klein,
    symmetric,
)
from powq.pq import PowerQuandle, pq_of_group
from powq.presentation import (
    Presentation,
    abelian_adjoint_summary,
    check_split,
    extend_section,
    gr_pq,
    presentation_of_pq,
    todd_coxeter,
    verify_five_term,
)

THREE_ELT = PowerQuandle(3, 0, [[0, 1, 2]] * 3, [[0, 1, 2]])


def test_todd_coxeter_cyclic():
    enum = todd_coxeter(Presentation(1, ((1, 1, 1, 1, 1),)))
    assert enum.group.order == 5
    enum = todd_coxeter(Presentation(2, ((1, 1), (2, 2), (1, 2, 1, 2))))
    assert enum.group.order == 4  # C2 x C2


def test_todd_coxeter_limit():
    with pytest.raises(LimitExceeded):
        todd_coxeter(Presentation(1, ()), limit=500)


def test_presentation_examples():
    one = presentation_of_pq(pq_of_group(cyclic(1)))
    assert one.num_generators == 1
    assert todd_coxeter(one).group.order == 1
    c2 = presentation_of_pq(pq_of_group(cyclic(2)))
    assert todd_coxeter(c2).group.order == 2
    # exponent 1 kills every generator: relator sigma(a)^1
    assert todd_coxeter(presentation_of_pq(THREE_ELT)).group.order == 1


def test_presentation_dump():
    pres = Presentation(2, ((1, -2), (2, 2)))
    assert pres.dump() == "1 -2\n2 2"


GR_CASES = [
    # (group, |E|, |A|) — |E| from enumeration, cross-checked by |E| = |G|*|A|
    (cyclic(2), 2, 1),
    (cyclic(12), 12, 1),
    (symmetric(3), 6, 1),
    (dicyclic(8), 16, 2),
    (dihedral(8), 16, 2),
    (klein(), 8, 2),
    (alternating(4), 24, 2),
]


@pytest.mark.parametrize("G,e_order,a_order", GR_CASES)
def test_gr_pq_orders(G, e_order, a_order):
    ext = gr_pq(G)
    assert ext.total.order == e_order
    assert len(ext.kernel) == a_order
    assert ext.total.order == G.order * len(ext.kernel)
    assert ext.proj.is_surjective()
    # section is a normalized set-theoretic section
    assert all(ext.proj.image[ext.section[g]] == g for g in range(G.order))


@pytest.mark.parametrize("G,e_order,a_order", GR_CASES)
def test_five_term(G, e_order, a_order):
    rep = verify_five_term(G, gr_pq(G))
    assert rep.ok()
    assert rep.kernel_order == a_order


def test_check_split():
    for G, _, _ in GR_CASES:
        ext = gr_pq(G)
        s = check_split(ext)
        assert s is not None
        assert all(ext.proj.image[s.image[g]] == g for g in range(G.order))


def test_extend_section_identity():
    G = dicyclic(8)
    ext = gr_pq(G)
    phi = extend_section(ext, ext.proj, ext.section)
    assert phi.image == tuple(range(ext.total.order))


def test_extend_section_to_base():
    # E = G, p = id, s = id: the extension morphism is the projection itself
    G = symmetric(3)
    ext = gr_pq(G)
    ident = GroupHom(G, G, range(G.order))
    phi = extend_section(ext, ident, range(G.order))
    assert phi.image == ext.proj.image


def test_extend_section_rejects_bad_section():
    G = dicyclic(8)
    ext = gr_pq(G)
    E = ext.total
    # swap two kernel-coset representatives over non-central elements: the
    # resulting section fails to preserve conjugation or powers
    z = next(x for x in ext.kernel.members if x != 0)
    bad = list(ext.section)
    g = next(g for g in range(G.order) if G.element_order(g) == 4)
    bad[g] = E.mul[bad[g]][z]
    h = G.mul[g][g]
    with pytest.raises((SectionNotPqMorphism, ValueError)):
        extend_section(ext, ext.proj, bad)


def test_abelian_route_matches_enumeration():
    for G in [klein(), cyclic(12), direct_product(klein(), cyclic(2)),
              direct_product(cyclic(2), cyclic(4))]:
        summary = abelian_adjoint_summary(G)
        ext = gr_pq(G)
        assert summary.e_order == ext.total.order
        assert summary.a_order == len(ext.kernel)
        assert summary.e_invariants == abelian_invariants_of(ext.total)
        assert summary.a_invariants == abelian_invariants_of(ext.kernel.as_group())
        assert summary.split_ok and summary.product_ok


def test_abelian_route_rejects_nonabelian():
    with pytest.raises(ValueError):
        abelian_adjoint_summary(symmetric(3))


def test_large_elementary_abelian_without_enumeration():
    G = direct_product(klein(), klein())
    summary = abelian_adjoint_summary(G)
    assert summary.e_order == 2**15
    assert summary.e_invariants.factors == (2,) * 15
    assert summary.a_order == 2**11
    assert summary.split_ok and summary.product_ok
