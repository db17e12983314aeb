"""The adjoint construction: presentations of Gr(P), Todd-Coxeter coset
enumeration, the canonical central extension Gr Pq(G) -> G, and the
five-term / splitting verifications.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CentralityFailure,
    ConsistencyError,
    KernelNotCentral,
    LimitExceeded,
    SectionNotPqMorphism,
)
from .groups import (
    AbelianInvariants,
    FiniteGroup,
    GroupHom,
    Subgroup,
    abelian_invariants_of,
    abelian_sum,
    abelianization,
    commutator_subgroup,
    direct_product,
    greedy_generators,
    group_iso,
    quotient,
)
from .intlinalg import (
    b_group,
    b_group_matrix,
    bar_homology,
    cokernel_invariants,
    lattice_coordinates,
    row_lattice_basis,
    smith_normal_form,
    IntMatrix,
)
from .pq import PowerQuandle, is_pq_morphism, pq_of_group

DEFAULT_LIMIT = 2_000_000
# Largest enumerated group materialized as a full multiplication table.
DEFAULT_TABLE_BOUND = 4096


@dataclass
class Presentation:
    """Relators as words of signed 1-based generator indices (+i / -i)."""

    num_generators: int
    relators: tuple

    def __post_init__(self):
        self.relators = tuple(tuple(int(s) for s in w) for w in self.relators)
        if self.relators and self.num_generators < 1:
            raise ValueError("relators without generators")
        for w in self.relators:
            for s in w:
                if s == 0 or abs(s) > self.num_generators:
                    raise ValueError(f"generator index {s} out of range")

    def dump(self):
        """Debug format: one relator per line as signed integers."""
        return "\n".join(" ".join(str(s) for s in w) for w in self.relators)


def presentation_of_pq(P: PowerQuandle) -> Presentation:
    """One generator per carrier element; conjugation, power, and unit relators.

    The infinite family sigma(pi^n(a)) = sigma(a)^n reduces to the finite
    schema below: comparing n and n + N forces sigma(a)^N = e, after which
    only the residues r = 0..N-1 carry information.
    """
    k, N = P.size, P.exponent
    rels = []
    # conjugation relators, lexicographic in (a, b)
    for a in range(k):
        for b in range(k):
            c = P.conj[a][b]
            rels.append((a + 1, b + 1, -(a + 1), -(c + 1)))
    # power relators
    for a in range(k):
        rels.append(tuple([a + 1] * N))
        for r in range(1, N):
            rels.append(tuple([a + 1] * r + [-(P.pow[r][a] + 1)]))
        rels.append((P.pow[0][a] + 1,))
    rels.append((P.unit + 1,))
    return Presentation(k, tuple(rels))


@dataclass
class EnumeratedGroup:
    group: FiniteGroup
    gen_images: tuple  # presentation generator -> element index
    rep_words: tuple  # element index -> word of signed generator indices


def _letters(word):
    # generator +i -> letter 2(i-1); inverse -i -> letter 2(i-1)+1
    out = []
    for s in word:
        out.append(2 * (s - 1) if s > 0 else 2 * (-s - 1) + 1)
    return out


def _inv_letter(l):
    return l ^ 1


def todd_coxeter(pres: Presentation, limit=DEFAULT_LIMIT) -> EnumeratedGroup:
    """HLT coset enumeration over the trivial subgroup, with union-find
    coincidence processing.  Returns the full multiplication table."""
    ngens = pres.num_generators
    nlet = 2 * ngens
    rel_words = [_letters(w) for w in pres.relators if w]
    table = [[-1] * nlet]
    p = [0]  # union-find, p[c] <= c
    n_live = 1

    def rep(c):
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            c, p[c] = p[c], root
        return root

    def define(c, l):
        nonlocal n_live
        d = len(table)
        if n_live >= limit:
            raise LimitExceeded(limit)
        table.append([-1] * nlet)
        p.append(d)
        n_live += 1
        table[c][l] = d
        table[d][_inv_letter(l)] = c
        return d

    def merge(a, b, queue):
        nonlocal n_live
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        p[b] = a
        n_live -= 1
        queue.append(b)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            d = queue[i]
            i += 1
            for l in range(nlet):
                e = table[d][l]
                if e == -1:
                    continue
                # drop the back-reference from e to the dead coset d
                if table[e][_inv_letter(l)] == d:
                    table[e][_inv_letter(l)] = -1
                mu, nu = rep(d), rep(e)
                if table[mu][l] != -1:
                    merge(nu, table[mu][l], queue)
                elif table[nu][_inv_letter(l)] != -1:
                    merge(mu, table[nu][_inv_letter(l)], queue)
                else:
                    table[mu][l] = nu
                    table[nu][_inv_letter(l)] = mu

    def scan_and_fill(a, w):
        i, j = 0, len(w) - 1
        f = b = a
        while True:
            while i <= j and table[f][w[i]] != -1:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][_inv_letter(w[j])] != -1:
                b = table[b][_inv_letter(w[j])]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][_inv_letter(w[i])] = f
                return
            define(f, w[i])

    c = 0
    while c < len(table):
        if rep(c) != c:
            c += 1
            continue
        for w in rel_words:
            scan_and_fill(c, w)
            if rep(c) != c:
                break
        if rep(c) == c:
            for l in range(nlet):
                if rep(c) != c:
                    break
                if table[c][l] == -1:
                    define(c, l)
        c += 1

    live = [c for c in range(len(table)) if rep(c) == c]
    renum = {c: i for i, c in enumerate(live)}
    k = len(live)
    trans = [[renum[rep(table[c][l])] for l in range(nlet)] for c in live]
    for row in trans:
        if -1 in row:
            raise ConsistencyError("coset table not closed after enumeration")

    # BFS from coset 0 for representative words and an O(1) product recursion
    parent = [-1] * k
    via = [0] * k
    order = [0]
    seen = [False] * k
    seen[0] = True
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        for l in range(nlet):
            y = trans[x][l]
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                via[y] = l
                order.append(y)
    if not all(seen):
        raise ConsistencyError("coset graph not connected")
    words = [None] * k
    words[0] = ()
    for x in order[1:]:
        l = via[x]
        s = (l // 2 + 1) if l % 2 == 0 else -(l // 2 + 1)
        words[x] = words[parent[x]] + (s,)
    # mul[a][b] = a . word(b), computed along the BFS tree
    mul = [[0] * k for _ in range(k)]
    for a in range(k):
        row = mul[a]
        row[0] = a
        for x in order[1:]:
            row[x] = trans[row[parent[x]]][via[x]]
    group = FiniteGroup(mul, validate=(k <= 256))
    if k > 256:
        # light sanity: rows and columns are permutations
        full = set(range(k))
        for a in range(k):
            if set(group.mul[a]) != full:
                raise ConsistencyError("enumerated table is not a latin square")
    gen_images = tuple(renum[rep(table[0][2 * i])] for i in range(ngens))
    enum = EnumeratedGroup(group, gen_images, tuple(words))
    _assert_relators_hold(pres, enum)
    return enum


def _assert_relators_hold(pres, enum, max_cells=2_000_000):
    """Every relator must trace to the identity from every coset."""
    G = enum.group
    perms = []
    for i in range(pres.num_generators):
        g = enum.gen_images[i]
        perms.append([G.mul[c][g] for c in range(G.order)])
        perms.append([G.mul[c][G.inv[g]] for c in range(G.order)])
    cells = 0
    for w in pres.relators:
        letters = _letters(w)
        cells += len(letters) * G.order
        if cells > max_cells:
            break
        for c in range(G.order):
            x = c
            for l in letters:
                x = perms[l][x]
            if x != c:
                raise ConsistencyError(f"relator {w} does not hold at coset {c}")


def evaluate_word(G: FiniteGroup, word, images):
    """Evaluate a signed-generator word under generator |-> images[gen-1]."""
    x = 0
    for s in word:
        g = images[abs(s) - 1]
        x = G.mul[x][g if s > 0 else G.inv[g]]
    return x


@dataclass
class CentralExtension:
    """A central extension E -> G with its kernel and normalized section."""

    total: FiniteGroup
    proj: GroupHom
    kernel: Subgroup
    section: tuple  # G index -> E index
    rep_words: tuple = ()  # E index -> word over the sigma(a) generators


def gr_pq(G: FiniteGroup, limit=DEFAULT_LIMIT) -> CentralExtension:
    """Enumerate E = Gr Pq(G) and build the canonical extension E -> G."""
    P = pq_of_group(G)
    pres = presentation_of_pq(P)
    enum = todd_coxeter(pres, limit)
    E = enum.group
    image = [evaluate_word(G, w, list(range(G.order))) for w in enum.rep_words]
    proj = GroupHom(E, G, image, validate=(E.order <= 512))
    if E.order > 512:
        for a in range(E.order):
            for b in range(E.order):
                if image[E.mul[a][b]] != G.mul[image[a]][image[b]]:
                    raise ConsistencyError("projection is not a homomorphism")
    if len(set(image)) != G.order:
        raise ConsistencyError("projection is not surjective")
    kernel = Subgroup(E, [c for c in range(E.order) if image[c] == 0])
    for x in kernel.members:
        for y in range(E.order):
            if E.mul[x][y] != E.mul[y][x]:
                raise CentralityFailure(
                    f"kernel element {x} does not commute with {y}"
                )
    section = enum.gen_images
    if section[0] != 0 or any(image[section[a]] != a for a in range(G.order)):
        raise ConsistencyError("section is not a normalized set-theoretic section")
    return CentralExtension(E, proj, kernel, section, enum.rep_words)


def extend_section(canonical: CentralExtension, p: GroupHom, s) -> GroupHom:
    """The unique extension morphism Gr Pq(G) -> E over a central extension
    p: E -> G with a normalized power quandle section s."""
    G = canonical.proj.target
    E = p.source
    if p.target is not G and p.target.mul != G.mul:
        raise ValueError("target extension is not over the same group")
    s = tuple(int(x) for x in s)
    if s[0] != 0 or any(p.image[s[g]] != g for g in range(G.order)):
        raise ValueError("s is not a normalized section of p")
    ker = [x for x in range(E.order) if p.image[x] == 0]
    for x in ker:
        for y in range(E.order):
            if E.mul[x][y] != E.mul[y][x]:
                raise KernelNotCentral(f"kernel element {x} is not central")
    if not is_pq_morphism(pq_of_group(G), pq_of_group(E), s):
        raise SectionNotPqMorphism("section does not preserve the power quandle")
    image = [evaluate_word(E, w, s) for w in canonical.rep_words]
    phi = GroupHom(canonical.total, E, image, validate=(canonical.total.order <= 512))
    # commutes with projections, and with the normalized sections by construction
    for x in range(canonical.total.order):
        if p.image[image[x]] != canonical.proj.image[x]:
            raise ConsistencyError("extension morphism does not commute with projections")
    assert all(image[canonical.section[g]] == s[g] for g in range(G.order))
    return phi


def check_split(ext: CentralExtension):
    """A group-homomorphism section of the projection, or None.

    On success the theorem E = G x A is also verified by explicit
    isomorphism search; a failure there would signal a bug.
    """
    E = ext.total
    G = ext.proj.target
    gens = greedy_generators(G)
    preim = {}
    for g in gens:
        preim[g] = [x for x in range(E.order) if ext.proj.image[x] == g]

    def extend(pmap, g, h):
        m = dict(pmap)
        if g in m:
            return m if m[g] == h else None
        m[g] = h
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for y in list(m):
                for a, b in ((x, y), (y, x)):
                    z = G.mul[a][b]
                    w = E.mul[m[a]][m[b]]
                    if z in m:
                        if m[z] != w:
                            return None
                    else:
                        m[z] = w
                        frontier.append(z)
        return m

    def search(i, pmap):
        if i == len(gens):
            return pmap
        for h in preim[gens[i]]:
            ext2 = extend(pmap, gens[i], h)
            if ext2 is not None:
                found = search(i + 1, ext2)
                if found is not None:
                    return found
        return None

    m = search(0, {0: 0})
    if m is None:
        return None
    section = GroupHom(G, E, [m[g] for g in range(G.order)], validate=False)
    prod = direct_product(G, ext.kernel.as_group())
    if group_iso(E, prod) is None:
        raise ConsistencyError("split extension is not isomorphic to G x A")
    return section


@dataclass
class FiveTermReport:
    """Pass/fail record for the exact-sequence consequences of one extension."""

    ab_total_matches_b: bool
    coker_matches_h1: bool
    cardinality_identity: bool
    schur_image_divides: bool | None  # None when H_2 is out of bound
    b_invariants: AbelianInvariants = None
    h1_invariants: AbelianInvariants = None
    h2_invariants: AbelianInvariants = None
    kernel_order: int = 0
    kernel_in_commutator: int = 0

    def ok(self):
        return (
            self.ab_total_matches_b
            and self.coker_matches_h1
            and self.cardinality_identity
            and self.schur_image_divides is not False
        )


def verify_five_term(G: FiniteGroup, ext: CentralExtension, bar_bound=16) -> FiveTermReport:
    """Executable consequences of the exact sequence H2 -> A -> B -> H1 -> 0."""
    E = ext.total
    bG = b_group(G)
    h1, _ = abelianization(G)
    # route 1: abelianization of E through the coset quotient
    comm = commutator_subgroup(E)
    abE, q = quotient(E, comm)
    ab_inv = abelian_invariants_of(abE)
    check_i = ab_inv == bG
    # exactness at B and H1: Ab(E) modulo the image of A is H1(G)
    img = sorted({q.image[x] for x in ext.kernel.members})
    coker, _ = quotient(abE, Subgroup(abE, img))
    check_ii = abelian_invariants_of(coker) == h1
    # cardinality form of exactness at A
    a_size = len(ext.kernel)
    a_cap_comm = len(set(ext.kernel.members) & set(comm.members))
    check_iii = a_size * h1.group_order() == a_cap_comm * bG.group_order()
    h2 = None
    check_iv = None
    if G.order <= bar_bound:
        h2 = bar_homology(G, 2, bar_bound)
        check_iv = h2.group_order() % a_cap_comm == 0
    return FiveTermReport(
        check_i,
        check_ii,
        check_iii,
        check_iv,
        bG,
        h1,
        h2,
        a_size,
        a_cap_comm,
    )


# ---------------------------------------------------------------------------
# abelian fast route: for abelian G the group E = Gr Pq(G) is itself abelian
# (conjugation relators force commutativity), so E equals B(G) and the whole
# extension is a computation on integer lattices.  Used when E is too large
# to materialize as a table, and as an independent cross-check otherwise.

@dataclass
class AbelianAdjointSummary:
    e_invariants: AbelianInvariants
    a_invariants: AbelianInvariants
    split_ok: bool
    product_ok: bool

    @property
    def e_order(self):
        return self.e_invariants.group_order()

    @property
    def a_order(self):
        return self.a_invariants.group_order()


def abelian_adjoint_summary(G: FiniteGroup) -> AbelianAdjointSummary:
    if not G.is_abelian():
        raise ValueError("abelian route requires an abelian group")
    k = G.order
    # E = Z^k modulo the power relations (classes are singletons here)
    l_rows, ncls = b_group_matrix(G)
    assert ncls == k
    e_inv = cokernel_invariants(l_rows)
    if e_inv.free_rank:
        raise ConsistencyError("B(G) of a finite group must be finite")
    # G = Z^k modulo the full multiplication-table relation lattice
    d_rows = [[0] * k]
    d_rows[0][0] = 1
    for a in range(k):
        for b in range(k):
            row = [0] * k
            row[a] += 1
            row[b] += 1
            row[G.mul[a][b]] -= 1
            d_rows.append(row)
    h_d = row_lattice_basis(d_rows, k)
    assert len(h_d) == k
    # A = D/L: express the power relations in the D basis
    x_rows = []
    for row in l_rows:
        coords = lattice_coordinates(h_d, row)
        if coords is None:
            raise ConsistencyError("power relation outside the group relation lattice")
        coords += [0] * (k - len(coords))
        x_rows.append(coords)
    a_inv = cokernel_invariants(x_rows)
    if a_inv.free_rank:
        raise ConsistencyError("A(G) of a finite group must be finite")
    if e_inv.group_order() != G.order * a_inv.group_order():
        raise ConsistencyError("|E| != |G| * |A| on the abelian route")
    # explicit splitting on an invariant-factor basis of G
    snf = smith_normal_form(IntMatrix(h_d, k, k))
    diag = snf.diagonal()
    h_l = row_lattice_basis(l_rows, k)
    split_ok = True
    for i, d in enumerate(diag):
        if d <= 1:
            continue
        # generator of the Z/d factor: row i of V^-1, evaluated in G
        gen = 0
        for a in range(k):
            e = snf.v_inv.data[i][a] % G.element_order(a)
            for _ in range(e):
                gen = G.mul[gen][a]
        if G.element_order(gen) != d:
            raise ConsistencyError("invariant-factor basis reconstruction failed")
        vec = [0] * k
        vec[gen] = d
        if lattice_coordinates(h_l, vec) is None:
            split_ok = False
            break
    g_inv = abelian_invariants_of(G)
    product_ok = e_inv == abelian_sum(g_inv, a_inv)
    return AbelianAdjointSummary(e_inv, a_inv, split_ok, product_ok)
