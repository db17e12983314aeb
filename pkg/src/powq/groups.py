"""Finite groups as complete multiplication tables.

Elements are the indices 0..k-1, with the identity pinned at index 0.
All structural computations (center, conjugacy classes, quotients,
abelianization, isomorphism search) work directly on the table.
"""
from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotNormal,
    UnknownName,
    UnsupportedSize,
    Unrealizable,
)

# Exhaustive associativity checking is O(k^3); beyond this scale the caller
# must vouch for the table (used for enumerated coset tables, which are
# groups by construction).
_VALIDATE_LIMIT = 512


class FiniteGroup:
    """A finite group given by its k x k multiplication table."""

    def __init__(self, table, names=None, validate=True):
        self.order = len(table)
        self.mul = tuple(tuple(int(x) for x in row) for row in table)
        self.names = tuple(names) if names is not None else None
        if self.names is not None and len(self.names) != self.order:
            raise ValueError("names length does not match order")
        if validate:
            self._validate()
        self.inv = self._inverses()
        self._orders = None
        self._exponent = None

    def _validate(self):
        k = self.order
        if k == 0:
            raise NoIdentity(None)
        M = np.array(self.mul, dtype=np.int64)
        if M.shape != (k, k) or M.min() < 0 or M.max() >= k:
            raise ValueError("table entries out of range")
        idx = np.arange(k)
        if not (np.array_equal(M[0], idx) and np.array_equal(M[:, 0], idx)):
            bad = np.nonzero((M[0] != idx) | (M[:, 0] != idx))[0]
            raise NoIdentity(int(bad[0]))
        # associativity, chunked by the first argument
        for a in range(k):
            left = M[M[a]]          # left[b, c] = (a*b)*c
            right = M[a][M]         # right[b, c] = a*(b*c)
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise NotAssociative((a, int(b), int(c)))
        # inverses
        for a in range(k):
            if 0 not in self.mul[a]:
                raise NoInverse(a)

    def _inverses(self):
        inv = [0] * self.order
        for a in range(self.order):
            b = self.mul[a].index(0)
            if self.mul[b][a] != 0:
                raise NoInverse(a)
            inv[a] = b
        return tuple(inv)

    def conj(self, a, b):
        """a * b * a^-1"""
        return self.mul[self.mul[a][b]][self.inv[a]]

    def power(self, a, n):
        n = n % self.element_order(a)
        r = 0
        for _ in range(n):
            r = self.mul[r][a]
        return r

    def element_order(self, a):
        return self.element_orders()[a]

    def element_orders(self):
        if self._orders is None:
            orders = [1] * self.order
            for a in range(self.order):
                x, n = a, 1
                while x != 0:
                    x = self.mul[x][a]
                    n += 1
                orders[a] = n
            self._orders = tuple(orders)
        return self._orders

    def exponent(self):
        if self._exponent is None:
            self._exponent = math.lcm(*self.element_orders())
        return self._exponent

    def is_abelian(self):
        return all(
            self.mul[a][b] == self.mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class Subgroup:
    """A subgroup of a parent group, stored as a sorted index set."""

    def __init__(self, parent, members, validate=True):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        if validate:
            self._validate()

    def _validate(self):
        G = self.parent
        mem = set(self.members)
        if 0 not in mem:
            raise ValueError("subgroup must contain the identity")
        for a in self.members:
            if G.inv[a] not in mem:
                raise ValueError(f"subgroup not closed under inverse at {a}")
            for b in self.members:
                if G.mul[a][b] not in mem:
                    raise ValueError(f"subgroup not closed at ({a},{b})")

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return a in set(self.members)

    def as_group(self):
        """The subgroup as a standalone FiniteGroup (member order preserved)."""
        pos = {a: i for i, a in enumerate(self.members)}
        table = [
            [pos[self.parent.mul[a][b]] for b in self.members] for a in self.members
        ]
        return FiniteGroup(table, validate=False)


class GroupHom:
    """A homomorphism given by its image array, one target index per source index."""

    def __init__(self, source, target, image, validate=True):
        self.source = source
        self.target = target
        self.image = tuple(int(x) for x in image)
        if validate:
            self._validate()

    def _validate(self):
        if len(self.image) != self.source.order:
            raise ValueError("image length does not match source order")
        if self.image[0] != 0:
            raise ValueError("homomorphism must send identity to identity")
        G, H, f = self.source, self.target, self.image
        for a in range(G.order):
            for b in range(G.order):
                if f[G.mul[a][b]] != H.mul[f[a]][f[b]]:
                    raise ValueError(f"not a homomorphism at ({a},{b})")

    def __call__(self, a):
        return self.image[a]

    def is_surjective(self):
        return len(set(self.image)) == self.target.order


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d_1 | d_2 | ... | d_m (each >= 2) plus a free rank."""

    factors: tuple
    free_rank: int = 0

    def __post_init__(self):
        fs = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", fs)
        for d in fs:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for d, e in zip(fs, fs[1:]):
            if e % d != 0:
                raise ValueError(f"divisibility chain broken: {d} does not divide {e}")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")

    def group_order(self):
        if self.free_rank:
            raise ValueError("infinite group has no order")
        return math.prod(self.factors) if self.factors else 1

    def __str__(self):
        parts = [str(d) for d in self.factors] + ["0"] * self.free_rank
        return "[" + ",".join(parts) + "]"


def abelian_sum(a: AbelianInvariants, b: AbelianInvariants) -> AbelianInvariants:
    """Invariant factors of the direct sum of two finite abelian groups."""
    if a.free_rank or b.free_rank:
        raise ValueError("finite groups only")
    # split into primary parts, then rebuild the divisibility chain
    primary = {}
    for d in a.factors + b.factors:
        for p, e in _factorize(d).items():
            primary.setdefault(p, []).append(e)
    depth = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(depth):
        d = 1
        for p, exps in primary.items():
            exps_sorted = sorted(exps, reverse=True)
            if i < len(exps_sorted):
                d *= p ** exps_sorted[i]
        factors.append(d)
    factors.reverse()
    return AbelianInvariants(tuple(factors))


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# construction and catalog

def validate_group(table, names=None) -> FiniteGroup:
    """Check all group axioms on a raw table and wrap it."""
    return FiniteGroup(table, names=names, validate=True)


def _from_elements(elems, op, names=None):
    # elems[0] must be the identity
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[op(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, names=names, validate=False)


def cyclic(n):
    if n < 1:
        raise UnsupportedSize("cyclic", (n,))
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], validate=False)


def dihedral(order):
    """Dihedral group of the given (even) order."""
    if order < 2 or order % 2:
        raise UnsupportedSize("dihedral", (order,))
    n = order // 2
    elems = [(r, s) for s in (0, 1) for r in range(n)]

    def op(x, y):
        r1, s1 = x
        r2, s2 = y
        return ((r1 + (r2 if s1 == 0 else -r2)) % n, s1 ^ s2)

    return _from_elements(elems, op)


def dicyclic(order):
    """Dicyclic group of order 4n; dicyclic(8) is the quaternion group."""
    if order < 4 or order % 4:
        raise UnsupportedSize("dicyclic", (order,))
    n = order // 4
    elems = [(i, j) for j in (0, 1) for i in range(2 * n)]

    def op(x, y):
        i1, j1 = x
        i2, j2 = y
        if j1 == 0:
            return ((i1 + i2) % (2 * n), j2)
        if j2 == 0:
            return ((i1 - i2) % (2 * n), 1)
        return ((i1 - i2 + n) % (2 * n), 0)

    return _from_elements(elems, op)


def symmetric(n):
    if not 1 <= n <= 5:
        raise UnsupportedSize("symmetric", (n,))
    elems = sorted(itertools.permutations(range(n)))
    elems.remove(tuple(range(n)))
    elems.insert(0, tuple(range(n)))

    def op(p, q):  # (p*q)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(n))

    return _from_elements(elems, op)


def alternating(n):
    if not 1 <= n <= 5:
        raise UnsupportedSize("alternating", (n,))
    elems = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    elems.sort()
    elems.remove(tuple(range(n)))
    elems.insert(0, tuple(range(n)))

    def op(p, q):
        return tuple(p[q[i]] for i in range(n))

    return _from_elements(elems, op)


def _parity(p):
    sign = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign ^= 1
    return sign


def klein():
    return direct_product(cyclic(2), cyclic(2))


def heisenberg(p):
    """Upper unitriangular 3x3 matrices over F_p; order p^3."""
    if p not in (2, 3, 5):
        raise UnsupportedSize("heisenberg", (p,))
    elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def op(x, y):
        a1, b1, c1 = x
        a2, b2, c2 = y
        return ((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p)

    return _from_elements(elems, op)


def direct_product(G, H):
    k = G.order * H.order
    table = [
        [
            G.mul[a1][b1] * H.order + H.mul[a2][b2]
            for b1 in range(G.order)
            for b2 in range(H.order)
        ]
        for a1 in range(G.order)
        for a2 in range(H.order)
    ]
    assert len(table) == k
    return FiniteGroup(table, validate=False)


_CATALOG = {
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "dicyclic": (dicyclic, 1),
    "symmetric": (symmetric, 1),
    "alternating": (alternating, 1),
    "klein": (klein, 0),
    "heisenberg": (heisenberg, 1),
}


def catalog(name, *params) -> FiniteGroup:
    """Construct a catalog group by family name and integer parameters."""
    if name == "product":
        if len(params) != 2 or not all(isinstance(p, FiniteGroup) for p in params):
            raise UnsupportedSize("product", params)
        return direct_product(*params)
    if name not in _CATALOG:
        raise UnknownName(name)
    fn, arity = _CATALOG[name]
    if len(params) != arity:
        raise UnsupportedSize(name, params)
    return fn(*params)


_SPEC_RE = re.compile(r"^\s*([a-z]+)\s*(?:\(\s*(.*)\s*\))?\s*$")


def parse_group_spec(text) -> FiniteGroup:
    """Parse specs like 'cyclic(6)', 'klein', 'product(cyclic(2),dihedral(8))'."""
    m = _SPEC_RE.match(text)
    if not m:
        raise UnknownName(text)
    name, args = m.group(1), m.group(2)
    if name == "product":
        parts = _split_args(args or "")
        if len(parts) != 2:
            raise UnsupportedSize("product", tuple(parts))
        return direct_product(parse_group_spec(parts[0]), parse_group_spec(parts[1]))
    params = ()
    if args:
        params = tuple(int(a.strip()) for a in args.split(","))
    return catalog(name, *params)


def _split_args(text):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


# ---------------------------------------------------------------------------
# structural computations

def center(G: FiniteGroup) -> Subgroup:
    members = [
        a
        for a in range(G.order)
        if all(G.mul[a][b] == G.mul[b][a] for b in range(G.order))
    ]
    return Subgroup(G, members, validate=False)


def conjugacy_classes(G: FiniteGroup):
    """Partition of 0..k-1 into conjugation orbits, sorted by least element."""
    seen = [False] * G.order
    classes = []
    for a in range(G.order):
        if seen[a]:
            continue
        orbit = {G.conj(g, a) for g in range(G.order)}
        for x in orbit:
            seen[x] = True
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: c[0])
    return classes


def subgroup_closure(G: FiniteGroup, generators) -> Subgroup:
    members = {0}
    frontier = [g for g in generators]
    for g in frontier:
        members.add(g)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for z in (G.mul[x][y], G.mul[y][x]):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
        if G.inv[x] not in members:
            members.add(G.inv[x])
            frontier.append(G.inv[x])
    return Subgroup(G, members, validate=False)


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    comms = {
        G.mul[G.mul[G.mul[a][b]][G.inv[a]]][G.inv[b]]
        for a in range(G.order)
        for b in range(G.order)
    }
    return subgroup_closure(G, comms)


def quotient(G: FiniteGroup, N: Subgroup):
    """Coset group G/N plus the projection, for a normal subgroup N."""
    mem = set(N.members)
    for g in range(G.order):
        for n in N.members:
            c = G.conj(g, n)
            if c not in mem:
                raise NotNormal(g, n, c)
    coset_of = [-1] * G.order
    cosets = []
    for a in range(G.order):
        if coset_of[a] >= 0:
            continue
        cid = len(cosets)
        members = sorted(G.mul[a][n] for n in N.members)
        for x in members:
            coset_of[x] = cid
        cosets.append(members)
    # reorder so cosets are sorted by least element; identity coset stays first
    order = sorted(range(len(cosets)), key=lambda i: cosets[i][0])
    renum = {old: new for new, old in enumerate(order)}
    coset_of = [renum[c] for c in coset_of]
    reps = [cosets[old][0] for old in order]
    table = [[coset_of[G.mul[ra][rb]] for rb in reps] for ra in reps]
    Q = FiniteGroup(table, validate=False)
    return Q, GroupHom(G, Q, coset_of, validate=False)


def abelianization(G: FiniteGroup):
    """Invariant factors of G/[G,G] plus the projection homomorphism."""
    Q, proj = quotient(G, commutator_subgroup(G))
    return abelian_invariants_of(Q), proj


def abelian_invariants_of(A: FiniteGroup) -> AbelianInvariants:
    """Invariant factors of a finite abelian group given by its table."""
    return abelian_from_fingerprint(power_fingerprint(A), A.order)


def exponent(G: FiniteGroup) -> int:
    return G.exponent()


def power_fingerprint(G: FiniteGroup):
    """Map n -> |{a : a^n = e}| for every divisor n of the exponent."""
    N = G.exponent()
    orders = G.element_orders()
    return {
        n: sum(1 for o in orders if n % o == 0)
        for n in range(1, N + 1)
        if N % n == 0
    }


def abelian_from_fingerprint(fp, order) -> AbelianInvariants:
    """The unique abelian invariant-factor list realizing a power fingerprint."""
    if order == 1:
        if fp != {1: 1}:
            raise Unrealizable(f"fingerprint {fp} does not match the trivial group")
        return AbelianInvariants(())
    N = max(fp)
    per_prime = {}
    for p, m in _factorize(N).items():
        # s_j = log_p |{a : a^(p^j) = e}|; differences give the conjugate partition
        s = []
        for j in range(m + 1):
            cnt = fp.get(p**j)
            if cnt is None:
                raise Unrealizable(f"fingerprint missing count for n={p**j}")
            e = _int_log(cnt, p)
            if e is None:
                raise Unrealizable(f"count {cnt} for n={p**j} is not a power of {p}")
            s.append(e)
        t = [s[j] - s[j - 1] for j in range(1, m + 1)]
        if any(x <= 0 for x in t) or any(a < b for a, b in zip(t, t[1:])):
            raise Unrealizable(f"counts at prime {p} are not realizable")
        # conjugate partition: number of factors with exponent >= j is t[j-1]
        exps = [sum(1 for x in t if x >= i) for i in range(1, t[0] + 1)]
        per_prime[p] = sorted(exps, reverse=True)
    depth = max(len(v) for v in per_prime.values())
    factors = []
    for i in range(depth):
        d = 1
        for p, exps in per_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    factors.reverse()
    inv = AbelianInvariants(tuple(factors))
    if inv.group_order() != order:
        raise Unrealizable(
            f"fingerprint gives order {inv.group_order()}, expected {order}"
        )
    # the reconstructed group must reproduce the fingerprint exactly
    for n, cnt in fp.items():
        if math.prod(math.gcd(n, d) for d in factors) != cnt:
            raise Unrealizable(f"fingerprint mismatch at n={n}")
    return inv


def _int_log(x, p):
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e if x == 1 else None


# ---------------------------------------------------------------------------
# generators, isomorphism, morphism counting

def greedy_generators(G: FiniteGroup):
    """Minimal generating sequence: repeatedly adjoin the least outside element."""
    gens = []
    sub = {0}
    while len(sub) < G.order:
        g = min(a for a in range(G.order) if a not in sub)
        gens.append(g)
        sub = set(subgroup_closure(G, gens).members)
    return gens


def _element_profile(G):
    """Isomorphism-invariant label per element: (order, class size, power class sizes)."""
    classes = conjugacy_classes(G)
    cls_of = [0] * G.order
    for i, c in enumerate(classes):
        for x in c:
            cls_of[x] = i
    sizes = [len(c) for c in classes]
    orders = G.element_orders()
    prof = []
    for a in range(G.order):
        powers = []
        x = a
        while x != 0:
            powers.append((orders[x], sizes[cls_of[x]]))
            x = G.mul[x][a]
        prof.append((orders[a], sizes[cls_of[a]], tuple(sorted(powers))))
    return prof


def group_iso(G: FiniteGroup, H: FiniteGroup):
    """A multiplicative bijection G -> H, or None.

    Exact backtracking over images of a greedy generating sequence, pruned
    by element profiles; partial maps are extended by closure so the
    homomorphism property is verified exhaustively along the way.
    """
    if G.order != H.order:
        return None
    pg, ph = _element_profile(G), _element_profile(H)
    if sorted(pg) != sorted(ph):
        return None
    gens = greedy_generators(G)
    cand = {}
    for i, g in enumerate(gens):
        cand[i] = [b for b in range(H.order) if ph[b] == pg[g]]

    def extend(pmap, imap, g, h):
        m, im = dict(pmap), dict(imap)
        if g in m:
            return (m, im) if m[g] == h else None
        if h in im:
            return None
        m[g] = h
        im[h] = g
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for y in list(m):
                for a, b in ((x, y), (y, x)):
                    z = G.mul[a][b]
                    w = H.mul[m[a]][m[b]]
                    if z in m:
                        if m[z] != w:
                            return None
                    else:
                        if w in im:
                            return None
                        m[z] = w
                        im[w] = z
                        frontier.append(z)
        return (m, im)

    def search(i, pmap, imap):
        if i == len(gens):
            return pmap
        for h in cand[i]:
            ext = extend(pmap, imap, gens[i], h)
            if ext is not None:
                found = search(i + 1, *ext)
                if found is not None:
                    return found
        return None

    m = search(0, {0: 0}, {0: 0})
    if m is None:
        return None
    assert len(m) == G.order
    return [m[a] for a in range(G.order)]


def count_group_homs(G: FiniteGroup, H: FiniteGroup) -> int:
    """Exact number of group homomorphisms G -> H (exhaustive over generator images)."""
    gens = greedy_generators(G)
    orders = G.element_orders()
    h_orders = H.element_orders()
    cand = {
        i: [b for b in range(H.order) if orders[g] % h_orders[b] == 0]
        for i, g in enumerate(gens)
    }

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
                    w = H.mul[m[a]][m[b]]
                    if z in m:
                        if m[z] != w:
                            return None
                    else:
                        m[z] = w
                        frontier.append(z)
        return m

    def count(i, pmap):
        if i == len(gens):
            return 1
        total = 0
        for h in cand[i]:
            ext = extend(pmap, gens[i], h)
            if ext is not None:
                total += count(i + 1, ext)
        return total

    return count(0, {0: 0})


# ---------------------------------------------------------------------------
# file format

def group_to_json(G: FiniteGroup) -> str:
    doc = {"order": G.order, "mul": [x for row in G.mul for x in row]}
    if G.names is not None:
        doc["names"] = list(G.names)
    return json.dumps(doc, sort_keys=True)


def group_from_json(text) -> FiniteGroup:
    doc = json.loads(text)
    k = doc["order"]
    flat = doc["mul"]
    if len(flat) != k * k:
        raise ValueError("mul must have order^2 entries")
    table = [flat[i * k : (i + 1) * k] for i in range(k)]
    return FiniteGroup(table, names=doc.get("names"), validate=True)
