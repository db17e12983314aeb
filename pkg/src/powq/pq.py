"""Finite power quandles: carrier, conjugation table, and the mod-N encoding
of the integer power action.

Encoding: pi^n = tau_(n mod N) for every n != 0, while pi^0 is the constant
map to the unit and is not stored.  This covers the power quandle of every
finite group (N = exponent) as well as the degenerate N = 1 examples where
all nonzero powers act the same way.  Integer actions that are not periodic
mod any N are not representable.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import AxiomViolation
from .groups import FiniteGroup


class PowerQuandle:
    """Carrier 0..k-1 with unit e, conjugation table, and N power maps."""

    def __init__(self, size, unit, conj, pow_, validate=True):
        self.size = size
        self.unit = unit
        self.conj = tuple(tuple(int(x) for x in row) for row in conj)
        self.pow = tuple(tuple(int(x) for x in row) for row in pow_)
        self.exponent = len(self.pow)
        if self.exponent < 1:
            raise ValueError("at least one power map (tau_0) is required")
        if validate:
            self._check_axioms()

    def _check_axioms(self):
        k, e, N = self.size, self.unit, self.exponent
        if not 0 <= e < k:
            raise ValueError("unit index out of range")
        C = np.array(self.conj, dtype=np.int64)
        T = np.array(self.pow, dtype=np.int64)
        if C.shape != (k, k) or T.shape != (N, k):
            raise ValueError("table shapes do not match size/exponent")
        if C.min() < 0 or C.max() >= k or (T.size and (T.min() < 0 or T.max() >= k)):
            raise ValueError("table entries out of range")
        idx = np.arange(k)

        # A1: idempotence
        bad = np.nonzero(C[idx, idx] != idx)[0]
        if len(bad):
            a = int(bad[0])
            raise AxiomViolation("A1", (a,))
        # A2: left-multiplications are bijective and self-distributive
        for a in range(k):
            if len(set(self.conj[a])) != k:
                raise AxiomViolation("A2", (a,))
        for a in range(k):
            lhs = C[a][C]               # lhs[b,c] = a |> (b |> c)
            rhs = C[C[a][:, None], C[a][None, :]]  # (a|>b) |> (a|>c)
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise AxiomViolation("A2", (a, int(b), int(c)))
        # A3: unit fixing and fixed
        bad = np.nonzero(C[e] != idx)[0]
        if len(bad):
            raise AxiomViolation("A3", (e, int(bad[0])))
        bad = np.nonzero(C[:, e] != e)[0]
        if len(bad):
            raise AxiomViolation("A3", (int(bad[0]), e))
        # A4: tau_(1 mod N) is the identity
        bad = np.nonzero(T[1 % N] != idx)[0]
        if len(bad):
            raise AxiomViolation("A4", (int(bad[0]),))
        # A5: tau_r . tau_s = tau_(rs mod N)
        for r in range(N):
            for s in range(N):
                comp = T[r][T[s]]
                if not np.array_equal(comp, T[(r * s) % N]):
                    a = int(np.nonzero(comp != T[(r * s) % N])[0][0])
                    raise AxiomViolation("A5", (r, s, a))
        # A6: every tau_r fixes the unit
        for r in range(N):
            if T[r][e] != e:
                raise AxiomViolation("A6", (r,))
        # A7: a |> tau_r(b) = tau_r(a |> b)
        for r in range(N):
            lhs = C[idx[:, None], T[r][None, :]]
            rhs = T[r][C]
            if not np.array_equal(lhs, rhs):
                a, b = np.argwhere(lhs != rhs)[0]
                raise AxiomViolation("A7", (r, int(a), int(b)))
        # A8 (r >= 1): tau_r(a) |> b = lambda_a^r(b); A9: lambda_a^N = id
        cur = np.tile(idx, (k, 1))  # cur[a] = lambda_a^0
        for r in range(1, N + 1):
            cur = C[idx[:, None], cur]  # cur[a] = lambda_a^r
            if r < N:
                lhs = C[T[r]]
                if not np.array_equal(lhs, cur):
                    a, b = np.argwhere(lhs != cur)[0]
                    raise AxiomViolation("A8", (r, int(a), int(b)))
            else:
                if not np.array_equal(cur, np.tile(idx, (k, 1))):
                    a, b = np.argwhere(cur != np.tile(idx, (k, 1)))[0]
                    raise AxiomViolation("A9", (int(a), int(b)))
        # A8 (r = 0): tau_0(a) |> b = b
        lhs = C[T[0]]
        if not np.array_equal(lhs, np.tile(idx, (k, 1))):
            a, b = np.argwhere(lhs != np.tile(idx, (k, 1)))[0]
            raise AxiomViolation("A8", (0, int(a), int(b)))

    def power(self, a, n):
        """pi^n(a) for any integer n."""
        if n == 0:
            return self.unit
        return self.pow[n % self.exponent][a]

    def __repr__(self):
        return f"PowerQuandle(size={self.size}, exponent={self.exponent})"


def validate_pq(size, unit, conj, pow_) -> PowerQuandle:
    """Check axioms A1..A9 on raw tables and wrap them."""
    return PowerQuandle(size, unit, conj, pow_, validate=True)


def pq_of_group(G: FiniteGroup) -> PowerQuandle:
    """The power quandle underlying a group: a |> b = aba^-1, pi^n(a) = a^n."""
    k = G.order
    N = G.exponent()
    conj = [[G.conj(a, b) for b in range(k)] for a in range(k)]
    pow_ = [[0] * k for _ in range(N)]
    if N > 1:
        pow_[1] = list(range(k))
        for r in range(2, N):
            prev = pow_[r - 1]
            pow_[r] = [G.mul[prev[a]][a] for a in range(k)]
    # row 0 stands for pi^N, which is constant e by definition of the exponent
    return PowerQuandle(k, 0, conj, pow_, validate=False)


def canonical_exponent(P: PowerQuandle) -> PowerQuandle:
    """Re-encode with the smallest period N' | N leaving all pi^n unchanged."""
    N = P.exponent
    for Np in sorted(d for d in range(1, N + 1) if N % d == 0):
        if all(P.pow[r] == P.pow[r % Np] for r in range(N)):
            if Np == N:
                return P
            return PowerQuandle(
                P.size, P.unit, P.conj, [P.pow[r] for r in range(Np)], validate=False
            )
    return P


@dataclass
class OrbitPq:
    """The orbit power quandle (trivial conjugation) plus the class surjection."""

    quandle: PowerQuandle
    class_map: tuple  # source index -> orbit index
    classes: tuple  # orbit index -> sorted member tuple


def orbits(P: PowerQuandle) -> OrbitPq:
    """Quotient by the equivalence generated by a |> b ~ b, with induced powers."""
    parent = list(range(P.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(P.size):
        for b in range(P.size):
            ra, rb = find(P.conj[a][b]), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for x in range(P.size):
        groups.setdefault(find(x), []).append(x)
    classes = sorted((tuple(sorted(v)) for v in groups.values()), key=lambda c: c[0])
    cls = [0] * P.size
    for i, c in enumerate(classes):
        for x in c:
            cls[x] = i
    n = len(classes)
    pow_ = []
    for r in range(P.exponent):
        row = [cls[P.pow[r][c[0]]] for c in classes]
        for i, c in enumerate(classes):
            for x in c:
                if cls[P.pow[r][x]] != row[i]:
                    raise ValueError("power maps do not descend to orbits")
        pow_.append(row)
    conj = [list(range(n)) for _ in range(n)]
    unit = cls[P.unit]
    q = PowerQuandle(n, unit, conj, pow_, validate=False)
    return OrbitPq(q, tuple(cls), tuple(classes))


def pq_center(P: PowerQuandle):
    """Indices whose left-multiplication is the identity."""
    ident = tuple(range(P.size))
    return tuple(a for a in range(P.size) if P.conj[a] == ident)


def _power_order(P, a):
    """Least r >= 1 with pi^r(a) = e (r = N read through tau_0), or 0 if none."""
    N = P.exponent
    for r in range(1, N + 1):
        if P.pow[r % N][a] == P.unit:
            return r
    return 0


def _cycle_type(row):
    k = len(row)
    seen = [False] * k
    lens = []
    for s in range(k):
        if seen[s]:
            continue
        x, n = s, 0
        while not seen[x]:
            seen[x] = True
            x = row[x]
            n += 1
        lens.append(n)
    return tuple(sorted(lens))


@dataclass(frozen=True)
class PqFingerprint:
    """Isomorphism-invariant summary of a power quandle."""

    size: int
    exponent: int
    involutions: int
    profile: tuple  # sorted multiset of per-element records
    element_records: tuple  # record per element, aligned with the carrier

    def matches(self, other):
        return (
            self.size == other.size
            and self.exponent == other.exponent
            and self.involutions == other.involutions
            and self.profile == other.profile
        )


def fingerprint(P: PowerQuandle) -> PqFingerprint:
    """Per-element and global invariants (orbit sizes, lambda cycle types,
    power orders, power-orbit profiles, involution count)."""
    P = canonical_exponent(P)
    orb = orbits(P)
    cls = orb.class_map
    base = [
        (_power_order(P, a), _cycle_type(P.conj[a]), len(orb.classes[cls[a]]))
        for a in range(P.size)
    ]
    orbit_label = [
        (len(c), tuple(sorted(base[x] for x in c))) for c in orb.classes
    ]
    records = tuple(
        (
            base[a],
            tuple(orbit_label[cls[P.pow[r][a]]] for r in range(P.exponent)),
        )
        for a in range(P.size)
    )
    involutions = sum(
        1
        for a in range(P.size)
        if a != P.unit and P.pow[2 % P.exponent][a] == P.unit
    )
    return PqFingerprint(
        P.size, P.exponent, involutions, tuple(sorted(records)), records
    )


def pq_iso(P: PowerQuandle, Q: PowerQuandle):
    """A bijection preserving unit, conjugation, and all power maps, or None.

    Both sides are reduced to their canonical exponent first; the search is
    exact backtracking with forced-image propagation and fingerprint pruning.
    """
    P, Q = canonical_exponent(P), canonical_exponent(Q)
    if P.size != Q.size or P.exponent != Q.exponent:
        return None
    fp, fq = fingerprint(P), fingerprint(Q)
    if not fp.matches(fq):
        return None
    k, N = P.size, P.exponent

    by_record = {}
    for b in range(k):
        by_record.setdefault(fq.element_records[b], []).append(b)

    def assign(m, im, a, b):
        m, im = dict(m), dict(im)
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if x in m:
                if m[x] != y:
                    return None
                continue
            if y in im:
                return None
            m[x] = y
            im[y] = x
            for r in range(N):
                queue.append((P.pow[r][x], Q.pow[r][y]))
            for z in list(m):
                queue.append((P.conj[x][z], Q.conj[y][m[z]]))
                queue.append((P.conj[z][x], Q.conj[m[z]][y]))
        return m, im

    def search(m, im):
        if len(m) == k:
            return m
        a = min(x for x in range(k) if x not in m)
        for b in by_record.get(fp.element_records[a], ()):
            if b in im:
                continue
            ext = assign(m, im, a, b)
            if ext is not None:
                found = search(*ext)
                if found is not None:
                    return found
        return None

    start = assign({}, {}, P.unit, Q.unit)
    if start is None:
        return None
    m = search(*start)
    if m is None:
        return None
    return [m[a] for a in range(k)]


class PqMorphism:
    """A map of power quandles, checked on unit, conjugation, and all powers."""

    def __init__(self, source, target, image, validate=True):
        self.source = source
        self.target = target
        self.image = tuple(int(x) for x in image)
        if validate and not is_pq_morphism(source, target, self.image):
            raise ValueError("not a power quandle morphism")

    def __call__(self, a):
        return self.image[a]


def is_pq_morphism(P: PowerQuandle, Q: PowerQuandle, image) -> bool:
    if len(image) != P.size:
        return False
    f = list(image)
    if f[P.unit] != Q.unit:
        return False
    for a in range(P.size):
        for b in range(P.size):
            if f[P.conj[a][b]] != Q.conj[f[a]][f[b]]:
                return False
    # power compatibility for every integer exponent, via the lcm of periods
    L = math.lcm(P.exponent, Q.exponent)
    for n in range(1, L + 1):
        tp = P.pow[n % P.exponent]
        tq = Q.pow[n % Q.exponent]
        for a in range(P.size):
            if f[tp[a]] != tq[f[a]]:
                return False
    return True


def count_pq_morphisms(P: PowerQuandle, Q: PowerQuandle) -> int:
    """Exact count of power quandle morphisms P -> Q (exhaustive search)."""
    P, Q = canonical_exponent(P), canonical_exponent(Q)
    k = P.size
    L = math.lcm(P.exponent, Q.exponent)
    f = [-1] * k
    f[P.unit] = Q.unit
    todo = [a for a in range(k) if a != P.unit]

    def consistent(a):
        # check every constraint whose participants are all assigned and involve a
        for b in range(k):
            if f[b] < 0:
                continue
            for x, y in ((a, b), (b, a)):
                c = P.conj[x][y]
                if f[c] >= 0 and f[c] != Q.conj[f[x]][f[y]]:
                    return False
            # pairs of previously assigned elements whose conjugate is a
            for b2 in range(k):
                if f[b2] >= 0 and P.conj[b][b2] == a:
                    if f[a] != Q.conj[f[b]][f[b2]]:
                        return False
        for n in range(1, L + 1):
            c = P.pow[n % P.exponent][a]
            if f[c] >= 0 and f[c] != Q.pow[n % Q.exponent][f[a]]:
                return False
            # constraints where a is the power of an assigned element
            for b in range(k):
                if f[b] >= 0 and P.pow[n % P.exponent][b] == a:
                    if f[a] != Q.pow[n % Q.exponent][f[b]]:
                        return False
        return True

    def count(i):
        if i == len(todo):
            return 1
        a = todo[i]
        total = 0
        for b in range(Q.size):
            f[a] = b
            if consistent(a):
                total += count(i + 1)
            f[a] = -1
        return total

    return count(0)


@dataclass
class AbelianPresentation:
    """Free abelian group on the orbits, with the induced power action."""

    rank: int
    action: tuple  # one 0/1 matrix per power map row; action[r][i][j] = 1 iff tau_r(orbit j) = orbit i
    orbit_map: tuple


def pq_abelianization(P: PowerQuandle) -> AbelianPresentation:
    orb = orbits(P)
    n = orb.quandle.size
    action = []
    for r in range(orb.quandle.exponent):
        mat = [[0] * n for _ in range(n)]
        for j in range(n):
            mat[orb.quandle.pow[r][j]][j] = 1
        action.append(tuple(tuple(row) for row in mat))
    return AbelianPresentation(n, tuple(action), orb.class_map)


# ---------------------------------------------------------------------------
# file format

def pq_to_json(P: PowerQuandle) -> str:
    doc = {
        "size": P.size,
        "unit": P.unit,
        "exponent": P.exponent,
        "conj": [x for row in P.conj for x in row],
        "pow": [x for row in P.pow for x in row],
    }
    return json.dumps(doc, sort_keys=True)


def pq_from_json(text) -> PowerQuandle:
    doc = json.loads(text)
    k, N = doc["size"], doc["exponent"]
    conj = [doc["conj"][i * k : (i + 1) * k] for i in range(k)]
    pow_ = [doc["pow"][r * k : (r + 1) * k] for r in range(N)]
    return PowerQuandle(k, doc["unit"], conj, pow_, validate=True)
