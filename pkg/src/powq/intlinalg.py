"""Exact integer matrix algebra: Smith normal form, cokernels, Hermite
bases, and the bar-complex homology of small finite groups.

All arithmetic is over arbitrary-precision Python integers; a numpy int64
fast path (with an overflow guard) handles the large, sparse bar matrices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SizeBound
from .groups import AbelianInvariants, FiniteGroup, abelianization

_INT64_GUARD = 2**52


class IntMatrix:
    """A rows x cols matrix of exact integers, row-major."""

    def __init__(self, data, rows=None, cols=None):
        self.data = [list(map(int, row)) for row in data]
        self.rows = len(self.data) if rows is None else rows
        self.cols = (len(self.data[0]) if self.data else 0) if cols is None else cols
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = [
            [
                sum(self.data[i][k] * other.data[k][j] for k in range(self.cols))
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ]
        return IntMatrix(out, self.rows, other.cols)

    def dump(self):
        """Plain-text debug format: one row per line, entries space-separated."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.data)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"


def det(A: IntMatrix) -> int:
    """Exact determinant (fraction-free Bareiss elimination)."""
    if A.rows != A.cols:
        raise ValueError("determinant of non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    M = [row[:] for row in A.data]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if M[t][t] == 0:
            for i in range(t + 1, n):
                if M[i][t] != 0:
                    M[t], M[i] = M[i], M[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                M[i][j] = (M[i][j] * M[t][t] - M[i][t] * M[t][j]) // prev
            M[i][t] = 0
        prev = M[t][t]
    return sign * M[n - 1][n - 1]


@dataclass
class SNFResult:
    """S = U * A * V with U, V unimodular and S diagonal with a divisibility chain.

    The inverse transforms are carried along since basis-change consumers
    need them and they are free to maintain.
    """

    s: IntMatrix
    u: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix

    def diagonal(self):
        n = min(self.s.rows, self.s.cols)
        return [self.s.data[i][i] for i in range(n)]


def smith_normal_form(A: IntMatrix) -> SNFResult:
    """Full Smith normal form with unimodular transforms.

    Pivot strategy: smallest nonzero absolute value, ties by row-major
    position, for reproducible transforms.
    """
    r, c = A.rows, A.cols
    S = [row[:] for row in A.data]
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    Ui = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]
    Vi = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_add(i, j, q):  # row_i += q * row_j
        S[i] = [a + q * b for a, b in zip(S[i], S[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        for k in range(r):  # Ui: col_j -= q * col_i
            Ui[k][j] -= q * Ui[k][i]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for k in range(r):
            Ui[k][i], Ui[k][j] = Ui[k][j], Ui[k][i]

    def row_neg(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]
        for k in range(r):
            Ui[k][i] = -Ui[k][i]

    def col_add(j, i, q):  # col_j += q * col_i
        for k in range(len(S)):
            S[k][j] += q * S[k][i]
        for k in range(c):
            V[k][j] += q * V[k][i]
        Vi[i] = [a - q * b for a, b in zip(Vi[i], Vi[j])]  # row_i -= q * row_j

    def col_swap(i, j):
        for k in range(len(S)):
            S[k][i], S[k][j] = S[k][j], S[k][i]
        for k in range(c):
            V[k][i], V[k][j] = V[k][j], V[k][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    t = 0
    while t < min(r, c):
        # locate minimal nonzero pivot in the remaining block
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = S[i][j]
                if x and (best is None or abs(x) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i, j = best
            if i != t:
                row_swap(t, i)
            if j != t:
                col_swap(t, j)
            p = S[t][t]
            for i in range(t + 1, r):
                if S[i][t]:
                    row_add(i, t, -(S[i][t] // p))
            for j in range(t + 1, c):
                if S[t][j]:
                    col_add(j, t, -(S[t][j] // p))
            dirty = [
                (i, t) for i in range(t + 1, r) if S[i][t]
            ] + [(t, j) for j in range(t + 1, c) if S[t][j]]
            if dirty:
                best = min(dirty, key=lambda ij: (abs(S[ij[0]][ij[1]]), ij))
                continue
            # pivot clears its row and column; enforce divisibility
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if S[i][j] % p:
                        bad = (i, j)
                        break
                if bad:
                    break
            if bad is None:
                break
            row_add(t, bad[0], 1)
            best = (t, t)
        if S[t][t] < 0:
            row_neg(t)
        t += 1
    return SNFResult(
        IntMatrix(S, r, c),
        IntMatrix(U, r, r),
        IntMatrix(V, c, c),
        IntMatrix(Ui, r, r),
        IntMatrix(Vi, c, c),
    )


def _snf_diagonal_py(data, rows, cols):
    S = [list(map(int, row)) for row in data]
    t = 0
    diag = []
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            i, j = best
            if i != t:
                S[t], S[i] = S[i], S[t]
            if j != t:
                for row in S:
                    row[t], row[j] = row[j], row[t]
            p = S[t][t]
            for i in range(t + 1, rows):
                if S[i][t]:
                    q = S[i][t] // p
                    S[i] = [a - q * b for a, b in zip(S[i], S[t])]
            for j in range(t + 1, cols):
                if S[t][j]:
                    q = S[t][j] // p
                    for row in S:
                        row[j] -= q * row[t]
            dirty = [(i, t) for i in range(t + 1, rows) if S[i][t]] + [
                (t, j) for j in range(t + 1, cols) if S[t][j]
            ]
            if dirty:
                best = min(dirty, key=lambda ij: (abs(S[ij[0]][ij[1]]), ij))
                continue
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if S[i][j] % p:
                        bad = (i, j)
                        break
                if bad:
                    break
            if bad is None:
                break
            S[t] = [a + b for a, b in zip(S[t], S[bad[0]])]
            best = (t, t)
        diag.append(abs(S[t][t]))
        t += 1
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


def _snf_diagonal_np(M):
    """Diagonal of the Smith form via vectorized int64 elimination.

    Returns None if entries threaten to overflow int64, so the caller can
    fall back to exact Python integers.
    """
    S = M.copy()
    rows, cols = S.shape
    t = 0
    diag = []
    while t < min(rows, cols):
        sub = S[t:, t:]
        nz = np.nonzero(sub)
        if len(nz[0]) == 0:
            break
        while True:
            sub = S[t:, t:]
            nz = np.nonzero(sub)
            vals = np.abs(sub[nz])
            k = int(np.argmin(vals))
            i, j = int(nz[0][k]) + t, int(nz[1][k]) + t
            if i != t:
                S[[t, i]] = S[[i, t]]
            if j != t:
                S[:, [t, j]] = S[:, [j, t]]
            p = int(S[t, t])
            colv = S[t + 1 :, t]
            if colv.size and np.any(colv):
                q = colv // p
                S[t + 1 :, :] -= q[:, None] * S[t, :]
            rowv = S[t, t + 1 :]
            if rowv.size and np.any(rowv):
                q = rowv // p
                S[:, t + 1 :] -= q[None, :] * S[:, t : t + 1]
            if np.abs(S).max() > _INT64_GUARD:
                return None
            if np.any(S[t + 1 :, t]) or np.any(S[t, t + 1 :]):
                continue
            rem = S[t + 1 :, t + 1 :]
            if rem.size:
                bad = np.nonzero(rem % p)
                if len(bad[0]):
                    S[t, :] += S[t + 1 + int(bad[0][0]), :]
                    continue
            break
        diag.append(abs(int(S[t, t])))
        t += 1
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


def snf_diagonal(A):
    """Diagonal entries of the Smith form of A (IntMatrix or list of rows)."""
    if isinstance(A, IntMatrix):
        data, rows, cols = A.data, A.rows, A.cols
    else:
        data = [list(row) for row in A]
        rows = len(data)
        cols = len(data[0]) if data else 0
    if rows == 0 or cols == 0:
        return []
    if rows * cols >= 4096:
        M = np.array(data, dtype=np.int64)
        if np.abs(M).max() < _INT64_GUARD:
            diag = _snf_diagonal_np(M)
            if diag is not None:
                return diag
    return _snf_diagonal_py(data, rows, cols)


def cokernel_invariants(A) -> AbelianInvariants:
    """Invariants of Z^cols modulo the row lattice of A."""
    if isinstance(A, IntMatrix):
        cols = A.cols
    else:
        cols = len(A[0]) if A else 0
    diag = snf_diagonal(A)
    factors = tuple(d for d in diag if d > 1)
    free = cols - sum(1 for d in diag if d != 0)
    return AbelianInvariants(factors, free)


# ---------------------------------------------------------------------------
# Hermite form and lattice membership

def row_lattice_basis(rows, cols):
    """Hermite basis (as rows) of the lattice spanned by the given rows."""
    H = []
    for row in rows:
        H.append(list(map(int, row)))
    basis = []  # list of (pivot_col, row)
    for col in range(cols):
        work = [r for r in H if r[col] != 0]
        if not work:
            continue
        # gcd the column down to one row by repeated reduction
        while len(work) > 1:
            work.sort(key=lambda r: abs(r[col]))
            a, b = work[0], work[1]
            q = b[col] // a[col]
            for i in range(cols):
                b[i] -= q * a[i]
            work = [r for r in work if r[col] != 0]
        piv = work[0]
        H = [r for r in H if r is not piv]
        # eliminate this column from the remaining rows
        for r in H:
            if r[col]:
                q = r[col] // piv[col]
                for i in range(cols):
                    r[i] -= q * piv[i]
        H = [r for r in H if any(r)]
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append((col, piv))
    # reduce entries above each pivot for a canonical form
    for idx in range(len(basis) - 1, -1, -1):
        col, piv = basis[idx]
        for jdx in range(idx):
            r = basis[jdx][1]
            if r[col]:
                q = r[col] // piv[col]
                for i in range(cols):
                    r[i] -= q * piv[i]
    return [piv for _, piv in basis]


def lattice_coordinates(basis, vec):
    """Coordinates of vec in a Hermite row basis, or None if not in the lattice."""
    v = list(map(int, vec))
    coords = []
    for row in basis:
        col = next(i for i, x in enumerate(row) if x)
        if v[col] % row[col]:
            return None
        q = v[col] // row[col]
        coords.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        return None
    return coords


# ---------------------------------------------------------------------------
# B(G) and bar-complex homology

def b_group_matrix(G: FiniteGroup):
    """Relation rows n*[a] - [a^n], n = 0..exponent, over the conjugacy classes."""
    from .groups import conjugacy_classes

    classes = conjugacy_classes(G)
    cls = [0] * G.order
    for i, c in enumerate(classes):
        for x in c:
            cls[x] = i
    N = G.exponent()
    rows = []
    for a in range(G.order):
        x = 0  # a^n, starting at n = 0
        for n in range(N + 1):
            row = [0] * len(classes)
            row[cls[a]] += n
            row[cls[x]] -= 1
            rows.append(row)
            x = G.mul[x][a]
    return rows, len(classes)


def b_group(G: FiniteGroup) -> AbelianInvariants:
    """Invariants of Z[Cl(G)] modulo the relations n[a] = [a^n]."""
    rows, ncls = b_group_matrix(G)
    diag = snf_diagonal(rows)
    factors = tuple(d for d in diag if d > 1)
    free = ncls - sum(1 for d in diag if d != 0)
    return AbelianInvariants(factors, free)


def bar_homology(G: FiniteGroup, degree, max_order=16) -> AbelianInvariants:
    """H_1 or H_2 of G with integer coefficients, from the normalized bar complex."""
    if degree not in (1, 2):
        raise ValueError("degree must be 1 or 2")
    if G.order > max_order:
        raise SizeBound(G.order, max_order)
    k = G.order
    nz = list(range(1, k))
    n1 = len(nz)
    pos1 = {g: i for i, g in enumerate(nz)}
    pairs = [(g, h) for g in nz for h in nz]
    pos2 = {gh: i for i, gh in enumerate(pairs)}

    # d2[g|h] = [h] - [gh] + [g]
    d2 = np.zeros((n1, len(pairs)), dtype=np.int64)
    for j, (g, h) in enumerate(pairs):
        d2[pos1[h], j] += 1
        gh = G.mul[g][h]
        if gh != 0:
            d2[pos1[gh], j] -= 1
        d2[pos1[g], j] += 1
    diag2 = snf_diagonal(d2.tolist()) if n1 else []
    r2 = sum(1 for d in diag2 if d != 0)
    if degree == 1:
        factors = tuple(d for d in diag2 if d > 1)
        return AbelianInvariants(factors, n1 - r2)

    # d3[g|h|l] = [h|l] - [gh|l] + [g|hl] - [g|h]
    triples = [(g, h, l) for g in nz for h in nz for l in nz]
    d3 = np.zeros((len(pairs), len(triples)), dtype=np.int64)
    for j, (g, h, l) in enumerate(triples):
        d3[pos2[(h, l)], j] += 1
        gh = G.mul[g][h]
        if gh != 0:
            d3[pos2[(gh, l)], j] -= 1
        hl = G.mul[h][l]
        if hl != 0:
            d3[pos2[(g, hl)], j] += 1
        d3[pos2[(g, h)], j] -= 1
    diag3 = _snf_diagonal_np(d3)
    if diag3 is None:
        diag3 = _snf_diagonal_py(d3.tolist(), d3.shape[0], d3.shape[1])
    r3 = sum(1 for d in diag3 if d != 0)
    factors = tuple(d for d in diag3 if d > 1)
    free = (len(pairs) - r2) - r3
    return AbelianInvariants(factors, free)


def h1_matches_abelianization(G: FiniteGroup, max_order=16) -> bool:
    """Cross-check: bar H_1 equals the quotient-route abelianization."""
    return bar_homology(G, 1, max_order) == abelianization(G)[0]
