"""Small exact linear algebra: GF(2) bit systems and matrices over tower fields."""

from __future__ import annotations

from .fields import Field, FieldElement


def gf2_solve(vectors: list[int], target: int) -> int | None:
    """Find a subset (as a bitmask over `vectors`) whose xor equals target."""
    pivots: dict[int, tuple[int, int]] = {}
    for i, v in enumerate(vectors):
        combo = 1 << i
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, combo)
                break
            pv, pc = pivots[top]
            v ^= pv
            combo ^= pc
    combo = 0
    while target:
        top = target.bit_length() - 1
        if top not in pivots:
            return None
        pv, pc = pivots[top]
        target ^= pv
        combo ^= pc
    return combo


class KeyIndex:
    """Assigns bit positions to hashable coordinate keys."""

    def __init__(self):
        self.index: dict = {}

    def encode(self, keys) -> int:
        m = 0
        for k in keys:
            i = self.index.get(k)
            if i is None:
                i = self.index[k] = len(self.index)
            m ^= 1 << i
        return m


Matrix = list[list[FieldElement]]


def identity(K: Field, n: int) -> Matrix:
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    K = A[0][0].field if A and A[0] else None
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = K.zero
            for k in range(m):
                if A[i][k] and B[k][j]:
                    s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def matvec(A: Matrix, v: list[FieldElement]) -> list[FieldElement]:
    K = v[0].field
    out = []
    for row in A:
        s = K.zero
        for a, x in zip(row, v):
            if a and x:
                s = s + a * x
        out.append(s)
    return out


def columns_to_matrix(cols: list[list[FieldElement]]) -> Matrix:
    n = len(cols[0])
    return [[cols[j][i] for j in range(len(cols))] for i in range(n)]


def transpose(A: Matrix) -> Matrix:
    return [list(r) for r in zip(*A)]


def rank(rows: Matrix) -> int:
    rows = [list(r) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x + f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    K = A[0][0].field
    aug = [list(A[i]) + [K.one if i == j else K.zero for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x + f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def extend_to_basis(K: Field, vectors: list[list[FieldElement]], n: int) -> list[list[FieldElement]]:
    """Append standard basis vectors until the list spans K^n."""
    out = [list(v) for v in vectors]
    r = rank(out) if out else 0
    for i in range(n):
        if r == n:
            break
        e = [K.one if j == i else K.zero for j in range(n)]
        cand = out + [e]
        rc = rank(cand)
        if rc > r:
            out, r = cand, rc
    return out
