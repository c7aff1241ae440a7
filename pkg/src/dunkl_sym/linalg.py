"""Exact linear algebra over Q(zeta_n).

CycMatrix stores a matrix as sum_k A_k zeta_n^k, k < phi(n), with rational
coefficient matrices A_k held as flint fmpq_mat (None for a zero block).
Ranks are computed over Q on the regular representation, which multiplies
every Q(zeta)-rank by phi(n).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import flint

from .scalar import CycField, CycNum


def _reduction_table(field: CycField) -> list[list[flint.fmpq]]:
    """Coefficients of zeta^t in the power basis, for t < 2*phi - 1."""
    tab = getattr(field, "_red_table", None)
    if tab is None:
        phi = field.degree
        tab = []
        for t in range(2 * phi - 1):
            c = field.zeta_pow(t).poly.coeffs()
            tab.append(c + [flint.fmpq(0)] * (phi - len(c)))
        field._red_table = tab
    return tab


class CycMatrix:
    __slots__ = ("field", "rows", "cols", "comps")

    def __init__(self, field: CycField, rows: int, cols: int, comps: list | None = None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.comps = comps if comps is not None else [None] * field.degree

    # construction
    @classmethod
    def zero(cls, field, rows, cols) -> "CycMatrix":
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, field, n) -> "CycMatrix":
        return cls.scalar(field, n, 1)

    @classmethod
    def scalar(cls, field, n, c) -> "CycMatrix":
        c = field.coerce(c)
        comps = [None] * field.degree
        for k, q in enumerate(c.poly.coeffs()):
            if q != 0:
                M = flint.fmpq_mat(n, n)
                for i in range(n):
                    M[i, i] = q
                comps[k] = M
        return cls(field, n, n, comps)

    @classmethod
    def from_columns(cls, field, rows: int, columns: Sequence[Sequence[CycNum]]) -> "CycMatrix":
        cols = len(columns)
        comps = [None] * field.degree
        for j, col in enumerate(columns):
            for i, v in enumerate(col):
                if v is None or v.is_zero():
                    continue
                for k, q in enumerate(v.poly.coeffs()):
                    if q == 0:
                        continue
                    if comps[k] is None:
                        comps[k] = flint.fmpq_mat(rows, cols)
                    comps[k][i, j] = q
        return cls(field, rows, cols, comps)

    @classmethod
    def from_rows(cls, field, rows: Sequence[Sequence]) -> "CycMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        cols = [[field.coerce(rows[i][j]) for i in range(r)] for j in range(c)]
        return cls.from_columns(field, r, cols)

    @classmethod
    def from_entries(cls, field, rows: int, cols: int, entries: dict) -> "CycMatrix":
        columns = [[None] * rows for _ in range(cols)]
        for (i, j), v in entries.items():
            columns[j][i] = field.coerce(v)
        return cls.from_columns(field, rows, columns)

    # access
    def entry(self, i: int, j: int) -> CycNum:
        coeffs = [M[i, j] if M is not None else flint.fmpq(0) for M in self.comps]
        return CycNum(self.field, flint.fmpq_poly(coeffs), reduced=True)

    def column(self, j: int) -> list[CycNum]:
        return [self.entry(i, j) for i in range(self.rows)]

    def to_rows(self) -> list[list[CycNum]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(M is None or _mat_is_zero(M) for M in self.comps)

    def _compact(self) -> "CycMatrix":
        self.comps = [None if (M is None or _mat_is_zero(M)) else M for M in self.comps]
        return self

    # arithmetic
    def _check(self, o: "CycMatrix"):
        if o.field is not self.field:
            raise ValueError("field mismatch")

    def __add__(self, o: "CycMatrix") -> "CycMatrix":
        self._check(o)
        if (self.rows, self.cols) != (o.rows, o.cols):
            raise ValueError(f"shape mismatch {self.shape} vs {o.shape}")
        comps = []
        for A, B in zip(self.comps, o.comps):
            comps.append(B if A is None else (A if B is None else A + B))
        return CycMatrix(self.field, self.rows, self.cols, comps)._compact()

    def __neg__(self) -> "CycMatrix":
        return CycMatrix(self.field, self.rows, self.cols,
                         [None if A is None else -A for A in self.comps])

    def __sub__(self, o: "CycMatrix") -> "CycMatrix":
        return self + (-o)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def scale(self, c) -> "CycMatrix":
        c = self.field.coerce(c)
        cs = c.poly.coeffs()
        if len(cs) == 1:
            q = cs[0]
            return CycMatrix(self.field, self.rows, self.cols,
                             [None if A is None else A * q for A in self.comps])
        phi = self.field.degree
        tmp = [None] * (2 * phi - 1)
        for k, q in enumerate(cs):
            if q == 0:
                continue
            for l, A in enumerate(self.comps):
                if A is None:
                    continue
                P = A * q
                tmp[k + l] = P if tmp[k + l] is None else tmp[k + l] + P
        return self._reduce(tmp)

    def _reduce(self, tmp: list) -> "CycMatrix":
        phi = self.field.degree
        table = _reduction_table(self.field)
        comps = tmp[:phi]
        for t in range(phi, len(tmp)):
            if tmp[t] is None:
                continue
            for k, q in enumerate(table[t]):
                if q == 0:
                    continue
                P = tmp[t] * q
                comps[k] = P if comps[k] is None else comps[k] + P
        rows = next((M.nrows() for M in tmp if M is not None), self.rows)
        cols = next((M.ncols() for M in tmp if M is not None), self.cols)
        return CycMatrix(self.field, rows, cols, comps)._compact()

    def matmul(self, o: "CycMatrix") -> "CycMatrix":
        self._check(o)
        if self.cols != o.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {o.shape}")
        if self.rows == 0 or o.cols == 0 or self.cols == 0:
            return CycMatrix(self.field, self.rows, o.cols)
        phi = self.field.degree
        tmp = [None] * (2 * phi - 1)
        for k, A in enumerate(self.comps):
            if A is None:
                continue
            for l, B in enumerate(o.comps):
                if B is None:
                    continue
                P = A * B
                tmp[k + l] = P if tmp[k + l] is None else tmp[k + l] + P
        out = self._reduce(tmp)
        out.rows, out.cols = self.rows, o.cols
        return out

    def __matmul__(self, o):
        return self.matmul(o)

    def __mul__(self, o):
        if isinstance(o, CycMatrix):
            return self.matmul(o)
        return self.scale(o)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, o) -> bool:
        if not isinstance(o, CycMatrix) or o.shape != self.shape:
            return False
        return (self - o).is_zero()

    __hash__ = None

    def conj(self) -> "CycMatrix":
        n = self.field.n
        phi = self.field.degree
        # conj sends zeta^k to zeta^{n-k}; reduce each image
        out = CycMatrix(self.field, self.rows, self.cols)
        for k, A in enumerate(self.comps):
            if A is None:
                continue
            img = self.field.zeta_pow(n - k)
            term = CycMatrix(self.field, self.rows, self.cols, [A if i == 0 else None for i in range(phi)])
            out = out + term.scale(img)
        return out

    def transpose(self) -> "CycMatrix":
        return CycMatrix(self.field, self.cols, self.rows,
                         [None if A is None else A.transpose() for A in self.comps])

    def dagger(self) -> "CycMatrix":
        return self.conj().transpose()

    def hstack(self, o: "CycMatrix") -> "CycMatrix":
        cols = [self.column(j) for j in range(self.cols)] + [o.column(j) for j in range(o.cols)]
        return CycMatrix.from_columns(self.field, self.rows, cols)

    def regular(self) -> flint.fmpq_mat:
        """Rational matrix of the Q-linear map, block (i, j) = multiplication by entry (i, j)."""
        phi = self.field.degree
        table = _reduction_table(self.field)
        R = flint.fmpq_mat(self.rows * phi, self.cols * phi)
        for k, A in enumerate(self.comps):
            if A is None:
                continue
            cols = self.cols
            for idx, a in enumerate(A.entries()):
                if a == 0:
                    continue
                i, j = divmod(idx, cols)
                # a*zeta^k times basis zeta^s lands on zeta^{k+s}
                for s in range(phi):
                    for r, q in enumerate(table[k + s]):
                        if q != 0:
                            R[i * phi + r, j * phi + s] += a * q
        return R

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        phi = self.field.degree
        r = self.regular().rank()
        assert r % phi == 0
        return r // phi

    def __repr__(self):
        return f"CycMatrix({self.rows}x{self.cols}, order {self.field.n})"

    def to_json(self) -> list:
        return [[e.to_json() for e in row] for row in self.to_rows()]


def _mat_is_zero(M: flint.fmpq_mat) -> bool:
    return all(x == 0 for x in M.entries())


@dataclass
class LinearSolution:
    rank: int
    consistent: bool
    particular: list | None
    nullspace: list = dc_field(default_factory=list)


def rref(field: CycField, rows: list[list[CycNum]]) -> tuple[list[list[CycNum]], list[int]]:
    """Reduced row echelon form by exact elimination with field inverses."""
    A = [[field.coerce(v) for v in r] for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if not A[i][c].is_zero()), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [v * inv for v in A[r]]
        for i in range(len(A)):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def solve_linear_system(field: CycField, A: Sequence[Sequence], b: Sequence | None = None) -> LinearSolution:
    """General solution of A x = b: rank, a particular solution and a nullspace basis."""
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    b = [field.zero] * nrows if b is None else [field.coerce(v) for v in b]
    aug = [list(A[i]) + [b[i]] for i in range(nrows)]
    R, piv = rref(field, aug)
    consistent = ncols not in piv
    piv = [p for p in piv if p < ncols]
    rank = len(piv)
    free = [c for c in range(ncols) if c not in piv]
    null = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(R, piv):
            v[p] = -row[f]
        null.append(v)
    particular = None
    if consistent:
        particular = [field.zero] * ncols
        for row, p in zip(R, piv):
            particular[p] = row[ncols]
    return LinearSolution(rank, consistent, particular, null)


def rank_of_vectors(field: CycField, vectors: Sequence[Sequence[CycNum]]) -> int:
    if not vectors:
        return 0
    return CycMatrix.from_columns(field, len(vectors[0]), vectors).rank()


def commutant_dimension(field: CycField, mats: Sequence[CycMatrix]) -> int:
    """dim {X : X M = M X for all M}, via the rank of the stacked linear system."""
    n = mats[0].rows
    # X M - M X = 0 as a map on vec(X) (row-major): (I kron M^T - M kron I)
    blocks = []
    ident = CycMatrix.identity(field, n)
    for M in mats:
        blocks.append(kron(ident, M.transpose()) - kron(M, ident))
    stacked = vstack(blocks)
    return n * n - stacked.rank()


def algebra_dimension(field: CycField, mats: Sequence[CycMatrix]) -> int:
    """Dimension of the unital algebra generated by mats (Burnside: n^2 iff irreducible).

    Words are explored modulo a prime splitting Phi_n first; a reduction can only
    lose rank, so reaching n^2 there is conclusive. Otherwise the exploration is
    repeated over Q(zeta) itself.
    """
    n = mats[0].rows
    target = n * n
    try:
        img = ModularImage(field)
        ident = flint.nmod_mat(n, n, [int(i == j) for i in range(n) for j in range(n)], img.p)
        if _word_span_dim_mod([img.matrix(M) for M in mats], ident, img.p) == target:
            return target
    except ZeroDivisionError:
        pass
    return _word_span_dim(mats, CycMatrix.identity(field, n),
                          lambda vecs: rank_of_vectors(field, vecs), exact=True)


def _word_span_dim(mats, ident, rank_fn, exact=False) -> int:
    n = ident.nrows() if not exact else ident.rows
    chosen = [_vec(ident, exact)]
    frontier = [ident]
    dim = 1
    while frontier and dim < n * n:
        new = []
        for W in frontier:
            for M in mats:
                P = M * W
                trial = chosen + [_vec(P, exact)]
                r = rank_fn(trial)
                if r > dim:
                    chosen, dim = trial, r
                    new.append(P)
        frontier = new
    return dim


def _word_span_dim_mod(mats, ident: flint.nmod_mat, p: int) -> int:
    """Modular word-span dimension, one echelon form per breadth-first level."""
    n = ident.nrows()
    chosen = [_vec(ident, False)]
    frontier = [ident]
    while frontier and len(chosen) < n * n:
        cands = [M * W for W in frontier for M in mats]
        cols = chosen + [_vec(P, False) for P in cands]
        # columns of the transpose: pivots pick a greedy independent subset
        R, rank = flint.nmod_mat(cols, p).transpose().rref()
        pivots, row = [], 0
        for j in range(R.ncols()):
            if row < rank and int(R[row, j]) != 0:
                pivots.append(j)
                row += 1
        base = len(chosen)
        new = [j - base for j in pivots if j >= base]
        chosen = chosen + [cols[base + j] for j in new]
        frontier = [cands[j] for j in new]
    return len(chosen)


def _vec(M, exact):
    if exact:
        return [M.entry(i, j) for i in range(M.rows) for j in range(M.cols)]
    return [int(x) for x in M.entries()]


class ModularImage:
    """Ring map Z[zeta_n][1/d] -> F_p for a prime p = 1 mod n."""

    def __init__(self, field: CycField, start: int = (1 << 61)):
        self.field = field
        n = field.n
        p = start - (start % n) + 1
        while not flint.fmpz(p).is_prime():
            p += n
        self.p = p
        phi = flint.fmpz_poly(flint.fmpz_poly.cyclotomic(n).coeffs())
        a = 2
        while True:
            w = pow(a, (p - 1) // n, p)
            if int(phi(w)) % p == 0:
                break
            a += 1
        self.w = w
        self.wpows = [pow(w, k, p) for k in range(field.degree)]

    def matrix(self, M: CycMatrix) -> flint.nmod_mat:
        p = self.p
        out = flint.nmod_mat(M.rows, M.cols, p)
        for k, A in enumerate(M.comps):
            if A is None:
                continue
            N, d = A.numer_denom()
            dinv = pow(int(d), -1, p)
            out += flint.nmod_mat(N, p) * flint.nmod(dinv * self.wpows[k] % p, p)
        return out

    def reduce_rank(self, vecs) -> int:
        return flint.nmod_mat(vecs, self.p).rank()


def kron(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    field = A.field
    rows = A.rows * B.rows
    cols = A.cols * B.cols
    entries = {}
    Ae = [(i, j, A.entry(i, j)) for i in range(A.rows) for j in range(A.cols)]
    Be = [(i, j, B.entry(i, j)) for i in range(B.rows) for j in range(B.cols)]
    Ae = [t for t in Ae if not t[2].is_zero()]
    Be = [t for t in Be if not t[2].is_zero()]
    for i1, j1, a in Ae:
        for i2, j2, b in Be:
            entries[(i1 * B.rows + i2, j1 * B.cols + j2)] = a * b
    return CycMatrix.from_entries(field, rows, cols, entries)


def vstack(mats: Sequence[CycMatrix]) -> CycMatrix:
    field = mats[0].field
    cols = mats[0].cols
    rows = sum(M.rows for M in mats)
    comps = [None] * field.degree
    for k in range(field.degree):
        if all(M.comps[k] is None for M in mats):
            continue
        C = flint.fmpq_mat(rows, cols)
        off = 0
        for M in mats:
            A = M.comps[k]
            if A is not None:
                for i in range(M.rows):
                    for j in range(cols):
                        v = A[i, j]
                        if v != 0:
                            C[off + i, j] = v
            off += M.rows
        comps[k] = C
    return CycMatrix(field, rows, cols, comps)
