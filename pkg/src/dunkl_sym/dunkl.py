"""Dunkl operators for W = Z2 x D_2m on R^3, with the Dirac pair (D, x).

Operators are lazy: every LinOperator can be applied to a SpinorPoly, and
since all of them are homogeneous it can also produce its exact matrix from
degree d to degree d + shift. Identity checks compare those matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Sequence

from .linalg import CycMatrix
from .poly import (GradedBasis, MPoly, SpinorPoly, basis_dim, exact_div_linear,
                   partial_derivative, substitute_linear)
from .scalar import CycField, CycNum, field_order, get_field, sin_cos


# ---------------------------------------------------------------- roots

@dataclass(frozen=True)
class Root:
    index: int
    vector: tuple
    kappa: Fraction


class RootSystem:
    """Positive roots alpha_0..alpha_m of A1 + I2(m) with their multiplicities."""

    def __init__(self, m: int, kappa0=0, kappa1=0, kappam=None):
        if m < 2:
            raise ValueError("m must be at least 2")
        kappa0, kappa1 = Fraction(kappa0), Fraction(kappa1)
        kappam = kappa1 if kappam is None else Fraction(kappam)
        if m % 2 and kappa1 != kappam:
            raise ValueError("kappa1 and kappam must agree for odd m")
        self.m = m
        self.kappa0, self.kappa1, self.kappam = kappa0, kappa1, kappam
        self.field: CycField = get_field(field_order(m))
        F = self.field
        roots = [Root(0, (F.zero, F.zero, F.one), kappa0)]
        for j in range(1, m + 1):
            s, c = sin_cos(m, j)
            roots.append(Root(j, (s, -c, F.zero), self.kappa_of(j)))
        self.positive_roots = roots

    @property
    def kappa(self) -> tuple:
        return (self.kappa0, self.kappa1, self.kappam)

    @property
    def p(self) -> int:
        return self.m // 2

    def kappa_of(self, j: int) -> Fraction:
        if j == 0:
            return self.kappa0
        if self.m % 2 == 0 and j % 2 == 0:
            return self.kappam
        return self.kappa1

    @property
    def gamma(self) -> Fraction:
        return sum((r.kappa for r in self.positive_roots), Fraction(0))

    def root(self, j: int) -> tuple:
        """alpha_j for any integer j (alpha_{j+m} = -alpha_j)."""
        if j == 0:
            return self.positive_roots[0].vector
        s, c = sin_cos(self.m, j)
        return (s, -c, self.field.zero)

    def reflection(self, j: int) -> list[list[CycNum]]:
        r = self.root(j)
        F = self.field
        return [[F.coerce(int(a == b)) - 2 * r[a] * r[b] for b in range(3)] for a in range(3)]

    def group_matrices(self) -> list[list[list[CycNum]]]:
        """All 4m elements of W, by closure under the generators."""
        gens = [self.reflection(0), self.reflection(1), self.reflection(self.m)]
        ident = [[self.field.coerce(int(a == b)) for b in range(3)] for a in range(3)]
        seen = {_mkey(ident): ident}
        frontier = [ident]
        while frontier:
            new = []
            for g in frontier:
                for s in gens:
                    h = matmul3(s, g)
                    k = _mkey(h)
                    if k not in seen:
                        seen[k] = h
                        new.append(h)
            frontier = new
        return list(seen.values())

    def __repr__(self):
        return f"RootSystem(m={self.m}, kappa={tuple(str(k) for k in self.kappa)})"


def matmul3(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(3)), A[0][0].field.zero) for j in range(3)]
            for i in range(3)]


def _mkey(M):
    return tuple(tuple(tuple(v.poly.coeffs()) for v in row) for row in M)


# ------------------------------------------------------------ operators

class LinOperator:
    """A homogeneous linear operator on spinor polynomials.

    kind is one of "prim" (explicit kernel), "sum", "prod", "scalar".
    """

    def __init__(self, field: CycField, shift, label: str, kind: str,
                 kernel: Callable | None = None, parts: list | None = None,
                 coef: CycNum | None = None, parity: int | None = None):
        self.field = field
        self.shift = shift
        self.label = label
        self.kind = kind
        self.kernel = kernel
        self.parts = parts or []
        self.coef = coef
        self.parity = parity
        self._cache: dict[int, CycMatrix] = {}
        self._products: dict[int, "LinOperator"] = {}

    # construction helpers
    @classmethod
    def prim(cls, field, shift, label, kernel, parity=0) -> "LinOperator":
        return cls(field, shift, label, "prim", kernel=kernel, parity=parity)

    @classmethod
    def scalar(cls, field, c, label=None) -> "LinOperator":
        c = field.coerce(c)
        return cls(field, 0, label or f"({c})", "scalar", coef=c, parity=0)

    def _coerce(self, other) -> "LinOperator":
        if isinstance(other, LinOperator):
            return other
        return LinOperator.scalar(self.field, other)

    def __add__(self, other) -> "LinOperator":
        other = self._coerce(other)
        shift = self.shift if self.shift == other.shift else "mixed"
        par = self.parity if self.parity == other.parity else None
        return LinOperator(self.field, shift, f"{self.label} + {other.label}", "sum",
                           parts=[(self.field.one, self), (self.field.one, other)], parity=par)

    __radd__ = lambda self, other: self._coerce(other) + self

    def __neg__(self) -> "LinOperator":
        return self.scaled(-1)

    def __sub__(self, other) -> "LinOperator":
        other = self._coerce(other)
        shift = self.shift if self.shift == other.shift else "mixed"
        par = self.parity if self.parity == other.parity else None
        return LinOperator(self.field, shift, f"{self.label} - ({other.label})", "sum",
                           parts=[(self.field.one, self), (-self.field.one, other)], parity=par)

    def __rsub__(self, other) -> "LinOperator":
        return self._coerce(other) - self

    def scaled(self, c) -> "LinOperator":
        c = self.field.coerce(c)
        return LinOperator(self.field, self.shift, f"({c})*{self.label}", "sum",
                           parts=[(c, self)], parity=self.parity)

    def __mul__(self, other) -> "LinOperator":
        if not isinstance(other, LinOperator):
            return self.scaled(other)
        # share product nodes so their matrices are computed once
        cached = self._products.get(id(other))
        if cached is not None and cached.parts[1] is other:
            return cached
        if self.shift == "mixed" or other.shift == "mixed":
            shift = "mixed"
        else:
            shift = self.shift + other.shift
        par = None if self.parity is None or other.parity is None else (self.parity + other.parity) % 2
        node = LinOperator(self.field, shift, f"{self.label}*{other.label}", "prod",
                           parts=[self, other], parity=par)
        self._products[id(other)] = node
        return node

    def __rmul__(self, c) -> "LinOperator":
        return self.scaled(c)

    def __pow__(self, k: int) -> "LinOperator":
        out = self
        for _ in range(k - 1):
            out = out * self
        return out if k > 0 else LinOperator.scalar(self.field, 1, "1")

    def relabel(self, label: str) -> "LinOperator":
        self.label = label
        return self

    # evaluation
    def __call__(self, f: SpinorPoly) -> SpinorPoly:
        if self.kind == "prim":
            return self.kernel(f)
        if self.kind == "scalar":
            return f.scale(self.coef)
        if self.kind == "prod":
            A, B = self.parts
            return A(B(f))
        out = SpinorPoly.zero(self.field)
        for c, op in self.parts:
            out = out + op(f).scale(c)
        return out

    def matrix(self, d: int) -> CycMatrix:
        """Matrix from degree d to degree d + shift in the graded monomial bases."""
        if self.shift == "mixed":
            raise ValueError(f"operator {self.label} is not homogeneous")
        M = self._cache.get(d)
        if M is not None:
            return M
        F = self.field
        rows, cols = basis_dim(d + self.shift), basis_dim(d)
        if cols == 0 or rows == 0:
            M = CycMatrix.zero(F, rows, cols)
        elif self.kind == "scalar":
            M = CycMatrix.scalar(F, cols, self.coef)
        elif self.kind == "prod":
            A, B = self.parts
            M = A.matrix(d + B.shift) @ B.matrix(d)
        elif self.kind == "sum":
            M = None
            for c, op in self.parts:
                P = op.matrix(d)
                if c != 1:
                    P = P.scale(c)
                M = P if M is None else M + P
        else:
            target = d + self.shift
            columns = [self.kernel(b).to_vector(target) for b in GradedBasis(F, d)]
            M = CycMatrix.from_columns(F, rows, columns)
        self._cache[d] = M
        return M

    def __repr__(self):
        return f"LinOperator[{self.shift}]({self.label})"


def comm(A: LinOperator, B: LinOperator) -> LinOperator:
    return (A * B - B * A).relabel(f"[{A.label}, {B.label}]")


def acomm(A: LinOperator, B: LinOperator) -> LinOperator:
    return (A * B + B * A).relabel(f"{{{A.label}, {B.label}}}")


def supercomm(A: LinOperator, B: LinOperator) -> LinOperator:
    """Graded commutator: anticommutator when both are Clifford-odd."""
    if A.parity is None or B.parity is None:
        raise ValueError("graded commutator needs operators of definite parity")
    if A.parity == 1 and B.parity == 1:
        return acomm(A, B)
    return comm(A, B)


# ----------------------------------------------------------- primitives

def mult_op(field, i: int) -> LinOperator:
    xi = MPoly.var(field, i)
    return LinOperator.prim(field, 1, f"x{i}", lambda f: f * xi)


def partial_op(field, i: int) -> LinOperator:
    return LinOperator.prim(field, -1, f"d{i}", lambda f: f.map(lambda g: partial_derivative(g, i)))


def linear_action(field, M, label: str) -> LinOperator:
    """f(x) -> f(M x); for a reflection this is the group action."""
    return LinOperator.prim(field, 0, label, lambda f: f.map(lambda g: substitute_linear(g, M)))


def clifford_op(field, i: int, delta: int) -> LinOperator:
    """Pauli realization e1 = sx, e2 = sy, e3 = delta*sz."""
    I = field.i
    if i == 1:
        kern = lambda f: SpinorPoly(f.down, f.up)
    elif i == 2:
        kern = lambda f: SpinorPoly(f.down.scale(-I), f.up.scale(I))
    elif i == 3:
        kern = lambda f: SpinorPoly(f.up.scale(delta), f.down.scale(-delta))
    else:
        raise ValueError(i)
    return LinOperator.prim(field, 0, f"e{i}", kern, parity=1)


def dunkl_kernel(rs: RootSystem, i: int) -> Callable[[MPoly], MPoly]:
    terms = []
    for r in rs.positive_roots:
        coef = r.vector[i - 1] * r.kappa
        if coef.is_zero():
            continue
        terms.append((coef, rs.reflection(r.index), r.vector))

    def kern(g: MPoly) -> MPoly:
        out = partial_derivative(g, i)
        for coef, S, vec in terms:
            diff = g - substitute_linear(g, S)
            if not diff.is_zero():
                out = out + exact_div_linear(diff, vec).scale(coef)
        return out

    return kern


def dunkl_operator(rs: RootSystem, i: int, delta: int = 1) -> LinOperator:
    """T_i acting componentwise on spinor polynomials (delta only matters downstream)."""
    kern = dunkl_kernel(rs, i)
    return LinOperator.prim(rs.field, -1, f"T{i}", lambda f: f.map(kern))


def euler_op(field) -> LinOperator:
    def kern(f: SpinorPoly) -> SpinorPoly:
        return f.map(lambda g: MPoly(field, {e: c * sum(e) for e, c in g.terms.items()}))
    return LinOperator.prim(field, 0, "E", kern)


# --------------------------------------------------------------- core

@dataclass
class CoreOperators:
    rs: RootSystem
    delta: int
    T: dict
    X: dict
    e: dict
    sigma: dict
    D: LinOperator
    x: LinOperator
    E: LinOperator
    Laplacian: LinOperator
    x2: LinOperator
    C: dict
    C_formula: dict
    L: dict
    gamma: Fraction
    one: LinOperator

    def scalar(self, c) -> LinOperator:
        return LinOperator.scalar(self.rs.field, c)


def build_core_operators(rs: RootSystem, delta: int = 1, gamma: Fraction | None = None) -> CoreOperators:
    """All of the building blocks; gamma can be overridden for negative controls."""
    if delta not in (1, -1):
        raise ValueError("delta must be +1 or -1")
    F = rs.field
    T = {i: dunkl_operator(rs, i, delta) for i in (1, 2, 3)}
    X = {i: mult_op(F, i) for i in (1, 2, 3)}
    e = {i: clifford_op(F, i, delta) for i in (1, 2, 3)}
    for i in (1, 2, 3):
        T[i].parity = 0
        X[i].parity = 0
    sigma = {j: linear_action(F, rs.reflection(j), f"s{j}") for j in range(0, rs.m + 1)}
    D = (e[1] * T[1] + e[2] * T[2] + e[3] * T[3]).relabel("D")
    x = (e[1] * X[1] + e[2] * X[2] + e[3] * X[3]).relabel("x")
    E = euler_op(F)
    E.parity = 0
    Lap = (T[1] * T[1] + T[2] * T[2] + T[3] * T[3]).relabel("Lap")
    x2 = (X[1] * X[1] + X[2] * X[2] + X[3] * X[3]).relabel("|x|^2")
    one = LinOperator.scalar(F, 1, "1")
    C, Cf, L = {}, {}, {}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            C[i, j] = comm(T[i], X[j]).relabel(f"C{i}{j}")
            op = LinOperator.scalar(F, int(i == j))
            for r in rs.positive_roots:
                c = 2 * r.kappa * r.vector[i - 1] * r.vector[j - 1]
                if not c.is_zero():
                    op = op + sigma[r.index].scaled(c)
            Cf[i, j] = op.relabel(f"C{i}{j}'")
            L[i, j] = (X[i] * T[j] - X[j] * T[i]).relabel(f"L{i}{j}")
    g = rs.gamma if gamma is None else Fraction(gamma)
    return CoreOperators(rs, delta, T, X, e, sigma, D, x, E, Lap, x2, C, Cf, L, g, one)


# ------------------------------------------------------------- ledger

@dataclass
class OperatorIdentity:
    name: str
    lhs: LinOperator
    rhs: LinOperator | None
    check_degree: int = 4

    def check(self, d: int) -> dict:
        """Compare both sides on the degree-d basis; rhs None means zero."""
        A = self.lhs.matrix(d)
        if self.rhs is None:
            diff = A
        else:
            if self.rhs.shift != self.lhs.shift:
                raise ValueError(f"{self.name}: degree shifts differ")
            diff = A - self.rhs.matrix(d)
        rec = {"identity": self.name, "degree": d, "status": "pass"}
        if not diff.is_zero():
            rec["status"] = "fail"
            rec["counterexample"] = _counterexample(self, diff, d)
        return rec

    def verify(self, max_degree: int | None = None) -> list[dict]:
        top = self.check_degree if max_degree is None else max_degree
        return [self.check(d) for d in range(top + 1)]


def _counterexample(ident: OperatorIdentity, diff: CycMatrix, d: int) -> dict:
    F = diff.field
    basis = GradedBasis(F, d)
    for j in range(diff.cols):
        col = diff.column(j)
        if any(not v.is_zero() for v in col):
            target = d + ident.lhs.shift
            b = basis.elements[j]
            lhs = SpinorPoly.from_vector(F, target, ident.lhs.matrix(d).column(j))
            rhs = (SpinorPoly.from_vector(F, target, ident.rhs.matrix(d).column(j))
                   if ident.rhs is not None else SpinorPoly.zero(F))
            return {"input": basis.label(j), "input_poly": repr(b),
                    "lhs": repr(lhs), "rhs": repr(rhs)}
    return {}


def run_ledger(identities: Sequence[OperatorIdentity], max_degree: int) -> list[dict]:
    out = []
    for ident in identities:
        out.extend(ident.verify(max_degree))
    return out


def all_pass(report: Sequence[dict]) -> bool:
    return all(r["status"] == "pass" for r in report)


def osp12_identities(core: CoreOperators) -> list[OperatorIdentity]:
    T, C, Cf = core.T, core.C, core.C_formula
    D, x, E, Lap, x2 = core.D, core.x, core.E, core.Laplacian, core.x2
    g = core.gamma
    shifted_E = E + (Fraction(3, 2) + g)
    out = []
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i < j:
                out.append(OperatorIdentity(f"[T{i},T{j}] = 0", comm(T[i], T[j]), None))
            out.append(OperatorIdentity(f"[T{i},x{j}] = C{i}{j}", C[i, j], Cf[i, j]))
            if i < j:
                out.append(OperatorIdentity(f"C{i}{j} = C{j}{i}", C[i, j], C[j, i]))
    DX = acomm(D, x)
    out += [
        OperatorIdentity("D^2 = Lap", D * D, Lap),
        OperatorIdentity("x^2 = |x|^2", x * x, x2),
        OperatorIdentity("{D,x} = 2(E + 3/2 + gamma)", DX, shifted_E.scaled(2)),
        OperatorIdentity("[E,x^2] = 2x^2", comm(E, x2), x2.scaled(2)),
        OperatorIdentity("[E,Lap] = -2Lap", comm(E, Lap), Lap.scaled(-2)),
        OperatorIdentity("[x^2,Lap] = -4(E + 3/2 + gamma)", comm(x2, Lap), shifted_E.scaled(-4)),
        OperatorIdentity("[{D,x},D] = -2D", comm(DX, D), D.scaled(-2)),
        OperatorIdentity("[{D,x},x] = 2x", comm(DX, x), x.scaled(2)),
    ]
    return out


def intertwining_identities(core: CoreOperators) -> list[OperatorIdentity]:
    """w T_v w^{-1} = T_{w v} for the generators w and the unit vectors v."""
    rs = core.rs
    out = []
    for j in (0, 1, rs.m):
        S = rs.reflection(j)
        w = core.sigma[j]
        for v in (1, 2, 3):
            # T_{w xi_v} = sum_k S[k][v] T_k
            rhs = None
            for k in (1, 2, 3):
                c = S[k - 1][v - 1]
                if not c.is_zero():
                    term = core.T[k].scaled(c)
                    rhs = term if rhs is None else rhs + term
            out.append(OperatorIdentity(f"s{j} T{v} s{j} = T(s{j} xi{v})", w * core.T[v] * w, rhs))
    return out


def verify_osp12(rs: RootSystem, delta: int = 1, max_degree: int = 4, gamma=None) -> list[dict]:
    core = build_core_operators(rs, delta, gamma=gamma)
    return run_ledger(osp12_identities(core) + intertwining_identities(core), max_degree)


def thm25_identities(core: CoreOperators) -> list[OperatorIdentity]:
    L, C = core.L, core.C
    idx = (1, 2, 3)
    out = []
    seen_cyc = set()
    for i in idx:
        for j in idx:
            for k in idx:
                for l in idx:
                    t = f"{i}{j}{k}{l}"
                    lhs = comm(L[i, j], L[k, l])
                    r1 = L[i, l] * C[j, k] + L[j, k] * C[i, l] + L[k, i] * C[l, j] + L[l, j] * C[k, i]
                    r2 = C[j, k] * L[i, l] + C[i, l] * L[j, k] + C[l, j] * L[k, i] + C[k, i] * L[l, j]
                    out.append(OperatorIdentity(f"[L{i}{j},L{k}{l}] = LC ({t})", lhs, r1))
                    out.append(OperatorIdentity(f"[L{i}{j},L{k}{l}] = CL ({t})", lhs, r2))
                    key = t
                    if key in seen_cyc:
                        continue
                    seen_cyc.add(key)
                    out.append(OperatorIdentity(
                        f"cyclic {{L,L}} ({t})",
                        acomm(L[i, j], L[k, l]) + acomm(L[k, i], L[j, l]) + acomm(L[j, k], L[i, l]), None))
                    out.append(OperatorIdentity(
                        f"cyclic [L,C] ({t})",
                        comm(L[i, j], C[k, l]) + comm(L[k, i], C[j, l]) + comm(L[j, k], C[i, l]), None))
                    out.append(OperatorIdentity(
                        f"LL = LC cyclic ({t})",
                        L[i, j] * L[k, l] + L[k, i] * L[j, l] + L[j, k] * L[i, l],
                        L[i, j] * C[k, l] + L[k, i] * C[j, l] + L[j, k] * C[i, l]))
    return out


def verify_thm25(rs: RootSystem, max_degree: int = 4, delta: int = 1) -> list[dict]:
    core = build_core_operators(rs, delta)
    return run_ledger(thm25_identities(core), max_degree)
