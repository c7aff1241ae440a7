"""Dunkl monogenics for Z2 x D2m: harmonics, CK extension, explicit bases.

The spaces M_n(R^3, C^2) of degree-n polynomial null solutions of the
Dunkl-Dirac operator are built two ways (CK extension of x^(n-k) Phi_k and a
closed Jacobi form) and the symmetry algebra is made to act on them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .dunkl import CoreOperators, LinOperator, RootSystem, build_core_operators, mult_op
from .linalg import CycMatrix, rank_of_vectors, solve_linear_system
from .poly import MPoly, SpinorPoly, monomials
from .scalar import CycNum, root_of_unity

HALF = Fraction(1, 2)


# ----------------------------------------------------- hypergeometric bits

def pochhammer(a, n: int):
    """(a)_n = a(a+1)...(a+n-1); works for Fraction and CycNum."""
    out = Fraction(1)
    for j in range(n):
        out = (a + j) * out
    return out


def hyp2f1_terminating(a: int, b, c, x) -> object:
    """2F1(a, b; c; x) for a non-positive integer a."""
    if a > 0:
        raise ValueError("a must be a non-positive integer")
    total, term = 0, Fraction(1)
    for k in range(-a + 1):
        total = total + term
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * x
    return total


def jacobi_coeffs(t: int, a, b) -> list:
    """Coefficients of P_t^(a,b)(x) in powers of x, from the 2F1 definition."""
    pre = Fraction(pochhammer(a + 1, t)) / factorial(t)
    out = [Fraction(0)] * (t + 1)
    # ((1 - x)/2)^j expanded binomially
    for j in range(t + 1):
        cj = pre * pochhammer(-t, j) * pochhammer(t + a + b + 1, j) / (pochhammer(a + 1, j) * factorial(j))
        for i in range(j + 1):
            binom = Fraction(factorial(j), factorial(i) * factorial(j - i))
            out[i] += cj * binom * Fraction((-1) ** i, 2 ** j)
    return out


def jacobi_homogeneous(t: int, a, b) -> list:
    """c_j with (x + y)^t P_t^(a,b)((x - y)/(x + y)) = sum_j c_j x^(t-j) y^j."""
    pre = Fraction(pochhammer(a + 1, t)) / factorial(t)
    return [pre * pochhammer(-t, j) * pochhammer(-t - b, j) / (pochhammer(a + 1, j) * factorial(j)) * (-1) ** j
            for j in range(t + 1)]


def gegenbauer_coeffs(n: int, lam, mu) -> list:
    """Generalized Gegenbauer polynomial G_n^(lam, mu)(x) in powers of x."""
    half = n // 2
    if n % 2 == 0:
        pre = Fraction(pochhammer(lam + mu, half)) / pochhammer(mu + HALF, half)
        P = jacobi_coeffs(half, lam - HALF, mu - HALF)
        shift = 0
    else:
        pre = Fraction(pochhammer(lam + mu, half + 1)) / pochhammer(mu + HALF, half + 1)
        P = jacobi_coeffs(half, lam - HALF, mu + HALF)
        shift = 1
    out = [Fraction(0)] * (n + 1)
    # P(2x^2 - 1): expand (2x^2 - 1)^i
    for i, c in enumerate(P):
        for j in range(i + 1):
            binom = Fraction(factorial(i), factorial(j) * factorial(i - j))
            out[2 * j + shift] += pre * c * binom * 2 ** j * (-1) ** (i - j)
    return out


# ------------------------------------------------------------- 2D pieces

def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _z(F, conj: bool = False) -> MPoly:
    x1, x2 = MPoly.var(F, 1), MPoly.var(F, 2)
    return x1 - x2.scale(F.i) if conj else x1 + x2.scale(F.i)


def _poly_in(F, coeffs: dict, Z: MPoly, W: MPoly) -> MPoly:
    """sum c_ab Z^a W^b for a dict {(a, b): c}."""
    out = MPoly(F)
    for (a, b), c in coeffs.items():
        if c:
            out = out + (Z ** a) * (W ** b) * MPoly.const(F, c)
    return out


def g_expansion(t2: int, k1, km) -> dict:
    """g_k as a dict {(a, b): c} meaning c * X^a * (iY)^b, X, iY the real/imaginary parts."""
    out = {}
    t = t2 // 2
    if t2 % 2 == 0:
        A, B = -t + HALF - km, -t + HALF - k1
    else:
        # the odd branch needs bases -t - 1/2 - kappa for (T1 + iT2) g = 0
        A, B = -t - HALF - km, -t - HALF - k1
    if t2 % 2 == 0:
        for j in range(t + 1):
            out[(2 * t - 2 * j, 2 * j)] = _sgn(t) * pochhammer(A, t - j) * pochhammer(B, j) / (factorial(t - j) * factorial(j))
        for j in range(t):
            out[(2 * t - 1 - 2 * j, 2 * j + 1)] = (_sgn(t - 1) * pochhammer(A, t - 1 - j) * pochhammer(B, j)
                                                    / (factorial(t - 1 - j) * factorial(j)))
    else:
        for j in range(t + 1):
            out[(2 * t + 1 - 2 * j, 2 * j)] = (_sgn(t + 1) * pochhammer(A, t + 1 - j) * pochhammer(B, j)
                                                / (factorial(t - j) * factorial(j)))
            out[(2 * t - 2 * j, 2 * j + 1)] = (_sgn(t + 1) * pochhammer(A, t - j) * pochhammer(B, j + 1)
                                                / (factorial(t - j) * factorial(j)))
    return out


def f_poly(F, k: int, k1, km, Z: MPoly, W: MPoly) -> MPoly:
    """f_k(Z, W) with X = (Z + W)/2 and iY = (Z - W)/2, normalized as in the direct form."""
    t = k // 2
    if k % 2 == 0:
        norm = Fraction(pochhammer(km + k1 + 1, t)) / pochhammer(k1 + HALF, t)
    else:
        norm = Fraction(pochhammer(km + k1 + 1, t)) / pochhammer(k1 + HALF, t + 1)
    X = (Z + W).scale(HALF)
    iY = (Z - W).scale(HALF)
    out = MPoly(F)
    for (a, b), c in g_expansion(k, k1, km).items():
        if c:
            out = out + (X ** a) * (iY ** b) * MPoly.const(F, c * norm)
    return out


@dataclass
class Harmonic2D:
    n: int
    plus: MPoly
    minus: MPoly


def harmonics_2d(rs: RootSystem, n: int) -> Harmonic2D:
    """The pair phi_n^+, phi_n^- of D2m Dunkl harmonics of degree n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    F = rs.field
    z, zb = _z(F), _z(F, conj=True)
    m = rs.m
    if m % 2:
        k, ell = divmod(n, m)
        k1 = rs.kappa1
        coeffs = {(k - j, j): Fraction(pochhammer(k1, j) * pochhammer(k1 + 1, k - j)) / (factorial(j) * factorial(k - j))
                  for j in range(k + 1)}
        plus = (z ** ell) * _poly_in(F, coeffs, z ** m, zb ** m)
        minus = (zb ** ell) * _poly_in(F, coeffs, zb ** m, z ** m)
    else:
        p = m // 2
        k, ell = divmod(n, p)
        plus = (z ** ell) * f_poly(F, k, rs.kappa1, rs.kappam, z ** p, zb ** p)
        minus = (zb ** ell) * f_poly(F, k, rs.kappa1, rs.kappam, zb ** p, z ** p)
    return Harmonic2D(n, plus, minus)


# ------------------------------------------------------------ operators

@dataclass
class MonogenicContext:
    """Operators of the full and the planar Dirac structure for one (rs, delta)."""
    rs: RootSystem
    delta: int
    core: CoreOperators
    D2: LinOperator
    x2d: LinOperator
    gamma_hat: Fraction
    _sym: object = None

    @property
    def field(self):
        return self.rs.field

    @property
    def sym(self):
        if self._sym is None:
            from .symalg import build_symmetries
            self._sym = build_symmetries(self.rs, self.delta, check_degree=-1)
        return self._sym


_CONTEXTS: dict = {}


def context(rs: RootSystem, delta: int = 1) -> MonogenicContext:
    key = (rs.m, rs.kappa, delta)
    if key not in _CONTEXTS:
        core = build_core_operators(rs, delta)
        e, T, X = core.e, core.T, core.X
        D2 = (e[1] * T[1] + e[2] * T[2]).relabel("D^")
        x2d = (e[1] * X[1] + e[2] * X[2]).relabel("x^")
        g = Fraction(rs.m, 2) * (rs.kappa1 + rs.kappam)
        _CONTEXTS[key] = MonogenicContext(rs, delta, core, D2, x2d, g)
    return _CONTEXTS[key]


def monogenics_2d(rs: RootSystem, n: int) -> tuple[SpinorPoly, SpinorPoly]:
    h = harmonics_2d(rs, n)
    F = rs.field
    return SpinorPoly.chi(F, 1, h.plus), SpinorPoly.chi(F, -1, h.minus)


def _apply_power(op: LinOperator, f: SpinorPoly, k: int) -> SpinorPoly:
    for _ in range(k):
        f = op(f)
    return f


def fischer_check(rs: RootSystem, n: int, delta: int = 1) -> dict:
    """x^(n-j) Phi_j^+- for j <= n span the degree-n planar spinor polynomials."""
    ctx = context(rs, delta)
    vecs = []
    for j in range(n + 1):
        for Phi in monogenics_2d(rs, j):
            vecs.append(_apply_power(ctx.x2d, Phi, n - j).to_vector(n))
    target = 2 * (n + 1)
    rank = rank_of_vectors(rs.field, vecs)
    return {"n": n, "count": len(vecs), "target": target, "rank": rank,
            "direct_sum": len(vecs) == target and rank == target}


def ck_extend(rs: RootSystem, delta: int, f: SpinorPoly) -> SpinorPoly:
    """Cauchy-Kovalevskaya extension in x3 of a spinor polynomial in x1, x2."""
    if any(e[2] for part in (f.up, f.down) for e in part.terms):
        raise ValueError("input must not depend on x3")
    ctx = context(rs, delta)
    F = rs.field
    k0 = rs.kappa0
    x3 = MPoly.var(F, 3)
    e3 = ctx.core.e[3]
    # D^-powers of f; x3 commutes with D^
    powers = [f]
    while not powers[-1].is_zero():
        powers.append(ctx.D2(powers[-1]))
    out = SpinorPoly.zero(F)
    for j in range(0, len(powers), 2):
        jj = j // 2
        c = Fraction((-1) ** jj, 4 ** jj * factorial(jj)) / pochhammer(k0 + HALF, jj)
        out = out + powers[j] * ((x3 ** j) * MPoly.const(F, c))
    for j in range(1, len(powers), 2):
        jj = (j - 1) // 2
        c = Fraction((-1) ** jj, 4 ** jj * factorial(jj)) / pochhammer(k0 + Fraction(3, 2), jj) / (2 * k0 + 1)
        out = out - e3(powers[j] * ((x3 ** j) * MPoly.const(F, c)))
    return out


@dataclass
class Monogenic3D:
    n: int
    k: int
    sign: int
    psi: SpinorPoly

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "sign": "+" if self.sign > 0 else "-", "psi": self.psi.to_json()}


def monogenic_basis(rs: RootSystem, delta: int, n: int) -> list[Monogenic3D]:
    """psi_{n,k}^+- = CK(x^(n-k) Phi_k^+-), ordered [+ k=0..n, - k=0..n]."""
    ctx = context(rs, delta)
    out = {1: [], -1: []}
    for k in range(n + 1):
        for sign, Phi in zip((1, -1), monogenics_2d(rs, k)):
            out[sign].append(Monogenic3D(n, k, sign, ck_extend(rs, delta, _apply_power(ctx.x2d, Phi, n - k))))
    return out[1] + out[-1]


def _radial(F, t: int, a, b) -> MPoly:
    """|x|^(2t) P_t^(a,b)(Upsilon) as a polynomial."""
    r2 = MPoly.var(F, 1) ** 2 + MPoly.var(F, 2) ** 2
    s = MPoly.var(F, 3) ** 2
    out = MPoly(F)
    for j, c in enumerate(jacobi_homogeneous(t, a, b)):
        if c:
            out = out + (r2 ** (t - j)) * (s ** j) * MPoly.const(F, c)
    return out


def closed_form_B(rs: RootSystem, delta: int, n: int, k: int, Phi: SpinorPoly) -> SpinorPoly:
    """B_{n,k}(x^, x3) Phi with the Jacobi arguments cleared into polynomials."""
    ctx = context(rs, delta)
    F = rs.field
    k0, g = rs.kappa0, ctx.gamma_hat
    e3 = ctx.core.e[3]
    x3 = MPoly.var(F, 3)
    d = n - k
    t = d // 2
    pre = Fraction(factorial(t)) / pochhammer(k0 + HALF, t)
    if d % 2:
        first = ctx.x2d(Phi) * _radial(F, t, k0 - HALF, k + 1 + g)
        c = Fraction(t + k + 1 + g) / (t + k0 + HALF)
        second = e3(Phi * (x3 * _radial(F, t, k0 + HALF, k + g))).scale(c)
    else:
        first = Phi * _radial(F, t, k0 - HALF, k + g)
        second = (e3(ctx.x2d(Phi) * (x3 * _radial(F, t - 1, k0 + HALF, k + 1 + g)))
                  if t > 0 else SpinorPoly.zero(F))
    return (first - second).scale(pre)


def explicit_basis_prop56(rs: RootSystem, delta: int, n: int) -> list[Monogenic3D]:
    out = {1: [], -1: []}
    for k in range(n + 1):
        for sign, Phi in zip((1, -1), monogenics_2d(rs, k)):
            out[sign].append(Monogenic3D(n, k, sign, closed_form_B(rs, delta, n, k, Phi)))
    return out[1] + out[-1]


def d_coefficient(a: int, b: int, k: int, gamma_hat) -> Fraction:
    """d^k_{a,b} with D^^a (x^^b M_k) = d x^^(b-a) M_k."""
    if a > b:
        return Fraction(0)
    al, r = divmod(a, 2)
    be, s = divmod(b, 2)
    g = Fraction(gamma_hat)
    if r == 0 and s == 0:
        return 2 ** (2 * al) * pochhammer(Fraction(-be), al) * pochhammer(-be - k - g, al)
    if r == 1 and s == 0:
        return -(2 ** (2 * al + 1)) * pochhammer(Fraction(-be), al + 1) * pochhammer(-be - k - g, al)
    if r == 1 and s == 1:
        return -(2 ** (2 * al + 1)) * pochhammer(Fraction(-be), al) * pochhammer(-be - k - 1 - g, al + 1)
    return 2 ** (2 * al) * pochhammer(Fraction(-be), al) * pochhammer(-be - k - 1 - g, al)


# ------------------------------------------------------------ kernel dims

def dirac_kernel_dim(rs: RootSystem, delta: int, n: int) -> int:
    """dim ker D on degree-n spinor polynomials, by exact rank."""
    D = context(rs, delta).core.D
    M = D.matrix(n)
    return M.cols - M.rank()


def is_monogenic(rs: RootSystem, delta: int, f: SpinorPoly) -> bool:
    return context(rs, delta).core.D(f).is_zero()


def span_rank(rs: RootSystem, n: int, polys) -> int:
    return rank_of_vectors(rs.field, [f.to_vector(n) for f in polys])


# ------------------------------------------------- the monogenic module

REP_GENERATORS = ("O0", "O+", "O-", "O123", "T0", "T+", "T-", "L+", "L-",
                  "dsig0", "dsig1", "dsigm", "dtau", "dtau^-1")


def _sym_operator(sym, name: str) -> LinOperator:
    if name == "dtau^-1":
        return sym.dtau_inv
    return sym.generators()[name]


def _coordinates(F, basis_cols: list, images: list) -> list | None:
    """C with sum_j C[j][i] basis_j = images_i, or None if some image leaves the span."""
    nb = len(basis_cols)
    rows = [[basis_cols[j][r] for j in range(nb)] + [img[r] for img in images]
            for r in range(len(basis_cols[0]))]
    from .linalg import rref
    R, piv = rref(F, rows)
    if any(p >= nb for p in piv) or len(piv) < nb:
        return None
    out = [[F.zero] * len(images) for _ in range(nb)]
    for row, p in zip(R, piv):
        for i in range(len(images)):
            out[p][i] = row[nb + i]
    return out


def monogenic_rep_matrices(rs: RootSystem, delta: int, n: int, basis=None) -> dict:
    """Matrices of the symmetry algebra on M_n in the basis [psi^+_k, psi^-_k]."""
    ctx = context(rs, delta)
    F = rs.field
    basis = basis if basis is not None else monogenic_basis(rs, delta, n)
    cols = [b.psi.to_vector(n) for b in basis]
    Psi = CycMatrix.from_columns(F, len(cols[0]), cols)
    out = {}
    for name in REP_GENERATORS:
        img = _sym_operator(ctx.sym, name).matrix(n) @ Psi
        C = _coordinates(F, cols, [img.column(j) for j in range(img.cols)])
        if C is None:
            raise ArithmeticError(f"{name} does not preserve the monogenics of degree {n}")
        out[name] = CycMatrix.from_rows(F, C)
    return out


def o123_eigenvalue(rs: RootSystem, delta: int, n: int, printed: bool = False):
    """O123 on M_n is i*delta*(n + 1 + gamma_hat + kappa0).

    printed=True gives the variant with delta*kappa0 in place of kappa0,
    which only agrees for delta = +1.
    """
    g = Fraction(rs.m, 2) * (rs.kappa1 + rs.kappam)
    k0 = delta * rs.kappa0 if printed else rs.kappa0
    return rs.field.i * delta * (n + 1 + g + k0)


def expected_action(rs: RootSystem, delta: int, n: int, printed_o123: bool = False) -> dict:
    """Eigenvalues and group phases prescribed for the monogenic basis."""
    F = rs.field
    g = Fraction(rs.m, 2) * (rs.kappa1 + rs.kappam)
    zeta = root_of_unity(rs.m, 1)
    i = F.i
    size = 2 * n + 2

    def idx(k, s):
        return k if s > 0 else n + 1 + k

    E = {name: {} for name in ("O0", "O123", "dsig0", "dsig1", "dsigm", "dtau")}
    o123 = o123_eigenvalue(rs, delta, n, printed_o123)
    for k in range(n + 1):
        ell = k % rs.m
        sgn = F.coerce(_sgn(n - k))
        for s in (1, -1):
            a = idx(k, s)
            E["O0"][(a, a)] = F.coerce(s * (k + HALF + g))
            E["O123"][(a, a)] = o123
            E["dsig0"][(a, a)] = sgn * (s * delta)
            E["dsig1"][(idx(k, -s), a)] = -(i * s) * sgn * zeta ** (s * (2 * ell + 1))
            E["dsigm"][(idx(k, -s), a)] = (i * s) * sgn
            E["dtau"][(a, a)] = -(zeta ** (-s * (2 * ell + 1)))
    return {name: CycMatrix.from_entries(F, size, size, ent) for name, ent in E.items()}


def _o0_order(M: CycMatrix) -> list:
    return [M.entry(j, j) for j in range(M.rows)]


def intertwiner(F, mats_a: dict, mats_b: dict, names) -> list | None:
    """An invertible X with X A_g = B_g X for all g, searched among O0-eigenbasis matchings.

    Both families must have O0 diagonal with simple spectrum; returns the
    diagonal weights of X composed with the eigenvalue matching, or None.
    """
    da, db = _o0_order(mats_a["O0"]), _o0_order(mats_b["O0"])
    n = len(da)
    perm = []
    for v in da:
        hits = [j for j, w in enumerate(db) if (w - v).is_zero()]
        if len(hits) != 1:
            return None
        perm.append(hits[0])
    if len(set(perm)) != n:
        return None
    # X e_i = c_i f_perm(i): (X A)_{perm(r), i} = c_r A_{r,i}, (B X)_{perm(r), i} = B_{perm(r), perm(i)} c_i
    rows = []
    for g in names:
        A, B = mats_a[g], mats_b[g]
        for r in range(n):
            for i in range(n):
                row = [F.zero] * n
                row[r] = row[r] + A.entry(r, i)
                row[i] = row[i] - B.entry(perm[r], perm[i])
                if any(not x.is_zero() for x in row):
                    rows.append(row)
    sol = solve_linear_system(F, rows)
    if len(sol.nullspace) != 1:
        return None
    c = sol.nullspace[0]
    if any(x.is_zero() for x in c):
        return None
    return [(perm[i], c[i]) for i in range(n)]


@dataclass
class MonogenicReport:
    m: int
    n: int
    delta: int
    kappa: tuple
    kernel_dim: int
    ck_annihilated: bool
    closed_annihilated: bool
    ck_rank: int
    closed_rank: int
    joint_rank: int
    closed_over_ck: list
    fischer: dict
    action_mismatches: list
    o123_computed: object
    o123_expected: object
    o123_printed: object
    relations_failed: list
    commutant_dim: int
    algebra_dim: int
    irreducible: bool
    matches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        d = 2 * self.n + 2
        return (self.kernel_dim == d and self.ck_annihilated and self.closed_annihilated
                and self.ck_rank == d and self.closed_rank == d and self.joint_rank == d
                and self.fischer["direct_sum"] and not self.action_mismatches
                and not self.relations_failed and self.irreducible and bool(self.matches))

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "delta": self.delta, "kappa": [str(k) for k in self.kappa],
                "kernel_dim": self.kernel_dim, "ck_annihilated": self.ck_annihilated,
                "closed_annihilated": self.closed_annihilated, "ck_rank": self.ck_rank,
                "closed_rank": self.closed_rank, "joint_rank": self.joint_rank,
                "closed_over_ck": self.closed_over_ck, "fischer": self.fischer,
                "action_mismatches": self.action_mismatches,
                "O123": {"computed": self.o123_computed.to_json(), "expected": self.o123_expected.to_json(),
                         "printed_variant": self.o123_printed.to_json(),
                         "printed_variant_agrees": (self.o123_computed - self.o123_printed).is_zero()},
                "relations_failed": self.relations_failed, "commutant_dim": self.commutant_dim,
                "algebra_dim": self.algebra_dim, "irreducible": self.irreducible,
                "matches": self.matches, "ok": self.ok}


def _scalar_ratio(F, a: SpinorPoly, b: SpinorPoly):
    """c with a = c b, or None."""
    d = max(a.degree, b.degree)
    va, vb = a.to_vector(d), b.to_vector(d)
    piv = next((j for j, x in enumerate(vb) if not x.is_zero()), None)
    if piv is None:
        return None
    c = va[piv] / vb[piv]
    return c if all((x - c * y).is_zero() for x, y in zip(va, vb)) else None


def find_matching_families(rs: RootSystem, delta: int, n: int, mats: dict, cases=None) -> list[dict]:
    """Built representation cells of dimension 2n+2 isomorphic to the monogenic module."""
    from .reps import (DenominatorZero, IncompatibleCase, NoRepresentation, build_rep, compatible_specs,
                       excluded_values, table_row)
    from .scalar import sign_of_real
    F = rs.field
    out = []
    for spec in compatible_specs(rs.m, n, rs.kappa):
        if spec.N != n or (cases and spec.case not in cases):
            continue
        try:
            rep = build_rep(spec)
        except (DenominatorZero, NoRepresentation, IncompatibleCase):
            continue
        if not (rep.gens["O123"].entry(0, 0) - mats["O123"].entry(0, 0)).is_zero():
            continue
        X = intertwiner(F, mats, rep.gens, REP_GENERATORS)
        if X is not None:
            out.append({"spec": spec.to_json(), "row": list(table_row(spec)[0]),
                        "row_exclusions": [f"{q} = {v}" for q, v, _ in excluded_values(spec)],
                        "ladder_positive": all(sign_of_real(a) == 1 for a in rep.A),
                        "basis_map": [{"from": j, "to": t} for j, (t, _) in enumerate(X)]})
    return out


def verify_monogenic_rep(rs: RootSystem, delta: int, n: int, match: bool = True) -> MonogenicReport:
    from .reps import RepMatrices, check_relations, commutant_dimension_fast, generated_algebra_dim
    F = rs.field
    ck = monogenic_basis(rs, delta, n)
    closed = explicit_basis_prop56(rs, delta, n)
    ratios = []
    for a, b in zip(closed, ck):
        c = _scalar_ratio(F, a.psi, b.psi)
        ratios.append(None if c is None else c.to_json())
    mats = monogenic_rep_matrices(rs, delta, n, ck)
    exp = expected_action(rs, delta, n)
    mism = []
    for name, M in exp.items():
        if not M == mats[name]:
            mism.append(name)
    size = 2 * n + 2
    rep = RepMatrices(rs.m, n, 0, delta, rs.kappa, None, mats["O123"].entry(0, 0), F, mats, [], [], [])
    failed = [r["relation"] for r in check_relations(rep) if r["status"] != "pass"]
    cdim = commutant_dimension_fast(F, [mats[g] for g in REP_GENERATORS])
    adim = generated_algebra_dim(rep)
    irreducible = not failed and cdim == 1 and adim == size * size
    matches = []
    if match:
        cases = ("I",) if rs.m % 2 else ("I.i", "I.ii")
        matches = find_matching_families(rs, delta, n, mats, cases)
    return MonogenicReport(rs.m, n, delta, rs.kappa, dirac_kernel_dim(rs, delta, n),
                           all(is_monogenic(rs, delta, b.psi) for b in ck),
                           all(is_monogenic(rs, delta, b.psi) for b in closed),
                           span_rank(rs, n, [b.psi for b in ck]), span_rank(rs, n, [b.psi for b in closed]),
                           span_rank(rs, n, [b.psi for b in ck + closed]), ratios,
                           fischer_check(rs, n, delta), mism, mats["O123"].entry(0, 0),
                           exp["O123"].entry(0, 0), o123_eigenvalue(rs, delta, n, printed=True), failed, cdim, adim, irreducible, matches)
