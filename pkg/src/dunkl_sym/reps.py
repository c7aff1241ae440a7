"""Finite-dimensional representations L_{lambda,Lambda}(V) of the symmetry algebra.

A representation is materialized on the basis [v_0^+..v_N^+, v_0^-..v_N^-].
The group part comes from the spin representation V, T0/T+/T- are obtained
by summing over the group, the ladder operators from the coefficients A(k),
and O+/O- are solved entrywise from the commutation rules with O0 (with
the anticommutator defining the ladders as fallback on the ladder entries).
Nothing about irreducibility or unitarity is trusted: ``certify`` checks
relations, the commutant, the generated algebra and the Gram form.
"""
from __future__ import annotations

import itertools
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import flint

from .linalg import CycMatrix, ModularImage, _word_span_dim_mod, algebra_dimension, commutant_dimension
from .scalar import CycNum, field_order, get_field, root_of_unity, sign_of_real

HALF = Fraction(1, 2)

CASES_ODD = ("I", "II", "III")
CASES_EVEN = ("I.i", "I.ii", "II", "III")
LAMBDA_BRANCHES = {
    "odd": {"I": (1, 2), "II": (3,), "III": (4,)},
    "even": {"I.i": (1, 2), "I.ii": (3, 4), "II": (5,), "III": (6,)},
}


class IncompatibleCase(ValueError):
    """The congruence or parity precondition of a case family fails."""


class NoRepresentation(ValueError):
    """The data cannot carry a representation at all."""


class DenominatorZero(ArithmeticError):
    """An entry of O+ or O- is left undetermined by the commutation rules."""


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RepSpec:
    m: int
    N: int
    ell: int
    delta: int
    case: str
    lambda_branch: int
    Lambda_branch: int
    kappa: tuple

    def __post_init__(self):
        k0, k1, km = (_q(k) for k in self.kappa)
        object.__setattr__(self, "kappa", (k0, k1, km))
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if self.N < 0:
            raise ValueError("N must be non-negative")
        if self.delta not in (1, -1):
            raise ValueError("delta must be +1 or -1")
        if self.m % 2 and k1 != km:
            raise ValueError("odd m requires kappa1 = kappam")
        cases = CASES_EVEN if self.m % 2 == 0 else CASES_ODD
        if self.case not in cases:
            raise ValueError(f"case must be one of {cases} for m = {self.m}")
        if self.Lambda_branch not in (1, 2):
            raise ValueError("Lambda_branch must be 1 or 2")

    @property
    def parity(self) -> str:
        return "even" if self.m % 2 == 0 else "odd"

    @property
    def p(self) -> int:
        return self.m // 2

    def to_json(self) -> dict:
        return {"m": self.m, "N": self.N, "ell": self.ell, "delta": self.delta, "case": self.case,
                "lambda_branch": self.lambda_branch, "Lambda_branch": self.Lambda_branch,
                "kappa": [str(k) for k in self.kappa]}


# ------------------------------------------------------- scalar shorthands

def tau_exponent(m: int, ell: int, k: int) -> int:
    """zeta-exponent of the tau eigenvalue on v_k^+."""
    return 2 * (k + ell) + 1 if m % 2 == 0 else 2 * (k + ell)


def ladder_argument(m: int, ell: int, k: int) -> int:
    """Residue x such that T+T- acts on v_k^+ by H_kappa(x) (even m)."""
    return k + ell + 1


def indicator_m(m: int, x: int) -> int:
    p = m // 2
    r = x % m
    return -1 if r == p else (1 if r == 0 else 0)


def G_kappa(m: int, kappa, x: int) -> Fraction:
    p = m // 2
    _, k1, km = (_q(k) for k in kappa)
    return p * (k1 * indicator_m(m, x) - km * (1 if x % p == 0 else 0))


def H_kappa(m: int, kappa, x: int) -> Fraction:
    p = m // 2
    _, k1, km = (_q(k) for k in kappa)
    r = x % m
    if r == p:
        return p * p * (k1 + km) ** 2
    if r == 0:
        return p * p * (k1 - km) ** 2
    return Fraction(0)


def odd_ladder_value(m: int, kappa, ell: int, k: int) -> Fraction:
    """T+T- eigenvalue on v_k^+ for odd m."""
    k1 = _q(kappa[1])
    return (m * k1) ** 2 if (2 * (k + ell) + 1) % m == 0 else Fraction(0)


def ladder_eigenvalue(m: int, kappa, ell: int, k: int) -> Fraction:
    if m % 2 == 0:
        return H_kappa(m, kappa, ladder_argument(m, ell, k))
    return odd_ladder_value(m, kappa, ell, k)


# ---------------------------------------------------- lambda and Lambda

def check_case(spec: RepSpec) -> None:
    """Raise unless the congruence/parity precondition of spec.case holds."""
    m, N, ell, case = spec.m, spec.N, spec.ell, spec.case
    if spec.lambda_branch not in LAMBDA_BRANCHES[spec.parity][case]:
        if case == "III" and spec.lambda_branch == 7 and spec.parity == "even":
            raise NoRepresentation("no representations in this case")
        raise IncompatibleCase(f"lambda branch {spec.lambda_branch} does not belong to case {case}")
    if case == "III":
        if N % 2:
            raise NoRepresentation("no representations in this case")
        return
    if spec.parity == "odd":
        hit = (2 * (N + ell) + 1) % m == 0
        if (case == "I") != hit:
            raise IncompatibleCase(f"case {case} needs 2(N+l)+1 {'=' if case == 'I' else '!='} 0 mod {m}")
        return
    x = ladder_argument(m, ell, N)
    p = spec.p
    ok = {"I.i": x % m == p, "I.ii": x % m == 0, "II": x % p != 0}[case]
    if not ok:
        raise IncompatibleCase(f"case {case} is incompatible with N={N}, l={ell} (N+l+1 = {x % m} mod {m})")


def lambda_value(spec: RepSpec) -> Fraction:
    k0, k1, km = spec.kappa
    N, d, b = spec.N, spec.delta, spec.lambda_branch
    top = N + HALF
    if spec.parity == "odd":
        table = {1: top + k1 * spec.m, 2: top - k1 * spec.m, 3: top, 4: Fraction(N, 2) + k0 * d}
    else:
        p = spec.p
        table = {1: top + (k1 + km) * p, 2: top - (k1 + km) * p, 3: top + (k1 - km) * p,
                 4: top - (k1 - km) * p, 5: top, 6: Fraction(N, 2) + k0 * d}
    if b in (4, 6) and spec.case == "III" and spec.Lambda_branch == 1:
        # the bottom equation with Lambda_1 is solved by N/2 - kappa0 delta
        return Fraction(N, 2) - k0 * d
    return table[b]


def Lambda_value(field, lam: Fraction, kappa0: Fraction, delta: int, branch: int) -> CycNum:
    """Lambda_1 = i(lambda+1/2+kappa0 delta), Lambda_2 = -i(lambda+1/2-kappa0 delta)."""
    i = field.i
    if branch == 1:
        return i * (lam + HALF + kappa0 * delta)
    return -(i * (lam + HALF - kappa0 * delta))


def resolve_lambda_Lambda(spec: RepSpec) -> tuple[Fraction, CycNum]:
    check_case(spec)
    lam = lambda_value(spec)
    F = get_field(field_order(spec.m))
    return lam, Lambda_value(F, lam, spec.kappa[0], spec.delta, spec.Lambda_branch)


# ----------------------------------------------------------- the builder

GENERATORS = ("O0", "O+", "O-", "O123", "T0", "T+", "T-", "L+", "L-",
              "dsig0", "dsig1", "dsigm", "dtau")
STAR = {"O0": ("O0", 1), "O+": ("O-", 1), "O-": ("O+", 1), "O123": ("O123", -1),
        "T0": ("T0", -1), "T+": ("T-", 1), "T-": ("T+", 1), "L+": ("L-", 1), "L-": ("L+", 1),
        "dsig0": ("dsig0", 1), "dsig1": ("dsig1", 1), "dsigm": ("dsigm", 1),
        "dtau": ("dtau^-1", 1)}


@dataclass
class RepMatrices:
    m: int
    N: int
    ell: int
    delta: int
    kappa: tuple
    lam: Fraction
    Lam: CycNum
    field: object
    gens: dict
    A: list
    gram: list
    mu: list
    undetermined: list = field(default_factory=list)
    spec: RepSpec | None = None
    limits: list = field(default_factory=list)
    inconsistent: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return 2 * self.N + 2

    def basis(self) -> list[str]:
        return [f"v{k}+" for k in range(self.N + 1)] + [f"v{k}-" for k in range(self.N + 1)]

    def matrix(self, name: str) -> CycMatrix:
        return self.gens[name]

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": self.basis(),
                "lambda": str(self.lam), "Lambda": self.Lam.to_json(),
                "spec": self.spec.to_json() if self.spec else None,
                "generators": {n: self.gens[n].to_json() for n in GENERATORS},
                "A": [a.to_json() for a in self.A], "gram": [h.to_json() for h in self.gram]}


def _diag(F, vals) -> CycMatrix:
    return CycMatrix.from_entries(F, len(vals), len(vals), {(i, i): v for i, v in enumerate(vals)})


def build_from_data(m: int, N: int, ell: int, delta: int, kappa, lam, Lam, strict: bool = True) -> RepMatrices:
    """Materialize the candidate module for explicit (lambda, Lambda).

    An O+/O- entry that neither the O0-commutation rule nor the ladder
    anticommutator determines is set to zero when the tau-covariance of O+/O-
    forbids it; otherwise DenominatorZero is raised (or, with strict=False,
    the entry is set to zero and recorded).
    """
    k0, k1, km = (_q(k) for k in kappa)
    if m % 2 and k1 != km:
        raise ValueError("odd m requires kappa1 = kappam")
    F = get_field(field_order(m))
    i = F.i
    zeta = root_of_unity(m, 1)
    lam = _q(lam)
    Lam = F.coerce(Lam)
    n = 2 * N + 2
    plus = list(range(N + 1))
    minus = [N + 1 + k for k in range(N + 1)]

    s0 = _diag(F, [F.coerce((-1) ** k * delta) for k in plus] + [F.coerce((-1) ** (k + 1) * delta) for k in plus])
    sm = CycMatrix.from_entries(F, n, n, {**{(minus[k], plus[k]): F.one for k in plus},
                                          **{(plus[k], minus[k]): F.one for k in plus}})
    tvals = [zeta ** tau_exponent(m, ell, k) for k in plus] + [zeta ** (-tau_exponent(m, ell, k)) for k in plus]
    tau = _diag(F, tvals)
    tau_inv = _diag(F, [t.inverse() for t in tvals])

    def kap(j):
        return k1 if (m % 2 or j % 2) else km

    Tp = CycMatrix.zero(F, n, n)
    Tm = CycMatrix.zero(F, n, n)
    tj = CycMatrix.identity(F, n)
    for j in range(1, m + 1):
        tj = tau @ tj
        sj = (tj @ sm).scale((-1) ** (j + 1))
        Tp = Tp + sj.scale(-(i * kap(j)) * zeta ** j)
        Tm = Tm + sj.scale(i * kap(j) * zeta ** (-j))
    T0 = s0.scale(i * k0)
    TT = Tp @ Tm

    mu = [lam - k for k in plus] + [k - lam for k in plus]
    A = []
    for k in range(1, N + 1):
        a = lam - k + HALF
        f1 = a * a + (Lam - i * ((-1) ** k * k0 * delta)) ** 2
        f2 = F.coerce(a * a) - TT.entry(k - 1, k - 1)
        A.append(-(f1 * f2))
    gram = [F.one]
    for a in A:
        gram.append(gram[-1] * a)

    Lp_e, Lm_e = {}, {}
    for k in plus:
        if k < N:
            Lm_e[(k + 1, k)] = F.one
            Lp_e[(minus[k + 1], minus[k])] = -F.one
        if k > 0:
            Lp_e[(k - 1, k)] = A[k - 1]
            Lm_e[(minus[k - 1], minus[k])] = -A[k - 1]
    Lp = CycMatrix.from_entries(F, n, n, Lp_e)
    Lm = CycMatrix.from_entries(F, n, n, Lm_e)

    O123 = CycMatrix.scalar(F, n, Lam)
    Rp = (Tp.scale(2 * Lam)) + (T0 @ Tp - Tp @ T0)
    Rm = (Tm.scale(2 * Lam)) - (T0 @ Tm - Tm @ T0)
    undetermined = []
    inconsistent = []

    def solve(R, Lad, shift, name, phase):
        out = {}
        for a in range(n):
            for b in range(n):
                c1 = mu[a] - mu[b] - shift
                c2 = mu[a] + mu[b]
                r = R.entry(a, b)
                l = Lad.entry(a, b)
                if c1 != 0:
                    v = r / c1
                elif not r.is_zero():
                    # the O0-commutation rule reads 0 = r: no module carries this data
                    inconsistent.append((name, a, b))
                    continue
                elif c2 != 0:
                    v = l * 2 / c2
                elif (tvals[b] * phase - tvals[a]).is_zero():
                    if strict:
                        raise DenominatorZero(f"{name} entry ({a},{b}) undetermined (lambda = {lam})")
                    undetermined.append((name, a, b))
                    continue
                else:
                    continue
                if not v.is_zero():
                    out[(a, b)] = v
        return CycMatrix.from_entries(F, n, n, out)

    # O+ raises the O0-eigenvalue and satisfies tau O+ = zeta^-2 O+ tau
    Op = solve(Rp, Lp, 1, "O+", zeta ** -2)
    Om = solve(Rm, Lm, -1, "O-", zeta ** 2)
    O0 = _diag(F, [F.coerce(x) for x in mu])
    gens = {"O0": O0, "O+": Op, "O-": Om, "O123": O123, "T0": T0, "T+": Tp, "T-": Tm,
            "L+": Lp, "L-": Lm, "dsig0": s0, "dsig1": tau @ sm, "dsigm": sm, "dtau": tau,
            "dtau^-1": tau_inv}
    rep = RepMatrices(m, N, ell, delta, (k0, k1, km), lam, Lam, F, gens, A, gram, mu, undetermined)
    rep.inconsistent = inconsistent
    return rep


def build_rep(spec: RepSpec, strict: bool = True, limits: bool = False) -> RepMatrices:
    """Build the module of spec.

    With limits=True an O+/O- entry sitting on a vanishing denominator is
    replaced by its limit along the kappa-family of spec (see
    resolve_limits); the substitution is recorded in rep.limits.
    """
    lam, Lam = resolve_lambda_Lambda(spec)
    rep = build_from_data(spec.m, spec.N, spec.ell, spec.delta, spec.kappa, lam, Lam,
                          strict=strict and not limits)
    rep.spec = spec
    if limits and rep.undetermined:
        resolve_limits(rep)
    return rep


def _family_direction(spec: RepSpec):
    """A kappa direction along which lambda moves."""
    lam = _lambda_affine(spec)
    dirs = [(1, 0, 0), (0, 1, 1)] if spec.parity == "odd" else [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for d in dirs:
        if sum(c * x for c, x in zip(lam[1:], d)):
            return d
    return None


def resolve_limits(rep: RepMatrices, step: Fraction = Fraction(1, 1000)) -> None:
    """Fill undetermined O+/O- entries by continuity in kappa.

    Along a line kappa + t*d through the family, the entry equals R(t)/c(t)
    with R quadratic, c linear and R(0) = c(0) = 0, so it is affine in t and
    its value at t = 0 is the mean of the values at t = +-step.
    """
    spec = rep.spec
    d = _family_direction(spec)
    if d is None:
        return
    near = []
    for t in (step, -step):
        kap = tuple(k + t * x for k, x in zip(spec.kappa, d))
        near.append(build_rep(with_kappa(spec, kap), strict=False))
    F = rep.field
    fixed = {}
    for name, a, b in rep.undetermined:
        if any((name, a, b) in r.undetermined for r in near):
            return
        v = (near[0].gens[name].entry(a, b) + near[1].gens[name].entry(a, b)) * F.coerce(HALF)
        fixed.setdefault(name, {})[(a, b)] = v
    for name, entries in fixed.items():
        M = rep.gens[name]
        E = {(i, j): M.entry(i, j) for i in range(rep.dim) for j in range(rep.dim)}
        E.update(entries)
        rep.gens[name] = CycMatrix.from_entries(F, rep.dim, rep.dim, {k: v for k, v in E.items() if not v.is_zero()})
        rep.limits += [{"generator": name, "entry": [a, b], "value": v.to_json()} for (a, b), v in entries.items()]
    # L+- = {O0, O+-}/2 is unaffected: these entries sit where mu_a + mu_b = 0
    rep.undetermined = []


# ------------------------------------------------------ relation checks

def relation_list(rep: RepMatrices) -> list[tuple[str, CycMatrix, CycMatrix]]:
    g = rep.gens
    F, n, m = rep.field, rep.dim, rep.m
    z = root_of_unity(m, 1)
    I = CycMatrix.identity(F, n)
    O0, Op, Om, O123 = g["O0"], g["O+"], g["O-"], g["O123"]
    T0, Tp, Tm, Lp, Lm = g["T0"], g["T+"], g["T-"], g["L+"], g["L-"]
    s0, s1, sm, tau, taui = g["dsig0"], g["dsig1"], g["dsigm"], g["dtau"], g["dtau^-1"]

    def cm(a, b):
        return a @ b - b @ a

    def ac(a, b):
        return a @ b + b @ a

    def sq(a):
        return a @ a

    O0m, O0p = O0 - I.scale(HALF), O0 + I.scale(HALF)
    Ap, Am = O123 + T0, O123 - T0
    zero = CycMatrix.zero(F, n, n)
    rels = [
        ("[O0,O+] = O+ + {O123,T+} + [T0,T+]", cm(O0, Op), Op + ac(O123, Tp) + cm(T0, Tp)),
        ("[O0,O-] = -O- + {O123,T-} - [T0,T-]", cm(O0, Om), -Om + ac(O123, Tm) - cm(T0, Tm)),
        ("[O+,O-] = 2O0 - 2{O123,T0} + [T+,T-]", cm(Op, Om),
         O0.scale(2) - ac(O123, T0).scale(2) + cm(Tp, Tm)),
        ("O+O- = T+T- - (O0-1/2)^2 - (O123+T0)^2", Op @ Om, Tp @ Tm - sq(O0m) - sq(Ap)),
        ("O-O+ = T-T+ - (O0+1/2)^2 - (O123-T0)^2", Om @ Op, Tm @ Tp - sq(O0p) - sq(Am)),
        ("L+ = {O0,O+}/2", Lp, ac(O0, Op).scale(HALF)),
        ("L- = {O0,O-}/2", Lm, ac(O0, Om).scale(HALF)),
        ("[O0,L+] = L+", cm(O0, Lp), Lp),
        ("[O0,L-] = -L-", cm(O0, Lm), -Lm),
        ("L+L- = -((O0-1/2)^2 + (O123+T0)^2)((O0-1/2)^2 - T+T-)", Lp @ Lm,
         -((sq(O0m) + sq(Ap)) @ (sq(O0m) - Tp @ Tm))),
        ("L-L+ = -((O0+1/2)^2 + (O123-T0)^2)((O0+1/2)^2 - T-T+)", Lm @ Lp,
         -((sq(O0p) + sq(Am)) @ (sq(O0p) - Tm @ Tp))),
        ("[O0,T0] = 0", cm(O0, T0), zero),
        ("{O0,T+} = 0", ac(O0, Tp), zero),
        ("{O0,T-} = 0", ac(O0, Tm), zero),
        ("T0 O+ = -O+ T0", T0 @ Op, -(Op @ T0)),
        ("T0 O- = -O- T0", T0 @ Om, -(Om @ T0)),
        ("T0 T+ = -T+ T0", T0 @ Tp, -(Tp @ T0)),
        ("T0 T- = -T- T0", T0 @ Tm, -(Tm @ T0)),
        ("T+ O- = -O+ T-", Tp @ Om, -(Op @ Tm)),
        ("T- O+ = -O- T+", Tm @ Op, -(Om @ Tp)),
        ("ds0 O0 = O0 ds0", s0 @ O0, O0 @ s0),
        ("ds1 O0 = -O0 ds1", s1 @ O0, -(O0 @ s1)),
        ("dsm O0 = -O0 dsm", sm @ O0, -(O0 @ sm)),
        ("ds0 O+ = -O+ ds0", s0 @ Op, -(Op @ s0)),
        ("ds1 O+ = z^2 O- ds1", s1 @ Op, (Om @ s1).scale(z ** 2)),
        ("dsm O+ = O- dsm", sm @ Op, Om @ sm),
        ("ds0 O- = -O- ds0", s0 @ Om, -(Om @ s0)),
        ("ds1 O- = z^-2 O+ ds1", s1 @ Om, (Op @ s1).scale(z ** -2)),
        ("dsm O- = O+ dsm", sm @ Om, Op @ sm),
        ("ds0 L+ = -L+ ds0", s0 @ Lp, -(Lp @ s0)),
        ("ds1 L+ = -z^2 L- ds1", s1 @ Lp, (Lm @ s1).scale(-(z ** 2))),
        ("dsm L+ = -L- dsm", sm @ Lp, -(Lm @ sm)),
        ("tau L+ = z^-2 L+ tau", tau @ Lp, (Lp @ tau).scale(z ** -2)),
        ("tau L- = z^2 L- tau", tau @ Lm, (Lm @ tau).scale(z ** 2)),
        ("T+ L- = L+ T-", Tp @ Lm, Lp @ Tm),
        ("T- L+ = L- T+", Tm @ Lp, Lm @ Tp),
        ("ds0^2 = 1", sq(s0), I),
        ("ds1^2 = 1", sq(s1), I),
        ("dsm^2 = 1", sq(sm), I),
        ("(ds0 ds1)^2 = -1", sq(s0 @ s1), -I),
        ("(ds0 dsm)^2 = -1", sq(s0 @ sm), -I),
        (f"(ds1 dsm)^{m} = (-1)^{m + 1}", _power(s1 @ sm, m), I.scale((-1) ** (m + 1))),
        ("tau tau^-1 = 1", tau @ taui, I),
        ("T0 = i kappa0 ds0", T0, s0.scale(F.i * rep.kappa[0])),
    ]
    for name in ("O0", "O+", "O-", "T0", "T+", "T-", "dsig0", "dsig1", "dsigm"):
        rels.append((f"[O123,{name}] = 0", cm(O123, g[name]), zero))
    return rels


def _power(M: CycMatrix, k: int) -> CycMatrix:
    out = CycMatrix.identity(M.field, M.rows)
    for _ in range(k):
        out = M @ out
    return out


def check_relations(rep: RepMatrices) -> list[dict]:
    return [{"relation": name, "status": "pass" if lhs == rhs else "fail"}
            for name, lhs, rhs in relation_list(rep)]


def commutant_dimension_fast(field, mats) -> int:
    """Commutant dimension; a modular image can only overestimate, so a value 1 is final."""
    n = mats[0].rows
    try:
        img = ModularImage(field)
        ident = flint.nmod_mat(n, n, [int(i == j) for i in range(n) for j in range(n)], img.p)
        blocks = []
        for M in mats:
            Mp = img.matrix(M)
            blocks.append(_nmod_kron(ident, Mp.transpose()) - _nmod_kron(Mp, ident))
        rows = []
        for B in blocks:
            rows.extend([[int(B[r, c]) for c in range(B.ncols())] for r in range(B.nrows())])
        d = n * n - flint.nmod_mat(rows, img.p).rank()
        if d == 1:
            return 1
    except ZeroDivisionError:
        pass
    return commutant_dimension(field, mats)


def _nmod_kron(A, B):
    p = A.modulus()
    ra, ca, rb, cb = A.nrows(), A.ncols(), B.nrows(), B.ncols()
    out = flint.nmod_mat(ra * rb, ca * cb, p)
    for i in range(ra):
        for j in range(ca):
            a = A[i, j]
            if int(a) == 0:
                continue
            for k in range(rb):
                for l in range(cb):
                    b = B[k, l]
                    if int(b):
                        out[i * rb + k, j * cb + l] = a * b
    return out


class _Echelon:
    """Incremental row echelon form over Q(zeta) for membership tests."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[tuple[int, list]] = []

    def add(self, v: list) -> bool:
        v = list(v)
        for piv, row in self.rows:
            c = v[piv]
            if not c.is_zero():
                v = [a - c * b for a, b in zip(v, row)]
        for j, c in enumerate(v):
            if not c.is_zero():
                inv = c.inverse()
                self.rows.append((j, [a * inv for a in v]))
                return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)


def cyclic_submodule_dim(rep: RepMatrices, index: int) -> int:
    """Dimension of the submodule generated by the basis vector with this index."""
    F = rep.field
    n = rep.dim
    mats = [[[rep.gens[g].entry(i, j) for j in range(n)] for i in range(n)] for g in GENERATORS]
    ech = _Echelon(n)
    start = [F.one if j == index else F.zero for j in range(n)]
    ech.add(start)
    frontier = [start]
    while frontier and ech.dim < n:
        new = []
        for v in frontier:
            support = [j for j in range(n) if not v[j].is_zero()]
            for M in mats:
                w = [sum((M[i][j] * v[j] for j in support), F.zero) for i in range(n)]
                if ech.add(w):
                    new.append(w)
        frontier = new
    return ech.dim


def generated_algebra_dim(rep: RepMatrices) -> int:
    """Burnside dimension of the algebra generated by the generator matrices.

    The modular image can only lose rank, so reaching n^2 there is final; a
    basis vector generating a proper submodule settles reducibility without
    the exact word exploration.
    """
    n = rep.dim
    mats = [rep.gens[g] for g in GENERATORS]
    img = ModularImage(rep.field)
    ident = flint.nmod_mat(n, n, [int(i == j) for i in range(n) for j in range(n)], img.p)
    d = _word_span_dim_mod([img.matrix(M) for M in mats], ident, img.p)
    if d == n * n:
        return d
    if any(cyclic_submodule_dim(rep, idx) < n for idx in range(n)):
        return d
    return algebra_dimension(rep.field, mats)


@dataclass
class Certificate:
    relations_ok: bool
    failed_relations: list
    commutant_dim: int
    algebra_dim: int
    irreducible: bool
    A_signs: list
    A_positive: bool
    star_ok: bool
    failed_star: list
    undetermined: list

    @property
    def is_representation(self) -> bool:
        return self.relations_ok and not self.undetermined

    @property
    def unitary(self) -> bool:
        return self.is_representation and self.A_positive and self.star_ok

    def to_json(self) -> dict:
        return {"is_representation": self.is_representation, "relations_ok": self.relations_ok,
                "failed_relations": self.failed_relations, "commutant_dim": self.commutant_dim,
                "algebra_dim": self.algebra_dim, "irreducible": self.irreducible,
                "A_signs": self.A_signs, "A_positive": self.A_positive, "star_ok": self.star_ok,
                "failed_star": self.failed_star, "unitary": self.unitary}


def star_check(rep: RepMatrices) -> list[str]:
    """Generators X with M(X)^dagger G != G M(X*), G = diag(h, h)."""
    G = _diag(rep.field, rep.gram + rep.gram)
    bad = []
    for name in GENERATORS:
        target, sign = STAR[name]
        lhs = rep.gens[name].dagger() @ G
        rhs = (G @ rep.gens[target]).scale(sign)
        if not lhs == rhs:
            bad.append(name)
    return bad


def certify(rep: RepMatrices, algebra: bool = True) -> Certificate:
    rels = check_relations(rep)
    failed = [r["relation"] for r in rels if r["status"] == "fail"]
    mats = [rep.gens[n] for n in GENERATORS]
    cdim = commutant_dimension_fast(rep.field, mats)
    adim = generated_algebra_dim(rep) if algebra else -1
    signs = []
    for a in rep.A:
        try:
            signs.append(sign_of_real(a))
        except ValueError:
            signs.append(None)
    bad_star = star_check(rep)
    ok = not failed
    # a reducible but indecomposable module still has a scalar commutant,
    # so the generated algebra (Burnside) is the deciding test
    irreducible = ok and not rep.undetermined and not rep.inconsistent and cdim == 1 and (adim == rep.dim ** 2 or not algebra)
    return Certificate(ok, failed, cdim, adim, irreducible, signs,
                       all(s == 1 for s in signs), not bad_star, bad_star, list(rep.undetermined))


# ------------------------------------------------ admissibility tables
#
# Each row lists excluded values for a kappa-quantity and a sufficient
# unitarity condition.  Rows are keyed by (parity, case, lambda branch, group)
# with group "a" = {(Lambda_1, +1), (Lambda_2, -1)} and "b" = the other pair.
# Even-m congruences of the form c - k - l are evaluated at l + 2, which is
# the labelling under which they agree with the summed ladder eigenvalues.

@dataclass
class _Ctx:
    m: int
    N: int
    ell: int
    lam: Fraction
    k0: Fraction
    k1: Fraction
    km: Fraction

    @property
    def p(self) -> int:
        return self.m // 2

    @property
    def ks(self):
        return range(1, self.N + 1)

    @property
    def odd(self):
        return [k for k in self.ks if k % 2]

    def cong(self, x: int, r: int) -> bool:
        return (x - r) % self.m == 0

    def shifted(self, c: int, k: int) -> int:
        """The even-table argument c - k - l."""
        return c - k - (self.ell + 2)

    def half_odd(self, k: int) -> bool:
        """2(k + l) = 1 mod m."""
        return self.cong(2 * (k + self.ell), 1)


def _min(vals):
    vals = list(vals)
    return min(vals) if vals else None


def _below(x, bound) -> bool:
    return bound is None or x < bound


def _kappa0_odd_pair(c: _Ctx):
    return [("kappa0", Fraction(k, 2), f"k/2, k={k}") for k in c.odd] + \
           [("kappa0", c.lam + HALF - Fraction(k, 2), f"lambda+1/2-k/2, k={k}") for k in c.odd]


def _kappa0_band(c: _Ctx, lam) -> bool:
    return c.k0 < HALF or c.k0 > lam


def _odd_rows():
    def I1a(c):
        return [], True

    def I1b(c):
        return _kappa0_odd_pair(c), _kappa0_band(c, c.lam)

    def I2_kappa1(c):
        out = [("kappa1", Fraction(c.N - k + 1, 2 * c.m), f"(N-k+1)/2m, k={k}") for k in c.ks if c.half_odd(k)]
        out += [("kappa1", Fraction(c.N - j + 1, c.m), f"(N-j+1)/m, j={j}") for j in c.ks if not c.half_odd(j)]
        return out

    def I2a(c):
        ex = [("kappa0", -c.lam - HALF + Fraction(k, 2), f"-lambda-1/2+k/2, k={k}") for k in c.odd]
        return ex + I2_kappa1(c), c.k1 < Fraction(1, 2 * c.m)

    def I2b(c):
        return _kappa0_odd_pair(c) + I2_kappa1(c), _kappa0_band(c, c.lam) and c.k1 < Fraction(1, 2 * c.m)

    def II_k1(c):
        return [("kappa1", Fraction(c.N + 1 - k, c.m), f"(N+1-k)/m, k={k}") for k in c.ks if c.half_odd(k)]

    def II_unit(c):
        return _below(c.k1, _min(Fraction(c.N + 1 - k, c.m) for k in c.ks if c.half_odd(k)))

    def IIa(c):
        return II_k1(c), II_unit(c)

    def IIb(c):
        return _kappa0_odd_pair(c) + II_k1(c), _kappa0_band(c, c.lam) and II_unit(c)

    def III_k1(c):
        return [("kappa1", abs(c.lam - k + HALF) / c.m, f"|lambda-k+1/2|/m, k={k}") for k in c.ks if c.half_odd(k)]

    def III_unit(c):
        return _below(c.k1, _min(abs(c.lam - k + HALF) / c.m for k in c.ks if c.half_odd(k)))

    def IIIa(c):
        ex = [("kappa0", Fraction(2 * k - c.N - 1, 2), f"(2k-N-1)/2, k={k}")
              for k in c.ks if 2 * k > c.N and not c.half_odd(k)]
        return ex + III_k1(c), III_unit(c)

    def IIIb(c):
        ex = [("kappa0", Fraction(k, 2), f"k/2, k={k}") for k in c.odd]
        ex += [("kappa0", Fraction(c.N - k + 1, 4), f"(N-k+1)/4, k={k}") for k in c.odd]
        ex += [("kappa0", Fraction(c.N + 1 - 2 * j, 2), f"(N+1-2j)/2, j={j}") for j in c.ks if not c.half_odd(j)]
        return ex + III_k1(c), (c.k0 < HALF or c.k0 > Fraction(c.N + 1, 2)) and III_unit(c)

    return {("I", 1, "a"): I1a, ("I", 1, "b"): I1b, ("I", 2, "a"): I2a, ("I", 2, "b"): I2b,
            ("II", 3, "a"): IIa, ("II", 3, "b"): IIb, ("III", 4, "a"): IIIa, ("III", 4, "b"): IIIb}


def _even_rows():
    def at(c, k, r, cst=2):
        return c.cong(c.shifted(cst, k), r)

    def off(c, j):
        return not at(c, j, 0) and not at(c, j, c.p)

    def I1a(c):
        return [], True

    def I1b(c):
        return _kappa0_odd_pair(c), _kappa0_band(c, c.lam)

    def I2_kappa(c):
        ex = []
        for k in c.ks:
            if at(c, k, 0):
                ex += [("kappa1", Fraction(c.N - k + 1, c.m), f"(N-k+1)/m, k={k}"),
                       ("kappam", Fraction(c.N - k + 1, c.m), f"(N-k+1)/m, k={k}")]
            if at(c, k, c.p):
                ex.append(("k1+km", Fraction(c.N - k + 1, c.m), f"(N-k+1)/m, k={k}"))
        ex += [("k1+km", Fraction(c.N - j + 1, c.p), f"(N-j+1)/p, j={j}") for j in c.ks if off(c, j)]
        return ex

    def I2a(c):
        ex = [("kappa0", -c.lam - HALF + Fraction(k, 2), f"-lambda-1/2+k/2, k={k}") for k in c.odd]
        return ex + I2_kappa(c), c.k1 + c.km < Fraction(1, c.p)

    def I2b(c):
        return (_kappa0_odd_pair(c) + I2_kappa(c),
                _kappa0_band(c, c.lam) and c.k1 + c.km < Fraction(1, c.p))

    def I3_km(c):
        return [("kappam", Fraction(c.N - k + 1, c.m), f"(N-k+1)/m, k={k}") for k in c.ks if at(c, k, c.p)]

    def I3_unit(c):
        return _below(c.km, _min(Fraction(c.N - k + 1, c.m) for k in c.ks if at(c, k, c.p)))

    def I3a(c):
        return I3_km(c), I3_unit(c)

    def I3b(c):
        return _kappa0_odd_pair(c) + I3_km(c), _kappa0_band(c, c.lam) and I3_unit(c)

    def I4_kappa(c):
        ex = [("kappa1", Fraction(c.N - k + 1, c.m), f"(N-k+1)/m, k={k}") for k in c.ks if at(c, k, c.p)]
        ex += [("k1-km", Fraction(c.N - k + 1, c.m), f"(N-k+1)/m, k={k}") for k in c.ks if at(c, k, 0)]
        ex += [("k1-km", Fraction(c.N - j + 1, c.p), f"(N-j+1)/p, j={j}") for j in c.ks if off(c, j)]
        return ex

    def I4_unit(c):
        return (c.k1 - c.km < Fraction(1, c.p)
                and _below(c.k1, _min(Fraction(c.N - k + 1, c.m) for k in c.ks if at(c, k, c.p))))

    def I4a(c):
        return I4_kappa(c), I4_unit(c)

    def I4b(c):
        return _kappa0_odd_pair(c) + I4_kappa(c), _kappa0_band(c, c.lam) and I4_unit(c)

    def II_kappa(c):
        ex = [("k1+km", Fraction(c.N - k + 1, c.p), f"(N-k+1)/p, k={k}") for k in c.ks if at(c, k, c.p)]
        ex += [("|k1-km|", Fraction(c.N - k + 1, c.p), f"(N-k+1)/p, k={k}") for k in c.ks if at(c, k, 0)]
        return ex

    def II_unit(c):
        return (_below(c.k1 + c.km, _min(Fraction(c.N - k + 1, c.m) for k in c.ks if at(c, k, c.p)))
                and _below(abs(c.k1 - c.km), _min(Fraction(c.N - k + 1, c.p) for k in c.ks if at(c, k, 0))))

    def IIa(c):
        return II_kappa(c), II_unit(c)

    def IIb(c):
        return (_kappa0_odd_pair(c) + II_kappa(c),
                (c.k0 < HALF or c.k0 > c.N - HALF) and II_unit(c))

    def III_kappa(c):
        ex = [("k1+km", abs(c.lam - k + HALF) / c.p, f"|lambda-k+1/2|/p, k={k}") for k in c.ks if at(c, k, c.p)]
        ex += [("|k1-km|", abs(c.lam - k + HALF) / c.p, f"|lambda-k+1/2|/p, k={k}") for k in c.ks if at(c, k, 0)]
        return ex

    def III_unit(c):
        return (_below(c.k1 + c.km, _min(abs(c.lam - k + HALF) / c.p for k in c.ks if at(c, k, c.p)))
                and _below(abs(c.k1 - c.km), _min(abs(c.lam - k + HALF) / c.p for k in c.ks if at(c, k, 0))))

    def IIIa(c):
        ex = [("kappa0", Fraction(c.N - 2 * k + 1, 2), f"(N-2k+1)/2, k={k}") for k in c.ks if off(c, k)]
        return ex + III_kappa(c), III_unit(c)

    def IIIb(c):
        ex = [("kappa0", Fraction(k, 2), f"k/2, k={k}") for k in c.odd]
        ex += [("kappa0", Fraction(c.N - k + 1, 4), f"(N-k+1)/4, k={k}") for k in c.odd]
        ex += [("kappa0", Fraction(2 * j - c.N - 1, 2), f"(2j-N-1)/2, j={j}") for j in c.ks if off(c, j)]
        return ex + III_kappa(c), (c.k0 < HALF or c.k0 > Fraction(c.N + 1, 2)) and III_unit(c)

    return {("I.i", 1, "a"): I1a, ("I.i", 1, "b"): I1b, ("I.i", 2, "a"): I2a, ("I.i", 2, "b"): I2b,
            ("I.ii", 3, "a"): I3a, ("I.ii", 3, "b"): I3b, ("I.ii", 4, "a"): I4a, ("I.ii", 4, "b"): I4b,
            ("II", 5, "a"): IIa, ("II", 5, "b"): IIb, ("III", 6, "a"): IIIa, ("III", 6, "b"): IIIb}


TABLES = {"odd": _odd_rows(), "even": _even_rows()}


def row_group(Lambda_branch: int, delta: int) -> str:
    return "a" if (Lambda_branch, delta) in ((1, 1), (2, -1)) else "b"


def _quantity(c: _Ctx, name: str) -> Fraction:
    return {"kappa0": c.k0, "kappa1": c.k1, "kappam": c.km, "k1+km": c.k1 + c.km,
            "k1-km": c.k1 - c.km, "|k1-km|": abs(c.k1 - c.km)}[name]


def table_row(spec: RepSpec):
    key = (spec.case, spec.lambda_branch, row_group(spec.Lambda_branch, spec.delta))
    return key, TABLES[spec.parity][key]


def excluded_values(spec: RepSpec) -> list[tuple[str, Fraction, str]]:
    """The excluded (quantity, value, label) triples of the matching table row."""
    lam = lambda_value(spec)
    k0, k1, km = spec.kappa
    _, row = table_row(spec)
    ex, _ = row(_Ctx(spec.m, spec.N, spec.ell, lam, k0, k1, km))
    return ex


@dataclass
class AdmissibilityVerdict:
    irreducible: bool
    unitary_sufficient: bool
    violated_constraints: list
    A_values: list
    row: tuple
    direct_irreducible: bool | None = None
    denominator_zero: bool = False

    def to_json(self) -> dict:
        return {"row": list(self.row), "irreducible": self.irreducible,
                "unitary_sufficient": self.unitary_sufficient,
                "violated_constraints": self.violated_constraints,
                "A": [a.to_json() for a in self.A_values],
                "direct_irreducible": self.direct_irreducible,
                "denominator_zero": self.denominator_zero}


def check_admissibility(spec: RepSpec) -> AdmissibilityVerdict:
    """Table verdict for spec, together with the direct A(k) computation."""
    check_case(spec)
    lam = lambda_value(spec)
    k0, k1, km = spec.kappa
    key, row = table_row(spec)
    c = _Ctx(spec.m, spec.N, spec.ell, lam, k0, k1, km)
    ex, unit = row(c)
    violated = [f"{q} = {v} ({label})" for q, v, label in ex if _quantity(c, q) == v]
    rep = build_rep(spec, limits=True)
    A_vals = rep.A
    dz = bool(rep.limits or rep.undetermined)
    direct = all(not a.is_zero() for a in A_vals) and not rep.undetermined and not rep.inconsistent
    return AdmissibilityVerdict(not violated, bool(unit) and not violated, violated, A_vals,
                                key, direct, dz)


# ---------------------------------------------------------- scanning

def compatible_specs(m: int, N_max: int, kappa) -> list[RepSpec]:
    """All (N, l, delta, case, branches) cells whose precondition holds."""
    parity = "even" if m % 2 == 0 else "odd"
    out = []
    for N in range(N_max + 1):
        for ell in range(m):
            for case, branches in LAMBDA_BRANCHES[parity].items():
                for lb in branches:
                    for delta in (1, -1):
                        for Lb in (1, 2):
                            spec = RepSpec(m, N, ell, delta, case, lb, Lb, kappa)
                            try:
                                check_case(spec)
                            except (IncompatibleCase, NoRepresentation):
                                continue
                            out.append(spec)
    return out


def with_kappa(spec: RepSpec, kappa) -> RepSpec:
    return RepSpec(spec.m, spec.N, spec.ell, spec.delta, spec.case, spec.lambda_branch,
                   spec.Lambda_branch, kappa)


def oracle_verdict(spec: RepSpec, algebra: bool = True) -> dict:
    """Direct verdict; vanishing O+- denominators are resolved by limits and then certified."""
    rep = build_rep(spec, limits=True)
    cert = certify(rep, algebra=algebra)
    out = cert.to_json()
    out["built"] = True
    out["limits"] = rep.limits
    out["inconsistent"] = [list(x) for x in rep.inconsistent]
    out["irreducible"] = cert.irreducible
    return out


def evaluate_cell(spec: RepSpec) -> dict:
    verdict = check_admissibility(spec)
    oracle = oracle_verdict(spec)
    agree = verdict.irreducible == oracle["irreducible"]
    unitary_ok = (not verdict.unitary_sufficient) or (oracle.get("unitary", False))
    return {"spec": spec.to_json(), "row": list(verdict.row), "table_irreducible": verdict.irreducible,
            "violated": verdict.violated_constraints, "oracle": oracle,
            "agree": agree, "unitary_sufficient": verdict.unitary_sufficient,
            "unitary_consistent": unitary_ok}


def thread_count() -> int:
    try:
        n = int(os.environ.get("DUNKL_SYM_THREADS", "0"))
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def _evaluate_labelled(job) -> dict:
    label, spec = job
    out = evaluate_cell(spec)
    out["point"] = label
    return out


def _run_jobs(fn, jobs) -> list:
    workers = min(thread_count(), len(jobs))
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=4))


def sample_kappas(m: int, count: int, seed: int = 0, max_den: int = 7) -> list[tuple]:
    """Deterministic positive rational triples; kappa1 = kappam for odd m."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k0, k1, km = (Fraction(rng.randint(1, 2 * max_den), rng.randint(2, max_den)) for _ in range(3))
        if m % 2:
            km = k1
        if (k0, k1, km) not in out:
            out.append((k0, k1, km))
    return out


def cell_points(spec: RepSpec, generic, excluded: bool = True, critical: bool = False) -> list[tuple[str, tuple]]:
    """Generic kappa points plus the table-excluded (and optionally critical) points of the cell."""
    pts = [("generic", tuple(_q(x) for x in k)) for k in generic]
    anchor = with_kappa(spec, pts[0][1])
    if excluded:
        pts += [("excluded: " + lab, k) for lab, k in excluded_points(anchor)]
    if critical:
        pts += [("critical: " + lab, k) for lab, k in critical_points(anchor)]
    seen, out = set(), []
    for lab, k in pts:
        if k not in seen:
            seen.add(k)
            out.append((lab, k))
    return out


def classify(m: int, N_max: int, generic, excluded: bool = True, critical: bool = False) -> list[dict]:
    """Table versus oracle on every compatible cell, one record per (cell, kappa point)."""
    generic = [tuple(_q(x) for x in k) for k in generic]
    jobs = []
    for spec in compatible_specs(m, N_max, generic[0]):
        for lab, k in cell_points(spec, generic, excluded, critical):
            jobs.append((lab, with_kappa(spec, k)))
    return _run_jobs(_evaluate_labelled, jobs)


def classify_summary(records: list[dict]) -> dict:
    bad = [r for r in records if not r["agree"]]
    unit_bad = [r for r in records if not r["unitary_consistent"]]
    cells = {json.dumps(r["spec"] | {"kappa": None}, sort_keys=True) for r in records}
    return {"cells": len(cells), "evaluations": len(records), "agree": len(records) - len(bad),
            "disagree": len(bad), "unitary_inconsistent": len(unit_bad),
            "excluded_points": sum(r["point"].startswith("excluded") for r in records)}


def classify_scan(m: int, N_max: int, kappa_grid, cells=None) -> list[dict]:
    """Evaluate every compatible cell on every kappa point of the grid."""
    grid = [tuple(_q(x) for x in k) for k in kappa_grid]
    if not grid:
        return []
    base = cells if cells is not None else compatible_specs(m, N_max, grid[0])
    jobs = [with_kappa(s, k) for s in base for k in grid if not (m % 2 and k[1] != k[2])]
    return _run_jobs(evaluate_cell, jobs)


# ------------------------------------------- kappa points for the oracle
#
# Quantities below are affine in (kappa0, kappa1, kappam), stored as
# (const, c0, c1, cm).

def _aff(c=0, a0=0, a1=0, am=0):
    return (Fraction(c), Fraction(a0), Fraction(a1), Fraction(am))


def _add(x, y, s=1):
    return tuple(a + s * b for a, b in zip(x, y))


def _lambda_affine(spec: RepSpec):
    N, d, m = spec.N, spec.delta, spec.m
    top = _aff(N + HALF)
    if spec.parity == "odd":
        table = {1: _add(top, _aff(0, 0, m, 0)), 2: _add(top, _aff(0, 0, -m, 0)), 3: top}
    else:
        p = spec.p
        table = {1: _add(top, _aff(0, 0, p, p)), 2: _add(top, _aff(0, 0, -p, -p)),
                 3: _add(top, _aff(0, 0, p, -p)), 4: _add(top, _aff(0, 0, -p, p)), 5: top}
    if spec.case == "III":
        sign = -1 if spec.Lambda_branch == 1 else 1
        return _aff(Fraction(N, 2), sign * d)
    return table[spec.lambda_branch]


def _ladder_root(spec: RepSpec, k: int):
    """Affine g with g^2 the T+T- eigenvalue on v_{k-1}^+."""
    m = spec.m
    if spec.parity == "odd":
        return _aff(0, 0, m, 0) if (2 * (k - 1 + spec.ell) + 1) % m == 0 else _aff()
    p = spec.p
    r = ladder_argument(m, spec.ell, k - 1) % m
    if r == p:
        return _aff(0, 0, p, p)
    if r == 0:
        return _aff(0, 0, p, -p)
    return _aff()


def critical_equations(spec: RepSpec) -> list[tuple[str, tuple]]:
    """Affine equations whose zero sets contain every A(k) = 0 and O+- degeneracy."""
    lam = _lambda_affine(spec)
    s = _aff(0, spec.delta)
    if spec.Lambda_branch == 1:
        w = _add(_add(lam, _aff(HALF)), s)
    else:
        w = _add(_aff(), _add(_add(lam, _aff(HALF)), s, -1), -1)
    out = []
    for k in range(1, spec.N + 1):
        u = _add(lam, _aff(-k + HALF))
        v = _add(w, s, -((-1) ** k))
        g = _ladder_root(spec, k)
        out += [(f"A1({k})+", _add(u, v, -1)), (f"A1({k})-", _add(u, v)),
                (f"A2({k})+", _add(u, g, -1)), (f"A2({k})-", _add(u, g))]
    for k in range(spec.N + 1):
        out += [(f"lambda={k}+1/2", _add(lam, _aff(-k - HALF))),
                (f"lambda={k}-1/2", _add(lam, _aff(-k + HALF)))]
    return out


def critical_labels(spec: RepSpec) -> list[str]:
    """Labels of the critical equations that vanish at spec.kappa."""
    k0, k1, km = spec.kappa
    return [label for label, (c, a0, a1, am) in critical_equations(spec)
            if c + a0 * k0 + a1 * k1 + am * km == 0]


def _solve_along(eq, kappa, odd: bool):
    c, a0, a1, am = eq
    k0, k1, km = kappa
    if odd:
        a1, am = a1 + am, Fraction(0)
    if a0:
        return ((-(c + a1 * k1 + am * km)) / a0, k1, km)
    if a1:
        v = -(c + a0 * k0 + am * km) / a1
        return (k0, v, v if odd else km)
    if am:
        return (k0, k1, -(c + a0 * k0 + a1 * k1) / am)
    return None


def critical_points(spec: RepSpec) -> list[tuple[str, tuple]]:
    """Positive kappa points on the critical hyperplanes through spec.kappa's other coordinates."""
    odd = spec.parity == "odd"
    seen, out = set(), []
    for label, eq in critical_equations(spec):
        pt = _solve_along(eq, spec.kappa, odd)
        if pt is None or any(x <= 0 for x in pt) or pt in seen:
            continue
        seen.add(pt)
        out.append((label, pt))
    return out


def excluded_points(spec: RepSpec) -> list[tuple[str, tuple]]:
    """Positive kappa points realizing each excluded value of the table row."""
    odd = spec.parity == "odd"
    k0, k1, km = spec.kappa
    seen, out = set(), []
    for q, v, label in excluded_values(spec):
        if q == "kappa0":
            pt = (v, k1, km)
        elif q in ("kappa1", "kappam") and odd:
            pt = (k0, v, v)
        elif q == "kappa1":
            pt = (k0, v, km)
        elif q == "kappam":
            pt = (k0, k1, v)
        elif q == "k1+km":
            pt = (k0, v / 2, v / 2) if odd else (k0, v - km, km)
        elif q in ("k1-km", "|k1-km|") and not odd:
            pt = (k0, km + v, km)
        else:
            continue
        if any(x <= 0 for x in pt) or pt in seen:
            continue
        # the value may depend on kappa itself (through lambda); keep genuine hits only
        if any(q2 == q and v2 == v for q2, v2, _ in excluded_values(with_kappa(spec, pt))):
            seen.add(pt)
            out.append((f"{q} = {v} ({label})", pt))
    return out


# ------------------------------------------------ even-m closed forms
#
# The T+-, T+T-, A(k) and O+- actions for even m in terms of G_kappa and
# H_kappa. Arguments of the form c - k - l use c = shift (corrected: -1)
# and the A(k) ladder term uses H(c2 - k - l) (corrected: c2 = 0); the
# G-term of the O+- actions carries o_factor (corrected: 1).

PRINTED_FORMS = {"shift": 1, "ladder_shift": 2, "o_factor": 2}
CORRECTED_FORMS = {"shift": -1, "ladder_shift": 0, "o_factor": 1}


def even_closed_form_matrices(rep: RepMatrices, shift: int = -1, ladder_shift: int = 0,
                              o_factor: int = 1) -> dict:
    m, N, ell, kap = rep.m, rep.N, rep.ell, rep.kappa
    if m % 2:
        raise ValueError("closed forms are for even m")
    F = rep.field
    i = F.i
    lam, Lam, k0, d = rep.lam, rep.Lam, kap[0], rep.delta
    n = rep.dim
    plus = list(range(N + 1))
    minus = [N + 1 + k for k in plus]

    def G(x):
        return G_kappa(m, kap, x)

    def H(x):
        return H_kappa(m, kap, x)

    Tp, Tm, TmTp, TpTm = {}, {}, {}, {}
    for k in plus:
        a = shift - k - ell
        Tp[(plus[k], minus[k])] = -i * G(a)
        Tp[(minus[k], plus[k])] = -i * G(k + ell)
        Tm[(plus[k], minus[k])] = i * G(k + ell)
        Tm[(minus[k], plus[k])] = i * G(a)
        TmTp[(plus[k], plus[k])] = F.coerce(H(k + ell))
        TmTp[(minus[k], minus[k])] = F.coerce(H(a))
        TpTm[(plus[k], plus[k])] = F.coerce(H(a))
        TpTm[(minus[k], minus[k])] = F.coerce(H(k + ell))
    A = []
    for k in range(1, N + 1):
        u = lam - k + HALF
        A.append(-((u * u + (Lam - i * ((-1) ** k * k0 * d)) ** 2) * F.coerce(u * u - H(ladder_shift - k - ell))))
    Op, Om = {}, {}

    def put(D, key, val):
        D[key] = D.get(key, F.zero) + val

    for k in plus:
        a = shift - k - ell
        # O- v_k^+
        den = lam - k - HALF
        if den:
            if k < N:
                put(Om, (plus[k + 1], plus[k]), F.coerce(1 / den))
            put(Om, (minus[k], plus[k]), -(o_factor * i * (Lam - i * ((-1) ** (k + 1) * k0 * d)) * G(a)) * F.coerce(1 / den))
        # O- v_k^-
        den = k - lam - HALF
        if den:
            if k > 0:
                put(Om, (minus[k - 1], minus[k]), -A[k - 1] * F.coerce(1 / den))
            put(Om, (plus[k], minus[k]), -(o_factor * i * (Lam - i * ((-1) ** k * k0 * d)) * G(k + ell)) * F.coerce(1 / den))
        # O+ v_k^+
        den = lam - k + HALF
        if den:
            if k > 0:
                put(Op, (plus[k - 1], plus[k]), A[k - 1] * F.coerce(1 / den))
            put(Op, (minus[k], plus[k]), (o_factor * i * (Lam + i * ((-1) ** (k + 1) * k0 * d)) * G(k + ell)) * F.coerce(1 / den))
        # O+ v_k^-
        den = k - lam + HALF
        if den:
            if k < N:
                put(Op, (minus[k + 1], minus[k]), -F.one * F.coerce(1 / den))
            put(Op, (plus[k], minus[k]), (o_factor * i * (Lam + i * ((-1) ** k * k0 * d)) * G(a)) * F.coerce(1 / den))
    mk = lambda D: CycMatrix.from_entries(F, n, n, {k: v for k, v in D.items() if not v.is_zero()})
    return {"T+": mk(Tp), "T-": mk(Tm), "T-T+": mk(TmTp), "T+T-": mk(TpTm), "A": A, "O+": mk(Op), "O-": mk(Om)}


def even_closed_form_check(rep: RepMatrices, **forms) -> dict:
    """Compare the closed forms with the group-summation matrices of rep; True per quantity."""
    cf = even_closed_form_matrices(rep, **forms)
    g = rep.gens
    direct = {"T+": g["T+"], "T-": g["T-"], "T-T+": g["T-"] @ g["T+"], "T+T-": g["T+"] @ g["T-"],
              "O+": g["O+"], "O-": g["O-"]}
    out = {name: cf[name] == M for name, M in direct.items()}
    # L+ L- on v_k^+ is A(k+1) (k < N); this pins A(k) to the group sums
    LL = g["L-"] @ g["L+"]
    out["A"] = all((cf["A"][k - 1] - LL.entry(k, k)).is_zero() for k in range(1, rep.N + 1))
    return out
