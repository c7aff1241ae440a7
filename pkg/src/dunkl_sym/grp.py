"""The two double covers of Z2 x D_2m, their irreducible representations,
and the map onto the realized group inside Cl(3) x C[W].

Elements are kept in the normal form z^a ds0^b tau^c dsm^d with
0 <= c < m. The rewriting rules used by ``mul`` follow from the
presentations:

* tau^m = z^t, where t = 0 only for the positive cover with m odd;
* dsm tau = tau^-1 dsm (both covers);
* dsm ds0 = z ds0 dsm, so ds0 commutes with tau;
* ds0^2 = dsm^2 = z^s, where s = 1 for the negative cover.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .linalg import CycMatrix
from .scalar import CycField, CycNum, field_order, get_field, root_of_unity


class RelationViolated(AssertionError):
    pass


@dataclass(frozen=True, order=True)
class GroupElement:
    a: int  # z
    b: int  # ds0
    c: int  # tau
    d: int  # dsm

    def word(self) -> str:
        parts = []
        if self.a:
            parts.append("z")
        if self.b:
            parts.append("s0")
        if self.c:
            parts.append("t" if self.c == 1 else f"t^{self.c}")
        if self.d:
            parts.append("sm")
        return "*".join(parts) or "1"

    def __str__(self):
        return self.word()


class CoverGroup:
    def __init__(self, m: int, sign: str = "plus"):
        if m < 2:
            raise ValueError("m must be at least 2")
        if sign not in ("plus", "minus"):
            raise ValueError("sign must be 'plus' or 'minus'")
        self.m = m
        self.sign = sign
        self.t = 0 if (sign == "plus" and m % 2) else 1
        self.s = 1 if sign == "minus" else 0
        self.field: CycField = get_field(field_order(m))

    def __repr__(self):
        return f"CoverGroup(m={self.m}, {self.sign})"

    @property
    def order(self) -> int:
        return 8 * self.m

    def _tau(self, a: int, k: int) -> tuple[int, int]:
        q, r = divmod(k, self.m)
        return (a + self.t * q) % 2, r

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        a = g.a + h.a
        # push dsm^d past ds0^b'
        if g.d and h.b:
            a += 1
        b = g.b + h.b
        if b == 2:
            a += self.s
            b = 0
        # dsm^d tau^c' = tau^(-c') dsm^d
        k = g.c + (-h.c if g.d else h.c)
        a, c = self._tau(a, k)
        d = g.d + h.d
        if d == 2:
            a += self.s
            d = 0
        return GroupElement(a % 2, b, c, d)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, 0, 0, 0)

    @property
    def z(self) -> GroupElement:
        return GroupElement(1, 0, 0, 0)

    @property
    def sig0(self) -> GroupElement:
        return GroupElement(0, 1, 0, 0)

    @property
    def sigm(self) -> GroupElement:
        return GroupElement(0, 0, 0, 1)

    @property
    def tau(self) -> GroupElement:
        return GroupElement(0, 0, 1 % self.m, 0)

    @property
    def sig1(self) -> GroupElement:
        # tau = ds1 dsm, so ds1 = tau dsm^-1
        return self.mul(self.tau, self.inverse(self.sigm))

    def generators(self) -> dict[str, GroupElement]:
        return {"z": self.z, "s0": self.sig0, "s1": self.sig1, "sm": self.sigm}

    def prod(self, *gs: GroupElement) -> GroupElement:
        out = self.identity
        for g in gs:
            out = self.mul(out, g)
        return out

    def power(self, g: GroupElement, k: int) -> GroupElement:
        if k < 0:
            return self.power(self.inverse(g), -k)
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def inverse(self, g: GroupElement) -> GroupElement:
        for h in self.elements:
            if self.mul(g, h) == self.identity:
                return h
        raise RuntimeError("no inverse")

    @cached_property
    def elements(self) -> list[GroupElement]:
        return [GroupElement(a, b, c, d) for a in (0, 1) for b in (0, 1)
                for c in range(self.m) for d in (0, 1)]

    def relations(self) -> dict[str, tuple[GroupElement, GroupElement]]:
        """Each presentation relation as (lhs, expected)."""
        m, z, one = self.m, self.z, self.identity
        s0, s1, sm = self.sig0, self.sig1, self.sigm
        sq = one if self.sign == "plus" else z
        mixed = z
        braid = one if (self.sign == "plus" and m % 2) else z
        return {
            "z^2": (self.power(z, 2), one),
            "s0^2": (self.power(s0, 2), sq),
            "s1^2": (self.power(s1, 2), sq),
            "sm^2": (self.power(sm, 2), sq),
            "(s0 s1)^2": (self.power(self.mul(s0, s1), 2), mixed),
            "(s0 sm)^2": (self.power(self.mul(s0, sm), 2), mixed),
            f"(s1 sm)^{m}": (self.power(self.mul(s1, sm), m), braid),
            "z central": (self.prod(z, s0, s1, sm), self.prod(s0, s1, sm, z)),
        }

    def check_relations(self) -> dict[str, bool]:
        return {k: a == b for k, (a, b) in self.relations().items()}

    def check_group_axioms(self) -> bool:
        els = self.elements
        if len(set(els)) != self.order:
            return False
        gens = list(self.generators().values())
        for g in gens:
            for h in els:
                for k in gens:
                    if self.mul(self.mul(g, h), k) != self.mul(g, self.mul(h, k)):
                        return False
        # generated by the generators
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = self.mul(g, s)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return len(seen) == self.order


def make_cover(m: int, sign: str = "plus") -> CoverGroup:
    g = CoverGroup(m, sign)
    bad = [k for k, ok in g.check_relations().items() if not ok]
    if bad:
        raise RelationViolated(", ".join(bad))
    return g


def conjugacy_classes(g: CoverGroup) -> list[list[GroupElement]]:
    inv = {h: g.inverse(h) for h in g.elements}
    seen: set = set()
    out = []
    for x in g.elements:
        if x in seen:
            continue
        cls = sorted({g.prod(h, x, inv[h]) for h in g.elements})
        seen.update(cls)
        out.append(cls)
    return out


# ---------------------------------------------------------------- irreps

@dataclass
class Irrep:
    name: str
    dim: int
    gens: dict  # "z", "s0", "sm", "tau" -> CycMatrix
    epsilon: int
    params: dict = dc_field(default_factory=dict)

    def matrix(self, g: GroupElement) -> CycMatrix:
        F = self.gens["z"].field
        M = CycMatrix.identity(F, self.dim)
        for gen, k in (("z", g.a), ("s0", g.b), ("tau", g.c), ("sm", g.d)):
            for _ in range(k):
                M = M @ self.gens[gen]
        return M

    def character(self, g: GroupElement) -> CycNum:
        M = self.matrix(g)
        return sum((M.entry(i, i) for i in range(self.dim)), M.field.zero)

    def to_json(self) -> dict:
        return {"name": self.name, "dim": self.dim, "epsilon": self.epsilon,
                "params": {k: str(v) for k, v in self.params.items()},
                "generators": {k: v.to_json() for k, v in self.gens.items()}}


@dataclass
class IrrepTable:
    group: CoverGroup
    irreps: list

    def __len__(self):
        return len(self.irreps)

    def spin(self) -> list[Irrep]:
        return [r for r in self.irreps if r.epsilon == -1]

    def find(self, name: str) -> Irrep:
        for r in self.irreps:
            if r.name == name:
                return r
        raise KeyError(name)


def _diag(F, *vals) -> CycMatrix:
    n = len(vals)
    return CycMatrix.from_rows(F, [[F.coerce(vals[i]) if i == j else F.zero for j in range(n)]
                                   for i in range(n)])


def _mat(F, rows) -> CycMatrix:
    return CycMatrix.from_rows(F, [[F.coerce(v) for v in r] for r in rows])


def _one_dim(F, name, s0, sm, tau) -> Irrep:
    return Irrep(name, 1, {"z": _diag(F, 1), "s0": _diag(F, s0), "sm": _diag(F, sm),
                           "tau": _diag(F, tau)}, 1, {})


def _two_dim(F, name, eps, s0, sm_rows, tau_pair, params) -> Irrep:
    return Irrep(name, 2, {"z": _diag(F, eps, eps), "s0": _diag(F, *s0), "sm": _mat(F, sm_rows),
                           "tau": _diag(F, *tau_pair)}, eps, params)


def y_rep(m: int, sign: str, j: int, delta, epsilon: int | None = None) -> Irrep:
    """The two-dimensional Y_j with parameters as in the classification tables."""
    F = get_field(field_order(m))
    z = lambda k: root_of_unity(m, k)
    delta = F.coerce(delta) if not isinstance(delta, CycNum) else delta
    if m % 2:
        if sign == "plus":
            if j == 0:
                return _two_dim(F, "Y0", -1, (1, -1), ((0, 1), (1, 0)), (1, 1), {"j": 0})
            eps = epsilon
            return _two_dim(F, f"Y{j}(eps={eps},delta={delta})", eps, (delta, delta * eps),
                            ((0, 1), (1, 0)), (z(2 * j), z(-2 * j)),
                            {"j": j, "epsilon": eps, "delta": delta})
        if j == m:
            i = F.i
            return _two_dim(F, f"Y{m}", -1, (i, -i), ((0, -1), (1, 0)), (-1, -1), {"j": m})
    eps = (-1) ** j
    sm = ((0, 1), (1, 0)) if sign == "plus" else ((0, eps), (1, 0))
    return _two_dim(F, f"Y{j}(delta={delta})", eps, (delta, delta * eps), sm,
                    (z(j), z(-j)), {"j": j, "delta": delta})


def irrep_table(g: CoverGroup) -> IrrepTable:
    m, F = g.m, g.field
    irreps = []
    # one-dimensional: s0, sm signs; for even m also tau = -1
    for tau in ((1,) if m % 2 else (1, -1)):
        for sm in (1, -1):
            for s0 in (1, -1):
                irreps.append(_one_dim(F, f"X{len(irreps) + 1}", s0, sm, tau))
    p = m // 2
    if m % 2 and g.sign == "plus":
        irreps.append(y_rep(m, "plus", 0, 1))
        for j in range(1, p + 1):
            for eps in (1, -1):
                for delta in (1, -1):
                    irreps.append(y_rep(m, "plus", j, delta, eps))
    else:
        if m % 2:
            irreps.append(y_rep(m, "minus", m, 1))
            js = range(1, 2 * p + 1)
        else:
            js = range(1, 2 * p)
        for j in js:
            deltas = (1, -1) if (j % 2 == 0 or g.sign == "plus") else (F.i, -F.i)
            for delta in deltas:
                irreps.append(y_rep(m, g.sign, j, delta))
    return IrrepTable(g, irreps)


def check_irrep_relations(g: CoverGroup, rep: Irrep) -> dict[str, bool]:
    """Each relation of the presentation evaluated in the representation."""
    F = g.field
    M = {k: rep.gens[k] for k in ("z", "s0", "sm", "tau")}
    I = CycMatrix.identity(F, rep.dim)
    # ds1 = tau dsm^-1; dsm^-1 = dsm or z dsm
    sm_inv = M["sm"] if g.s == 0 else M["z"] @ M["sm"]
    M1 = M["tau"] @ sm_inv
    sq = I if g.sign == "plus" else M["z"]
    braid = I if (g.sign == "plus" and g.m % 2) else M["z"]
    pw = lambda A, k: _mpow(A, k, I)
    return {
        "z^2": pw(M["z"], 2) == I,
        "s0^2": pw(M["s0"], 2) == sq,
        "s1^2": pw(M1, 2) == sq,
        "sm^2": pw(M["sm"], 2) == sq,
        "(s0 s1)^2": pw(M["s0"] @ M1, 2) == M["z"],
        "(s0 sm)^2": pw(M["s0"] @ M["sm"], 2) == M["z"],
        f"(s1 sm)^{g.m}": pw(M1 @ M["sm"], g.m) == braid,
        "z central": all(M["z"] @ M[k] == M[k] @ M["z"] for k in ("s0", "sm", "tau")),
    }


def _mpow(A, k, I):
    out = I
    for _ in range(k):
        out = out @ A
    return out


def character_table(table: IrrepTable, classes=None) -> list[list[CycNum]]:
    classes = classes or conjugacy_classes(table.group)
    return [[r.character(c[0]) for c in classes] for r in table.irreps]


def characters_are_class_functions(table: IrrepTable, classes=None) -> bool:
    classes = classes or conjugacy_classes(table.group)
    for r in table.irreps:
        for c in classes:
            chi = r.character(c[0])
            if any(r.character(x) != chi for x in c[1:]):
                return False
    return True


def character_inner_products(table: IrrepTable, classes=None) -> list[list[Fraction]]:
    """Gram matrix <chi_i, chi_j> = |G|^-1 sum_g chi_i(g) conj(chi_j(g))."""
    g = table.group
    classes = classes or conjugacy_classes(g)
    chars = character_table(table, classes)
    sizes = [len(c) for c in classes]
    out = []
    for a in chars:
        row = []
        for b in chars:
            s = sum((sz * x * y.conj() for sz, x, y in zip(sizes, a, b)), g.field.zero)
            row.append((s / g.order).to_fraction())
        out.append(row)
    return out


def table_report(g: CoverGroup) -> dict:
    classes = conjugacy_classes(g)
    table = irrep_table(g)
    relations_ok = all(all(check_irrep_relations(g, r).values()) for r in table.irreps)
    gram = character_inner_products(table, classes)
    orth = all(gram[i][j] == (1 if i == j else 0) for i in range(len(gram)) for j in range(len(gram)))
    return {
        "m": g.m, "cover": g.sign, "order": g.order,
        "n_classes": len(classes), "n_irreps": len(table),
        "sum_dim_sq": sum(r.dim ** 2 for r in table.irreps),
        "class_functions": characters_are_class_functions(table, classes),
        "relations": relations_ok, "orthonormal": orth,
        "spin_dims": sorted({r.dim for r in table.spin()}),
    }


# ---------------------------------------------------------- realization

def realization_map(g: CoverGroup, rs, delta: int = 1, max_degree: int = 2, sym=None) -> list[dict]:
    """Check the presentation on the realized operators, with z acting as -1."""
    from .dunkl import OperatorIdentity, run_ledger
    from .symalg import build_symmetries

    if g.sign != "plus":
        raise ValueError("the Clifford realization with e_j^2 = +1 gives the positive cover")
    if rs.m != g.m:
        raise ValueError("group and root system have different m")
    sym = sym or build_symmetries(rs, delta)
    F = rs.field
    realize = lambda h: element_operator(h, sym, F)
    idents = [OperatorIdentity(name, realize(lhs), realize(rhs))
              for name, (lhs, rhs) in g.relations().items()]
    idents.append(OperatorIdentity("s1 abstract = s1 realized", realize(g.sig1), sym.dsig1))
    for j in range(1, g.m + 1):
        idents.append(OperatorIdentity(
            f"ds{j} = (-1)^{j + 1} tau^{j} dsm", sym.dsig[j],
            (sym.dtau ** j * sym.dsigm).scaled((-1) ** (j + 1))))
    report = run_ledger(idents, max_degree)
    bad = [r for r in report if r["status"] != "pass"]
    if bad:
        raise RelationViolated(bad[0]["identity"])
    return report


def element_operator(h: GroupElement, sym, F):
    """The realized operator of a normal-form element."""
    from .dunkl import LinOperator
    op = LinOperator.scalar(F, -1 if h.a else 1)
    if h.b:
        op = op * sym.dsig0
    for _ in range(h.c):
        op = op * sym.dtau
    if h.d:
        op = op * sym.dsigm
    return op


def constant_spinor_character(g: CoverGroup, rs, delta: int = 1, sym=None) -> list[CycNum]:
    """Character of the realized group on the constant spinors span(chi+, chi-)."""
    from .symalg import build_symmetries
    sym = sym or build_symmetries(rs, delta)
    F = rs.field
    out = []
    for c in conjugacy_classes(g):
        M = element_operator(c[0], sym, F).matrix(0)
        out.append(M.entry(0, 0) + M.entry(1, 1))
    return out


def match_irrep(table: IrrepTable, chars: Iterable[CycNum]) -> list[str]:
    chars = list(chars)
    classes = conjugacy_classes(table.group)
    return [r.name for r in table.irreps if [r.character(c[0]) for c in classes] == chars]
