"""Symmetries of the dihedral Dunkl-Dirac operator and their identity ledger.

Everything is built inside the concrete operator realization from
``dunkl``; every identity is an OperatorIdentity and is checked by
comparing exact matrices on graded bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dunkl import (CoreOperators, LinOperator, OperatorIdentity, RootSystem, acomm,
                    build_core_operators, comm, run_ledger, supercomm)
from .scalar import root_of_unity

HALF = Fraction(1, 2)


class ConstructionMismatch(AssertionError):
    """Two definitions of the same symmetry disagree."""


@dataclass
class SymmetrySet:
    core: CoreOperators
    O1: LinOperator
    O2: LinOperator
    O3: LinOperator
    O12: LinOperator
    O31: LinOperator
    O23: LinOperator
    O123: LinOperator
    T0: LinOperator
    Tplus: LinOperator
    Tminus: LinOperator
    O0: LinOperator
    Oplus: LinOperator
    Ominus: LinOperator
    Lplus: LinOperator
    Lminus: LinOperator
    dsig0: LinOperator
    dsig1: LinOperator
    dsigm: LinOperator
    dtau: LinOperator
    dtau_inv: LinOperator
    dsig: dict
    alternatives: dict

    @property
    def rs(self) -> RootSystem:
        return self.core.rs

    @property
    def zeta(self):
        return root_of_unity(self.rs.m, 1)

    def scalar(self, c) -> LinOperator:
        return LinOperator.scalar(self.rs.field, c)

    def generators(self) -> dict[str, LinOperator]:
        return {"O0": self.O0, "O+": self.Oplus, "O-": self.Ominus, "O123": self.O123,
                "T0": self.T0, "T+": self.Tplus, "T-": self.Tminus, "L+": self.Lplus,
                "L-": self.Lminus, "dsig0": self.dsig0, "dsig1": self.dsig1,
                "dsigm": self.dsigm, "dtau": self.dtau}


def _lin(terms, zero: LinOperator) -> LinOperator:
    out = None
    for c, op in terms:
        if c == 0:
            continue
        t = op if c == 1 else op.scaled(c)
        out = t if out is None else out + t
    return zero if out is None else out


def build_symmetries(rs: RootSystem, delta: int = 1, check_degree: int = 2,
                     o12_e12_sign: int = 1) -> SymmetrySet:
    """Construct all symmetries; dual definitions are compared up to check_degree.

    o12_e12_sign = -1 flips the sign of the e1e2/2 term of O12 only, which
    is used as a negative control (no build check is run in that case).
    """
    core = build_core_operators(rs, delta)
    F = rs.field
    e, C, L, sig = core.e, core.C, core.L, core.sigma
    I = F.i
    zero = LinOperator.scalar(F, 0, "0")
    zero.parity = 1

    dsig = {}
    for j in range(rs.m + 1):
        r = rs.root(j)
        cl = _lin([(r[k - 1], e[k]) for k in (1, 2, 3)], zero)
        dsig[j] = (cl * sig[j]).relabel(f"ds{j}")
        dsig[j].parity = 1

    O_gen, O_sig = {}, {}
    for i in (1, 2, 3):
        s = _lin([(1, e[k] * C[k, i]) for k in (1, 2, 3)], zero)
        O_gen[i] = (s - e[i]).scaled(HALF).relabel(f"O{i}")
        O_sig[i] = _lin([(r.kappa * r.vector[i - 1], dsig[r.index]) for r in rs.positive_roots],
                        zero).relabel(f"O{i}'")
    O = O_sig

    def two_index(i, j, sign=1):
        v1 = (L[i, j] + (e[i] * e[j]).scaled(sign * HALF) + O[i] * e[j] - O[j] * e[i])
        v2 = (L[i, j] + (e[i] * e[j]).scaled(sign * HALF) + e[i] * O[j] - e[j] * O[i])
        return v1.relabel(f"O{i}{j}"), v2.relabel(f"O{i}{j}'")

    O12, O12b = two_index(1, 2, o12_e12_sign)
    O31, O31b = two_index(3, 1)
    O23, O23b = two_index(2, 3)

    e123 = e[1] * e[2] * e[3]
    DX = comm(core.D, core.x)
    O123_right = ((DX - 1) * e123).scaled(HALF).relabel("O123")
    O123_left = (e123 * (DX - 1)).scaled(-HALF).relabel("O123''")
    O123_v1 = (e123.scaled(-HALF) - O[1] * e[2] * e[3] - O[2] * e[3] * e[1] - O[3] * e[1] * e[2]
               + O12 * e[3] + O31 * e[2] + O23 * e[1]).relabel("O123 v1")
    O123_v2 = (e123.scaled(-HALF) - e[2] * e[3] * O[1] - e[3] * e[1] * O[2] - e[1] * e[2] * O[3]
               + e[3] * O12 + e[2] * O31 + e[1] * O23).relabel("O123 v2")
    O123 = O123_v1

    zeta = root_of_unity(rs.m, 1)
    T0 = dsig[0].scaled(I * rs.kappa0).relabel("T0")
    Tp = _lin([(-I * rs.kappa_of(j) * zeta ** j, dsig[j]) for j in range(1, rs.m + 1)],
              zero).relabel("T+")
    Tm = _lin([(I * rs.kappa_of(j) * zeta ** (-j), dsig[j]) for j in range(1, rs.m + 1)],
              zero).relabel("T-")

    O0 = O12.scaled(-I).relabel("O0")
    Op = (O31.scaled(I) + O23).relabel("O+")
    Om = (O31.scaled(I) - O23).relabel("O-")
    Lp = acomm(O0, Op).scaled(HALF).relabel("L+")
    Lm = acomm(O0, Om).scaled(HALF).relabel("L-")
    tau = (dsig[1] * dsig[rs.m]).relabel("dtau")
    tau_inv = (dsig[rs.m] * dsig[1]).relabel("dtau^-1")

    alternatives = {
        "O_i via commutators": {i: O_gen[i] for i in (1, 2, 3)},
        "O_ij right": {"12": O12b, "31": O31b, "23": O23b},
        "O123 scasimir right": O123_right,
        "O123 scasimir left": O123_left,
        "O123 v2": O123_v2,
    }
    sym = SymmetrySet(core, O[1], O[2], O[3], O12, O31, O23, O123, T0, Tp, Tm, O0, Op, Om,
                      Lp, Lm, dsig[0], dsig[1], dsig[rs.m], tau, tau_inv, dsig, alternatives)
    if o12_e12_sign == 1 and check_degree >= 0:
        bad = [r for r in run_ledger(construction_identities(sym), check_degree)
               if r["status"] != "pass"]
        if bad:
            raise ConstructionMismatch(f"{bad[0]['identity']} at degree {bad[0]['degree']}")
    return sym


# ------------------------------------------------------------ ledgers

def construction_identities(sym: SymmetrySet) -> list[OperatorIdentity]:
    alt = sym.alternatives
    O = {1: sym.O1, 2: sym.O2, 3: sym.O3}
    out = [OperatorIdentity(f"O{i} commutator form = reflection form", alt["O_i via commutators"][i], O[i])
           for i in (1, 2, 3)]
    for key, op in (("12", sym.O12), ("31", sym.O31), ("23", sym.O23)):
        out.append(OperatorIdentity(f"O{key} left form = right form", op, alt["O_ij right"][key]))
    out += [
        OperatorIdentity("O123 expansion v1 = v2", sym.O123, alt["O123 v2"]),
        OperatorIdentity("O123 = (1/2)([D,x]-1)e1e2e3", sym.O123, alt["O123 scasimir right"]),
        OperatorIdentity("T0 = iO3", sym.T0, O[3].scaled(sym.rs.field.i)),
        OperatorIdentity("T+ = O1 + iO2", sym.Tplus, O[1] + O[2].scaled(sym.rs.field.i)),
        OperatorIdentity("T- = O1 - iO2", sym.Tminus, O[1] - O[2].scaled(sym.rs.field.i)),
    ]
    return out


def scasimir_sign_identity(sym: SymmetrySet) -> OperatorIdentity:
    """The other-handed Scasimir form; with e1e2e3 central it has the opposite sign."""
    return OperatorIdentity("O123 = -(1/2)e1e2e3([D,x]-1)", sym.O123, sym.alternatives["O123 scasimir left"])


def supercommutation_identities(sym: SymmetrySet) -> list[OperatorIdentity]:
    D, x = sym.core.D, sym.core.x
    ops = {"dsig0": sym.dsig0, "dsig1": sym.dsig1, "dsigm": sym.dsigm, "dtau": sym.dtau,
           "O12": sym.O12, "O31": sym.O31, "O23": sym.O23, "O123": sym.O123,
           "O1": sym.O1, "O2": sym.O2, "O3": sym.O3, "O0": sym.O0, "O+": sym.Oplus,
           "O-": sym.Ominus, "L+": sym.Lplus, "L-": sym.Lminus, "T0": sym.T0,
           "T+": sym.Tplus, "T-": sym.Tminus}
    out = []
    for name, op in ops.items():
        br = "{,}" if op.parity == 1 else "[,]"
        out.append(OperatorIdentity(f"{br}({name}, D) = 0", supercomm(op, D), None))
        out.append(OperatorIdentity(f"{br}({name}, x) = 0", supercomm(op, x), None))
    return out


def one_index_symmetry_identities(sym: SymmetrySet) -> list[OperatorIdentity]:
    e = sym.core.e
    O = {1: sym.O1, 2: sym.O2, 3: sym.O3}
    return [OperatorIdentity(f"{{e{i},O{j}}} = {{e{j},O{i}}}", acomm(e[i], O[j]), acomm(e[j], O[i]))
            for i in (1, 2, 3) for j in (1, 2, 3) if i < j]


def prop34_38_identities(sym: SymmetrySet) -> list[OperatorIdentity]:
    O1, O2, O3 = sym.O1, sym.O2, sym.O3
    O12, O31, O23, O123 = sym.O12, sym.O31, sym.O23, sym.O123
    O0, Op, Om = sym.O0, sym.Oplus, sym.Ominus
    T0, Tp, Tm = sym.T0, sym.Tplus, sym.Tminus
    return [
        OperatorIdentity("[O12,O31] = O23 + {O123,O1} + [O2,O3]", comm(O12, O31),
                         O23 + acomm(O123, O1) + comm(O2, O3)),
        OperatorIdentity("[O23,O12] = O31 + {O123,O2} + [O3,O1]", comm(O23, O12),
                         O31 + acomm(O123, O2) + comm(O3, O1)),
        OperatorIdentity("[O31,O23] = O12 + {O123,O3} + [O1,O2]", comm(O31, O23),
                         O12 + acomm(O123, O3) + comm(O1, O2)),
        OperatorIdentity("[O0,O+] = O+ + {O123,T+} + [T0,T+]", comm(O0, Op),
                         Op + acomm(O123, Tp) + comm(T0, Tp)),
        OperatorIdentity("[O0,O-] = -O- + {O123,T-} - [T0,T-]", comm(O0, Om),
                         -Om + acomm(O123, Tm) - comm(T0, Tm)),
        OperatorIdentity("[O+,O-] = 2O0 - 2{O123,T0} + [T+,T-]", comm(Op, Om),
                         O0.scaled(2) - acomm(O123, T0).scaled(2) + comm(Tp, Tm)),
        OperatorIdentity("[T+,T-] = -2i[O1,O2]", comm(Tp, Tm),
                         comm(O1, O2).scaled(-2 * sym.rs.field.i)),
    ]


def prop36_cor39_prop310_identities(sym: SymmetrySet) -> list[OperatorIdentity]:
    O1, O2, O3 = sym.O1, sym.O2, sym.O3
    O12, O31, O23, O123 = sym.O12, sym.O31, sym.O23, sym.O123
    O0, Op, Om, Lp, Lm = sym.O0, sym.Oplus, sym.Ominus, sym.Lplus, sym.Lminus
    T0, Tp, Tm = sym.T0, sym.Tplus, sym.Tminus
    sq = lambda A: A * A
    O0m, O0p = O0 - HALF, O0 + HALF
    A_p, A_m = O123 + T0, O123 - T0
    return [
        OperatorIdentity("O123^2 = -1/4 + sum O_i^2 + sum O_ij^2", sq(O123),
                         sq(O1) + sq(O2) + sq(O3) + sq(O12) + sq(O31) + sq(O23) - Fraction(1, 4)),
        OperatorIdentity("O+O- = T+T- - (O0-1/2)^2 - (O123+T0)^2", Op * Om,
                         Tp * Tm - sq(O0m) - sq(A_p)),
        OperatorIdentity("O-O+ = T-T+ - (O0+1/2)^2 - (O123-T0)^2", Om * Op,
                         Tm * Tp - sq(O0p) - sq(A_m)),
        OperatorIdentity("[O0,L+] = L+", comm(O0, Lp), Lp),
        OperatorIdentity("[O0,L-] = -L-", comm(O0, Lm), -Lm),
        OperatorIdentity("[O+O-,O0] = 0", comm(Op * Om, O0), None),
        OperatorIdentity("[O-O+,O0] = 0", comm(Om * Op, O0), None),
        OperatorIdentity("L+L- = (O123+T0)^2 T+T- + (O0-1/2)^2 O+O-", Lp * Lm,
                         sq(A_p) * (Tp * Tm) + sq(O0m) * (Op * Om)),
        OperatorIdentity("L-L+ = (O123-T0)^2 T-T+ + (O0+1/2)^2 O-O+", Lm * Lp,
                         sq(A_m) * (Tm * Tp) + sq(O0p) * (Om * Op)),
        OperatorIdentity("L+L- = -((O0-1/2)^2 + (O123+T0)^2)((O0-1/2)^2 - T+T-)", Lp * Lm,
                         -((sq(O0m) + sq(A_p)) * (sq(O0m) - Tp * Tm))),
        OperatorIdentity("L-L+ = -((O0+1/2)^2 + (O123-T0)^2)((O0+1/2)^2 - T-T+)", Lm * Lp,
                         -((sq(O0p) + sq(A_m)) * (sq(O0p) - Tm * Tp))),
    ]


def action_table_identities(sym: SymmetrySet, phase_twist: int = 0) -> list[OperatorIdentity]:
    """Lemma-type relations and the conjugation tables of the reflections and tau.

    phase_twist adds k to the zeta exponent of the entry dsig1 O+ = zeta^2 O- dsig1
    (negative control).
    """
    O0, Op, Om, Lp, Lm = sym.O0, sym.Oplus, sym.Ominus, sym.Lplus, sym.Lminus
    T0, Tp, Tm = sym.T0, sym.Tplus, sym.Tminus
    s0, s1, sm, tau, tau_i = sym.dsig0, sym.dsig1, sym.dsigm, sym.dtau, sym.dtau_inv
    z = sym.zeta
    z2, zm2 = z ** 2, z ** -2
    I = lambda name, a, b: OperatorIdentity(name, a, b)
    return [
        I("[O0,T0] = 0", comm(O0, T0), None),
        I("{O0,T+} = 0", acomm(O0, Tp), None),
        I("{O0,T-} = 0", acomm(O0, Tm), None),
        I("T0 O+ = -O+ T0", T0 * Op, -(Op * T0)),
        I("T0 O- = -O- T0", T0 * Om, -(Om * T0)),
        I("T0 T+ = -T+ T0", T0 * Tp, -(Tp * T0)),
        I("T0 T- = -T- T0", T0 * Tm, -(Tm * T0)),
        I("T+ O- = -O+ T-", Tp * Om, -(Op * Tm)),
        I("T- O+ = -O- T+", Tm * Op, -(Om * Tp)),
        I("ds0 O0 = O0 ds0", s0 * O0, O0 * s0),
        I("ds1 O0 = -O0 ds1", s1 * O0, -(O0 * s1)),
        I("dsm O0 = -O0 dsm", sm * O0, -(O0 * sm)),
        I("ds0 O+ = -O+ ds0", s0 * Op, -(Op * s0)),
        I("ds1 O+ = z^2 O- ds1", s1 * Op, (Om * s1).scaled(z ** (2 + phase_twist))),
        I("dsm O+ = O- dsm", sm * Op, Om * sm),
        I("ds0 O- = -O- ds0", s0 * Om, -(Om * s0)),
        I("ds1 O- = z^-2 O+ ds1", s1 * Om, (Op * s1).scaled(zm2)),
        I("dsm O- = O+ dsm", sm * Om, Op * sm),
        I("ds0 L+ = -L+ ds0", s0 * Lp, -(Lp * s0)),
        I("ds1 L+ = -z^2 L- ds1", s1 * Lp, (Lm * s1).scaled(-z2)),
        I("dsm L+ = -L- dsm", sm * Lp, -(Lm * sm)),
        I("ds0 L- = -L- ds0", s0 * Lm, -(Lm * s0)),
        I("ds1 L- = -z^-2 L+ ds1", s1 * Lm, (Lp * s1).scaled(-zm2)),
        I("dsm L- = -L+ dsm", sm * Lm, -(Lp * sm)),
        I("tau L+ = z^-2 L+ tau", tau * Lp, (Lp * tau).scaled(zm2)),
        I("tau L- = z^2 L- tau", tau * Lm, (Lm * tau).scaled(z2)),
        I("tau^-1 L+ = z^2 L+ tau^-1", tau_i * Lp, (Lp * tau_i).scaled(z2)),
        I("tau^-1 L- = z^-2 L- tau^-1", tau_i * Lm, (Lm * tau_i).scaled(zm2)),
        I("T+ L- = L+ T-", Tp * Lm, Lp * Tm),
        I("T- L+ = L- T+", Tm * Lp, Lm * Tp),
    ]


def presentation_identities(sym: SymmetrySet) -> list[OperatorIdentity]:
    m = sym.rs.m
    s0, s1, sm, tau = sym.dsig0, sym.dsig1, sym.dsigm, sym.dtau
    one = sym.scalar(1)
    out = [
        OperatorIdentity("ds0^2 = 1", s0 * s0, one),
        OperatorIdentity("ds1^2 = 1", s1 * s1, one),
        OperatorIdentity("dsm^2 = 1", sm * sm, one),
        OperatorIdentity("(ds0 ds1)^2 = -1", (s0 * s1) ** 2, -one),
        OperatorIdentity("(ds0 dsm)^2 = -1", (s0 * sm) ** 2, -one),
        OperatorIdentity(f"(ds1 dsm)^{m} = (-1)^{m + 1}", tau ** m, one.scaled((-1) ** (m + 1))),
    ]
    for j in range(1, m + 1):
        out.append(OperatorIdentity(f"ds{j} = (-1)^{j + 1} tau^{j} dsm", sym.dsig[j],
                                    (tau ** j * sm).scaled((-1) ** (j + 1))))
    return out


def central_identities(sym: SymmetrySet) -> list[OperatorIdentity]:
    names = ["O0", "O+", "O-", "L+", "L-", "T0", "T+", "T-", "dsig0", "dsig1", "dsigm", "dtau"]
    gens = sym.generators()
    ops = {n: gens[n] for n in names}
    ops.update({"O12": sym.O12, "O31": sym.O31, "O23": sym.O23})
    return [OperatorIdentity(f"[O123,{n}] = 0", comm(sym.O123, op), None) for n, op in ops.items()]


LEDGERS = {
    "construction": construction_identities,
    "supercommutation": supercommutation_identities,
    "one_index": one_index_symmetry_identities,
    "prop34_38": prop34_38_identities,
    "prop36_cor39_prop310": prop36_cor39_prop310_identities,
    "actions": action_table_identities,
    "presentation": presentation_identities,
    "central": central_identities,
}


def _tag(report, suite):
    for r in report:
        r["suite"] = suite
    return report


def verify_supercommutation(sym: SymmetrySet, max_degree: int = 4) -> list[dict]:
    return _tag(run_ledger(supercommutation_identities(sym), max_degree), "supercommutation")


def verify_prop34_38(sym: SymmetrySet, max_degree: int = 4) -> list[dict]:
    return _tag(run_ledger(prop34_38_identities(sym), max_degree), "prop34_38")


def verify_prop36_cor39_prop310(sym: SymmetrySet, max_degree: int = 4) -> list[dict]:
    return _tag(run_ledger(prop36_cor39_prop310_identities(sym), max_degree), "prop36_cor39_prop310")


def verify_action_tables(sym: SymmetrySet, max_degree: int = 4) -> list[dict]:
    return _tag(run_ledger(action_table_identities(sym), max_degree), "actions")


def verify_symmetries(sym: SymmetrySet, max_degree: int = 4, suites=None) -> list[dict]:
    out = []
    for name in suites or LEDGERS:
        out += _tag(run_ledger(LEDGERS[name](sym), max_degree), name)
    return out
