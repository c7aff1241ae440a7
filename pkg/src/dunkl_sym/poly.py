"""Polynomials in x1, x2, x3 over Q(zeta_n) and their spinor-valued pairs."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .scalar import CycField, CycNum

Exps = tuple[int, int, int]


class NotDivisible(ArithmeticError):
    pass


def grlex_key(e: Exps):
    return (-sum(e), -e[0], -e[1], -e[2])


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[Exps, ...]:
    """Degree-d exponent triples in graded-lex order (x1 first)."""
    if d < 0:
        return ()
    out = [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict:
    return {e: k for k, e in enumerate(monomials(d))}


class MPoly:
    __slots__ = ("field", "terms")

    def __init__(self, field: CycField, terms: dict | None = None):
        self.field = field
        self.terms = {e: c for e, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def const(cls, field, c) -> "MPoly":
        return cls(field, {(0, 0, 0): field.coerce(c)})

    @classmethod
    def var(cls, field, i: int) -> "MPoly":
        e = [0, 0, 0]
        e[i - 1] = 1
        return cls(field, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field, e: Exps, c=1) -> "MPoly":
        return cls(field, {tuple(e): field.coerce(c)})

    @property
    def degree(self) -> float:
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly(self.field, {e: c for e, c in self.terms.items() if sum(e) == d})

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def __add__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.const(self.field, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.const(self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = self.field.coerce(c)
        if c.is_zero():
            return MPoly(self.field)
        return MPoly(self.field, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return MPoly(self.field, out)

    def __rmul__(self, other) -> "MPoly":
        return self.scale(other)

    def __pow__(self, k: int) -> "MPoly":
        out = MPoly.const(self.field, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            other = MPoly.const(self.field, other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def conj(self) -> "MPoly":
        """Conjugate the coefficients only."""
        return MPoly(self.field, {e: c.conj() for e, c in self.terms.items()})

    def coefficient(self, e: Exps) -> CycNum:
        return self.terms.get(tuple(e), self.field.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(f"x{i + 1}^{a}" if a > 1 else f"x{i + 1}" for i, a in enumerate(e) if a)
            parts.append(f"({c})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"exps": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "".join(f"x_{i + 1}^{{{a}}}" if a > 1 else f"x_{i + 1}" for i, a in enumerate(e) if a)
            parts.append(c.latex() + mon)
        return " + ".join(parts)


def partial_derivative(f: MPoly, i: int) -> MPoly:
    k = i - 1
    out = {}
    for e, c in f.terms.items():
        if e[k]:
            ne = list(e)
            ne[k] -= 1
            out[tuple(ne)] = c * e[k]
    return MPoly(f.field, out)


def substitute_linear(f: MPoly, M: Sequence[Sequence]) -> MPoly:
    """f(M x): x_i is replaced by sum_j M[i][j] x_j."""
    field = f.field
    images = [MPoly(field, {tuple(int(j == jj) for jj in range(3)): field.coerce(M[i][j])
                            for j in range(3)}) for i in range(3)]
    powers = [[MPoly.const(field, 1)] for _ in range(3)]
    out = MPoly(field)
    for e, c in f.terms.items():
        term = MPoly.const(field, c)
        for i in range(3):
            while len(powers[i]) <= e[i]:
                powers[i].append(powers[i][-1] * images[i])
            if e[i]:
                term = term * powers[i][e[i]]
        out = out + term
    return out


def exact_div_linear(f: MPoly, L: Sequence) -> MPoly:
    """Quotient q with q * (L1 x1 + L2 x2 + L3 x3) = f; raises NotDivisible otherwise."""
    field = f.field
    L = [field.coerce(c) for c in L]
    piv = next((k for k in range(3) if not L[k].is_zero()), None)
    if piv is None:
        raise ZeroDivisionError("zero linear form")
    inv = L[piv].inverse()
    rem = dict(f.terms)
    q: dict = {}
    # eliminate the largest power of the pivot variable first
    while True:
        cands = [e for e in rem if e[piv] > 0]
        if not cands:
            break
        e = max(cands, key=lambda t: (t[piv], grlex_key(t)))
        c = rem.pop(e) * inv
        qe = list(e)
        qe[piv] -= 1
        qe = tuple(qe)
        q[qe] = q[qe] + c if qe in q else c
        for k in range(3):
            if k == piv or L[k].is_zero():
                continue
            te = list(qe)
            te[k] += 1
            te = tuple(te)
            v = -(c * L[k])
            if te in rem:
                nv = rem[te] + v
                if nv.is_zero():
                    del rem[te]
                else:
                    rem[te] = nv
            else:
                rem[te] = v
    if rem:
        raise NotDivisible(f"remainder {MPoly(field, rem)} when dividing by {L}")
    return MPoly(field, q)


class SpinorPoly:
    """f_up chi+ + f_down chi-."""
    __slots__ = ("up", "down")

    def __init__(self, up: MPoly, down: MPoly):
        self.up = up
        self.down = down

    @property
    def field(self) -> CycField:
        return self.up.field

    @classmethod
    def zero(cls, field) -> "SpinorPoly":
        return cls(MPoly(field), MPoly(field))

    @classmethod
    def chi(cls, field, sign: int, f: MPoly | None = None) -> "SpinorPoly":
        f = f if f is not None else MPoly.const(field, 1)
        return cls(f, MPoly(field)) if sign > 0 else cls(MPoly(field), f)

    def __add__(self, o: "SpinorPoly") -> "SpinorPoly":
        return SpinorPoly(self.up + o.up, self.down + o.down)

    def __sub__(self, o: "SpinorPoly") -> "SpinorPoly":
        return SpinorPoly(self.up - o.up, self.down - o.down)

    def __neg__(self) -> "SpinorPoly":
        return SpinorPoly(-self.up, -self.down)

    def scale(self, c) -> "SpinorPoly":
        return SpinorPoly(self.up.scale(c), self.down.scale(c))

    def __mul__(self, c) -> "SpinorPoly":
        if isinstance(c, MPoly):
            return SpinorPoly(self.up * c, self.down * c)
        return self.scale(c)

    __rmul__ = __mul__

    def map(self, fn) -> "SpinorPoly":
        return SpinorPoly(fn(self.up), fn(self.down))

    def __eq__(self, o) -> bool:
        return isinstance(o, SpinorPoly) and self.up == o.up and self.down == o.down

    def is_zero(self) -> bool:
        return self.up.is_zero() and self.down.is_zero()

    @property
    def degree(self) -> float:
        return max(self.up.degree, self.down.degree)

    def degrees(self) -> set[int]:
        return self.up.degrees() | self.down.degrees()

    def homogeneous_part(self, d: int) -> "SpinorPoly":
        return SpinorPoly(self.up.homogeneous_part(d), self.down.homogeneous_part(d))

    def __repr__(self):
        return f"[{self.up}] chi+ + [{self.down}] chi-"

    def to_json(self) -> dict:
        return {"up": self.up.to_json(), "down": self.down.to_json()}

    def to_vector(self, d: int) -> list[CycNum]:
        """Coordinates in graded_basis(d); the polynomial must be homogeneous of degree d."""
        mons = monomials(d)
        idx = monomial_index(d)
        for part in (self.up, self.down):
            for e in part.terms:
                if e not in idx:
                    raise ValueError(f"monomial {e} not of degree {d}")
        return [self.up.coefficient(e) for e in mons] + [self.down.coefficient(e) for e in mons]

    @classmethod
    def from_vector(cls, field, d: int, vec: Sequence[CycNum]) -> "SpinorPoly":
        mons = monomials(d)
        s = len(mons)
        up = MPoly(field, {e: vec[k] for k, e in enumerate(mons)})
        down = MPoly(field, {e: vec[s + k] for k, e in enumerate(mons)})
        return cls(up, down)


class GradedBasis:
    """Monomials times chi+, then monomials times chi-, all of degree d."""

    def __init__(self, field: CycField, degree: int):
        self.field = field
        self.degree = degree
        mons = monomials(degree)
        self.labels = [(e, +1) for e in mons] + [(e, -1) for e in mons]

    def __len__(self):
        return len(self.labels)

    def __iter__(self) -> Iterator[SpinorPoly]:
        for e, s in self.labels:
            yield SpinorPoly.chi(self.field, s, MPoly.monomial(self.field, e))

    def label(self, k: int) -> str:
        e, s = self.labels[k]
        mon = "*".join(f"x{i + 1}^{a}" if a > 1 else f"x{i + 1}" for i, a in enumerate(e) if a) or "1"
        return f"{mon}*chi{'+' if s > 0 else '-'}"

    @property
    def elements(self) -> list[SpinorPoly]:
        return list(self)


def basis_dim(d: int) -> int:
    return 0 if d < 0 else (d + 1) * (d + 2)
