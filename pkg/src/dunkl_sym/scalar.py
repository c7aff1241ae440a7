"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are kept reduced modulo the n-th cyclotomic polynomial, so equality
is structural. The heavy lifting is done by flint's rational polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Union

import flint

Rat = Fraction
Scalar = Union[int, Fraction, "CycNum"]


class DivisionByZero(ZeroDivisionError):
    pass


class NotReal(ValueError):
    pass


class OrderMismatch(ValueError):
    pass


def field_order(m: int) -> int:
    """n = lcm(4, 2m): contains i and every power of e^{i pi/m}."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return 4 * 2 * m // gcd(4, 2 * m)


def to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    raise TypeError(f"not a rational: {x!r}")


def to_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    return Fraction(int(q.p), int(q.q))


def parse_rat(s: str) -> Fraction:
    """Parse "p/q" or an integer; floats are rejected on purpose."""
    s = s.strip()
    if any(c in s for c in ".eE"):
        raise ValueError(f"exact fraction expected, got {s!r}")
    return Fraction(s)


class CycField:
    """Bookkeeping for one order n; use get_field(n)."""

    def __init__(self, n: int):
        self.n = n
        self.phi_poly = flint.fmpq_poly(flint.fmpz_poly.cyclotomic(n).coeffs())
        self.degree = self.phi_poly.degree()
        self._zeta_pows = {}

    def __repr__(self):
        return f"CycField({self.n})"

    def reduce(self, p: flint.fmpq_poly) -> flint.fmpq_poly:
        if p.degree() >= self.degree:
            return p % self.phi_poly
        return p

    def zeta_pow(self, k: int) -> "CycNum":
        k %= self.n
        z = self._zeta_pows.get(k)
        if z is None:
            z = CycNum(self, flint.fmpq_poly([0] * k + [1]))
            self._zeta_pows[k] = z
        return z

    def __call__(self, x) -> "CycNum":
        return self.coerce(x)

    def coerce(self, x) -> "CycNum":
        if isinstance(x, CycNum):
            if x.field is not self:
                raise OrderMismatch(f"order {x.field.n} used in field of order {self.n}")
            return x
        if isinstance(x, (int, Fraction, flint.fmpq)):
            return CycNum(self, flint.fmpq_poly([to_fmpq(x)]), reduced=True)
        raise TypeError(f"cannot coerce {x!r} into Q(zeta_{self.n})")

    @property
    def zero(self) -> "CycNum":
        return self.coerce(0)

    @property
    def one(self) -> "CycNum":
        return self.coerce(1)

    @property
    def i(self) -> "CycNum":
        return self.zeta_pow(self.n // 4)

    def from_coeffs(self, coeffs: Iterable) -> "CycNum":
        return CycNum(self, flint.fmpq_poly([to_fmpq(c) for c in coeffs]))


@lru_cache(maxsize=None)
def get_field(n: int) -> CycField:
    if n % 4:
        raise ValueError("field order must be divisible by 4 so that i is present")
    return CycField(n)


class CycNum:
    __slots__ = ("field", "poly", "_hash")

    def __init__(self, field: CycField, poly: flint.fmpq_poly, reduced: bool = False):
        self.field = field
        self.poly = poly if reduced else field.reduce(poly)
        self._hash = None

    @property
    def order(self) -> int:
        return self.field.n

    @property
    def coeffs(self) -> list[Fraction]:
        """Coefficients of zeta_n^k, k = 0..n-1 (canonical representative)."""
        c = [to_fraction(q) for q in self.poly.coeffs()]
        return c + [Fraction(0)] * (self.field.n - len(c))

    def _lift(self, other) -> "CycNum | None":
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise OrderMismatch(f"cannot mix orders {self.field.n} and {other.field.n}")
            return other
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.poly + o.poly, reduced=True)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.poly - o.poly, reduced=True)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, o.poly - self.poly, reduced=True)

    def __neg__(self):
        return CycNum(self.field, -self.poly, reduced=True)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.field, self.poly * to_fmpq(other), reduced=True)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycNum(self.field, self.poly * o.poly)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.poly.is_zero():
            raise DivisionByZero("division by zero in Q(zeta_n)")
        g, s, _ = self.poly.xgcd(self.field.phi_poly)
        # phi_n is irreducible, so g is a nonzero constant
        return CycNum(self.field, s / g.coeffs()[0])

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.poly == o.poly

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.n, tuple(self.poly.coeffs())))
        return self._hash

    def __bool__(self):
        return not self.poly.is_zero()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_rational(self) -> bool:
        return self.poly.degree() <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        c = self.poly.coeffs()
        return to_fraction(c[0]) if c else Fraction(0)

    def conj(self) -> "CycNum":
        n = self.field.n
        out = [flint.fmpq(0)] * n
        for k, c in enumerate(self.poly.coeffs()):
            out[(-k) % n] += c
        return CycNum(self.field, flint.fmpq_poly(out))

    def real(self) -> "CycNum":
        return (self + self.conj()) * Fraction(1, 2)

    def imag(self) -> "CycNum":
        return (self - self.conj()) / (2 * self.field.i)

    def to_complex(self) -> complex:
        import cmath
        n = self.field.n
        return sum(float(c) * cmath.exp(2j * cmath.pi * k / n)
                   for k, c in enumerate(self.poly.coeffs()))

    def to_json(self) -> dict:
        return {"order": self.field.n,
                "coeffs": [[str(c.p), str(c.q)] for c in self.poly.coeffs()]}

    def __repr__(self):
        if self.is_rational():
            return str(self.to_fraction())
        terms = []
        for k, c in enumerate(self.poly.coeffs()):
            if c == 0:
                continue
            terms.append(f"{c}" if k == 0 else f"{c}*z{self.field.n}^{k}")
        return " + ".join(terms)

    def latex(self) -> str:
        if self.is_rational():
            f = self.to_fraction()
            return str(f.numerator) if f.denominator == 1 else rf"\frac{{{f.numerator}}}{{{f.denominator}}}"
        terms = []
        for k, c in enumerate(self.poly.coeffs()):
            if c == 0:
                continue
            coef = str(c) if c.q == 1 else rf"\frac{{{c.p}}}{{{c.q}}}"
            terms.append(coef if k == 0 else rf"{coef}\zeta_{{{self.field.n}}}^{{{k}}}")
        return "(" + " + ".join(terms) + ")"


def from_json(obj: dict) -> CycNum:
    field = get_field(int(obj["order"]))
    return field.from_coeffs(Fraction(int(a), int(b)) for a, b in obj["coeffs"])


def field_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def root_of_unity(m: int, k: int) -> CycNum:
    """zeta^k with zeta = e^{i pi/m}, inside Q(zeta_n), n = lcm(4, 2m)."""
    n = field_order(m)
    return get_field(n).zeta_pow((n // (2 * m)) * k)


def sin_cos(m: int, j: int) -> tuple[CycNum, CycNum]:
    z = root_of_unity(m, j)
    zi = root_of_unity(m, -j)
    i = z.field.i
    return (z - zi) / (2 * i), (z + zi) * Fraction(1, 2)


def sign_of_real(a: CycNum, max_prec: int = 1 << 16) -> int:
    """Sign (-1, 0, 1) of a real element, by exact zero test then ball arithmetic."""
    if a.conj() != a:
        raise NotReal(f"{a} is not real")
    if a.is_zero():
        return 0
    n = a.field.n
    coeffs = a.poly.coeffs()
    prec = 64
    old = flint.ctx.prec
    try:
        while prec <= max_prec:
            flint.ctx.prec = prec
            total = flint.arb(0)
            for k, c in enumerate(coeffs):
                if c != 0:
                    total += flint.arb(c) * flint.arb(flint.fmpq(2 * k, n)).cos_pi()
            if total > 0:
                return 1
            if total < 0:
                return -1
            prec *= 2
    finally:
        flint.ctx.prec = old
    raise ArithmeticError("sign undecided at maximal precision")
