from fractions import Fraction as Fr
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dunkl_sym.dunkl import RootSystem
from dunkl_sym.monogenics import (_apply_power, ck_extend, closed_form_B, context, d_coefficient,
                                  dirac_kernel_dim, explicit_basis_prop56, fischer_check, harmonics_2d,
                                  hyp2f1_terminating, is_monogenic, jacobi_coeffs, jacobi_homogeneous,
                                  monogenic_basis, monogenics_2d, o123_eigenvalue, pochhammer, span_rank,
                                  verify_monogenic_rep)
from dunkl_sym.poly import MPoly, SpinorPoly

rats = st.fractions(min_value=-4, max_value=4, max_denominator=6)
K2 = (Fr(1, 3), Fr(1, 4), Fr(1, 5))
K3 = (Fr(1, 2), Fr(1, 3), Fr(1, 3))


@given(rats, st.integers(0, 6))
def test_pochhammer_recursions(a, n):
    assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)
    assert pochhammer(a, n) == (-1) ** n * pochhammer(-a - n + 1, n)


@given(st.integers(0, 6), rats, rats.filter(lambda c: c.denominator > 1 or c > 0))
def test_chu_vandermonde(n, b, c):
    # 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
    assert hyp2f1_terminating(-n, b, c, 1) == pochhammer(c - b, n) / pochhammer(c, n)


@given(st.integers(0, 5), rats, rats)
def test_hyp2f1_direct_sum(n, b, x):
    c = Fr(7, 3)
    direct = sum(pochhammer(Fr(-n), k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k)) * x ** k
                 for k in range(n + 1))
    assert hyp2f1_terminating(-n, b, c, x) == direct


@settings(max_examples=15)
@given(st.integers(0, 4), st.fractions(min_value=0, max_value=3, max_denominator=4),
       st.fractions(min_value=0, max_value=3, max_denominator=4))
def test_jacobi_against_sympy(t, a, b):
    x = sympy.Symbol("x")
    ref = sympy.Poly(sympy.expand(sympy.jacobi(t, sympy.Rational(a.numerator, a.denominator),
                                                sympy.Rational(b.numerator, b.denominator), x)), x)
    coeffs = jacobi_coeffs(t, a, b)
    for i, c in enumerate(coeffs):
        r = ref.coeff_monomial(x ** i)
        assert c == Fr(int(r.p), int(r.q))


@given(st.integers(0, 4), st.fractions(min_value=0, max_value=4, max_denominator=6), rats, rats,
       rats.filter(lambda v: v != 0))
def test_jacobi_homogeneous_identity(t, a, b, x, y):
    if x + y == 0:
        return
    P = jacobi_coeffs(t, a, b)
    u = (x - y) / (x + y)
    lhs = (x + y) ** t * sum(c * u ** i for i, c in enumerate(P))
    rhs = sum(c * x ** (t - j) * y ** j for j, c in enumerate(jacobi_homogeneous(t, a, b)))
    assert lhs == rhs


@pytest.mark.parametrize("m,kappa", [(2, K2), (3, K3), (4, K2)])
def test_d_coefficients(m, kappa):
    rs = RootSystem(m, *kappa)
    ctx = context(rs, 1)
    for k in range(4):
        for Phi in monogenics_2d(rs, k):
            for b in range(5):
                f = _apply_power(ctx.x2d, Phi, b)
                for a in range(b + 1):
                    want = _apply_power(ctx.x2d, Phi, b - a).scale(rs.field.coerce(d_coefficient(a, b, k, ctx.gamma_hat)))
                    assert (f - want).is_zero(), (k, a, b)
                    f = ctx.D2(f)


@pytest.mark.parametrize("m,kappa", [(2, K2), (3, K3), (5, (Fr(1, 4), Fr(2, 3), Fr(2, 3))), (6, K2)])
def test_planar_harmonics(m, kappa):
    rs = RootSystem(m, *kappa)
    lap = context(rs, 1).core.Laplacian
    for n in range(5):
        h = harmonics_2d(rs, n)
        for f in (h.plus, h.minus):
            assert not f.is_zero()
            assert lap(SpinorPoly.chi(rs.field, 1, f)).is_zero()


def test_degree_zero_basis():
    rs = RootSystem(2, *K2)
    F = rs.field
    basis = monogenic_basis(rs, 1, 0)
    assert [b.psi.to_vector(0) for b in basis] == [[F.one, F.zero], [F.zero, F.one]]


def test_monogenics_are_ck_fixed():
    rs = RootSystem(3, *K3)
    for Phi in monogenics_2d(rs, 2):
        assert (ck_extend(rs, 1, Phi) - Phi).is_zero()


def test_ck_of_x_phi0():
    rs = RootSystem(2, *K2)
    ctx = context(rs, 1)
    f = ck_extend(rs, 1, ctx.x2d(monogenics_2d(rs, 0)[0]))
    assert is_monogenic(rs, 1, f) and not f.is_zero()


def test_ck_rejects_x3():
    rs = RootSystem(2, *K2)
    with pytest.raises(ValueError):
        ck_extend(rs, 1, SpinorPoly.chi(rs.field, 1, MPoly.var(rs.field, 3)))


def test_closed_form_degree_one_step():
    rs = RootSystem(2, *K2)
    ctx = context(rs, 1)
    Phi = monogenics_2d(rs, 1)[0]
    k0, g = rs.kappa0, ctx.gamma_hat
    x3 = MPoly.var(rs.field, 3)
    want = ctx.x2d(Phi) - ctx.core.e[3](Phi * x3).scale(rs.field.coerce((2 + g) / (k0 + Fr(1, 2))))
    assert (closed_form_B(rs, 1, 2, 1, Phi) - want).is_zero()


@pytest.mark.parametrize("m,kappa", [(2, K2), (3, K3)])
@pytest.mark.parametrize("delta", [1, -1])
def test_bases_span_kernel(m, kappa, delta):
    rs = RootSystem(m, *kappa)
    for n in range(3):
        ck = monogenic_basis(rs, delta, n)
        closed = explicit_basis_prop56(rs, delta, n)
        assert len(ck) == 2 * n + 2 == dirac_kernel_dim(rs, delta, n)
        assert all(is_monogenic(rs, delta, b.psi) for b in ck + closed)
        assert span_rank(rs, n, [b.psi for b in ck + closed]) == 2 * n + 2
        assert fischer_check(rs, n, delta)["direct_sum"]


def test_o123_eigenvalue_example():
    rs = RootSystem(3, *K3)
    assert o123_eigenvalue(rs, 1, 1) == rs.field.i * Fr(7, 2)
    assert o123_eigenvalue(rs, -1, 1) != o123_eigenvalue(rs, -1, 1, printed=True)


@pytest.mark.parametrize("m,kappa", [(2, K2), (3, K3)])
def test_monogenic_representation(m, kappa):
    rep = verify_monogenic_rep(RootSystem(m, *kappa), 1, 2)
    assert rep.ok, rep.to_json()
    assert all(r == {"order": rep.o123_computed.field.n, "coeffs": [["1", "1"]]} for r in rep.closed_over_ck)
    assert rep.matches
