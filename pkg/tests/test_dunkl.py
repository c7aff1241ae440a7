from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dunkl_sym.dunkl import (RootSystem, all_pass, build_core_operators, dunkl_operator, verify_osp12,
                             verify_thm25)
from dunkl_sym.poly import GradedBasis, MPoly, SpinorPoly
from conftest import kappa_for

pos = st.fractions(min_value=Fraction(1, 7), max_value=3, max_denominator=7)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_root_system(m):
    rs = RootSystem(m, *kappa_for(m))
    assert len(rs.positive_roots) == m + 1
    assert len(rs.group_matrices()) == 4 * m
    F = rs.field
    for j in range(m + 1):
        r = rs.root(j)
        assert sum((a * a for a in r), F.zero) == F.one
    # gamma = kappa0 + (m/2)(kappa1 + kappam)
    assert rs.gamma == rs.kappa0 + Fraction(m, 2) * (rs.kappa1 + rs.kappam)


def test_odd_m_rejects_mismatched_kappa():
    with pytest.raises(ValueError):
        RootSystem(5, 1, Fraction(1, 3), Fraction(1, 4))


@pytest.mark.parametrize("m", [2, 3])
def test_dunkl_operators_commute(m):
    rs = RootSystem(m, *kappa_for(m))
    T = [dunkl_operator(rs, i) for i in (1, 2, 3)]
    F = rs.field
    for f in GradedBasis(F, 3):
        for a in range(3):
            for b in range(a):
                assert (T[a](T[b](f)) - T[b](T[a](f))).is_zero()


def test_kappa_zero_gives_partial_derivatives():
    rs = RootSystem(3)
    F = rs.field
    x1 = MPoly.var(F, 1)
    f = SpinorPoly.chi(F, 1, x1 * x1 * MPoly.var(F, 2))
    out = dunkl_operator(rs, 1)(f)
    assert out.up == (x1 * MPoly.var(F, 2)).scale(F.coerce(2))


def test_reflection_term_on_x3():
    # T3 x3 = 1 + kappa0 (x3 - (-x3)) / x3 = 1 + 2 kappa0
    rs = RootSystem(2, Fraction(1, 3), 0, 0)
    F = rs.field
    out = dunkl_operator(rs, 3)(SpinorPoly.chi(F, 1, MPoly.var(F, 3)))
    assert out.up == MPoly.const(F, Fraction(5, 3))


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("delta", [1, -1])
def test_osp12_low_degree(m, delta):
    assert all_pass(verify_osp12(RootSystem(m, *kappa_for(m)), delta, 2))


@given(pos, pos, pos)
def test_osp12_random_kappa_even(k0, k1, km):
    assert all_pass(verify_osp12(RootSystem(4, k0, k1, km), 1, 1))


@pytest.mark.parametrize("m", [2, 3])
def test_thm25_low_degree(m):
    assert all_pass(verify_thm25(RootSystem(m, *kappa_for(m)), 2))


def test_gamma_override_breaks_only_gamma_identities():
    rep = verify_osp12(RootSystem(3, *kappa_for(3)), 1, 2, gamma=Fraction(7, 5))
    failed = {r["identity"] for r in rep if r["status"] == "fail"}
    assert failed == {"{D,x} = 2(E + 3/2 + gamma)", "[x^2,Lap] = -4(E + 3/2 + gamma)"}
    assert all("counterexample" in r for r in rep if r["status"] == "fail")


def test_core_dirac_squares_to_laplacian():
    core = build_core_operators(RootSystem(2, *kappa_for(2)))
    assert (core.D * core.D).matrix(3) == core.Laplacian.matrix(3)
