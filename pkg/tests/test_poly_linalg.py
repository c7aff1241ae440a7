from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dunkl_sym.linalg import (CycMatrix, algebra_dimension, commutant_dimension, rank_of_vectors,
                              rref, solve_linear_system)
from dunkl_sym.poly import (GradedBasis, MPoly, NotDivisible, SpinorPoly, basis_dim, exact_div_linear,
                            monomials, partial_derivative, substitute_linear)
from dunkl_sym.scalar import get_field

F = get_field(12)
small = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@st.composite
def polys(draw, max_deg=3):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_deg)] * 3), small, max_size=5))
    return MPoly(F, {e: F.coerce(c) for e, c in terms.items() if c})


@st.composite
def matrices(draw, n=3):
    vals = draw(st.lists(st.integers(-2, 2), min_size=n * n, max_size=n * n))
    return CycMatrix.from_rows(F, [[F.coerce(vals[i * n + j]) for j in range(n)] for i in range(n)])


@given(polys(), polys(), st.sampled_from([1, 2, 3]))
def test_leibniz(f, g, i):
    assert partial_derivative(f * g, i) == partial_derivative(f, i) * g + f * partial_derivative(g, i)


@given(polys(), polys())
def test_substitution_is_a_ring_map(f, g):
    M = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
    assert substitute_linear(f * g, M) == substitute_linear(f, M) * substitute_linear(g, M)
    assert substitute_linear(substitute_linear(f, M), M) == f


@given(polys(), st.tuples(small, small, small).filter(lambda t: any(t)))
def test_exact_division_roundtrip(f, L):
    lin = MPoly(F, {e: F.coerce(c) for e, c in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), L) if c})
    assert exact_div_linear(f * lin, L) == f


def test_division_remainder_detected():
    x1 = MPoly.var(F, 1)
    with pytest.raises(NotDivisible):
        exact_div_linear(x1 * x1 + MPoly.const(F, 1), (1, 0, 0))


@pytest.mark.parametrize("d", [0, 1, 2, 3, 4])
def test_graded_basis(d):
    B = GradedBasis(F, d)
    assert len(B) == basis_dim(d) == 2 * len(monomials(d))
    for k, b in enumerate(B):
        v = b.to_vector(d)
        assert v == [F.one if j == k else F.zero for j in range(len(B))]
        assert SpinorPoly.from_vector(F, d, v).to_vector(d) == v


def test_grlex_order_is_graded():
    degs = [sum(e) for e in monomials(3)]
    assert degs == [3] * len(degs)
    assert len(set(monomials(3))) == 10


@given(matrices(), matrices(), matrices())
def test_matmul_associative(A, B, C):
    assert (A @ B) @ C == A @ (B @ C)


@given(matrices(), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_solve_linear_system(A, b):
    rows = A.to_rows()
    sol = solve_linear_system(F, rows, b)
    assert sol.rank == A.rank()
    if sol.consistent:
        x = sol.particular
        for r, bi in zip(rows, b):
            assert sum((a * xi for a, xi in zip(r, x)), F.zero) == F.coerce(bi)
    for v in sol.nullspace:
        assert all(sum((a * vi for a, vi in zip(r, v)), F.zero).is_zero() for r in rows)
    assert sol.rank + len(sol.nullspace) == 3


@given(matrices())
def test_rank_matches_rref(A):
    _, piv = rref(F, A.to_rows())
    assert len(piv) == A.rank() == rank_of_vectors(F, [A.column(j) for j in range(3)])


def _pauli():
    i = F.i
    X = CycMatrix.from_rows(F, [[0, 1], [1, 0]])
    Y = CycMatrix.from_rows(F, [[F.zero, -i], [i, F.zero]])
    Z = CycMatrix.from_rows(F, [[1, 0], [0, -1]])
    return X, Y, Z


def test_commutant_and_burnside_irreducible():
    mats = list(_pauli())
    assert commutant_dimension(F, mats) == 1
    assert algebra_dimension(F, mats) == 4


def test_commutant_of_diagonal():
    D = CycMatrix.from_rows(F, [[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert commutant_dimension(F, [D]) == 3
    assert algebra_dimension(F, [D]) == 3


def test_indecomposable_not_irreducible():
    J = CycMatrix.from_rows(F, [[0, 1], [0, 0]])
    assert commutant_dimension(F, [J]) == 2
    assert algebra_dimension(F, [J]) == 2
    # U and J generate the upper triangular matrices: scalar commutant, yet reducible
    U = CycMatrix.from_rows(F, [[1, 1], [0, 2]])
    assert commutant_dimension(F, [U, J]) == 1
    assert algebra_dimension(F, [U, J]) == 3


def test_dagger():
    X, Y, Z = _pauli()
    for M in (X, Y, Z):
        assert M.dagger() == M
    A = CycMatrix.from_rows(F, [[F.i, Fraction(1, 2)], [0, 1]])
    assert A.dagger().dagger() == A
