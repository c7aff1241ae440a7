from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from dunkl_sym.reps import (CORRECTED_FORMS, PRINTED_FORMS, IncompatibleCase, NoRepresentation, RepSpec,
                            build_rep, cell_points, certify, check_admissibility, classify, classify_summary,
                            compatible_specs, critical_labels, critical_points, even_closed_form_check, evaluate_cell,
                            excluded_points, sample_kappas, with_kappa)

K_EVEN = (Fr(1, 3), Fr(1, 4), Fr(1, 5))
K_ODD = (Fr(1, 2), Fr(1, 3), Fr(1, 3))


def test_one_dimensional_pair():
    rep = build_rep(RepSpec(2, 0, 0, 1, "I.i", 1, 1, K_ODD))
    assert rep.dim == 2
    cert = certify(rep)
    assert cert.is_representation and cert.irreducible and cert.unitary


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("N", [1, 3, 5])
def test_case_three_odd_N_refused(m, N):
    lb = 4 if m % 2 else 6
    kappa = K_ODD if m % 2 else K_EVEN
    with pytest.raises(NoRepresentation, match="no representations in this case"):
        build_rep(RepSpec(m, N, 0, 1, "III", lb, 1, kappa))


def test_incompatible_congruence():
    # odd m, case I needs 2(N+l)+1 = 0 mod m
    with pytest.raises(IncompatibleCase):
        build_rep(RepSpec(3, 0, 0, 1, "I", 1, 1, K_ODD))


def test_spec_validation():
    with pytest.raises(ValueError):
        RepSpec(3, 0, 1, 1, "I", 1, 1, (Fr(1, 2), Fr(1, 3), Fr(1, 4)))
    with pytest.raises(ValueError):
        RepSpec(4, 0, 0, 1, "I", 1, 1, K_EVEN)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_generic_cells_agree(m):
    kappa = K_ODD if m % 2 else K_EVEN
    for spec in compatible_specs(m, 2, kappa):
        if spec.case == "II":
            continue
        r = evaluate_cell(spec)
        assert r["agree"], r["spec"]
        if r["table_irreducible"]:
            assert r["oracle"]["is_representation"]


def test_excluded_point_is_reducible_with_scalar_commutant():
    spec = RepSpec(4, 2, 1, 1, "I.ii", 3, 1, K_EVEN)
    labels = dict((lab, k) for lab, k in excluded_points(spec))
    k = labels["kappam = 1/2 ((N-k+1)/m, k=1)"]
    v = check_admissibility(with_kappa(spec, k))
    cert = certify(build_rep(with_kappa(spec, k), limits=True))
    assert not v.irreducible
    assert cert.commutant_dim == 1 and cert.algebra_dim == 28 and not cert.irreducible
    assert 0 in cert.A_signs


def test_limit_resolution_at_half_integer_lambda():
    spec = RepSpec(3, 2, 2, 1, "I", 2, 1, (Fr(1, 3), Fr(1), Fr(1)))
    with pytest.raises(ArithmeticError):
        build_rep(spec)
    rep = build_rep(spec, limits=True)
    assert rep.lam == Fr(-1, 2)
    assert len(rep.limits) == 2
    cert = certify(rep)
    assert cert.is_representation and cert.irreducible
    assert check_admissibility(spec).irreducible


def test_vanishing_ladder_coefficients():
    spec = RepSpec(3, 2, 0, 1, "III", 4, 1, K_ODD)
    rep = build_rep(spec, limits=True)
    assert [a.is_zero() for a in rep.A] == [True, True]
    assert not certify(rep).irreducible
    assert not check_admissibility(spec).irreducible


def test_case_two_generic_is_not_a_module():
    spec = RepSpec(4, 0, 0, 1, "II", 5, 1, K_EVEN)
    verdict = check_admissibility(spec)
    cert = certify(build_rep(spec, limits=True))
    assert verdict.irreducible
    assert not cert.relations_ok


def test_case_three_unitarity_counterexample():
    spec = RepSpec(2, 2, 0, 1, "III", 6, 1, (Fr(13, 2), Fr(5, 2), Fr(9, 7)))
    verdict = check_admissibility(spec)
    cert = certify(build_rep(spec))
    assert verdict.unitary_sufficient
    assert cert.irreducible and cert.A_signs == [1, -1] and not cert.unitary


@pytest.mark.parametrize("m", [2, 4, 6])
def test_even_closed_forms(m):
    for spec in compatible_specs(m, 3, K_EVEN):
        if spec.case == "II":
            continue
        rep = build_rep(spec, strict=False)
        assert all(even_closed_form_check(rep, **CORRECTED_FORMS).values()), spec


def test_printed_closed_forms_fail():
    spec = [s for s in compatible_specs(4, 3, K_EVEN) if s.N == 3][0]
    rep = build_rep(spec)
    assert not any(even_closed_form_check(rep, **PRINTED_FORMS).values())
    assert all(even_closed_form_check(rep).values())


def test_unitary_cells_pass_star_check():
    for spec in compatible_specs(2, 3, K_EVEN):
        cert = certify(build_rep(spec, limits=True))
        if cert.is_representation and all(s == 1 for s in cert.A_signs):
            assert cert.star_ok, spec


def test_sample_kappas_deterministic():
    assert sample_kappas(3, 4, 7) == sample_kappas(3, 4, 7)
    assert all(k[1] == k[2] for k in sample_kappas(5, 6, 1))
    assert all(x > 0 for k in sample_kappas(4, 6, 2) for x in k)


def test_cell_points_include_excluded_and_critical():
    spec = RepSpec(4, 2, 1, 1, "I.ii", 3, 1, K_EVEN)
    pts = cell_points(spec, [K_EVEN], excluded=True, critical=True)
    kinds = {lab.split(":")[0] for lab, _ in pts}
    assert kinds == {"generic", "excluded", "critical"}
    assert critical_points(spec)


def test_classify_small():
    recs = classify(2, 1, sample_kappas(2, 2, 0))
    summary = classify_summary(recs)
    assert summary["disagree"] == 0
    assert summary["excluded_points"] > 0


pos = st.fractions(min_value=Fr(1, 9), max_value=4, max_denominator=9)


@settings(max_examples=10)
@given(pos, pos, pos)
def test_random_kappa_table_matches_oracle_m2(k0, k1, km):
    # off the critical hyperplanes the tables and the oracle agree for m = 2
    for spec in compatible_specs(2, 2, (k0, k1, km)):
        if critical_labels(spec):
            continue
        r = evaluate_cell(spec)
        assert r["agree"], (r["spec"], r["violated"])


def test_critical_hyperplane_omitted_by_table():
    # kappa1 + kappam = 1 puts lambda_2 at 1/2; the O0 rule has no solution there
    spec = RepSpec(2, 1, 1, 1, "I.i", 2, 1, (Fr(3), Fr(1, 4), Fr(3, 4)))
    assert "lambda=1-1/2" in critical_labels(spec)
    r = evaluate_cell(spec)
    assert r["table_irreducible"]
    assert r["oracle"]["inconsistent"] and not r["oracle"]["is_representation"]
