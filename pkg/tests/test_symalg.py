import pytest

from dunkl_sym.dunkl import RootSystem, all_pass, run_ledger
from dunkl_sym.symalg import (LEDGERS, action_table_identities, build_symmetries, verify_action_tables,
                              verify_symmetries)
from conftest import kappa_for

# generators whose definition involves O12
O12_DERIVED = {"O12", "O0", "L+", "L-", "O123"}


@pytest.fixture(scope="module", params=[2, 3, 4])
def sym(request):
    m = request.param
    return build_symmetries(RootSystem(m, *kappa_for(m)), 1)


def test_all_ledgers_low_degree(sym):
    report = verify_symmetries(sym, 2)
    assert {r["suite"] for r in report} == set(LEDGERS)
    assert all_pass(report), [r for r in report if r["status"] != "pass"][:2]


def test_action_tables(sym):
    assert all_pass(verify_action_tables(sym, 2))


@pytest.mark.parametrize("delta", [1, -1])
def test_negative_delta(delta):
    sym = build_symmetries(RootSystem(5, *kappa_for(5)), delta)
    assert all_pass(verify_symmetries(sym, 1))


def test_phase_twist_breaks_exactly_one_entry():
    sym = build_symmetries(RootSystem(3, *kappa_for(3)), 1)
    rep = run_ledger(action_table_identities(sym, phase_twist=1), 2)
    failed = {r["identity"] for r in rep if r["status"] == "fail"}
    assert failed == {"ds1 O+ = z^2 O- ds1"}


def test_o12_sign_breaks_supercommutation_of_dependents():
    sym = build_symmetries(RootSystem(3, *kappa_for(3)), 1, check_degree=-1, o12_e12_sign=-1)
    rep = verify_symmetries(sym, 2, ["supercommutation"])
    failed = {r["identity"].split("(")[1].split(",")[0] for r in rep if r["status"] == "fail"}
    assert failed == O12_DERIVED
