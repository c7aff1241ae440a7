import pytest

from dunkl_sym.dunkl import RootSystem
from dunkl_sym.grp import (RelationViolated, check_irrep_relations, conjugacy_classes,
                           constant_spinor_character, irrep_table, make_cover, match_irrep,
                           realization_map, table_report)
from conftest import kappa_for


def expected_count(m: int) -> int:
    p = m // 2
    return 4 * p + 5 if m % 2 else 4 * p + 6


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("sign", ["plus", "minus"])
def test_table_report(m, sign):
    rep = table_report(make_cover(m, sign))
    assert rep["order"] == 8 * m
    assert rep["n_classes"] == rep["n_irreps"]
    assert rep["sum_dim_sq"] == 8 * m
    assert rep["class_functions"] and rep["relations"] and rep["orthonormal"]


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_positive_cover_count(m):
    assert table_report(make_cover(m, "plus"))["n_irreps"] == expected_count(m)


@pytest.mark.parametrize("m,sign,count", [(3, "plus", 9), (2, "minus", 10)])
def test_known_counts(m, sign, count):
    assert len(irrep_table(make_cover(m, sign))) == count


def test_spin_irreps_send_z_to_minus_one():
    g = make_cover(4, "plus")
    for r in irrep_table(g).spin():
        z = r.gens["z"]
        assert all(z.entry(i, i) == -z.field.one for i in range(r.dim))


def test_conjugacy_classes_partition_group():
    g = make_cover(3, "minus")
    classes = conjugacy_classes(g)
    assert sum(len(c) for c in classes) == g.order


def test_corrupted_irrep_fails_relations():
    g = make_cover(3, "plus")
    r = irrep_table(g).irreps[-1]
    r.gens["s0"] = r.gens["s0"].scale(r.gens["s0"].field.i)
    assert not all(check_irrep_relations(g, r).values())


@pytest.mark.parametrize("m", [2, 3])
def test_realization_on_operators(m):
    rs = RootSystem(m, *kappa_for(m))
    g = make_cover(m, "plus")
    assert all(r["status"] == "pass" for r in realization_map(g, rs, 1, 1))


def test_realization_refuses_minus_cover():
    with pytest.raises(ValueError):
        realization_map(make_cover(3, "minus"), RootSystem(3, *kappa_for(3)))


def test_constant_spinors_form_a_spin_irrep():
    m = 4
    g = make_cover(m, "plus")
    chars = constant_spinor_character(g, RootSystem(m, *kappa_for(m)))
    names = match_irrep(irrep_table(g), chars)
    assert len(names) == 1
    assert irrep_table(g).find(names[0]).epsilon == -1


def test_make_cover_validates():
    with pytest.raises(ValueError):
        make_cover(1)
    assert issubclass(RelationViolated, AssertionError)
