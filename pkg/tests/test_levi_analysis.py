import pytest

from covdual.levi_analysis import (
    EQUAL,
    STRICT,
    LeviAnalysisError,
    is_autotomous,
    property_P,
    strict_descent_holds,
    strict_descent_outcome,
    sweep_strict_descent,
    table1_threshold,
    table2_g2,
    theta_nongeneric,
)
from covdual.root_systems import CartanType, CoverParams, LeviSubset, all_levi_subsets


def S(t, *idx):
    return LeviSubset(CartanType.parse(t), frozenset(idx))


def test_nothing_is_autotomous_at_nk_1():
    c = CoverParams.of("C", 4, 1)
    assert not any(is_autotomous(c, s) for s in all_levi_subsets(c.cartan))


def test_autotomy_c3_empty_subset():
    for nk in range(1, 6):
        v = is_autotomous(CoverParams.of("C", 3, nk), S("C3"))
        assert bool(v) == (nk >= 2)
        if v:
            assert v.beta is not None and v.component_type is not None


@pytest.mark.parametrize("fam,rank", [("A", 4), ("B", 3), ("C", 3), ("D", 4)])
@pytest.mark.parametrize("nk", [1, 2, 3, 5])
def test_non_autotomous_is_property_p(fam, rank, nk):
    c = CoverParams.of(fam, rank, nk)
    for s in all_levi_subsets(c.cartan):
        assert (not is_autotomous(c, s)) == property_P(c, s)


def test_precondition():
    c = CoverParams.of("B", 3, 2)
    with pytest.raises(LeviAnalysisError):
        strict_descent_outcome(c, S("B3", 1), S("B3", 1))


def test_type_a_merging_blocks():
    # blocks (1,1,1,1) -> merge two into (2,1,1); n_kappa = 1 < 1 + 1
    c = CoverParams.of("A", 3, 1)
    assert strict_descent_holds(c, S("A3"), S("A3", 1))


def test_outcome_reports_equality_distinctly():
    # for large n_kappa everything dualises to the regular orbit
    c = CoverParams.of("B", 2, 9)
    assert strict_descent_outcome(c, S("B2"), S("B2", 1)) == EQUAL


@pytest.mark.parametrize("fam", "ABCD")
def test_sweep_small(fam):
    rep = sweep_strict_descent(fam, 4, 5)
    assert rep.checked > 0
    assert rep.violations == []


def test_sweep_full_chains_small():
    rep = sweep_strict_descent("C", 4, 4, full=True)
    assert rep.passed


@pytest.mark.parametrize("fam", "ABCD")
def test_table1(fam):
    for r in range(2, 6):
        for nk in range(1, 13):
            assert theta_nongeneric(CoverParams.of(fam, r, nk)) == table1_threshold(fam, r, nk)


def test_table1_examples():
    assert table1_threshold("A", 4, 4) and not table1_threshold("A", 4, 5)
    assert table1_threshold("C", 3, 8) and not table1_threshold("C", 3, 10)
    assert table1_threshold("D", 4, 5) and not table1_threshold("D", 4, 7)


def test_table2():
    for nk in range(1, 16):
        assert theta_nongeneric(CoverParams.of("G2", 2, nk)) == table2_g2(nk)
