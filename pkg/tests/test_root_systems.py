import numpy as np
import pytest

from covdual.root_systems import (
    CartanType,
    CoverParams,
    LeviSubset,
    RootSystemError,
    all_levi_subsets,
    coroot_norms,
    dual_group_family,
    enumerate_pseudo_levis,
    enumerate_vertex_splits,
    exponents,
    fixed_dimension,
    max_exponent,
    pairing_matrix,
    quotient_XN,
    weyl_group_elements,
    weyl_order,
)

T = CartanType.parse


def test_exponents_and_orders():
    assert exponents(T("A4")) == (1, 2, 3, 4)
    assert sorted(exponents(T("D4"))) == [1, 3, 3, 5]
    assert exponents(T("G2")) == (1, 5)
    assert weyl_order(T("A2")) == 6
    assert weyl_order(T("C3")) == 48
    assert weyl_order(T("G2")) == 12


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "G2"])
def test_weyl_group_enumeration_has_right_order(t):
    assert len(weyl_group_elements(T(t))) == weyl_order(T(t))


def test_coroot_norms():
    assert coroot_norms(T("B3")) == (1, 1, 2)
    assert coroot_norms(T("C3")) == (2, 2, 1)
    assert coroot_norms(T("G2")) == (3, 1)


def test_pairing_matrix_is_cartan_matrix_of_b2():
    assert pairing_matrix(T("B2")) == ((2, -2), (-1, 2))


def test_max_exponent():
    assert max_exponent(LeviSubset(T("A5"), frozenset({1, 2}))) == 2
    assert max_exponent(LeviSubset(T("C3"), frozenset({1, 2, 3}))) == 5
    assert max_exponent(LeviSubset(T("C3"), frozenset())) == 0


def test_levi_subset_count():
    assert len(all_levi_subsets(T("B4"))) == 16


def test_cover_parsing():
    c = CoverParams.parse("C3@n=4@nk=2")
    assert (c.family, c.rank, c.n, c.n_kappa) == ("C", 3, 4, 2)
    assert str(c) == "C3@n=4@nk=2"
    with pytest.raises(RootSystemError):
        CoverParams.parse("C3@n=4@nk=3")


def test_dual_family():
    assert dual_group_family(CoverParams.of("B", 3, 3)) == "C"
    assert dual_group_family(CoverParams.of("C", 3, 4)) == "C"
    assert dual_group_family(CoverParams.of("A", 3, 5)) == "A"


def test_pseudo_levis_type_a():
    got = {str(x) for x in enumerate_pseudo_levis(CoverParams.of("A", 3, 2), T("A3"))}
    assert got == {"A3", "A2", "A1+A1"}


def test_pseudo_levis_single_component_at_nk_1():
    assert {str(x) for x in enumerate_pseudo_levis(CoverParams.of("C", 2, 1), T("C2"))} == {"C2"}


def test_pseudo_levis_rank_is_conserved():
    # A1+B1 would have rank 3 inside B2, so it is not produced
    got = {str(x) for x in enumerate_pseudo_levis(CoverParams.of("B", 2, 3), T("B2"))}
    assert got == {"B2", "B1", "A1"}


def test_vertex_splits():
    assert enumerate_vertex_splits(CoverParams.of("A", 5, 2)) == [(("A", 5),)]
    b3 = enumerate_vertex_splits(CoverParams.of("B", 3, 2))
    assert b3[0] == (("D", 0), ("B", 3))
    assert len(enumerate_vertex_splits(CoverParams.of("B", 3, 2), genuine_only=True)) == 3


def test_quotient_sl2():
    L = quotient_XN(CoverParams.of("A", 1, 3))
    assert L.invariant_factors == (3,)
    minus = -np.eye(1, dtype=np.int64)
    assert L.fixed_points(minus) == 1


def test_quotient_trivial_for_n1():
    assert quotient_XN(CoverParams.of("C", 3, 1)).order == 1


def test_fix_law_small_diamond_covers():
    for fam, r, n in [("A", 2, 2), ("B", 2, 3), ("C", 3, 3), ("D", 4, 3)]:
        c = CoverParams.of(fam, r, n)
        assert c.diamond
        L = quotient_XN(c)
        for w in weyl_group_elements(c.cartan):
            assert L.fixed_points(w) == n ** fixed_dimension(w)
