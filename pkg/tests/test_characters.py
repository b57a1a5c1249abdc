import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from covdual.characters import (
    INNER_PRODUCT_LOG,
    HypothesisError,
    IntegralityError,
    WeylIrrep,
    _guard,
    c_theta,
    conjugacy_classes,
    gns_type_A,
    gns_type_BC,
    gns_type_BC_as_printed,
    hook_dimension,
    inner_product_sigma,
    irreps,
    mn_character,
    parse_components,
    sommers_brute,
    sommers_value,
    stated_j_irrep,
    tensor_sign,
    wavefront_levi,
    wavefront_levi_subset,
)
from covdual.partitions import Partition
from covdual.root_systems import CartanType, CoverParams, all_levi_subsets, quotient_XN, weyl_group_elements, weyl_order

T = CartanType.parse


def test_class_data():
    a2 = conjugacy_classes(T("A2"))
    assert sorted(c.size for c in a2) == [1, 2, 3]
    c2 = conjugacy_classes(T("C2"))
    assert len(c2) == 5 and sum(c.size for c in c2) == 8
    assert len(conjugacy_classes(T("G2"))) == 6


@pytest.mark.parametrize("t", ["A3", "A4", "B2", "B3", "C4", "D4", "D5", "G2"])
def test_orthogonality_and_dimensions(t):
    t = T(t)
    classes = conjugacy_classes(t)
    reps = irreps(t)
    order = weyl_order(t)
    ident = [c for c in classes if c.d_w == t.rank][0]
    for a in reps:
        assert mn_character(a, ident) == hook_dimension(a)
        for b in reps:
            s = sum(c.size * mn_character(a, c) * mn_character(b, c) for c in classes)
            assert s == (order if a == b else 0)


@pytest.mark.parametrize("t", ["A3", "B3", "D4"])
def test_trivial_and_sign(t):
    t = T(t)
    if t.family == "A":
        triv, sign = WeylIrrep.A([t.rank + 1]), WeylIrrep.A([1] * (t.rank + 1))
    else:
        triv = WeylIrrep.bi(t.family, [t.rank], [])
        sign = WeylIrrep.bi(t.family, [], [1] * t.rank)
    for c in conjugacy_classes(t):
        assert mn_character(triv, c) == 1
        assert mn_character(sign, c) == c.sign_value


def test_class_d_matches_matrices():
    for t in ("B3", "D4", "A3"):
        t = T(t)
        from collections import Counter

        from covdual.root_systems import fixed_dimension

        by_matrix = Counter(fixed_dimension(w) for w in weyl_group_elements(t))
        by_class = Counter()
        for c in conjugacy_classes(t):
            by_class[c.d_w] += c.size
        assert by_matrix == by_class


@pytest.mark.parametrize("t", ["A4", "B4", "D4"])
def test_tensor_sign_matches_characters(t):
    t = T(t)
    for E in irreps(t):
        F = tensor_sign(E)
        for c in conjugacy_classes(t):
            assert mn_character(F, c) == c.sign_value * mn_character(E, c)


def test_tensor_sign_examples():
    m, a, b = 2, 2, 1
    E = WeylIrrep.bi("C", [m] * a + [b], [m + 1] * a)
    F = tensor_sign(E)
    assert F == WeylIrrep.bi("C", [a] * (m + 1), [a + 1] * b + [a] * (m - b))
    n, a, b = 3, 2, 1
    assert tensor_sign(WeylIrrep.A([n] * a + [b])) == WeylIrrep.A([a + 1] * b + [a] * (n - b))


def test_hook_dimensions():
    assert hook_dimension(WeylIrrep.A([2, 1])) == 2
    assert hook_dimension(WeylIrrep.A([4])) == 1
    assert hook_dimension(WeylIrrep.bi("B", [3], [])) == 1


def test_sl2_inner_products():
    c = CoverParams.of("A", 1, 3)
    assert inner_product_sigma(c, WeylIrrep.A([1, 1])) == 1
    assert inner_product_sigma(c, WeylIrrep.A([2])) == 2  # orbits {0}, {1, 2}


def test_inner_products_against_direct_enumeration():
    for fam, r, n in [("B", 2, 3), ("C", 3, 3), ("A", 2, 2), ("D", 4, 3)]:
        c = CoverParams.of(fam, r, n)
        L = quotient_XN(c)
        els = weyl_group_elements(c.cartan)
        from covdual.root_systems import fixed_dimension

        # trivial character: Burnside count of orbits
        burnside = Fraction(sum(L.fixed_points(w) for w in els), len(els))
        triv = WeylIrrep.A([r + 1]) if fam == "A" else WeylIrrep.bi(fam, [r], [])
        assert inner_product_sigma(c, triv) == burnside


def test_integrality_guard():
    with pytest.raises(IntegralityError):
        _guard(Fraction(1, 2), "test")
    with pytest.raises(IntegralityError):
        _guard(Fraction(-1), "test")
    assert _guard(Fraction(4, 2), "test") == 2
    assert INNER_PRODUCT_LOG[-1][2] is True


def test_gns_closed_forms():
    for r in range(1, 5):
        for n in (1, 3, 5, 7):
            if math.gcd(n, r + 1) == 1:
                c = CoverParams.of("A", r, n)
                for E in irreps(c.cartan):
                    assert inner_product_sigma(c, E) == gns_type_A(E.label, n)
            for fam in "BC":
                c = CoverParams.of(fam, r, n)
                for E in irreps(c.cartan):
                    assert inner_product_sigma(c, E) == gns_type_BC(*E.label, n)


def test_printed_bc_form_is_off():
    c = CoverParams.of("B", 2, 3)
    E = WeylIrrep.bi("B", [], [2])
    assert inner_product_sigma(c, E) == gns_type_BC([], [2], 3)
    assert gns_type_BC_as_printed([], [2], 3) != gns_type_BC([], [2], 3)


def test_parse_components():
    assert parse_components("A4+A1") == [("A", 4), ("A", 1)]
    assert parse_components("2A2+B3") == [("A", 2), ("A", 2), ("B", 3)]
    assert parse_components("0") == []
    assert parse_components("G2") == [("G2", 2)]


@pytest.mark.parametrize(
    "r,J,n,value",
    [(6, "A4+A1", 5, 2), (7, "A4+A2", 5, 2), (7, "A6", 7, 1), (8, "A6+A1", 7, 3)],
)
def test_sommers_values(r, J, n, value):
    assert sommers_value(r, J, n) == value
    assert sommers_brute(r, J, n) == value


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A4", "B3", "C4", "D4", "D5", "G2"]), st.integers(1, 9), st.data())
def test_sommers_class_sum_agreement(t, n, data):
    t = T(t)
    S = data.draw(st.sampled_from(all_levi_subsets(t)))
    comps = S.component_types()
    assert sommers_value(t.rank, comps, n) == sommers_brute(t.rank, comps, n)


def test_stated_irreps():
    assert stated_j_irrep(CoverParams.of("A", 3, 3)) == WeylIrrep.A([3, 1])
    assert stated_j_irrep(CoverParams.of("C", 4, 3)) == WeylIrrep.bi("C", [1, 1], [2])
    assert stated_j_irrep(CoverParams.of("D", 7, 3)) == WeylIrrep.bi("D", [2, 2, 1], [1, 1])


def test_wavefront_levi_shapes():
    assert wavefront_levi(CoverParams.of("A", 6, 5)) == [("A", 4), ("A", 1)]
    c = CoverParams.of("C", 4, 3)
    assert wavefront_levi(c) == [("A", 2), ("C", 1)]
    assert sorted(wavefront_levi_subset(c).component_types()) == sorted([("A", 2), ("C", 1)])
    d = CoverParams.of("D", 4, 3)
    with pytest.raises(HypothesisError):
        wavefront_levi(d)


def test_c_theta_examples():
    rep = c_theta(CoverParams.of("A", 6, 5))
    assert (rep.lhs, rep.rhs, rep.equal) == (2, 2, True)
    rep = c_theta(CoverParams.of("C", 4, 3))
    assert (rep.lhs, rep.rhs, rep.equal) == (1, 1, True)


def test_c_theta_needs_normalised_cover():
    with pytest.raises(HypothesisError):
        c_theta(CoverParams.of("A", 3, 2))
