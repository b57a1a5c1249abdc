import pytest
from hypothesis import given, settings, strategies as st

from covdual.partitions import (
    Partition,
    PartitionError,
    X_partitions_of,
    add,
    collapse,
    comparable,
    dominates,
    is_special,
    is_very_even,
    is_X_partition,
    minus_op,
    partitions_of,
    plus_op,
    s_part,
    self_dual,
    special_partitions,
    transpose,
    union,
)

from oracle_data import COLLAPSE

P = Partition.of


def partitions(max_total=12):
    return st.integers(min_value=0, max_value=max_total).flatmap(
        lambda n: st.sampled_from(partitions_of(n))
    )


def test_parse_and_print_round_trip():
    assert str(Partition.parse("4,4,2,2:I")) == "4,4,2,2:I"
    assert Partition.parse("0") == Partition()
    assert str(Partition()) == "0"


def test_rejects_bad_input():
    with pytest.raises(PartitionError):
        Partition((1, 2))
    with pytest.raises(PartitionError):
        Partition.parse("3,x")
    with pytest.raises(PartitionError):
        Partition((3, 1), "I")


def test_transpose_examples():
    assert transpose(P([3, 2, 1])) == P([3, 2, 1])
    assert transpose(Partition()) == Partition()
    assert transpose(P([4, 1])) == P([2, 1, 1, 1])


def test_add_and_union():
    assert add(P([3, 2, 1]), P([5, 4]), P([3, 2])) == P([11, 8, 1])
    assert add(P([2, 2]), P([1])) == P([3, 2])
    assert union(P([3, 1]), P([2])) == P([3, 2, 1])
    assert transpose(union(P([3, 1]), P([2]))) == add(transpose(P([3, 1])), transpose(P([2])))


def test_dominance_examples():
    assert dominates(P([4]), P([2, 2]))
    assert not dominates(P([2, 2]), P([3, 1]))
    assert dominates(P([3, 3, 1]), P([3, 2, 2]))
    with pytest.raises(PartitionError):
        dominates(P([3]), P([2]))


def test_s_part():
    assert s_part(7, 3) == P([3, 3, 1])
    assert s_part(6, 3) == P([3, 3])
    assert s_part(2, 5) == P([2])


def test_plus_minus():
    assert plus_op(P([3, 3, 1])) == P([4, 3, 1])
    assert minus_op(P([3, 3, 1])) == P([3, 3])
    with pytest.raises(PartitionError):
        minus_op(Partition())


def test_classes():
    assert is_very_even(P([4, 4, 2, 2]))
    assert not is_very_even(P([4, 2, 2]))
    assert not is_X_partition(P([3, 3, 1]), "C")
    assert is_X_partition(P([3, 3]), "C")


def test_collapse_examples():
    assert collapse(P([5, 2]), "B") == P([5, 1, 1])
    assert collapse(P([4, 2]), "C") == P([4, 2])
    with pytest.raises(PartitionError):
        collapse(P([7]), "C")


@pytest.mark.parametrize("key", sorted(COLLAPSE))
def test_collapse_matches_frozen_oracle(key):
    fam, p = key
    assert str(collapse(Partition.parse(p), fam)) == COLLAPSE[key]


def test_special_partitions_small():
    assert special_partitions(2, "C") == frozenset({P([2]), P([1, 1])})
    assert is_special(P([2, 2, 1, 1]), "C") == (P([2, 2, 1, 1]) in special_partitions(6, "C"))


@given(partitions())
def test_transpose_is_involution(p):
    assert transpose(transpose(p)) == p


@given(partitions(10), st.data())
def test_transpose_reverses_dominance(p, data):
    q = data.draw(st.sampled_from(partitions_of(p.total)))
    assert dominates(p, q) == dominates(transpose(q), transpose(p))


@settings(max_examples=150)
@given(partitions(14), st.sampled_from("BCD"))
def test_collapse_is_largest_class_member_below(p, fam):
    if (fam == "B") != (p.total % 2 == 1):
        with pytest.raises(PartitionError):
            collapse(p, fam)
        return
    q = collapse(p, fam)
    assert is_X_partition(q, fam)
    assert dominates(p, q)
    assert collapse(q, fam) == q
    for x in X_partitions_of(p.total, fam):
        if dominates(p, x):
            assert dominates(q, x)


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=14), st.sampled_from("BCD"))
def test_self_duality_is_involution_on_specials(total, fam):
    for q in special_partitions(total, fam):
        assert self_dual(self_dual(q, fam), fam) == q


def test_comparable():
    assert comparable(P([3, 1]), P([2, 2]))
    assert not comparable(P([3, 1, 1, 1]), P([2, 2, 2]))
