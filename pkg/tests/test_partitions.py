from collections import Counter
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from multisym.partitions import (
    Partition,
    SetPartition,
    composition_count,
    cycle_type_count,
    enumerate_set_partitions,
    enumerate_set_partitions_of_shape,
    join,
    meet,
    necklace_count,
    necklaces,
    partitions_of,
    puzzles,
    refinements,
    refines,
    set_partition_count,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


# -- integer partitions --------------------------------------------------------


def test_partition_validation():
    assert Partition((3, 1, 1)) == (3, 1, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.from_parts([1, 3, 2]) == (3, 2, 1)


def test_partition_text_roundtrip():
    assert Partition.parse("") == Partition()
    assert Partition.parse(" 2,1 ") == (2, 1)
    assert str(Partition((3, 2, 2))) == "3,2,2"
    with pytest.raises(ValueError):
        Partition.parse("2,x")


def test_partition_statistics():
    lam = Partition((3, 2, 2, 1))
    assert lam.size == 8 and lam.length == 4
    assert lam.multiplicity(2) == 2 and lam.multiplicity(5) == 0
    assert lam.aut() == 2
    assert lam.factorial_product() == 6 * 2 * 2 * 1
    assert lam | (2, 1) == (3, 2, 2, 2, 1, 1)


def test_partitions_of_six():
    assert len(partitions_of(6)) == 11


@pytest.mark.parametrize("n", range(0, 11))
def test_partitions_of_matches_compositions(n):
    got = partitions_of(n)
    assert set(got) == oracles.integer_partitions(n)
    assert len(got) == len(set(got))


@pytest.mark.parametrize("n", range(1, 9))
def test_partitions_reverse_lex(n):
    got = [tuple(p) for p in partitions_of(n)]
    assert got == sorted(got, reverse=True)
    assert got[0] == (n,) and got[-1] == (1,) * n


def test_partitions_of_negative():
    with pytest.raises(ValueError):
        partitions_of(-1)


# -- set partitions ------------------------------------------------------------


def test_set_partition_count_example():
    assert set_partition_count(4, Partition((2, 2))) == 3
    assert set_partition_count(0, Partition()) == 1
    assert set_partition_count(3, Partition((2, 1))) == 3
    assert set_partition_count(5, Partition((5,))) == 1
    with pytest.raises(ValueError):
        set_partition_count(3, Partition((2, 2)))


@pytest.mark.parametrize("n", range(0, 9))
def test_set_partition_counts_against_enumeration(n):
    by_shape = Counter(oracles.shape(b) for b in oracles.set_partitions(n))
    for lam in partitions_of(n):
        assert set_partition_count(n, lam) == by_shape[tuple(lam)]
    assert sum(by_shape.values()) == BELL[n]


@pytest.mark.parametrize("n", range(0, 8))
def test_enumerate_set_partitions(n):
    got = enumerate_set_partitions(n)
    assert len(got) == BELL[n]
    assert {frozenset(map(frozenset, p.blocks)) for p in got} == set(oracles.set_partitions(n))


def test_enumerate_three():
    assert len(enumerate_set_partitions(3)) == 5
    assert len(enumerate_set_partitions_of_shape(4, Partition((2, 2)))) == 3


def test_set_partition_canonical_form():
    a = SetPartition(4, [(3, 1), (4, 2)])
    b = SetPartition.parse("2,4|1,3")
    assert a == b and hash(a) == hash(b)
    assert str(a) == "1,3|2,4"
    assert a.labels() == [0, 1, 0, 1]
    assert SetPartition.from_labels([5, 7, 5, 7]) == a
    assert a.shape == (2, 2)


def test_set_partition_rejects_bad_blocks():
    with pytest.raises(ValueError):
        SetPartition(3, [(1, 2)])
    with pytest.raises(ValueError):
        SetPartition(3, [(1, 2), (2, 3)])


def test_meet_join_examples():
    a, b = SetPartition.parse("1,2|3,4"), SetPartition.parse("1,3|2,4")
    assert join(a, b) == SetPartition.coarsest(4)
    assert meet(a, b) == SetPartition.finest(4)
    assert (a | b) == join(a, b) and (a & b) == meet(a, b)


def test_mismatched_ground_sets():
    with pytest.raises(ValueError):
        meet(SetPartition.finest(3), SetPartition.finest(4))
    with pytest.raises(ValueError):
        refines(SetPartition.finest(3), SetPartition.finest(4))


@pytest.mark.parametrize("n", range(0, 5))
def test_lattice_ops_exhaustive(n):
    parts = enumerate_set_partitions(n)
    for a in parts:
        fa = frozenset(map(frozenset, a.blocks))
        for b in parts:
            fb = frozenset(map(frozenset, b.blocks))
            assert frozenset(map(frozenset, meet(a, b).blocks)) == oracles.brute_meet(fa, fb)
            assert refines(a, b) == oracles.brute_refines(fa, fb)
            j = join(a, b)
            # the join is the least common coarsening
            uppers = [c for c in parts if refines(a, c) and refines(b, c)]
            assert j in uppers and all(refines(j, c) for c in uppers)


set_partitions_6 = st.integers(0, 6).flatmap(
    lambda n: st.tuples(*[st.sampled_from(enumerate_set_partitions(n))] * 3)
)


@settings(max_examples=300, deadline=None)
@given(set_partitions_6)
def test_lattice_laws(triple):
    a, b, c = triple
    assert meet(a, b) == meet(b, a)
    assert join(a, b) == join(b, a)
    assert meet(a, meet(b, c)) == meet(meet(a, b), c)
    assert join(a, join(b, c)) == join(join(a, b), c)
    assert meet(a, join(a, b)) == a
    assert join(a, meet(a, b)) == a
    assert refines(meet(a, b), a) and refines(a, join(a, b))
    assert refines(a, b) == (meet(a, b) == a)


@pytest.mark.parametrize("n", range(0, 6))
def test_refinements(n):
    for p in enumerate_set_partitions(n):
        got = list(refinements(p))
        assert len(got) == len(set(got))
        assert set(got) == {q for q in enumerate_set_partitions(n) if refines(q, p)}


# -- puzzles -----------------------------------------------------------------


def test_puzzle_examples():
    assert puzzles((2, 1), (2, 1)) == [(Partition((2,)), Partition((1,)))]
    assert puzzles((1, 1, 1), (2, 1)) == [(Partition((1, 1)), Partition((1,)))]
    assert puzzles((2,), (1, 1)) == []
    assert puzzles((), ()) == [()]


@pytest.mark.parametrize("n", range(1, 8))
def test_puzzles_against_assignment(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            got = puzzles(mu, lam)
            assert len(got) == len(set(got))
            assert {tuple(map(tuple, pz)) for pz in got} == oracles.brute_puzzles(mu, lam)


def test_puzzle_existence_degree_eight():
    for lam in partitions_of(8):
        for mu in partitions_of(8):
            assert bool(puzzles(mu, lam)) == bool(oracles.brute_puzzles(mu, lam))


def test_puzzle_size_mismatch():
    with pytest.raises(ValueError):
        puzzles((2,), (1,))


# -- necklaces, cycle types, compositions ----------------------------------------


@pytest.mark.parametrize("mu,count", [((1, 1), 1), ((2, 1), 3), ((3,), 1), ((1, 1, 1), 2), ((2, 2), 3)])
def test_necklace_examples(mu, count):
    assert necklace_count(Partition(mu)) == count


@pytest.mark.parametrize("n", range(1, 8))
def test_necklaces_against_rotation_classes(n):
    for mu in partitions_of(n):
        listed = list(necklaces(mu))
        assert len(listed) == len(set(listed))
        assert necklace_count(mu) == len(listed) == len(oracles.necklace_set(mu))


@pytest.mark.parametrize("lam,count", [((3,), 2), ((2, 1), 3), ((1, 1, 1), 1)])
def test_cycle_type_examples(lam, count):
    assert cycle_type_count(Partition(lam)) == count


@pytest.mark.parametrize("n", range(1, 8))
def test_cycle_types_against_permutations(n):
    brute = oracles.cycle_type_counts(n)
    for lam in partitions_of(n):
        assert cycle_type_count(lam) == brute[tuple(lam)]
    assert sum(cycle_type_count(lam) for lam in partitions_of(n)) == factorial(n)


def test_composition_count():
    assert composition_count(Partition((2, 2, 1))) == 3
    for n in range(1, 8):
        for mu in partitions_of(n):
            assert composition_count(mu) == len(set(permutations(mu)))


@pytest.mark.parametrize("fn", [necklace_count, cycle_type_count, composition_count])
def test_empty_partition_rejected(fn):
    with pytest.raises(ValueError):
        fn(Partition())
