import pytest

from flatperm import perm_core
from flatperm.bijections import (MarkedPartition, avoider_23_1_to_partition,
                                 check_31_2_equivalence,
                                 enumerate_marked_partitions,
                                 inverse_32_1_to_23_1, map_23_1_to_32_1,
                                 partition_to_23_1_avoider)
from flatperm.closed_forms import avoiders
from flatperm.perm_core import (CycleForm, Permutation, VincularPattern3,
                                count_in_flattened_sense, count_occurrences,
                                enumerate_permutations, flatten_cycle_form,
                                to_standard_cycle_form)

PAT_23_1 = VincularPattern3.from_string("23-1")
PAT_32_1 = VincularPattern3.from_string("32-1")

WORKED_PARTITION = MarkedPartition(((6, 5, 2), (10, 7, 3), (4,), (9, 8)),
                                   (False, True, True, False))
WORKED_CYCLES = CycleForm(((1, 6, 5, 2, 10, 7), (3,), (4, 9, 8)))
WORKED_IMAGE = CycleForm(((1, 5, 6, 2, 7, 10), (3,), (4, 9, 8)))


def test_marked_partition_validation():
    with pytest.raises(ValueError):
        MarkedPartition(((2, 5),), (False,))       # not descending
    with pytest.raises(ValueError):
        MarkedPartition(((3,), (2,)), (False, False))  # minima not ascending
    with pytest.raises(ValueError):
        MarkedPartition(((3, 2),), (False, True))  # marks length mismatch
    with pytest.raises(ValueError):
        MarkedPartition(((3, 1),), (False,))       # 1 never belongs
    assert MarkedPartition((), ()).n == 1


def test_partition_to_avoider_worked_example():
    assert partition_to_23_1_avoider(WORKED_PARTITION) == WORKED_CYCLES
    assert avoider_23_1_to_partition(WORKED_CYCLES) == WORKED_PARTITION


def test_partition_to_avoider_smallest_cases():
    assert partition_to_23_1_avoider(MarkedPartition(((2,),), (False,))) \
        == CycleForm(((1, 2),))
    assert partition_to_23_1_avoider(MarkedPartition((), ())) \
        == CycleForm(((1,),))
    # all-marked singleton blocks build the identity permutation
    n = 6
    mp = MarkedPartition(tuple((i,) for i in range(2, n + 1)), (True,) * (n - 1))
    assert partition_to_23_1_avoider(mp).to_permutation() \
        == Permutation.identity(n)


def test_partition_round_trip_exhaustive():
    for n in range(1, 8):
        seen = set()
        total = 0
        for mp in enumerate_marked_partitions(n):
            total += 1
            cf = partition_to_23_1_avoider(mp)
            word = flatten_cycle_form(cf).word
            assert count_occurrences(Permutation(word), PAT_23_1) == 0
            ascents = sum(1 for i in range(n - 1) if word[i] < word[i + 1])
            assert ascents == len(mp.blocks)
            assert avoider_23_1_to_partition(cf) == mp
            seen.add(cf.to_permutation().word)
        assert total == len(seen) == avoiders("23-1", n)


def test_avoider_to_partition_rejects_containment():
    # flattened form 1342 contains 23-1
    bad = CycleForm(((1, 3, 4, 2),))
    with pytest.raises(ValueError):
        avoider_23_1_to_partition(bad)
    with pytest.raises(ValueError):
        map_23_1_to_32_1(bad)


def test_reversal_map_worked_example():
    assert map_23_1_to_32_1(WORKED_CYCLES) == WORKED_IMAGE
    assert inverse_32_1_to_23_1(WORKED_IMAGE) == WORKED_CYCLES


def test_reversal_map_identity_and_single_run():
    ident = to_standard_cycle_form(Permutation.identity(6))
    assert map_23_1_to_32_1(ident) == ident
    assert inverse_32_1_to_23_1(ident) == ident
    # flattened 1432 is 23-1-avoiding but contains 32-1: its single
    # descending run must be reversed even though it trails the last ascent
    src = CycleForm(((1, 4, 3, 2),))
    out = map_23_1_to_32_1(src)
    assert flatten_cycle_form(out).word == (1, 3, 4, 2)
    assert inverse_32_1_to_23_1(out) == src


def test_inverse_rejects_containment():
    with pytest.raises(ValueError):
        inverse_32_1_to_23_1(CycleForm(((1, 4, 3, 2),)))


def test_reversal_bijection_exhaustive():
    for n in range(1, 8):
        sources = [to_standard_cycle_form(p) for p in enumerate_permutations(n)
                   if count_in_flattened_sense(p, PAT_23_1) == 0]
        images = set()
        for cf in sources:
            out = map_23_1_to_32_1(cf)
            word = flatten_cycle_form(out).word
            assert count_occurrences(Permutation(word), PAT_32_1) == 0
            for before, after in zip(cf.cycles, out.cycles):
                assert sorted(before) == sorted(after)
            assert inverse_32_1_to_23_1(out) == cf
            images.add(out.to_permutation().word)
        assert len(images) == len(sources) == avoiders("32-1", n)


def test_check_31_2_equivalence():
    for n in range(1, 8):
        assert check_31_2_equivalence(n)
    with pytest.raises(perm_core.CapExceeded):
        check_31_2_equivalence(11)
