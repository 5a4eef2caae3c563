import pytest

from bnkit.errors import NotACore, PreconditionError, SymbolCountMismatch
from bnkit.tableaux import (
    core_add_residue,
    core_apply_residue,
    core_length,
    count_k_fillings,
    is_core,
    k_filling_witnesses,
    parse_partition,
    partition_str,
    syt_count,
    syt_count_rect,
)

from oracles import brute_syt_count, peel_length, small_k_cores


def partitions_of(n: int, cap: int | None = None):
    cap = cap or n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


class TestSytCounts:
    def test_small_rectangles_against_enumeration(self):
        assert syt_count_rect(2, 2) == brute_syt_count((2, 2)) == 2
        assert syt_count_rect(2, 3) == brute_syt_count((3, 3)) == 5

    def test_single_row(self):
        for n in range(1, 9):
            assert syt_count_rect(1, n) == 1

    def test_all_shapes_up_to_eight_boxes(self):
        for n in range(0, 9):
            for shape in partitions_of(n):
                assert syt_count(shape) == brute_syt_count(shape)


class TestCoreBasics:
    def test_core_detection(self):
        assert is_core((4, 2, 1, 1), 3)
        assert not is_core((2,), 2)  # hook length 2
        assert is_core((), 5)

    def test_residue_action_examples(self):
        assert core_apply_residue((), 0, 3) == (1,)
        # the unique addable boxes of residue 0 on (3,1,1) sit at contents
        # 3, 0, -3; adding all three gives the 8-box 3-core
        assert core_apply_residue((3, 1, 1), 0, 3) == (4, 2, 1, 1)
        assert core_apply_residue((1,), 1, 3) == (2,)

    def test_involution_and_closure(self):
        for k in (2, 3, 4):
            for p in small_k_cores(k, 10):
                for res in range(k):
                    q = core_apply_residue(p, res, k)
                    assert is_core(q, k)
                    assert core_apply_residue(q, res, k) == p

    def test_strict_add_refuses_non_adds(self):
        with pytest.raises(PreconditionError):
            core_add_residue((1,), 0, 3)  # residue 0 would remove the box

    def test_not_a_core_raises(self):
        with pytest.raises(NotACore):
            core_apply_residue((2,), 0, 2)


class TestCoreLength:
    def test_against_peeling(self):
        for k in (2, 3, 4):
            for p in small_k_cores(k, 12):
                assert core_length(p, k) == peel_length(p, k)

    def test_worked_example(self):
        assert core_length((4, 2, 1, 1), 3) == 5


class TestFillings:
    def test_worked_three_core(self):
        assert count_k_fillings((4, 2, 1, 1), 3, 5) == 2
        words = [w.residues for w in k_filling_witnesses((4, 2, 1, 1), 3, 5)]
        assert words == [(0, 1, 2, 1, 0), (0, 2, 1, 2, 0)]

    def test_empty_core(self):
        assert count_k_fillings((), 4, 0) == 1
        assert k_filling_witnesses((), 4, 0) == [
            w for w in k_filling_witnesses((), 4, 0)
        ]

    def test_huge_k_degenerates_to_syt(self):
        # k above every lattice distance: each step adds one box and
        # fillings are standard tableaux
        assert count_k_fillings((2, 1), 100, 3) == syt_count((2, 1)) == 2
        for shape in [(3, 1), (2, 2), (3, 2, 1)]:
            assert count_k_fillings(shape, 100, sum(shape)) == syt_count(shape)

    def test_symbol_count_mismatch(self):
        with pytest.raises(SymbolCountMismatch):
            count_k_fillings((4, 2, 1, 1), 3, 8)

    def test_not_a_core(self):
        with pytest.raises(NotACore):
            count_k_fillings((3, 1), 2, 3)

    def test_witness_counts_agree_on_small_cores(self):
        for k in (2, 3):
            for p in small_k_cores(k, 9):
                g = core_length(p, k)
                ws = k_filling_witnesses(p, k, g)
                assert len(ws) == count_k_fillings(p, k, g)
                for w in ws:
                    w.validate(p)  # replay + repetition rule


class TestSerialization:
    def test_roundtrip(self):
        assert parse_partition("4,2,1,1") == (4, 2, 1, 1)
        assert partition_str((4, 2, 1, 1)) == "4,2,1,1"
        assert parse_partition("") == ()
