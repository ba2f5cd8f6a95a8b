"""Partitions, Frobenius symbols, parity blocks, brute-force counts."""

from itertools import combinations
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankblocks.partitions import (
    FrobeniusSymbol,
    ParityBlocks,
    Partition,
    alternating_sign_word,
    count_all_columns,
    count_by_blocks,
    count_by_columns,
    count_exact,
    count_prefix_pattern,
    enumerate_partitions,
    from_frobenius,
    iter_frobenius_symbols,
    parity_blocks,
    split_parity_runs,
    successive_ranks,
    to_frobenius,
)
from rankblocks.qseries import MINUS, PLUS, partition_number, partition_number_or_zero

partitions_strategy = st.lists(st.integers(1, 12), min_size=1, max_size=8).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------


def test_enumerate_partitions_n0():
    assert list(enumerate_partitions(0)) == [Partition(())]


def test_enumerate_partitions_order_n4():
    assert [p.parts for p in enumerate_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_partitions_counts():
    assert len(list(enumerate_partitions(10))) == 42
    for n in range(26):
        assert len(list(enumerate_partitions(n))) == partition_number(n)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


# ----------------------------------------------------------------------
# Frobenius symbols
# ----------------------------------------------------------------------


def test_to_frobenius_paper_example():
    f = to_frobenius(Partition((7, 5, 5, 3, 2, 2, 1)))
    assert f.top == (6, 3, 2)
    assert f.bottom == (6, 4, 1)
    assert f.size == 25


def test_to_frobenius_single_cell():
    assert to_frobenius(Partition((1,))) == FrobeniusSymbol((0,), (0,))


def test_to_frobenius_rejects_empty():
    with pytest.raises(ValueError):
        to_frobenius(Partition(()))


def test_from_frobenius_examples():
    assert from_frobenius(FrobeniusSymbol((6, 3, 2), (6, 4, 1))).parts == (7, 5, 5, 3, 2, 2, 1)
    assert from_frobenius(FrobeniusSymbol((1,), (0,))).parts == (2,)


def test_round_trip_all_small_n():
    for n in range(1, 26):
        for p in enumerate_partitions(n):
            f = to_frobenius(p)
            assert from_frobenius(f) == p
            assert f.d == p.durfee_side()


def test_size_formula_exhaustive_small_rows():
    for d in range(1, 4):
        for top in combinations(range(6, -1, -1), d):
            for bottom in combinations(range(6, -1, -1), d):
                f = FrobeniusSymbol(top, bottom)
                assert f.size == sum(top) + sum(bottom) + d
                assert from_frobenius(f).n == f.size


def test_symbol_validation():
    with pytest.raises(ValueError):
        FrobeniusSymbol((1, 1), (1, 0))
    with pytest.raises(ValueError):
        FrobeniusSymbol((1,), (0, 1))
    with pytest.raises(ValueError):
        FrobeniusSymbol((), ())


# ----------------------------------------------------------------------
# ranks and parity blocks
# ----------------------------------------------------------------------


def test_successive_ranks_examples():
    assert successive_ranks(FrobeniusSymbol((6, 3, 2), (6, 4, 1))) == (0, -1, 1)
    assert successive_ranks(FrobeniusSymbol((0,), (0,))) == (0,)


def test_ranks_against_ferrers_oracle():
    # rank i recomputed as (row i length) - (column i length) of the partition
    for n in (9, 14, 20):
        for f in (to_frobenius(p) for p in enumerate_partitions(n)):
            p = from_frobenius(f)
            conj = p.conjugate().parts
            expected = tuple(p.parts[i] - conj[i] for i in range(f.d))
            assert successive_ranks(f) == expected


def test_parity_blocks_paper_examples():
    pb = parity_blocks(FrobeniusSymbol((6, 3, 2), (6, 4, 1)))
    assert pb.sizes == (2, 1) and pb.signs == ("N", "P")
    pb = parity_blocks(FrobeniusSymbol((3, 2, 1), (4, 2, 0)))
    assert pb.sizes == (2, 1) and pb.signs == ("N", "P")


def test_parity_blocks_all_positive():
    pb = parity_blocks(FrobeniusSymbol((5, 4, 3), (2, 1, 0)))
    assert pb.sizes == (3,) and pb.signs == ("P",)


def test_parity_blocks_rank_zero_is_negative():
    assert parity_blocks(FrobeniusSymbol((1,), (1,))).signs == ("N",)


def test_parity_blocks_validation():
    with pytest.raises(ValueError):
        ParityBlocks((1, 1), ("P", "P"), (1, 2))
    with pytest.raises(ValueError):
        ParityBlocks((1, 1), ("P", "N"), (1, 2))  # rank 2 in an N block


@given(partitions_strategy)
@settings(max_examples=120)
def test_block_invariants(p):
    f = to_frobenius(p)
    pb = parity_blocks(f)
    assert sum(pb.sizes) == f.d
    for a, b in zip(pb.signs, pb.signs[1:]):
        assert a != b
    pos = 0
    for size, sign in zip(pb.sizes, pb.signs):
        for r in pb.column_ranks[pos:pos + size]:
            assert (r >= 1) == (sign == "P")
        pos += size
    assert from_frobenius(f) == p


# ----------------------------------------------------------------------
# counts
# ----------------------------------------------------------------------


def test_count_exact_paper_point():
    assert count_exact(15, 3, 2, PLUS) == 3
    found = {(f.top, f.bottom)
             for f in iter_frobenius_symbols(15, 3)
             if parity_blocks(f).m == 2 and parity_blocks(f).last_sign == "P"}
    assert found == {((3, 2, 1), (5, 1, 0)),
                     ((4, 2, 1), (4, 1, 0)),
                     ((3, 2, 1), (4, 2, 0))}


def test_count_exact_smallest_cases():
    assert count_exact(2, 1, 1, PLUS) == 1
    assert count_exact(1, 1, 1, MINUS) == 1
    assert count_exact(1, 1, 1, PLUS) == 0
    assert count_exact(10, 2, 3, PLUS) == 0  # m > d impossible, not an error


def test_minus_equals_shifted_plus():
    for d in range(1, 6):
        for m in range(1, d + 1):
            for n in range(1, 31):
                assert count_exact(n, d, m, MINUS) == count_exact(n + d, d, m, PLUS)


def test_count_by_blocks_m1_and_base():
    for n in range(1, 31):
        assert count_by_blocks(n, 1, PLUS) == partition_number(n) - partition_number_or_zero(n - 1)
    assert count_by_blocks(1, 1, MINUS) == 1


def test_partition_of_unity_by_blocks():
    for n in range(1, 31):
        total = sum(count_by_blocks(n, m, sign)
                    for m in range(1, isqrt(n) + 1) for sign in (PLUS, MINUS))
        assert total == partition_number(n)


def test_partition_of_unity_by_columns():
    for n in range(1, 31):
        total = sum(count_by_columns(n, d, sign)
                    for d in range(1, isqrt(n) + 1) for sign in (PLUS, MINUS))
        assert total == partition_number(n)


def test_count_by_columns_small():
    assert count_by_columns(2, 1, PLUS) == 1
    assert count_by_columns(1, 1, MINUS) == 1


def test_count_all_columns_conventions():
    assert count_all_columns(0, 0) == 1
    assert count_all_columns(3, 0) == 0
    assert count_all_columns(-2, 1) == 0
    for n in range(1, 21):
        assert sum(count_all_columns(n, d) for d in range(1, isqrt(n) + 1)) == partition_number(n)


def test_iter_frobenius_symbols_sizes():
    for n in range(1, 21):
        for d in range(1, isqrt(n) + 1):
            for f in iter_frobenius_symbols(n, d):
                assert f.size == n and f.d == d


# ----------------------------------------------------------------------
# prefix patterns
# ----------------------------------------------------------------------


def test_alternating_sign_word():
    assert alternating_sign_word(1, "N") == "N"
    assert alternating_sign_word(2, "N") == "PN"
    assert alternating_sign_word(3, "N") == "NPN"
    assert alternating_sign_word(4, "P") == "NPNP"


def test_prefix_n_counts_shifted_partitions():
    # partitions whose sign word starts with N are counted by p(n-1) together
    # with the PN starters; the N prefix alone plus the PN prefix gives p(n-1)
    for n in range(1, 31):
        total = count_prefix_pattern(n, "N") + count_prefix_pattern(n, "PN")
        assert total == partition_number_or_zero(n - 1)


def test_prefix_empty_pattern():
    for n in range(1, 16):
        assert count_prefix_pattern(n, "") == partition_number(n)


def test_prefix_pattern_validation():
    with pytest.raises(ValueError):
        count_prefix_pattern(5, "NN")
    with pytest.raises(ValueError):
        count_prefix_pattern(5, "X")


def test_split_parity_runs_requires_columns():
    with pytest.raises(ValueError):
        split_parity_runs(())
