"""Series arithmetic, Gaussian binomials, partition numbers, closed forms."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankblocks.qseries import (
    MINUS,
    PLUS,
    QSeries,
    block_count_formula,
    euler_inverse,
    partition_number,
    partition_number_or_zero,
    pochhammer,
    qbinomial,
    qbinomial_column_sum_check,
    series_by_blocks,
    series_by_columns,
    series_exact,
)

# ----------------------------------------------------------------------
# independent oracles
# ----------------------------------------------------------------------


def naive_partition_count(n, max_part=None):
    """Exhaustive partition counting, independent of the pentagonal recurrence."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    return sum(naive_partition_count(n - first, first)
               for first in range(1, min(max_part, n) + 1))


def naive_product(factors, precision):
    """Term-by-term polynomial product oracle; factors are coefficient dicts."""
    acc = {0: 1}
    for f in factors:
        nxt = {}
        for e1, c1 in acc.items():
            for e2, c2 in f.items():
                e = e1 + e2
                if e <= precision:
                    nxt[e] = nxt.get(e, 0) + c1 * c2
        acc = nxt
    return tuple(acc.get(k, 0) for k in range(precision + 1))


def long_division(num, den, precision):
    """Coefficients of num/den by schoolbook long division (den[0] == 1)."""
    out = []
    for k in range(precision + 1):
        c = (num[k] if k < len(num) else 0)
        c -= sum(out[j] * den[k - j] for j in range(max(0, k - len(den) + 1), k))
        out.append(c)
    return tuple(out)


def box_partition_weights(rows, cols):
    """Weights of all partitions fitting in a rows x cols box, by enumeration."""
    weights = []

    def rec(remaining_rows, cap, total):
        weights.append(total)
        if remaining_rows == 0:
            return
        for part in range(1, cap + 1):
            rec(remaining_rows - 1, part, total + part)

    rec(rows, cols, 0)
    return weights


# ----------------------------------------------------------------------
# arithmetic
# ----------------------------------------------------------------------


def test_add_basic():
    a = QSeries.from_coeffs([1, 1], 5)
    b = QSeries.monomial(2, 5)
    assert (a + b).coeffs == (1, 1, 1, 0, 0, 0)


def test_add_zero_identity():
    a = QSeries.from_coeffs([3, 0, -2, 7], 6)
    assert a + QSeries.zero(6) == a


def test_precision_min_rule():
    a = QSeries.one(10)
    b = QSeries.one(5)
    assert (a + b).precision == 5
    assert (a * b).precision == 5
    assert (a - b).precision == 5


def test_mul_difference_of_squares():
    one_plus = QSeries.from_coeffs([1, 1], 4)
    one_minus = QSeries.from_coeffs([1, -1], 4)
    assert (one_plus * one_minus).coeffs == (1, 0, -1, 0, 0)


def test_mul_one_identity():
    a = QSeries.from_coeffs([2, -1, 0, 5], 7)
    assert a * QSeries.one(7) == a


def test_invert_matches_long_division():
    den = QSeries.from_coeffs([1, -1], 12)
    expected = long_division((1,), (1, -1), 12)
    assert den.invert_unit().coeffs == expected
    assert expected == (1,) * 13  # geometric series


def test_invert_one():
    assert QSeries.one(6).invert_unit() == QSeries.one(6)


def test_invert_multiply_back():
    poch = pochhammer(1, 3, 10)
    assert poch.invert_unit() * poch == QSeries.one(10)


def test_invert_rejects_non_unit():
    with pytest.raises(ValueError):
        QSeries.from_coeffs([2, 1], 4).invert_unit()
    with pytest.raises(ValueError):
        QSeries.zero(4).invert_unit()


def test_truncate_never_extends():
    a = QSeries.one(4)
    assert a.truncate(2).precision == 2
    with pytest.raises(ValueError):
        a.truncate(9)


def test_equality_up_to_common_precision():
    assert QSeries.from_coeffs([1, 1], 10) == QSeries.from_coeffs([1, 1], 5)
    assert QSeries.from_coeffs([1, 1], 10) != QSeries.from_coeffs([1, 2], 5)


@given(st.lists(st.integers(-9, 9), min_size=8, max_size=8),
       st.lists(st.integers(-9, 9), min_size=8, max_size=8),
       st.lists(st.integers(-9, 9), min_size=8, max_size=8))
@settings(max_examples=60)
def test_mul_associative_commutative_distributive(a, b, c):
    x, y, z = (QSeries(tuple(v)) for v in (a, b, c))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(st.sampled_from([1, -1]), st.lists(st.integers(-6, 6), min_size=7, max_size=7))
@settings(max_examples=60)
def test_invert_unit_is_two_sided_inverse(unit, tail):
    a = QSeries((unit, *tail))
    assert a * a.invert_unit() == QSeries.one(7)
    assert a.invert_unit() * a == QSeries.one(7)


def test_json_round_trip():
    a = QSeries.from_coeffs([1, -2, 10**25], 4)
    data = a.to_json_dict()
    assert data["coeffs"][2] == str(10**25)
    assert QSeries.from_json_dict(data) == a


# ----------------------------------------------------------------------
# pochhammer and Gaussian binomials
# ----------------------------------------------------------------------


def test_pochhammer_empty_product():
    assert pochhammer(1, 0, 8) == QSeries.one(8)


def test_pochhammer_small_expansion():
    assert pochhammer(1, 2, 5).coeffs == (1, -1, -1, 1, 0, 0)


def test_pochhammer_against_naive_product():
    factors = [{0: 1, 3 + j: -1} for j in range(4)]
    assert pochhammer(3, 4, 20).coeffs == naive_product(factors, 20)


def test_qbinomial_boundaries():
    for n in range(9):
        assert qbinomial(n, 0) == QSeries((1,))
        assert qbinomial(n, n) == QSeries((1,))


def test_qbinomial_box_oracle():
    weights = box_partition_weights(2, 2)
    expected = [0] * 5
    for w in weights:
        expected[w] += 1
    assert qbinomial(4, 2).coeffs == tuple(expected) == (1, 1, 2, 1, 1)


def test_qbinomial_out_of_range_is_zero():
    assert qbinomial(3, 5).is_zero()
    assert qbinomial(3, -1).is_zero()


@pytest.mark.parametrize("n", range(17))
def test_qbinomial_symmetry_nonnegativity_total(n):
    for k in range(n + 1):
        coeffs = qbinomial(n, k).coeffs
        assert all(c >= 0 for c in coeffs)
        assert coeffs == coeffs[::-1]
        assert sum(coeffs) == comb(n, k)


@pytest.mark.parametrize("n", range(1, 13))
def test_qbinomial_pascal_both_forms(n):
    # The mirror form q^k [n-1,k] + [n-1,k-1] is independent of the
    # implementation's own recurrence.
    for k in range(n + 1):
        precision = max(k * (n - k), 1)
        lhs = qbinomial(n, k, precision)
        low = qbinomial(n - 1, k, precision)
        high = qbinomial(n - 1, k - 1, precision)
        shift_a = QSeries.monomial(n - k, precision)
        shift_b = QSeries.monomial(k, precision)
        assert lhs == low + shift_a * high
        assert lhs == shift_b * low + high


# ----------------------------------------------------------------------
# partition numbers
# ----------------------------------------------------------------------


def test_partition_number_base_cases():
    assert partition_number(0) == 1
    assert partition_number(5) == 7
    assert partition_number_or_zero(-3) == 0


def test_partition_number_against_exhaustive_enumeration():
    for n in range(31):
        assert partition_number(n) == naive_partition_count(n)


def test_euler_inverse_coefficients():
    series = euler_inverse(40)
    assert series.coefficient(0) == 1
    assert series.coeffs[1:7] == (1, 2, 3, 5, 7, 11)
    for n in range(41):
        assert series.coefficient(n) == partition_number(n)


def test_euler_inverse_defining_property():
    series = euler_inverse(25)
    assert series * pochhammer(1, 25, 25) == QSeries.one(25)


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------


def test_series_exact_paper_point_value():
    assert series_exact(3, 2, PLUS, 16).coefficient(15) == 3


def test_series_exact_smallest_case():
    # d = m = 1, plus: q^2 / ((1-q)(1-q^2)); coefficient n counts partitions
    # of n - 2 into parts of size at most 2.
    series = series_exact(1, 1, PLUS, 20)
    assert series.coefficient(0) == 0 and series.coefficient(1) == 0
    for n in range(2, 21):
        assert series.coefficient(n) == (n - 2) // 2 + 1


def test_series_exact_rejects_bad_parameters():
    with pytest.raises(ValueError):
        series_exact(2, 3, PLUS, 10)
    with pytest.raises(ValueError):
        series_exact(1, 0, PLUS, 10)
    with pytest.raises(ValueError):
        series_exact(2, 1, "positive", 10)


def test_series_by_blocks_constant_term_vanishes():
    for m in range(1, 6):
        for sign in (PLUS, MINUS):
            assert series_by_blocks(m, sign, 10).coefficient(0) == 0


def test_series_by_blocks_m1():
    plus = series_by_blocks(1, PLUS, 30)
    minus = series_by_blocks(1, MINUS, 30)
    for n in range(1, 31):
        assert plus.coefficient(n) == partition_number(n) - partition_number_or_zero(n - 1)
        assert minus.coefficient(n) == partition_number(n) - partition_number_or_zero(n - 2)


def test_block_count_formula_matches_series():
    for m in range(1, 6):
        for sign in (PLUS, MINUS):
            series = series_by_blocks(m, sign, 30)
            for n in range(1, 31):
                assert block_count_formula(n, m, sign) == series.coefficient(n)


def test_series_by_columns_first_values():
    assert series_by_columns(1, MINUS, 10).coefficient(1) == 1
    assert series_by_columns(1, PLUS, 10).coefficient(2) == 1
    # leading exponent d^2 + d for the plus sign
    plus2 = series_by_columns(2, PLUS, 10)
    assert all(plus2.coefficient(n) == 0 for n in range(6))
    assert plus2.coefficient(6) == 1


def test_all_closed_forms_vanish_at_q0():
    # every counted partition is nonempty
    for d in range(1, 5):
        for sign in (PLUS, MINUS):
            assert series_by_columns(d, sign, 8).coefficient(0) == 0
            for m in range(1, d + 1):
                assert series_exact(d, m, sign, 8).coefficient(0) == 0
                assert series_by_blocks(m, sign, 8).coefficient(0) == 0


@pytest.mark.parametrize("d", [1, 2, 10])
def test_qbinomial_column_sum(d):
    assert qbinomial_column_sum_check(d)
