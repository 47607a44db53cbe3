from math import comb

import pytest

from mzv_utilities.combinatorics import (
    C1,
    C2,
    binom_conv,
    compositions,
    lemma33_check,
    ohno_coefficient,
)
from mzv_utilities.common import DomainError
from mzv_utilities.index_core import all_indices


class TestBinomConv:
    @pytest.mark.parametrize(
        "a,b,expected", [(-1, 0, 1), (0, 1, 0), (3, 1, 3), (5, 5, 1)]
    )
    def test_values(self, a, b, expected):
        assert binom_conv(a, b) == expected

    def test_below_range(self):
        with pytest.raises(DomainError):
            binom_conv(0, 2)
        with pytest.raises(DomainError):
            binom_conv(3, -1)


class TestOhnoCoefficient:
    @pytest.mark.parametrize(
        "kind,k,e,expected",
        [
            (C1, (2,), (1,), 2),
            (C1, (1, 1), (0, 1), 0),
            (C2, (2,), (1,), 3),
            (C2, (1,), (1,), 2),
        ],
    )
    def test_examples(self, kind, k, e, expected):
        assert ohno_coefficient(kind, k, e) == expected

    def test_zero_shift_gives_one(self):
        for k in all_indices(7, min_weight=1):
            zero = (0,) * len(k)
            assert ohno_coefficient(C1, k, zero) == 1
            assert ohno_coefficient(C2, k, zero) == 1

    def test_c1_and_c2_agree_without_last_shift(self):
        "Show that c1 and c2 differ only through the factor of the last slot"
        for k in all_indices(5, min_weight=2):
            if len(k) < 2:
                continue
            for e in compositions(3, len(k)):
                if e[-1] == 0:
                    assert ohno_coefficient(C1, k, e) == ohno_coefficient(C2, k, e)

    def test_interior_ones_force_zero_shift(self):
        "Show that c2(k, e) vanishes when an interior slot with k_i = 1 is shifted"
        for k in all_indices(6, min_weight=1):
            for m in range(5):
                for e in compositions(m, len(k)):
                    interior = range(1, len(k) - 1)
                    if any(k[i] == 1 and e[i] > 0 for i in interior):
                        assert ohno_coefficient(C2, k, e) == 0

    def test_depth_mismatch(self):
        with pytest.raises(DomainError):
            ohno_coefficient(C1, (1, 2), (1,))
        with pytest.raises(DomainError):
            ohno_coefficient("c3", (2,), (1,))


class TestCompositions:
    def test_examples(self):
        assert compositions(1, 2) == [(1, 0), (0, 1)]
        assert compositions(0, 3) == [(0, 0, 0)]
        assert compositions(2, 1) == [(2,)]

    def test_depth_zero(self):
        assert compositions(0, 0) == [()]
        assert compositions(2, 0) == []

    def test_counts_and_sums(self):
        for m in range(11):
            for r in range(1, 7):
                result = compositions(m, r)
                assert len(result) == comb(m + r - 1, r - 1)
                assert len(set(result)) == len(result)
                assert all(sum(e) == m and len(e) == r for e in result)

    def test_first_coordinate_descending(self):
        result = compositions(3, 3)
        assert result == sorted(result, reverse=True)


class TestBinomialIdentities:
    def test_examples(self):
        assert lemma33_check(1, 1, 1) == {"lhs1": 1, "rhs1": 1, "lhs2": -1, "rhs2": -1}
        result = lemma33_check(2, 3, 2)
        assert result["lhs1"] == result["rhs1"] == 5

    def test_full_range(self):
        "Show both binomial identities for 1 <= i <= n <= 8, 1 <= m <= 8"
        for m in range(1, 9):
            for n in range(1, 9):
                for i in range(1, n + 1):
                    result = lemma33_check(m, n, i)
                    assert result["lhs1"] == result["rhs1"]
                    assert result["lhs2"] == result["rhs2"]

    def test_constraints(self):
        with pytest.raises(DomainError):
            lemma33_check(1, 2, 3)
        with pytest.raises(DomainError):
            lemma33_check(0, 2, 1)
