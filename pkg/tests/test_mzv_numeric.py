import math

import numpy as np
import pytest

from mzv_utilities import mzv_numeric
from mzv_utilities.common import ConfigError, DomainError
from mzv_utilities.constants import (
    ANCHOR_TRUNCATION,
    REAL_FAMILIES,
    REAL_ZETA,
    REAL_ZETA_STAR,
)
from mzv_utilities.index_algebra import Idx, LinComb, Zconst, harmonic
from mzv_utilities.mzv_numeric import (
    ApproxReal,
    CompensatedSum,
    check_real,
    compensated_cumsum,
    eval_nested,
    eval_side,
    family_tolerance,
)
from mzv_utilities.relation_families import Bounds, build, enumerate_instances
from mzv_utilities.reports import FAIL, PASS

ZETA_2 = math.pi ** 2 / 6
ZETA_3 = 1.2020569031595942
ZETA_4 = math.pi ** 4 / 90


class TestCompensatedSum:
    def test_recovers_cancelled_terms(self):
        total = CompensatedSum()
        for x in [1e16, 1.0, -1e16]:
            total.add(x)
        assert total.value == 1.0

    def test_cumsum_with_carry(self):
        carry = CompensatedSum(5.0)
        result = compensated_cumsum(np.full(10000, 0.1), carry, block_size=64)
        assert len(result) == 10000
        assert result[0] == pytest.approx(5.1)
        assert result[-1] == pytest.approx(1005.0, abs=1e-9)
        assert carry.value == pytest.approx(1005.0, abs=1e-9)

    def test_cumsum_empty(self):
        assert len(compensated_cumsum(np.empty(0))) == 0


class TestEvalNested:
    def test_empty_index_is_exactly_one(self):
        assert eval_nested(()) == ApproxReal(1.0, 0.0)
        assert eval_nested((), star=True) == ApproxReal(1.0, 0.0)

    def test_zeta_2_anchor(self):
        result = eval_nested((2,), N=ANCHOR_TRUNCATION)
        assert abs(result.value - 1.6449340668) <= 1e-6
        assert result.err <= 1e-6

    def test_euler_anchor(self):
        "Show ζ(1,2) = ζ(3) to 1e-6"
        value = eval_nested((1, 2), N=ANCHOR_TRUNCATION).value
        assert abs(value - eval_nested((3,)).value) <= 1e-6

    def test_star_euler_anchor(self):
        "Show ζ*(1,2) = 2ζ(3) to 1e-6"
        value = eval_nested((1, 2), star=True, N=ANCHOR_TRUNCATION).value
        assert abs(value - 2 * ZETA_3) <= 1e-6

    def test_star_2_2(self):
        "Show ζ*(2,2) = (ζ(2)^2 + ζ(4))/2"
        value = eval_nested((2, 2), star=True, N=10 ** 6).value
        assert value == pytest.approx((ZETA_2 ** 2 + ZETA_4) / 2, abs=1e-5)

    def test_error_estimate_covers_tail(self):
        for N in (10 ** 3, 10 ** 4):
            result = eval_nested((2,), N=N)
            assert result.value < ZETA_2
            assert ZETA_2 - result.value <= result.err
            star = eval_nested((1, 2), star=True, N=N)
            assert 2 * ZETA_3 - star.value <= star.err

    def test_monotone_refinement(self):
        for k in [(2,), (1, 2), (2, 3), (1, 1, 2)]:
            values = [eval_nested(k, N=10 ** 4 * 4 ** j).value for j in range(4)]
            steps = [b - a for a, b in zip(values, values[1:])]
            assert all(step > 0 for step in steps)
            assert steps == sorted(steps, reverse=True)

    def test_chunking_matches_direct_sum(self, monkeypatch):
        "Show the streamed program agrees with a direct double sum across chunks"
        monkeypatch.setattr(mzv_numeric, "SERIES_CHUNK_SIZE", 7)
        mzv_numeric._nested_partial_sums.cache_clear()
        N = 301
        direct = sum(1 / (a * b ** 2) for b in range(1, N + 1) for a in range(1, b))
        direct_star = sum(
            1 / (a * b ** 2) for b in range(1, N + 1) for a in range(1, b + 1)
        )
        assert eval_nested((1, 2), N=N).value == pytest.approx(direct, rel=1e-12)
        assert eval_nested((1, 2), star=True, N=N).value == pytest.approx(
            direct_star, rel=1e-12
        )

    def test_accepts_list_indices(self):
        assert eval_nested([2], N=100) == eval_nested((2,), N=100)

    def test_rejects_non_admissible(self):
        with pytest.raises(DomainError):
            eval_nested((2, 1))

    def test_rejects_small_truncation(self):
        with pytest.raises(ConfigError):
            eval_nested((2,), N=5)


class TestEvalSide:
    def test_empty_is_zero(self):
        assert eval_side(LinComb(), REAL_ZETA) == ApproxReal(0.0, 0.0)

    def test_scaled_star(self):
        x = LinComb([(Idx((3,)), 2)])
        assert eval_side(x, REAL_ZETA_STAR, 10 ** 6).value == pytest.approx(
            2 * ZETA_3, abs=1e-6
        )

    def test_harmonic_product_of_stars(self):
        "Show ζ*((2)⊛(3)) = ζ*(2)ζ*(3)"
        value = eval_side(harmonic((2,), (3,)), REAL_ZETA_STAR, 10 ** 6).value
        assert value == pytest.approx(ZETA_2 * ZETA_3, abs=1e-4)

    def test_rejects_constants(self):
        with pytest.raises(DomainError):
            eval_side(LinComb([(Zconst(3), 1)]), REAL_ZETA)

    def test_rejects_finite_space(self):
        with pytest.raises(DomainError):
            eval_side(LinComb(), "finite_zeta")


class TestCheckReal:
    @pytest.mark.parametrize(
        "family,params",
        [
            ("ohno_star", {"k": (2,), "m": 1}),
            ("duality_classical", {"k": (3,)}),
            ("kawashima_linear", {"k": (1,), "l": (1,)}),
        ],
    )
    def test_examples_pass_strictly(self, family, params):
        result = check_real(build(family, params), N=10 ** 6, strict_tolerance=True)
        assert result.status == PASS
        assert result.tolerance == family_tolerance(family)
        assert result.difference <= result.tolerance

    def test_records_effective_tolerance(self):
        inst = build("ohno_star", {"k": (2,), "m": 1})
        result = check_real(inst, N=100, tol=1e-12)
        expected = 1e-12 + result.lhs_err + result.rhs_err
        assert result.tolerance == pytest.approx(expected)
        assert result.status == PASS
        strict = check_real(inst, N=100, tol=1e-12, strict_tolerance=True)
        assert strict.status == FAIL
        assert strict.tolerance == 1e-12

    def test_family_tolerances(self):
        assert family_tolerance("kawashima_linear") == 1e-3
        assert family_tolerance("ohno") == 1e-4

    def test_rejects_finite_instances(self):
        with pytest.raises(DomainError):
            check_real(build("duality_finite", {"k": (2,)}))

    def test_sweep_all_real_families(self):
        "Show every real family holds up to weight 5 at N = 10^5"
        for family in REAL_FAMILIES:
            for inst in enumerate_instances(family, Bounds(5)):
                result = check_real(inst, N=10 ** 5)
                assert result.status == PASS, (inst.instance_id, result)
                assert result.difference <= result.tolerance

    @pytest.mark.parametrize(
        "family,max_weight",
        [
            ("duality_classical", 7),
            ("ohno", 6),
            ("ohno_star", 6),
            ("sum_classical", 7),
            ("sum_classical_star", 7),
            ("kawashima_linear", 5),
        ],
    )
    def test_real_relations_at_full_range(self, family, max_weight):
        "Show the classical relations hold at N = 10^6 over their whole ranges"
        instances = list(enumerate_instances(family, Bounds(max_weight)))
        assert instances
        for inst in instances:
            result = check_real(inst, N=10 ** 6)
            assert result.status == PASS, (inst.instance_id, result)
            assert result.tolerance >= family_tolerance(family)

    def test_harmonic_multiplicativity(self):
        for inst in enumerate_instances("harmonic_hom_real", Bounds(6)):
            assert check_real(inst, N=10 ** 6).status == PASS
