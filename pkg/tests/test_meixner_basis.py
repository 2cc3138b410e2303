import math
from fractions import Fraction

import pytest
from scipy.special import gammaln

from core.errors import DomainError
from core.meixner_basis import (
    HFunction,
    column_norm,
    h_eval,
    h_norm_via_meixner,
    h_orthogonality_rhs,
    h_orthogonality_sum,
    illustration_closed_form,
    illustration_overlap,
    meixner_norm,
    meixner_norm_sum,
    orthogonal_block,
    phi_norm_squared,
    recentering_coefficient,
    transform_entry,
    transform_entry_closed_form,
    transform_entry_from_h,
    u_parameter,
)
from core.radial import phi_norm_closed_form

ALPHAS = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]


class TestHFunction:
    def test_worked_values(self):
        h1 = HFunction(0, 1)
        assert h1.u == Fraction(2, 3)
        assert h_eval(h1, 2) == Fraction(2, 9)
        assert h_eval(h1, 1) == Fraction(7, 9)
        assert h_eval(HFunction(0, 2), 1) == Fraction(13, 18)

    def test_vanishes_at_minus_one(self):
        assert h_eval(HFunction(1, 3), -1) == 0

    def test_h0_closed_form(self):
        h0 = HFunction(0, 0)
        for x in range(6):
            assert h_eval(h0, x) == Fraction(1, 2) ** x * (x + 1)

    def test_float_path_matches_exact(self):
        h = HFunction(Fraction(1, 2), 4)
        for x in range(6):
            assert h_eval(h, float(x)) == pytest.approx(float(h_eval(h, x)), rel=1e-12, abs=1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            HFunction(Fraction(-1, 2), 1)
        with pytest.raises(DomainError):
            h_eval(HFunction(0, 1), -2)

    def test_u_parameter(self):
        assert u_parameter(2, 0) == Fraction(2, 3)


class TestTransformEntries:
    def test_worked_entry(self):
        entry = transform_entry(1, 1, 0)
        assert entry.coefficient == Fraction(3, 2)
        assert entry.value == pytest.approx(27 / 8)

    @pytest.mark.parametrize("alpha", ALPHAS + [Fraction(-1, 2)])
    def test_direct_equals_closed_form(self, alpha):
        for n in range(6):
            for m in range(6):
                assert transform_entry(n, m, alpha) == transform_entry_closed_form(n, m, alpha)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_recomposition_through_h(self, alpha):
        for n in range(1, 6):
            for m in range(1, 6):
                assert transform_entry_from_h(n, m, alpha) == transform_entry_closed_form(n, m, alpha)

    def test_recomposition_needs_positive_indices(self):
        with pytest.raises(DomainError):
            transform_entry_from_h(0, 1, 0)

    def test_edge_entries(self):
        assert transform_entry_closed_form(0, 0, 1).coefficient == 1
        assert transform_entry_closed_form(0, 3, 1).coefficient == 0
        assert transform_entry_closed_form(3, 0, 1).coefficient == 0

    @pytest.mark.parametrize("beta", [Fraction(1, 2), Fraction(3, 2), Fraction(1, 3)])
    def test_illustration_overlap(self, beta):
        for n in range(5):
            for m in range(5):
                assert illustration_overlap(n, m, 1, beta) == illustration_closed_form(n, m, 1, beta)

    def test_illustration_excludes_beta_one(self):
        with pytest.raises(DomainError):
            illustration_overlap(1, 1, 0, 1)


class TestNorms:
    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("n", range(6))
    def test_phi_norm_squared(self, n, alpha):
        expected = phi_norm_closed_form(n, alpha) / math.exp(float(gammaln(float(alpha) + 2)))
        assert phi_norm_squared(n, alpha).value == pytest.approx(expected, rel=1e-12)

    def test_column_norm(self):
        assert column_norm(0, 0) == pytest.approx(1.0)
        assert column_norm(2, 1) == pytest.approx(2**3 * 6.0)


class TestOrthogonalBlock:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_rows_are_orthonormal(self, alpha):
        block = orthogonal_block(alpha, 4, 200)
        assert block.normalized.shape == (5, 201)
        assert block.gram_deviation() < 1e-8

    def test_long_block_does_not_warn(self, caplog):
        with caplog.at_level("WARNING"):
            orthogonal_block(0, 4, 200)
        assert "truncated" not in caplog.text

    def test_warning_follows_the_tail(self, caplog):
        with caplog.at_level("WARNING"):
            orthogonal_block(0, 4, 80)
        assert "norm deficit" in caplog.text

    def test_small_block_warns(self, caplog):
        with caplog.at_level("WARNING"):
            orthogonal_block(0, 4, 12)
        assert "truncated" in caplog.text

    def test_negative_size(self):
        with pytest.raises(DomainError):
            orthogonal_block(0, -1, 3)


class TestHOrthogonality:
    def test_rhs_worked_value(self):
        assert h_orthogonality_rhs(1, 1, 0).value == pytest.approx(256 / 27)
        assert h_orthogonality_rhs(2, 1, 0).value == 0.0

    @pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1)])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_diagonal_sum(self, n, alpha):
        result = h_orthogonality_sum(n, n, alpha, 1e-12)
        assert result.sum == pytest.approx(result.rhs, rel=1e-10)
        assert result.terms > 1

    @pytest.mark.parametrize("n, l", [(2, 1), (3, 1), (3, 2), (4, 2)])  # noqa: E741
    def test_off_diagonal_sum(self, n, l):  # noqa: E741
        assert abs(h_orthogonality_sum(n, l, 0, 1e-12).sum) < 1e-10

    def test_needs_positive_tolerance(self):
        with pytest.raises(DomainError):
            h_orthogonality_sum(1, 1, 0, 0)

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("n", range(1, 7))
    def test_norm_via_meixner(self, n, alpha):
        assert h_norm_via_meixner(n, alpha).value == pytest.approx(
            h_orthogonality_rhs(n, n, alpha).value, rel=1e-12
        )

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("n", range(1, 7))
    def test_recentering_coefficient(self, n, alpha):
        assert recentering_coefficient(n, alpha) == n * (alpha + n + 1) / (alpha + 1)


class TestMeixnerSums:
    def test_norm(self):
        assert meixner_norm(1, 3, Fraction(1, 4)) == pytest.approx(1 / (3 * 0.25 * 0.75**3))

    @pytest.mark.parametrize("n", range(4))
    def test_weighted_sums(self, n):
        gamma, c = Fraction(3), Fraction(1, 4)
        for m in range(4):
            total = meixner_norm_sum(n, m, gamma, c, 1e-13)
            if m == n:
                assert total == pytest.approx(meixner_norm(n, gamma, c), rel=1e-12)
            else:
                assert abs(total) < 1e-12
