from fractions import Fraction

import numpy as np
import pytest

from core.errors import DomainError
from core.exact_core import RationalPoly, pochhammer
from core.specfun import (
    LaguerreSpec,
    MeixnerSpec,
    contig_expand,
    hyp2f1_terminating,
    laguerre_eval,
    laguerre_poly,
    laguerre_recurrence_residual,
    meixner_difference_residual,
    meixner_eval,
    meixner_poly,
    meixner_recurrence_residual,
    ode_residual,
    rescale_expand,
)

ALPHAS = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(7, 3), Fraction(-1, 2)]


def test_low_degree_laguerre():
    assert laguerre_poly(0, 3) == RationalPoly.constant(1)
    assert laguerre_poly(1, Fraction(1, 2)) == RationalPoly((Fraction(3, 2), -1))
    assert laguerre_poly(2, 0) == RationalPoly((1, -2, Fraction(1, 2)))


def test_laguerre_spec_validation():
    with pytest.raises(DomainError):
        LaguerreSpec(-1, 0)
    with pytest.raises(DomainError):
        LaguerreSpec(2, -1)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("n", range(9))
def test_ode_and_recurrence_vanish(n, alpha):
    assert ode_residual(LaguerreSpec(n, alpha)).is_zero
    if n:
        assert laguerre_recurrence_residual(n, alpha).is_zero


@pytest.mark.parametrize("alpha", ALPHAS)
def test_float_recurrence_matches_exact(alpha):
    xs = np.linspace(0.0, 12.0, 25)
    for n in range(7):
        exact = [float(laguerre_poly(n, alpha)(Fraction(float(x)))) for x in xs]
        assert laguerre_eval(LaguerreSpec(n, alpha), xs) == pytest.approx(exact, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("n", range(1, 7))
def test_contiguity_difference(n):
    alpha = Fraction(1, 2)
    upper, lower = contig_expand(LaguerreSpec(n, alpha))
    assert upper - lower == laguerre_poly(n, alpha)


def test_contiguity_needs_positive_degree():
    with pytest.raises(DomainError):
        contig_expand(LaguerreSpec(0, 1))


@pytest.mark.parametrize("delta", [Fraction(0), Fraction(3, 2)])
@pytest.mark.parametrize("n", range(9))
def test_rescale_expansion_rebuilds_scaled_polynomial(n, delta):
    b = Fraction(2, 3)
    coeffs = rescale_expand(n, delta, b)
    rebuilt = RationalPoly.zero()
    for j, c in enumerate(coeffs):
        rebuilt = rebuilt + laguerre_poly(j, delta) * c
    assert rebuilt == laguerre_poly(n, delta).scale_argument(b)


class TestHypergeometric:
    def test_worked_value(self):
        assert hyp2f1_terminating(2, -1, 3, Fraction(-7, 9)) == Fraction(13, 27)

    def test_zero_length_sum(self):
        assert hyp2f1_terminating(0, 5, 2, 9) == 1

    def test_numerator_zero_terminates_before_the_pole(self):
        # (b)_j vanishes from j = 1 on, so the pole at c + 1 = 0 is never reached
        assert hyp2f1_terminating(3, 0, -1, 2) == 1

    def test_pole_in_lower_parameter(self):
        with pytest.raises(DomainError, match="pole in lower parameter"):
            hyp2f1_terminating(2, 1, -1, 1)

    def test_vandermonde(self):
        # 2F1(-m, b; c; 1) = (c-b)_m / (c)_m
        b, c = Fraction(3, 2), Fraction(7, 3)
        for m in range(6):
            assert hyp2f1_terminating(m, b, c, 1) == pochhammer(c - b, m) / pochhammer(c, m)


class TestMeixner:
    def test_degree_one(self):
        assert meixner_poly(MeixnerSpec(1, 3, Fraction(4, 9))) == RationalPoly((1, Fraction(-5, 12)))

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            MeixnerSpec(1, 0, Fraction(1, 2))
        with pytest.raises(DomainError):
            MeixnerSpec(1, 3, 1)

    def test_exact_and_float_evaluation_agree(self):
        spec = MeixnerSpec(4, Fraction(7, 2), Fraction(1, 9))
        for x in range(8):
            assert meixner_eval(spec, x) == meixner_poly(spec)(x)
            assert meixner_eval(spec, float(x)) == pytest.approx(float(meixner_poly(spec)(x)))
        assert meixner_eval(spec, 2.5) == pytest.approx(meixner_poly(spec)(2.5))

    @pytest.mark.parametrize("n", range(6))
    def test_recurrence_and_difference_equation(self, n):
        gamma, c = Fraction(3), Fraction(1, 4)
        assert meixner_recurrence_residual(n, gamma, c).is_zero
        for x in range(10):
            assert meixner_difference_residual(n, gamma, c, x) == 0
