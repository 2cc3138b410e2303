from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import DomainError
from core.exact_core import (
    RationalPoly,
    as_rational,
    format_rational,
    is_rational_square,
    pochhammer,
    poly_discriminant,
    poly_divmod,
    poly_gcd,
    poly_resultant,
)

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def polys(min_degree=1, max_degree=4):
    coeffs = st.lists(st.integers(-6, 6), min_size=min_degree + 1, max_size=max_degree + 1)
    return coeffs.filter(lambda cs: cs[-1] != 0).map(RationalPoly)


def rational_polys(max_degree=4):
    return st.lists(small_rationals, max_size=max_degree + 1).map(RationalPoly)


def to_sympy(p: RationalPoly, x):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))


class TestRationals:
    def test_as_rational_accepts_exact_inputs(self):
        assert as_rational(3) == 3
        assert as_rational("7/3") == Fraction(7, 3)
        assert as_rational(Fraction(1, 2)) == Fraction(1, 2)

    def test_as_rational_refuses_floats(self):
        with pytest.raises(TypeError):
            as_rational(0.5)

    def test_as_rational_rejects_bad_text(self):
        with pytest.raises(DomainError):
            as_rational("one half")

    def test_format_rational(self):
        assert format_rational(Fraction(3, 4)) == "3/4"
        assert format_rational(Fraction(-1, 2)) == "-1/2"
        assert format_rational(Fraction(5)) == "5"

    def test_pochhammer_values(self):
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
        assert pochhammer(7, 0) == 1
        assert pochhammer(-2, 3) == 0
        assert pochhammer(1, 5) == 120

    def test_pochhammer_negative_length(self):
        with pytest.raises(DomainError):
            pochhammer(1, -1)

    @given(small_rationals, st.integers(0, 6), st.integers(0, 6))
    def test_pochhammer_splits(self, a, m, n):
        assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)

    def test_is_rational_square(self):
        assert is_rational_square(Fraction(9, 4))
        assert is_rational_square(0)
        assert not is_rational_square(2)
        assert not is_rational_square(-1)


class TestRationalPoly:
    def test_trailing_zeros_are_stripped(self):
        assert RationalPoly((1, 2, 0, 0)) == RationalPoly((1, 2))
        assert RationalPoly((0, 0)).is_zero
        assert RationalPoly.zero().degree == -1

    def test_arithmetic(self):
        x = RationalPoly.x()
        assert (x + 1) ** 2 == RationalPoly((1, 2, 1))
        assert (x + 1) * (x - 1) == RationalPoly((-1, 0, 1))
        assert 2 - x == RationalPoly((2, -1))
        assert RationalPoly((2, 4)) / 2 == RationalPoly((1, 2))

    def test_evaluate_exact_and_float(self):
        p = RationalPoly((1, Fraction(-5, 12)))
        assert p(Fraction(12, 5)) == 0
        assert p(2) == Fraction(1, 6)
        assert p(2.0) == pytest.approx(1 / 6)

    def test_derivative_and_scaling(self):
        p = RationalPoly((1, 1, 1))
        assert p.derivative() == RationalPoly((1, 2))
        assert p.scale_argument(2) == RationalPoly((1, 2, 4))

    def test_mobius_substitute_clears_denominator(self):
        result = RationalPoly.x().mobius_substitute(2, 0, 1, 1)
        assert result.numerator == RationalPoly.constant(2)
        assert result.cleared_power == 1

    def test_mobius_substitute_rejects_constant_map(self):
        with pytest.raises(DomainError):
            RationalPoly.x().mobius_substitute(1, 0, 1, 0)

    def test_primitive_part(self):
        p = RationalPoly((Fraction(1, 2), Fraction(-3, 4)))
        assert p.primitive_part() == RationalPoly((-2, 3))
        assert RationalPoly((2, 4, 6)).primitive_part() == RationalPoly((1, 2, 3))

    def test_str(self):
        assert str(RationalPoly.zero()) == "0"
        assert str(RationalPoly((1, Fraction(-1, 2)))) == "1 + (-1/2)*x^1"

    @given(rational_polys(), rational_polys())
    def test_add_then_subtract(self, p, q):
        assert (p + q) - q == p
        assert p - p == RationalPoly.zero()


class TestDivisionAndGcd:
    def test_divmod_exact(self):
        q, r = poly_divmod(RationalPoly((-1, 0, 1)), RationalPoly((-1, 1)))
        assert q == RationalPoly((1, 1))
        assert r.is_zero

    def test_divmod_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_divmod(RationalPoly.x(), RationalPoly.zero())

    @given(polys(0, 5), polys(1, 3))
    def test_divmod_reconstructs(self, p, q):
        quotient, remainder = poly_divmod(p, q)
        assert quotient * q + remainder == p
        assert remainder.degree < q.degree

    def test_gcd_is_monic(self):
        g = poly_gcd(RationalPoly((-1, 0, 1)), RationalPoly((1, -2, 1)))
        assert g == RationalPoly((-1, 1))

    def test_gcd_of_zeros(self):
        assert poly_gcd(RationalPoly.zero(), RationalPoly.zero()).is_zero


class TestResultant:
    def test_linear_against_quadratic(self):
        # Res(x - 2, x^2 + 1) = 2^2 + 1
        assert poly_resultant(RationalPoly((-2, 1)), RationalPoly((1, 0, 1))) == 5

    def test_common_root_gives_zero(self):
        p = RationalPoly((-1, 0, 1))
        q = RationalPoly((-1, 1)) * RationalPoly((3, 1, 1))
        assert poly_resultant(p, q) == 0

    def test_zero_argument_is_undefined(self):
        with pytest.raises(DomainError, match="undefined resultant"):
            poly_resultant(RationalPoly.zero(), RationalPoly.x())

    @settings(max_examples=50, deadline=None)
    @given(polys(1, 3), polys(1, 3), polys(1, 3))
    def test_multiplicative_in_second_argument(self, p, q, r):
        assert poly_resultant(p, q * r) == poly_resultant(p, q) * poly_resultant(p, r)

    @settings(max_examples=50, deadline=None)
    @given(polys(1, 4), polys(1, 4))
    def test_matches_sympy(self, p, q):
        x = sympy.Symbol("x")
        expected = sympy.resultant(to_sympy(p, x), to_sympy(q, x), x)
        assert poly_resultant(p, q) == Fraction(int(sympy.numer(expected)), int(sympy.denom(expected)))


class TestDiscriminant:
    def test_quadratic(self):
        assert poly_discriminant(RationalPoly((1, -6, 5))) == 16
        assert poly_discriminant(RationalPoly((1, 0, 1))) == -4

    def test_constant_is_undefined(self):
        with pytest.raises(DomainError):
            poly_discriminant(RationalPoly.constant(3))

    @settings(max_examples=50, deadline=None)
    @given(polys(2, 4))
    def test_matches_sympy(self, p):
        x = sympy.Symbol("x")
        expected = sympy.discriminant(to_sympy(p, x), x)
        assert poly_discriminant(p) == Fraction(int(sympy.numer(expected)), int(sympy.denom(expected)))

    @settings(deadline=None)
    @given(polys(1, 3), polys(1, 2), st.booleans())
    def test_zero_iff_repeated_factor(self, f, g, square):
        p = f * g * g if square else f * g
        repeated = poly_gcd(p, p.derivative()).degree >= 1
        assert (poly_discriminant(p) == 0) == repeated
        if square:
            assert poly_discriminant(p) == 0
