"""
Hydrogenic radial functions phi_n, their energy levels, and the orthogonality
of phi_n under the weight x^(alpha+1) with the degree-dependent scaling
x -> x/(alpha+2n+1).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from scipy.special import gammaln

from core.errors import DomainError, VerificationFailure
from core.exact_core import RationalPoly, Scalar, as_rational, pochhammer
from core.integrate import (
    ReducedIntegral,
    ScaleFactor,
    gamma_moment,
    gauss_laguerre_rule,
    quad_integrate,
)
from core.specfun import LaguerreSpec, hyp2f1_terminating, laguerre_eval, laguerre_poly

logger = logging.getLogger(__name__)


def _alpha(alpha: Scalar) -> Fraction:
    alpha = as_rational(alpha)
    if alpha <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    return alpha


@dataclass(frozen=True)
class RadialMode:
    """Quantum numbers of a bound state of the N-dimensional Coulomb problem."""

    N_dim: int
    l: int  # noqa: E741
    n: int
    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k", as_rational(self.k))
        if self.N_dim < 1 or self.l < 0 or self.n < 0:
            raise DomainError(f"invalid quantum numbers N={self.N_dim}, l={self.l}, n={self.n}")
        if self.k <= 0:
            raise DomainError(f"coupling k must be positive, got {self.k}")
        if self.alpha <= -1:
            raise DomainError(f"N={self.N_dim}, l={self.l} gives alpha={self.alpha} <= -1")

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.N_dim + 2 * self.l - 2)

    @property
    def mu(self) -> Fraction:
        return self.k / (2 * (self.alpha + 2 * self.n + 1))

    @property
    def energy(self) -> Fraction:
        return -self.mu**2


def energy_level(mode: RadialMode) -> Fraction:
    return mode.energy


@dataclass(frozen=True)
class PhiFunction:
    """phi_n(x) = L_n^alpha(x/(alpha+2n+1)) exp(-x/(2(alpha+2n+1))), k fixed to 1."""

    alpha: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", _alpha(self.alpha))
        if self.n < 0:
            raise DomainError(f"degree must be nonnegative, got {self.n}")

    @property
    def scale(self) -> Fraction:
        return self.alpha + 2 * self.n + 1


def phi_eval(phi: PhiFunction, x) -> float:
    scale = float(phi.scale)
    t = float(x) / scale
    return laguerre_eval(LaguerreSpec(phi.n, phi.alpha), t) * math.exp(-t / 2)


def _beta(beta: Scalar) -> Fraction:
    beta = as_rational(beta)
    if not 0 < beta < 2:
        raise DomainError(f"beta must lie in (0, 2), got {beta}")
    return beta


def cross_integral_reduced(
    m: int, n: int, alpha: Scalar, kappa: Scalar, beta: Scalar
) -> ReducedIntegral:
    """int L_m^alpha(beta s) L_n^alpha((2-beta)s) s^(alpha+kappa) e^{-s} ds."""
    alpha = _alpha(alpha)
    beta = _beta(beta)
    product = laguerre_poly(m, alpha).scale_argument(beta) * laguerre_poly(n, alpha).scale_argument(
        2 - beta
    )
    return gamma_moment(product, alpha + as_rational(kappa))


class PhiInnerProduct(NamedTuple):
    exact: ReducedIntegral
    value: float


def _phi_substitution(m: int, n: int, alpha: Fraction):
    """beta and the positive scale of x = s*(a_m a_n)/(alpha+m+n+1)."""
    a_m = alpha + 2 * m + 1
    a_n = alpha + 2 * n + 1
    mid = alpha + m + n + 1
    return a_n / mid, ScaleFactor(a_m * a_n / mid, alpha + 2)


def phi_inner_product(m: int, n: int, alpha: Scalar) -> PhiInnerProduct:
    """int phi_m phi_n x^(alpha+1) dx, exact ledger plus assembled float."""
    alpha = _alpha(alpha)
    beta, scale = _phi_substitution(m, n, alpha)
    exact = cross_integral_reduced(m, n, alpha, 1, beta).with_scale(scale)
    return PhiInnerProduct(exact, exact.value)


def phi_norm_closed_form(n: int, alpha: Scalar) -> float:
    """(alpha+2n+1)^(alpha+3) Gamma(alpha+1+n) / n!"""
    alpha = _alpha(alpha)
    a = float(alpha)
    log_value = (
        (a + 3) * math.log(alpha + 2 * n + 1) + float(gammaln(a + 1 + n)) - float(gammaln(n + 1))
    )
    return math.exp(log_value)


def phi_inner_product_quadrature(m: int, n: int, alpha: Scalar) -> float:
    """Floating oracle for phi_inner_product using recurrence values of L."""
    alpha = _alpha(alpha)
    beta, scale = _phi_substitution(m, n, alpha)
    rule = gauss_laguerre_rule(m + n + 10, float(alpha) + 1)
    left = LaguerreSpec(m, alpha)
    right = LaguerreSpec(n, alpha)
    b = float(beta)

    def integrand(s: float) -> float:
        return laguerre_eval(left, b * s) * laguerre_eval(right, (2 - b) * s)

    return quad_integrate(integrand, rule) * scale.to_float()


def recurrence_norm_step(n: int, alpha: Scalar) -> Fraction:
    """int x (L_n^alpha)^2 x^alpha e^{-x} dx / Gamma(alpha+1) = (alpha+2n+1)(alpha+1)_n/n!."""
    alpha = _alpha(alpha)
    p = laguerre_poly(n, alpha)
    return gamma_moment(p * p * RationalPoly.x(), alpha).coefficient


def contiguity_combination(m: int, n: int, alpha: Scalar, gamma: Scalar) -> Fraction:
    """(g-1) F(1-m,1-n;a+2;g) + F(-m,-n;a+2;g) - g(a+m+n+1)/(a+2) F(1-m,1-n;a+3;g)."""
    alpha = _alpha(alpha)
    gamma = as_rational(gamma)
    if m < 1 or n < 1:
        raise DomainError("contiguity combination needs m, n >= 1")
    if gamma == 1:
        raise DomainError("contiguity combination needs gamma != 1")
    return (
        (gamma - 1) * hyp2f1_terminating(m - 1, 1 - n, alpha + 2, gamma)
        + hyp2f1_terminating(m, -n, alpha + 2, gamma)
        - gamma
        * (alpha + m + n + 1)
        / (alpha + 2)
        * hyp2f1_terminating(m - 1, 1 - n, alpha + 3, gamma)
    )


def _pochhammer_ext(a: Fraction, n: int) -> Fraction:
    # (a)_{-1} = 1/(a-1)
    if n == -1:
        return 1 / (a - 1)
    return pochhammer(a, n)


def bsum_expression(m: int, n: int, alpha: Scalar, beta: Scalar) -> Fraction:
    """Closed j-sum for the reduced coefficient of cross_integral_reduced(m, n, alpha, 1, beta).

    Valid for every beta != 1 in (0, 2); at beta = (alpha+2n+1)/(alpha+m+n+1)
    the second contiguity factor collapses and the sum becomes the classical
    orthogonality sum.
    """
    alpha = _alpha(alpha)
    beta = _beta(beta)
    if beta == 1:
        raise DomainError("the beta-sum is singular at beta = 1")
    gamma = beta * (beta - 2) / (1 - beta) ** 2
    prefactor = (
        _pochhammer_ext(alpha + 2, m - 1)
        * _pochhammer_ext(alpha + 2, n - 1)
        / (pochhammer(1, m) * pochhammer(1, n))
        * (1 - beta) ** (m - 1)
        * (beta - 1) ** (n - 1)
    )
    total = Fraction(0)
    weight = Fraction(1)
    for j in range(min(m, n) + 1):
        if j:
            weight = weight * (j - 1 - m) * (j - 1 - n) * gamma / ((alpha + 1 + j) * j)
        first = (1 - beta) * (alpha + 1 + m) - (m - j)
        second = (beta - 1) * (alpha + 1 + n) - (n - j)
        total += weight * first * second
    return prefactor * total


def bsum_check(m: int, n: int, alpha: Scalar) -> Fraction:
    """The beta-sum at the orthogonality scaling; zero, and equal to the moment pipeline."""
    if m == n:
        raise DomainError("bsum_check needs distinct degrees")
    alpha = _alpha(alpha)
    beta = (alpha + 2 * n + 1) / (alpha + m + n + 1)
    value = bsum_expression(m, n, alpha, beta)
    direct = cross_integral_reduced(m, n, alpha, 1, beta).coefficient
    if value != direct:
        raise VerificationFailure(
            f"beta-sum {value} differs from moment pipeline {direct} at m={m}, n={n}, alpha={alpha}"
        )
    return value
