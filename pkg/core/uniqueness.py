"""
Uniqueness of the orthogonal scaled Laguerre families.

For a family {L_n^alpha(g_n x) exp(-g_n x/2)} orthogonal under x^(alpha+kappa),
the conditions <phi_0, phi_1> = <phi_0, phi_2> = <phi_1, phi_2> = 0 are turned
into exact polynomials q2, q3 in g_2. Their resultant vanishes only for
kappa in {0, 1}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple

from core.errors import DomainError, VerificationFailure
from core.exact_core import (
    RationalPoly,
    Scalar,
    as_rational,
    is_rational_square,
    pochhammer,
    poly_discriminant,
    poly_divmod,
    poly_resultant,
)
from core.integrate import ReducedIntegral, ScaleFactor
from core.radial import cross_integral_reduced
from core.specfun import laguerre_poly

logger = logging.getLogger(__name__)


def _check_region(alpha: Fraction, kappa: Fraction) -> None:
    if alpha <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if alpha + kappa + 1 <= 0:
        raise DomainError(f"divergent integral: alpha+kappa+1 = {alpha + kappa + 1} <= 0")


@dataclass(frozen=True)
class ScalingFamily:
    alpha: Fraction
    kappa: Fraction
    gammas: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "kappa", as_rational(self.kappa))
        object.__setattr__(self, "gammas", tuple(as_rational(g) for g in self.gammas))
        _check_region(self.alpha, self.kappa)
        if not self.gammas or self.gammas[0] != 1:
            raise DomainError("a scaling family is normalised to gamma_0 = 1")
        if any(g <= 0 for g in self.gammas):
            raise DomainError("scalings must be positive")


@lru_cache(maxsize=1024)
def _beta_polynomial(m: int, n: int, alpha: Fraction, kappa: Fraction) -> RationalPoly:
    left = laguerre_poly(m, alpha).coeffs
    right = laguerre_poly(n, alpha).coeffs
    base = alpha + kappa
    two_minus_beta = RationalPoly.linear(2, -1)
    beta_powers = [RationalPoly.constant(1)]
    other_powers = [RationalPoly.constant(1)]
    for _ in range(max(len(left), len(right))):
        beta_powers.append(beta_powers[-1] * RationalPoly.x())
        other_powers.append(other_powers[-1] * two_minus_beta)
    total = RationalPoly.zero()
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            moment = a * b * pochhammer(base + 1, i + j)
            total = total + beta_powers[i] * other_powers[j] * moment
    return total


def beta_polynomial(m: int, n: int, alpha: Scalar, kappa: Scalar) -> RationalPoly:
    """Reduced coefficient of int L_m(beta s) L_n((2-beta)s) s^(alpha+kappa) e^{-s} ds in beta."""
    alpha, kappa = as_rational(alpha), as_rational(kappa)
    _check_region(alpha, kappa)
    return _beta_polynomial(m, n, alpha, kappa)


def scaled_inner_reduced(
    m: int, n: int, gamma_m: Scalar, gamma_n: Scalar, alpha: Scalar, kappa: Scalar
) -> ReducedIntegral:
    """int L_m(g_m x) L_n(g_n x) e^{-(g_m+g_n)x/2} x^(alpha+kappa) dx, with its scale ledger."""
    gamma_m, gamma_n = as_rational(gamma_m), as_rational(gamma_n)
    alpha, kappa = as_rational(alpha), as_rational(kappa)
    _check_region(alpha, kappa)
    if gamma_m <= 0 or gamma_n <= 0:
        raise DomainError("scalings must be positive")
    beta = 2 * gamma_m / (gamma_m + gamma_n)
    scale = ScaleFactor((gamma_m + gamma_n) / 2, -(alpha + kappa + 1))
    return cross_integral_reduced(m, n, alpha, kappa, beta).with_scale(scale)


def gamma1_solve(alpha: Scalar, kappa: Scalar) -> Fraction:
    """The scaling g_1 forced by <phi_0, phi_1> = 0 when g_0 = 1."""
    alpha, kappa = as_rational(alpha), as_rational(kappa)
    if alpha + 2 * kappa + 1 == 0:
        raise DomainError("no admissible scaling: alpha+2*kappa+1 = 0")
    condition = beta_polynomial(0, 1, alpha, kappa)
    if condition.degree != 1:
        raise VerificationFailure(f"<phi_0, phi_1> is not linear in beta: {condition}")
    beta = -condition.coefficient(0) / condition.coefficient(1)
    if not 0 < beta < 2:
        raise DomainError(f"no admissible scaling: beta root {beta} outside (0, 2)")
    gamma1 = 2 / beta - 1
    check = scaled_inner_reduced(0, 1, 1, gamma1, alpha, kappa).coefficient
    if check:
        raise VerificationFailure(f"g_1 = {gamma1} leaves <phi_0, phi_1> = {check}")
    return gamma1


class QPolynomials(NamedTuple):
    q2: RationalPoly
    q3: RationalPoly
    gamma1: Fraction


def q_polynomials(alpha: Scalar, kappa: Scalar) -> QPolynomials:
    """Primitive q2 (from <phi_0, phi_2>) and q3 (from <phi_1, phi_2>) in the variable g_2."""
    alpha, kappa = as_rational(alpha), as_rational(kappa)
    gamma1 = gamma1_solve(alpha, kappa)
    # beta = 2 g_0/(g_0 + g_2) and beta = 2 g_1/(g_1 + g_2)
    q2, _ = beta_polynomial(0, 2, alpha, kappa).mobius_substitute(2, 0, 1, 1)
    q3, _ = beta_polynomial(1, 2, alpha, kappa).mobius_substitute(2 * gamma1, 0, gamma1, 1)
    q2, q3 = q2.primitive_part(), q3.primitive_part()
    if q2.degree != 2 or q3.degree != 3:
        logger.warning(
            "degree drop at alpha=%s kappa=%s: deg q2=%d deg q3=%d",
            alpha, kappa, q2.degree, q3.degree,
        )
        raise VerificationFailure(
            f"degree drop at alpha={alpha}, kappa={kappa}: deg q2={q2.degree}, deg q3={q3.degree}"
        )
    return QPolynomials(q2, q3, gamma1)


class DiscriminantCheck(NamedTuple):
    computed: Fraction
    closed_form_expr: Fraction
    ratio: Optional[Fraction]


def discriminant_check(alpha: Scalar, kappa: Scalar) -> DiscriminantCheck:
    """Compare disc(q2) with 16 kappa (alpha+kappa+1)(alpha+2) up to a rational square."""
    alpha, kappa = as_rational(alpha), as_rational(kappa)
    q2 = q_polynomials(alpha, kappa).q2
    computed = poly_discriminant(q2)
    expected = 16 * kappa * (alpha + kappa + 1) * (alpha + 2)
    if (computed == 0) != (expected == 0):
        raise VerificationFailure(
            f"discriminant zero pattern differs: computed={computed}, expected={expected}"
        )
    if expected == 0:
        return DiscriminantCheck(computed, expected, None)
    ratio = computed / expected
    if ratio < 0:
        raise VerificationFailure(f"discriminant sign differs: computed={computed}, expected={expected}")
    if not is_rational_square(ratio):
        raise VerificationFailure(f"discriminant ratio {ratio} is not a rational square")
    return DiscriminantCheck(computed, expected, ratio)


class ResultantRow(NamedTuple):
    alpha: Fraction
    kappa: Fraction
    resultant: Fraction
    vanishes: bool


def resultant_scan(alpha_grid: Sequence[Scalar], kappa_grid: Sequence[Scalar]) -> List[ResultantRow]:
    rows = []
    for alpha in alpha_grid:
        for kappa in kappa_grid:
            alpha_q, kappa_q = as_rational(alpha), as_rational(kappa)
            q = q_polynomials(alpha_q, kappa_q)
            resultant = poly_resultant(q.q2, q.q3)
            logger.debug("resultant(q2, q3) at alpha=%s kappa=%s: %s", alpha_q, kappa_q, resultant)
            rows.append(ResultantRow(alpha_q, kappa_q, resultant, resultant == 0))
    return rows


class Kappa0Factor(NamedTuple):
    beta: Fraction
    cofactor: Fraction
    coefficient: Fraction


def kappa0_factor_check(n: int, alpha: Scalar, gamma_n: Scalar) -> Kappa0Factor:
    """At kappa = 0, <phi_0, phi_n> is cofactor * (beta-1)^n with beta = 2/(1+g_n)."""
    if n < 1:
        raise DomainError("kappa0_factor_check needs n >= 1")
    alpha, gamma_n = as_rational(alpha), as_rational(gamma_n)
    if gamma_n <= 0:
        raise DomainError("scalings must be positive")
    condition = beta_polynomial(0, n, alpha, 0)
    quotient, remainder = poly_divmod(condition, RationalPoly.linear(-1, 1) ** n)
    if not remainder.is_zero or quotient.degree > 0:
        raise VerificationFailure(
            f"<phi_0, phi_{n}> at kappa=0 is not a multiple of (beta-1)^{n}: remainder {remainder}"
        )
    cofactor = quotient.coefficient(0)
    beta = 2 / (1 + gamma_n)
    coefficient = scaled_inner_reduced(0, n, 1, gamma_n, alpha, 0).coefficient
    if coefficient != cofactor * (beta - 1) ** n:
        raise VerificationFailure(f"factored form disagrees with the integral at n={n}")
    return Kappa0Factor(beta, cofactor, coefficient)


def kappa1_scaling_roots(n: int, alpha: Scalar) -> Tuple[Fraction, ...]:
    """Roots g_n of <phi_0, phi_n> = 0 at kappa = 1.

    The numerator in g_n is c (g_n - 1)^(n-1) times a linear factor whose root
    is (alpha+1)/(alpha+2n+1).
    """
    if n < 1:
        raise DomainError("kappa1_scaling_roots needs n >= 1")
    alpha = as_rational(alpha)
    numerator, _ = beta_polynomial(0, n, alpha, 1).mobius_substitute(2, 0, 1, 1)
    quotient, remainder = poly_divmod(numerator, RationalPoly.linear(-1, 1) ** (n - 1))
    if not remainder.is_zero or quotient.degree != 1:
        raise VerificationFailure(
            f"<phi_0, phi_{n}> at kappa=1 does not factor as (g-1)^{n - 1} times a linear term"
        )
    root = -quotient.coefficient(0) / quotient.coefficient(1)
    if n == 1:
        return (root,)
    return (Fraction(1), root)


class Kappa1Comparison(NamedTuple):
    computed: ReducedIntegral
    closed_form: Fraction
    ratio: Fraction
    expected_ratio: Fraction


def kappa1_phi1_phin(n: int, alpha: Scalar) -> Kappa1Comparison:
    """<phi_1, phi_n> with g_1 = (alpha+1)/(alpha+3), g_n = 1, kappa = 1; nonzero for n >= 2."""
    if n < 2:
        raise DomainError("kappa1_phi1_phin needs n >= 2")
    alpha = as_rational(alpha)
    gamma1 = (alpha + 1) / (alpha + 3)
    computed = scaled_inner_reduced(1, n, gamma1, 1, alpha, 1)
    if computed.coefficient == 0:
        raise VerificationFailure(f"<phi_1, phi_{n}> vanishes at alpha={alpha}")
    formula = (
        (-1) ** (n - 1)
        * n
        * ((alpha + 3) * n - 1)
        * (alpha + 3)
        * pochhammer(alpha + 3, n - 2)
        / ((alpha + 1) ** (n - 2) * (alpha + 2))
    )
    ratio = computed.coefficient / formula
    if ratio <= 0:
        raise VerificationFailure(f"<phi_1, phi_{n}> has the wrong sign: ratio {ratio}")
    expected_ratio = (alpha + 1) ** (n - 1) / (pochhammer(1, n) * (alpha + 2) ** (n - 1))
    return Kappa1Comparison(computed, formula, ratio, expected_ratio)


def constant_family(alpha: Scalar, nmax: int) -> ScalingFamily:
    return ScalingFamily(alpha, 0, tuple(Fraction(1) for _ in range(nmax + 1)))


def strange_family(alpha: Scalar, nmax: int) -> ScalingFamily:
    alpha = as_rational(alpha)
    return ScalingFamily(alpha, 1, tuple((alpha + 1) / (alpha + 2 * n + 1) for n in range(nmax + 1)))


def family_cross_terms(family: ScalingFamily) -> List[Tuple[int, int, Fraction]]:
    terms = []
    for n in range(len(family.gammas)):
        for m in range(n):
            value = scaled_inner_reduced(
                m, n, family.gammas[m], family.gammas[n], family.alpha, family.kappa
            )
            terms.append((m, n, value.coefficient))
    return terms
