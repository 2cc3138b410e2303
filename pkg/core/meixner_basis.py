"""
Change of basis between the radial functions phi_n and the Laguerre functions
L_m^{alpha+1}(x/(alpha+1)) e^{-x/(2(alpha+1))}, the Meixner functions h_n that
appear in its entries, and the orthogonality of the h_n.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from core.errors import DomainError, VerificationFailure
from core.exact_core import RationalPoly, Scalar, as_rational, pochhammer
from core.integrate import ScaledRational, ScaleFactor, gamma_moment
from core.specfun import (
    MeixnerSpec,
    hyp2f1_terminating,
    laguerre_poly,
    meixner_eval,
    meixner_poly,
)

logger = logging.getLogger(__name__)

MAX_SERIES_TERMS = 100_000


def _alpha(alpha: Scalar, minimum: int = -1) -> Fraction:
    alpha = as_rational(alpha)
    if minimum == 0 and alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    if alpha <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    return alpha


def u_parameter(n: int, alpha: Fraction) -> Fraction:
    """u_n = n/(alpha+n+1)"""
    return Fraction(n) / (alpha + n + 1)


@dataclass(frozen=True)
class HFunction:
    """h_n(x) = u^x (x+1) M_n(x; alpha+3, u^2) with u = u_{n+1}."""

    alpha: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", _alpha(self.alpha, minimum=0))
        if self.n < 0:
            raise DomainError(f"degree must be nonnegative, got {self.n}")

    @property
    def u(self) -> Fraction:
        return u_parameter(self.n + 1, self.alpha)

    @property
    def meixner(self) -> MeixnerSpec:
        return MeixnerSpec(self.n, self.alpha + 3, self.u**2)


def _is_integer(x) -> bool:
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return True
    return isinstance(x, Fraction) and x.denominator == 1


def h_eval(h: HFunction, x):
    """Exact at integer x >= -1, float elsewhere."""
    if _is_integer(x):
        x = int(x)
        if x == -1:
            return Fraction(0)
        if x < -1:
            raise DomainError(f"h is evaluated on x >= -1, got {x}")
        return h.u**x * (x + 1) * meixner_eval(h.meixner, x)
    xf = float(x)
    return math.exp(xf * math.log(h.u)) * (xf + 1) * meixner_eval(h.meixner, xf)


# -- the illustration integral ---------------------------------------------


def _beta_off_one(beta: Scalar) -> Fraction:
    beta = as_rational(beta)
    if not 0 < beta < 2:
        raise DomainError(f"beta must lie in (0, 2), got {beta}")
    if beta == 1:
        raise DomainError("beta = 1 is the plain Laguerre orthogonality; use the moment directly")
    return beta


def illustration_overlap(n: int, m: int, alpha: Scalar, beta: Scalar) -> Fraction:
    """int L_n^{alpha+1}(beta x) L_m^{alpha+1}((2-beta)x) x^(alpha+1) e^{-x} dx / Gamma(alpha+2)."""
    alpha = _alpha(alpha)
    beta = _beta_off_one(beta)
    product = laguerre_poly(n, alpha + 1).scale_argument(beta) * laguerre_poly(
        m, alpha + 1
    ).scale_argument(2 - beta)
    return gamma_moment(product, alpha + 1).coefficient


def illustration_closed_form(n: int, m: int, alpha: Scalar, beta: Scalar) -> Fraction:
    """(1-beta)^(n+m) (-1)^m (alpha+2)_n (alpha+2)_m/(n! m!) M_n(m; alpha+2, (1-beta)^2)."""
    alpha = _alpha(alpha)
    beta = _beta_off_one(beta)
    c = (1 - beta) ** 2
    meixner = meixner_poly(MeixnerSpec(n, alpha + 2, c))(m)
    return (
        (1 - beta) ** (n + m)
        * (-1) ** m
        * pochhammer(alpha + 2, n)
        * pochhammer(alpha + 2, m)
        / (pochhammer(1, n) * pochhammer(1, m))
        * meixner
    )


# -- transformation entries -----------------------------------------------


def _entry_scale(n: int, alpha: Fraction) -> ScaleFactor:
    return ScaleFactor((alpha + 1) * (alpha + 2 * n + 1) / (alpha + n + 1), alpha + 2)


def transform_entry(n: int, m: int, alpha: Scalar) -> ScaledRational:
    """I(n, m) by direct moment reduction of the defining integral."""
    alpha = _alpha(alpha)
    beta = (alpha + 1) / (alpha + n + 1)
    product = laguerre_poly(n, alpha).scale_argument(beta) * laguerre_poly(
        m, alpha + 1
    ).scale_argument(2 - beta)
    coefficient = gamma_moment(product, alpha + 1).coefficient
    return ScaledRational(coefficient, (_entry_scale(n, alpha),))


def transform_entry_closed_form(n: int, m: int, alpha: Scalar) -> ScaledRational:
    """I(n, m) from the terminating 2F1 closed form."""
    alpha = _alpha(alpha)
    scale = (_entry_scale(n, alpha),)
    if n == 0 or m == 0:
        return ScaledRational(Fraction(int(n == m)), scale)
    u = u_parameter(n, alpha)
    coefficient = (
        pochhammer(alpha + 3, m - 1)
        * pochhammer(alpha + 2, n - 1)
        / (pochhammer(1, m - 1) * pochhammer(1, n - 1))
        * (-1) ** (m - 1)
        * (1 - u**2)
        * u ** (m + n - 3)
        * hyp2f1_terminating(n - 1, 1 - m, alpha + 3, 1 - u**-2)
    )
    return ScaledRational(coefficient, scale)


def transform_entry_from_h(n: int, m: int, alpha: Scalar) -> ScaledRational:
    """I(n, m) recomposed from h_{n-1}(m-1) for n, m >= 1."""
    alpha = _alpha(alpha, minimum=0)
    if n < 1 or m < 1:
        raise DomainError("the h recomposition covers n, m >= 1")
    u = u_parameter(n, alpha)
    h_value = h_eval(HFunction(alpha, n - 1), m - 1)
    coefficient = (
        pochhammer(alpha + 3, m - 1)
        * pochhammer(alpha + 2, n - 1)
        / (pochhammer(1, m) * pochhammer(1, n - 1))
        * (-1) ** (m - 1)
        * (1 - u**2)
        * u ** (n - 2)
        * h_value
    )
    return ScaledRational(coefficient, (_entry_scale(n, alpha),))


def phi_norm_squared(n: int, alpha: Scalar) -> ScaledRational:
    """||phi_n||^2 after dividing by Gamma(alpha+2): (alpha+2n+1)^(alpha+3)(alpha+2)_{n-1}/n!."""
    alpha = _alpha(alpha)
    if n == 0:
        rising = 1 / (alpha + 1)
    else:
        rising = pochhammer(alpha + 2, n - 1)
    return ScaledRational(
        rising / pochhammer(1, n), (ScaleFactor(alpha + 2 * n + 1, alpha + 3),)
    )


def column_norm_exact(m: int, alpha: Scalar) -> ScaledRational:
    alpha = _alpha(alpha)
    return ScaledRational(
        pochhammer(alpha + 2, m) / pochhammer(1, m), (ScaleFactor(alpha + 1, alpha + 2),)
    )


def column_norm(m: int, alpha: Scalar) -> float:
    """N_m = (alpha+1)^(alpha+2) (alpha+2)_m / m!"""
    return column_norm_exact(m, alpha).value


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    alpha: Fraction
    entries: np.ndarray  # I(n, m), n <= nmax, m <= mmax
    row_norms: np.ndarray  # ||phi_n||
    column_norms: np.ndarray  # N_m^(1/2)
    nmax: int = 0
    mmax: int = 0

    @property
    def normalized(self) -> np.ndarray:
        return self.entries / np.outer(self.row_norms, self.column_norms)

    def gram(self) -> np.ndarray:
        block = self.normalized
        return block @ block.T

    def gram_deviation(self) -> float:
        gram = self.gram()
        return float(np.max(np.abs(gram - np.eye(gram.shape[0]))))


def orthogonal_block(
    alpha: Scalar, nmax: int, mmax: int, tail_tol: float = 1e-10
) -> TransformMatrix:
    """Rows n <= nmax of the normalized transform, truncated at column mmax."""
    alpha = _alpha(alpha)
    if nmax < 0 or mmax < 0:
        raise DomainError("block sizes must be nonnegative")
    entries = np.zeros((nmax + 1, mmax + 1))
    for n in range(nmax + 1):
        for m in range(mmax + 1):
            entries[n, m] = transform_entry_closed_form(n, m, alpha).value
    row_norms = np.sqrt([phi_norm_squared(n, alpha).value for n in range(nmax + 1)])
    column_norms = np.sqrt([column_norm(m, alpha) for m in range(mmax + 1)])
    block = TransformMatrix(alpha, entries, row_norms, column_norms, nmax, mmax)
    deficits = 1.0 - np.sum(block.normalized**2, axis=1)
    worst = int(np.argmax(deficits))
    if deficits[worst] > tail_tol:
        logger.warning(
            "rows truncated at mmax=%d: norm deficit %.3g at n=%d", mmax, deficits[worst], worst
        )
    return block


# -- truncated series with a geometric tail bound ------------------------


class SeriesSum(NamedTuple):
    value: float
    terms: int
    tail_bound: float


def _poly_float(coeffs: list, x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _truncated_sum(
    term: Callable[[int], Fraction],
    bound: Callable[[int], float],
    ratio: Callable[[int], float],
    tol: float,
    start: int,
) -> SeriesSum:
    """Sum term(k) for k >= start until bound(k) * r/(1-r) < tol * max(1, |partial|).

    ratio(k) must bound bound(j+1)/bound(j) for every j >= k and be non-increasing.
    """
    values = []
    k = start
    while True:
        values.append(float(term(k)))
        r = ratio(k)
        if r < 1:
            tail = bound(k) * r / (1 - r)
            partial = math.fsum(values)
            if tail < tol * max(1.0, abs(partial)):
                return SeriesSum(partial, len(values), tail)
        k += 1
        if k - start > MAX_SERIES_TERMS:
            raise VerificationFailure(f"series did not reach tolerance {tol} in {MAX_SERIES_TERMS} terms")


def _meixner_majorant(spec: MeixnerSpec) -> list:
    """Nonnegative Q with |M_n(x)| <= Q(x) at nonnegative integers x."""
    z = abs(float(1 - 1 / spec.c))
    g = float(spec.gamma)
    coeffs = [1.0]
    coeff = 1.0
    for j in range(spec.n):
        coeff *= (spec.n - j) * z / ((g + j) * (j + 1))
        coeffs.append(coeff)
    return coeffs


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")


def meixner_norm(n: int, gamma: Scalar, c: Scalar) -> float:
    """n!/((gamma)_n c^n (1-c)^gamma)"""
    spec = MeixnerSpec(n, gamma, c)
    return ScaledRational(
        pochhammer(1, n) / (pochhammer(spec.gamma, n) * spec.c**n),
        (ScaleFactor(1 - spec.c, -spec.gamma),),
    ).value


def meixner_norm_sum(n: int, m: int, gamma: Scalar, c: Scalar, tol: float) -> float:
    """sum_{x>=0} (gamma)_x/x! c^x M_n(x) M_m(x), truncated by a geometric tail bound."""
    _check_tol(tol)
    spec_n = MeixnerSpec(n, gamma, c)
    spec_m = MeixnerSpec(m, gamma, c)
    g, cc = spec_n.gamma, spec_n.c
    p_n, p_m = meixner_poly(spec_n), meixner_poly(spec_m)
    q_n, q_m = _meixner_majorant(spec_n), _meixner_majorant(spec_m)
    degree = n + m
    gf, cf = float(g), float(cc)
    weights = {0: Fraction(1)}

    def weight(x: int) -> Fraction:
        if x not in weights:
            weights[x] = weight(x - 1) * (g + x - 1) * cc / x
        return weights[x]

    def term(x: int) -> Fraction:
        return weight(x) * p_n(x) * p_m(x)

    def bound(x: int) -> float:
        return abs(float(weight(x))) * _poly_float(q_n, x) * _poly_float(q_m, x)

    def ratio(x: int) -> float:
        if x < 1:
            return math.inf
        return cf * max(1.0, (gf + x) / (x + 1)) * ((x + 1) / x) ** degree

    return _truncated_sum(term, bound, ratio, tol, 0).value


class HOrthogonality(NamedTuple):
    sum: float
    rhs: float
    terms: int


def h_orthogonality_rhs(n: int, l: int, alpha: Scalar) -> ScaledRational:  # noqa: E741
    alpha = _alpha(alpha, minimum=0)
    if n != l:
        return ScaledRational(Fraction(0))
    rational = (
        pochhammer(1, n - 1)
        / pochhammer(alpha + 2, n - 1)
        * (alpha + 2) ** 2
        / Fraction(n) ** (2 * n - 3)
    )
    return ScaledRational(
        rational,
        (
            ScaleFactor(alpha + n + 1, 2 * alpha + 2 * n + 4),
            ScaleFactor(alpha + 1, -(alpha + 4)),
            ScaleFactor(alpha + 2 * n + 1, -(alpha + 3)),
        ),
    )


def h_orthogonality_sum(n: int, l: int, alpha: Scalar, tol: float) -> HOrthogonality:  # noqa: E741
    """sum_{m>=1} (alpha+2)_m/m! h_{n-1}(m-1) h_{l-1}(m-1) against its closed form."""
    _check_tol(tol)
    if n < 1 or l < 1:
        raise DomainError("h_orthogonality_sum needs n, l >= 1")
    alpha = _alpha(alpha, minimum=0)
    h_n, h_l = HFunction(alpha, n - 1), HFunction(alpha, l - 1)
    q_n, q_l = _meixner_majorant(h_n.meixner), _meixner_majorant(h_l.meixner)
    r = float(h_n.u * h_l.u)
    a = float(alpha)
    degree = n + l - 2
    weights = {1: alpha + 2}

    def weight(m: int) -> Fraction:
        if m not in weights:
            weights[m] = weight(m - 1) * (alpha + 1 + m) / m
        return weights[m]

    def term(m: int) -> Fraction:
        return weight(m) * h_eval(h_n, m - 1) * h_eval(h_l, m - 1)

    def bound(m: int) -> float:
        return (
            float(weight(m))
            * r ** (m - 1)
            * m**2
            * _poly_float(q_n, m - 1)
            * _poly_float(q_l, m - 1)
        )

    def ratio(m: int) -> float:
        if m < 2:
            return math.inf
        return r * (a + 2 + m) / (m + 1) * ((m + 1) / m) ** 2 * (m / (m - 1)) ** degree

    total = _truncated_sum(term, bound, ratio, tol, 1)
    logger.debug("h sum n=%d l=%d alpha=%s truncated after %d terms", n, l, alpha, total.terms)
    return HOrthogonality(total.value, h_orthogonality_rhs(n, l, alpha).value, total.terms)


def recentering_coefficient(n: int, alpha: Scalar) -> Fraction:
    """Coefficient of M_{n-1} in (x+1) M_{n-1}(x; alpha+3, u_n^2); equals n(alpha+n+1)/(alpha+1)."""
    if n < 1:
        raise DomainError("recentering_coefficient needs n >= 1")
    alpha = _alpha(alpha)
    g = alpha + 3
    c = u_parameter(n, alpha) ** 2
    k = n - 1
    upper = c * (g + k) / (c - 1)
    middle = (k + (k + g) * c) / (1 - c) + 1
    lower = Fraction(k) / (c - 1)
    expansion = meixner_poly(MeixnerSpec(k + 1, g, c)) * upper + meixner_poly(
        MeixnerSpec(k, g, c)
    ) * middle
    if k:
        expansion = expansion + meixner_poly(MeixnerSpec(k - 1, g, c)) * lower
    target = RationalPoly.linear(1, 1) * meixner_poly(MeixnerSpec(k, g, c))
    if not (target - expansion).is_zero:
        raise VerificationFailure(f"three-term expansion of (x+1)M_{k} fails at alpha={alpha}")
    return middle


def h_norm_via_meixner(n: int, alpha: Scalar) -> ScaledRational:
    """(alpha+2) * recentering coefficient * ||M_{n-1}||^2 with c = u_n^2."""
    alpha = _alpha(alpha, minimum=0)
    if n < 1:
        raise DomainError("h_norm_via_meixner needs n >= 1")
    c = u_parameter(n, alpha) ** 2
    rational = (
        (alpha + 2)
        * recentering_coefficient(n, alpha)
        * pochhammer(1, n - 1)
        / (pochhammer(alpha + 3, n - 1) * c ** (n - 1))
    )
    return ScaledRational(rational, (ScaleFactor(1 - c, -(alpha + 3)),))
