"""
Laguerre and Meixner polynomials, terminating 2F1 sums and the two Laguerre
expansion identities used by the orthogonality proofs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from core.errors import DomainError
from core.exact_core import RationalPoly, Scalar, as_rational, pochhammer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaguerreSpec:
    n: int
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        if self.n < 0:
            raise DomainError(f"Laguerre degree must be nonnegative, got {self.n}")
        if self.alpha <= -1:
            raise DomainError(f"Laguerre index must exceed -1, got {self.alpha}")


@dataclass(frozen=True)
class MeixnerSpec:
    n: int
    gamma: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_rational(self.gamma))
        object.__setattr__(self, "c", as_rational(self.c))
        if self.n < 0:
            raise DomainError(f"Meixner degree must be nonnegative, got {self.n}")
        if self.gamma <= 0:
            raise DomainError(f"Meixner parameter gamma must be positive, got {self.gamma}")
        if not 0 < self.c < 1:
            raise DomainError(f"Meixner parameter c must lie in (0, 1), got {self.c}")


# -- Laguerre -------------------------------------------------------------


@lru_cache(maxsize=4096)
def _laguerre_coeffs(n: int, alpha: Fraction) -> RationalPoly:
    coeff = pochhammer(alpha + 1, n) / pochhammer(1, n)
    coeffs = [coeff]
    for j in range(n):
        coeff = coeff * (j - n) / ((alpha + 1 + j) * (j + 1))
        coeffs.append(coeff)
    return RationalPoly(tuple(coeffs))


def laguerre_coeffs(spec: LaguerreSpec) -> RationalPoly:
    """Exact coefficients of L_n^alpha from the terminating series."""
    return _laguerre_coeffs(spec.n, spec.alpha)


def laguerre_poly(n: int, alpha: Scalar) -> RationalPoly:
    return laguerre_coeffs(LaguerreSpec(n, alpha))


def laguerre_eval(spec: LaguerreSpec, x):
    """Floating L_n^alpha(x) by upward three-term recurrence.

    Works elementwise on numpy arrays as well as on scalars.
    """
    a = float(spec.alpha)
    prev = x * 0.0 + 1.0
    if spec.n == 0:
        return prev
    curr = a + 1.0 - x
    for k in range(1, spec.n):
        prev, curr = curr, ((2 * k + a + 1.0 - x) * curr - (k + a) * prev) / (k + 1)
    return curr


def ode_residual(spec: LaguerreSpec) -> RationalPoly:
    """x p'' + (alpha+1-x) p' + n p for p = L_n^alpha; the zero polynomial."""
    p = laguerre_coeffs(spec)
    d1 = p.derivative()
    d2 = d1.derivative()
    return RationalPoly.x() * d2 + RationalPoly.linear(spec.alpha + 1, -1) * d1 + p * spec.n


def laguerre_recurrence_residual(n: int, alpha: Scalar) -> RationalPoly:
    """(n+1)L_{n+1} - (alpha+1+2n-x)L_n + (n+alpha)L_{n-1}, for n >= 1."""
    if n < 1:
        raise DomainError("three-term recurrence needs n >= 1")
    alpha = as_rational(alpha)
    middle = RationalPoly.linear(alpha + 1 + 2 * n, -1)
    return (
        laguerre_poly(n + 1, alpha) * (n + 1)
        - middle * laguerre_poly(n, alpha)
        + laguerre_poly(n - 1, alpha) * (n + alpha)
    )


def contig_expand(spec: LaguerreSpec) -> Tuple[RationalPoly, RationalPoly]:
    """(L_n^{alpha+1}, L_{n-1}^{alpha+1}); their difference is L_n^alpha."""
    if spec.n == 0:
        raise DomainError("contiguity expansion needs n >= 1 (L_0^alpha = L_0^{alpha+1})")
    return laguerre_poly(spec.n, spec.alpha + 1), laguerre_poly(spec.n - 1, spec.alpha + 1)


def rescale_expand(n: int, delta: Scalar, b: Scalar) -> List[Fraction]:
    """Coefficients c_j with L_n^delta(b x) = sum_j c_j L_j^delta(x)."""
    delta = as_rational(delta)
    b = as_rational(b)
    if delta <= -1:
        raise DomainError(f"rescale index must exceed -1, got {delta}")
    return [
        pochhammer(delta + 1 + j, n - j) / pochhammer(1, n - j) * b**j * (1 - b) ** (n - j)
        for j in range(n + 1)
    ]


# -- hypergeometric -------------------------------------------------------


def hyp2f1_terminating(m: int, b: Scalar, c: Scalar, z: Scalar) -> Fraction:
    """sum_{j=0..m} (-m)_j (b)_j / ((c)_j j!) z^j, exact."""
    if m < 0:
        raise DomainError(f"terminating 2F1 needs m >= 0, got {m}")
    b, c, z = as_rational(b), as_rational(c), as_rational(z)
    total = Fraction(1)
    term = Fraction(1)
    for j in range(m):
        numerator = (j - m) * (b + j)
        if not numerator:
            break
        if c + j == 0:
            raise DomainError(f"pole in lower parameter: c={c} at j={j + 1}")
        term = term * numerator * z / ((c + j) * (j + 1))
        total += term
    return total


# -- Meixner --------------------------------------------------------------


@lru_cache(maxsize=4096)
def _meixner_poly(n: int, gamma: Fraction, c: Fraction) -> RationalPoly:
    z = 1 - 1 / c
    total = RationalPoly.constant(1)
    falling = RationalPoly.constant(1)  # (-x)_j
    coeff = Fraction(1)
    for j in range(n):
        falling = falling * RationalPoly.linear(j, -1)
        coeff = coeff * (j - n) * z / ((gamma + j) * (j + 1))
        total = total + falling * coeff
    return total


def meixner_poly(spec: MeixnerSpec) -> RationalPoly:
    """M_n(x; gamma, c) = 2F1(-n, -x; gamma; 1 - 1/c) as a polynomial in x."""
    return _meixner_poly(spec.n, spec.gamma, spec.c)


def meixner_eval(spec: MeixnerSpec, x):
    """M_n at x: exact for rational x, float otherwise; (-x)_j taken as a product."""
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return hyp2f1_terminating(spec.n, -as_rational(x), spec.gamma, 1 - 1 / spec.c)
    xf = float(x)
    z = float(1 - 1 / spec.c)
    g = float(spec.gamma)
    total = 1.0
    term = 1.0
    for j in range(spec.n):
        term *= (j - spec.n) * (j - xf) * z / ((g + j) * (j + 1))
        total += term
    return total


def meixner_recurrence_residual(n: int, gamma: Scalar, c: Scalar) -> RationalPoly:
    """x M_n - [c(g+n)/(c-1) M_{n+1} + (n+(n+g)c)/(1-c) M_n + n/(c-1) M_{n-1}]."""
    spec = MeixnerSpec(n, gamma, c)
    g, c = spec.gamma, spec.c
    m_n = meixner_poly(spec)
    rhs = meixner_poly(MeixnerSpec(n + 1, g, c)) * (c * (g + n) / (c - 1))
    rhs = rhs + m_n * ((n + (n + g) * c) / (1 - c))
    if n:
        rhs = rhs + meixner_poly(MeixnerSpec(n - 1, g, c)) * (Fraction(n) / (c - 1))
    return RationalPoly.x() * m_n - rhs


def meixner_difference_residual(n: int, gamma: Scalar, c: Scalar, x: int) -> Fraction:
    """c(x+g)M(x+1) - (x+(x+g)c)M(x) + x M(x-1) - n(c-1)M(x) at an integer x."""
    spec = MeixnerSpec(n, gamma, c)
    g, c = spec.gamma, spec.c
    p = meixner_poly(spec)
    return (
        c * (x + g) * p(x + 1)
        - (x + (x + g) * c) * p(x)
        + x * p(x - 1)
        - n * (c - 1) * p(x)
    )
