"""
Two integration backends for integrands p(s) s^a e^{-s} on (0, inf).

The exact backend reduces every such integral to Gamma(a+1) times a rational
number and keeps Gamma (and any positive irrational prefactor) symbolic. The
floating backend is Gauss-Laguerre quadrature from the Jacobi matrix.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from core.errors import DomainError
from core.exact_core import RationalPoly, Scalar, as_rational
from core.specfun import laguerre_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScaleFactor:
    """A positive prefactor base**exponent kept symbolic until reporting."""

    base: Fraction
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "base", as_rational(self.base))
        object.__setattr__(self, "exponent", as_rational(self.exponent))
        if self.base <= 0:
            raise DomainError(f"scale base must be positive, got {self.base}")

    def log(self) -> float:
        return float(self.exponent) * math.log(self.base)

    def to_float(self) -> float:
        return math.exp(self.log())


def _log_abs(value: Fraction) -> float:
    # math.log on the parts keeps huge numerators and denominators finite
    return math.log(abs(value.numerator)) - math.log(value.denominator)


def _assemble(coefficient: Fraction, log_scale: float) -> float:
    if not coefficient:
        return 0.0
    sign = 1.0 if coefficient > 0 else -1.0
    return sign * math.exp(_log_abs(coefficient) + log_scale)


@dataclass(frozen=True)
class ScaledRational:
    """coefficient * prod(scales), the exact ledger of a positive-prefactor value."""

    coefficient: Fraction
    scales: Tuple[ScaleFactor, ...] = ()

    @property
    def value(self) -> float:
        return _assemble(self.coefficient, sum(s.log() for s in self.scales))


@dataclass(frozen=True)
class ReducedIntegral:
    """coefficient * Gamma(base+1) * prod(scales)."""

    coefficient: Fraction
    base: Fraction
    scales: Tuple[ScaleFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base", as_rational(self.base))
        if self.base <= -1:
            raise DomainError(f"divergent integral: base {self.base} <= -1")

    def with_scale(self, scale: ScaleFactor) -> "ReducedIntegral":
        return ReducedIntegral(self.coefficient, self.base, self.scales + (scale,))

    @property
    def value(self) -> float:
        log_scale = float(gammaln(float(self.base) + 1)) + sum(s.log() for s in self.scales)
        return _assemble(self.coefficient, log_scale)


def gamma_moment(p: RationalPoly, base: Scalar) -> ReducedIntegral:
    """int p(s) s^base e^{-s} ds as Gamma(base+1) * sum_j p_j (base+1)_j."""
    base = as_rational(base)
    if base <= -1:
        raise DomainError(f"divergent integral: base {base} <= -1")
    total = Fraction(0)
    rising = Fraction(1)
    for j, c in enumerate(p.coeffs):
        if j:
            rising *= base + j
        total += c * rising
    return ReducedIntegral(total, base)


class QuadRule(NamedTuple):
    exponent: float
    nodes: np.ndarray
    weights: np.ndarray


_RESCALE_ABOVE = 1e150


def _laguerre_tail(size: int, a: float, x: np.ndarray):
    """L_{N-1}^a, L_N^a, L_{N+1}^a at x sharing one log scale: value = stored * exp(log_scale)."""
    lower = np.zeros_like(x)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    log_scale = np.zeros_like(x)
    for k in range(size + 1):
        nxt = ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
        lower, prev, cur = prev, cur, nxt
        big = np.abs(cur) > _RESCALE_ABOVE
        if big.any():
            factor = np.where(big, 1.0 / _RESCALE_ABOVE, 1.0)
            lower, prev, cur = lower * factor, prev * factor, cur * factor
            log_scale -= np.log(factor)
    return lower, prev, cur, log_scale


@lru_cache(maxsize=256)
def _golub_welsch(size: int, a: float) -> QuadRule:
    i = np.arange(size, dtype=float)
    diagonal = 2.0 * i + a + 1.0
    k = np.arange(1, size, dtype=float)
    off_diagonal = np.sqrt(k * (k + a))
    nodes = eigh_tridiagonal(diagonal, off_diagonal, eigvals_only=True)
    # one Newton step on L_N, with x L_N' = N L_N - (N+a) L_{N-1}
    below, at, _, _ = _laguerre_tail(size, a, nodes)
    nodes = nodes - nodes * at / (size * at - (size + a) * below)
    # w_i = Gamma(N+a+1) x_i / (N! (N+1)^2 L_{N+1}(x_i)^2), in log space
    _, _, above, log_scale = _laguerre_tail(size, a, nodes)
    log_weights = (
        float(gammaln(size + a + 1.0))
        - float(gammaln(size + 1.0))
        + np.log(nodes)
        - 2.0 * math.log(size + 1.0)
        - 2.0 * (np.log(np.abs(above)) + log_scale)
    )
    weights = np.exp(log_weights)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadRule(a, nodes, weights)


def gauss_laguerre_rule(size: int, a) -> QuadRule:
    """N-point Gauss rule for the weight s^a e^{-s}, exact to degree 2N-1."""
    if size < 1:
        raise DomainError(f"quadrature rule size must be positive, got {size}")
    a = float(a)
    if a <= -1:
        raise DomainError(f"quadrature exponent must exceed -1, got {a}")
    return _golub_welsch(size, a)


def quad_integrate(f: Callable[[float], float], rule: QuadRule) -> float:
    values = []
    for node in rule.nodes:
        value = float(f(float(node)))
        if not math.isfinite(value):
            raise DomainError(f"integrand is not finite at node {node!r}: {value}")
        values.append(value)
    return math.fsum(w * v for w, v in zip(rule.weights.tolist(), values))


def default_rule_size(m: int, n: int) -> int:
    return m + n + 8


def laguerre_orthonorm_check(m: int, n: int, alpha: Scalar) -> Fraction:
    """int L_m L_n s^alpha e^{-s} ds / Gamma(alpha+1); delta_mn (alpha+1)_n/n!."""
    product = laguerre_poly(m, alpha) * laguerre_poly(n, alpha)
    return gamma_moment(product, alpha).coefficient
