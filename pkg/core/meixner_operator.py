"""
The second-order difference operator D on functions of x = -1, 0, 1, ... with
f(-1) = 0:

    D f(x) = (x+alpha+3)/(x+2) f(x+1) + ((alpha+1)/(x+1) - 2) f(x) + f(x-1)

It is symmetric for the weight (alpha+2)_{x+1}/(x+1)!, the h_n are its
eigenfunctions, and D f = -lambda f has a one-parameter family of solutions
whose u -> 1 limit is h_infinity.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

from scipy.optimize import brentq

from core.errors import DomainError, VerificationFailure, ZeroSearchError
from core.exact_core import Scalar, as_rational
from core.meixner_basis import HFunction, h_eval, u_parameter
from core.specfun import hyp2f1_terminating

logger = logging.getLogger(__name__)

SERIES_MAX_TERMS = 5000
LIMIT_THRESHOLD = 0.1


def _alpha(alpha: Scalar) -> Fraction:
    alpha = as_rational(alpha)
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    return alpha


@dataclass(frozen=True)
class DiscreteFunction:
    """Values f(-1), f(0), ..., f(xmax); compact functions vanish beyond xmax."""

    values: Tuple
    compact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) < 2:
            raise DomainError("a discrete function needs values at x = -1 and x = 0")
        if self.values[0] != 0:
            raise DomainError(f"f(-1) must be 0, got {self.values[0]}")

    @classmethod
    def from_values(cls, values: Sequence, compact: bool = False) -> "DiscreteFunction":
        """Values listed from x = 0."""
        return cls((0,) + tuple(values), compact)

    @classmethod
    def from_callable(cls, f: Callable, xmax: int, compact: bool = False) -> "DiscreteFunction":
        return cls((0,) + tuple(f(x) for x in range(xmax + 1)), compact)

    @property
    def xmax(self) -> int:
        return len(self.values) - 2

    def __call__(self, x: int):
        if x < -1:
            raise DomainError(f"discrete functions start at x = -1, got {x}")
        if x > self.xmax:
            if self.compact:
                return 0
            raise DomainError(f"missing neighbour: f({x}) beyond xmax={self.xmax}")
        return self.values[x + 1]

    def restrict(self, xmax: int) -> "DiscreteFunction":
        """Compact copy supported on 0..xmax."""
        return DiscreteFunction(tuple(self(x) for x in range(-1, xmax + 1)), compact=True)


def apply_D(f: DiscreteFunction, alpha: Scalar, x: int):
    if x < 0:
        raise DomainError(f"D is applied at x >= 0, got {x}")
    alpha = as_rational(alpha)
    return (
        Fraction(x + alpha + 3) / (x + 2) * f(x + 1)
        + ((alpha + 1) / (x + 1) - 2) * f(x)
        + f(x - 1)
    )


def apply_D_regrouped(f: DiscreteFunction, alpha: Scalar, x: int):
    """Second difference plus first-difference drift plus potential; equals apply_D."""
    if x < 0:
        raise DomainError(f"D is applied at x >= 0, got {x}")
    alpha = as_rational(alpha)
    second = f(x + 1) - 2 * f(x) + f(x - 1)
    first = f(x + 1) - f(x)
    return (
        second
        + (alpha + 1) / (x + 2) * first
        + (alpha + 1) * (Fraction(1, x + 1) + Fraction(1, x + 2)) * f(x)
    )


def weighted_inner(f1: DiscreteFunction, f2: DiscreteFunction, alpha: Scalar, xmax: int):
    """sum_{x=0..xmax} (alpha+2)_{x+1}/(x+1)! f1(x) f2(x)"""
    alpha = as_rational(alpha)
    weight = alpha + 2
    total = 0
    for x in range(xmax + 1):
        if x:
            weight = weight * (alpha + 2 + x) / (x + 1)
        total = total + weight * f1(x) * f2(x)
    return total


def symmetry_residual(f1: DiscreteFunction, f2: DiscreteFunction, alpha: Scalar, xmax: int):
    """|<D f1, f2> - <f1, D f2>| for f1, f2 cut off beyond xmax."""
    alpha = as_rational(alpha)
    g1, g2 = f1.restrict(xmax), f2.restrict(xmax)
    d1 = DiscreteFunction.from_callable(lambda x: apply_D(g1, alpha, x), xmax)
    d2 = DiscreteFunction.from_callable(lambda x: apply_D(g2, alpha, x), xmax)
    return abs(weighted_inner(d1, g2, alpha, xmax) - weighted_inner(g1, d2, alpha, xmax))


class EigenResidual(NamedTuple):
    residual: Fraction
    eigenvalue: Fraction


def eigen_residual(n: int, alpha: Scalar, xmax: int) -> EigenResidual:
    """max_x |D h_{n-1}(x) - (u_n-1)^2/u_n h_{n-1}(x)| for x = 0..xmax."""
    if n < 1:
        raise DomainError("eigen_residual needs n >= 1")
    alpha = _alpha(alpha)
    u = u_parameter(n, alpha)
    eigenvalue = (u - 1) ** 2 / u
    closed = (alpha + 1) ** 2 / (n * (alpha + n + 1))
    if eigenvalue != closed:
        raise VerificationFailure(f"(u-1)^2/u = {eigenvalue} differs from {closed}")
    h = HFunction(alpha, n - 1)
    f = DiscreteFunction.from_callable(lambda x: h_eval(h, x), xmax + 1)
    residual = max(abs(apply_D(f, alpha, x) - eigenvalue * f(x)) for x in range(xmax + 1))
    return EigenResidual(residual, eigenvalue)


def solve_difference(lam: Scalar, alpha: Scalar, xmax: int) -> DiscreteFunction:
    """The unique solution of D f = -lam f with f(-1) = 0, f(0) = 1."""
    lam = as_rational(lam)
    alpha = as_rational(alpha)
    values = [Fraction(0), Fraction(1)]
    for x in range(xmax):
        current, previous = values[-1], values[-2]
        values.append(
            Fraction(x + 2) / (x + alpha + 3)
            * ((2 - lam - (alpha + 1) / (x + 1)) * current - previous)
        )
    return DiscreteFunction(tuple(values))


@dataclass(frozen=True)
class SpectralSolution:
    gamma_spec: Fraction
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "gamma_spec", as_rational(self.gamma_spec))
        object.__setattr__(self, "alpha", _alpha(self.alpha))
        if self.gamma_spec <= -1:
            raise DomainError(f"spectral parameter must exceed -1, got {self.gamma_spec}")

    @property
    def u(self) -> Fraction:
        return (1 + self.gamma_spec) / (self.alpha + 2 + self.gamma_spec)

    @property
    def lam(self) -> Fraction:
        return -((self.alpha + 1) ** 2) / ((self.gamma_spec + 1) * (self.alpha + self.gamma_spec + 2))

    def characteristic_residual(self) -> Fraction:
        """u^2 - (2-lam) u + 1"""
        return self.u**2 - (2 - self.lam) * self.u + 1


class SeriesEvaluation(NamedTuple):
    value: object
    terms: int
    tail_estimate: float
    converged: bool


def _is_integer(x) -> bool:
    if isinstance(x, bool):
        return False
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


def series_solution_detail(
    gamma_spec: Scalar, alpha: Scalar, x, tol: float = 1e-14
) -> SeriesEvaluation:
    """u^x (x+1) 2F1(-x, -gamma; alpha+3; 1-u^-2) summed through the a_j recurrence."""
    solution = SpectralSolution(gamma_spec, alpha)
    u, g, a = solution.u, solution.gamma_spec, solution.alpha
    z = 1 - u**-2
    if _is_integer(x):
        x = int(x)
        if x < -1:
            raise DomainError(f"the series solution lives on x >= -1, got {x}")
        if x == -1:
            return SeriesEvaluation(Fraction(0), 0, 0.0, True)
        value = u**x * (x + 1) * hyp2f1_terminating(x, -g, a + 3, z)
        return SeriesEvaluation(value, x + 1, 0.0, True)

    xf, gf, af, zf = float(x), float(g), float(a), float(z)
    terminating = _is_integer(g) and g >= 0
    total, term, j = 1.0, 1.0, 0
    tail = math.inf
    converged = False
    while j < SERIES_MAX_TERMS:
        if terminating and j >= g:
            tail, converged = 0.0, True
            break
        # a_{j+1}/a_j = (u^2-1)(j-g)/(u^2 (j+1)(j+alpha+3)), times (-x)_{j+1}/(-x)_j
        ratio = (j - gf) * (j - xf) * zf / ((j + 1) * (j + af + 3))
        term *= ratio
        total += term
        j += 1
        if term == 0.0:
            tail, converged = 0.0, True
            break
        if abs(ratio) < 1 and abs(term) <= tol * max(abs(total), 1e-300):
            bound = abs(zf) * (1 + (abs(gf) + abs(xf) + 1) / (j + 1))
            if bound < 1:
                tail, converged = abs(term) * bound / (1 - bound), True
                break
    prefactor = math.exp(xf * math.log(u)) * (xf + 1)
    return SeriesEvaluation(prefactor * total, j + 1, tail, converged)


def series_solution(gamma_spec: Scalar, alpha: Scalar, x):
    result = series_solution_detail(gamma_spec, alpha, x)
    if not result.converged:
        logger.warning(
            "series solution at gamma=%s alpha=%s x=%s not converged after %d terms",
            gamma_spec, alpha, x, result.terms,
        )
    return result.value


def h_infinity_eval(alpha: Scalar, x, tol: float = 1e-14):
    """(x+1) sum_j (-x)_j/(alpha+3)_j (2(alpha+1))^j/j!; exact at integer x."""
    alpha = _alpha(alpha)
    if _is_integer(x):
        x = int(x)
        if x < -1:
            raise DomainError(f"h_infinity lives on x >= -1, got {x}")
        total, term = Fraction(1), Fraction(1)
        for j in range(x):
            term = term * (j - x) * 2 * (alpha + 1) / ((alpha + 3 + j) * (j + 1))
            total += term
        return (x + 1) * total
    xf, af = float(x), float(alpha)
    total, term = 1.0, 1.0
    for j in range(SERIES_MAX_TERMS):
        ratio = (j - xf) * 2 * (af + 1) / ((af + 3 + j) * (j + 1))
        term *= ratio
        total += term
        if term == 0.0:
            break
        if abs(ratio) < 1 and abs(term) <= tol * max(abs(total), 1e-300):
            break
    return (xf + 1) * total


class LimitRow(NamedTuple):
    n: int
    value: float
    limit: float
    error: float


def limit_study(
    alpha: Scalar,
    x,
    n_list: Sequence[int],
    tol: float = 1e-14,
    threshold: Optional[float] = LIMIT_THRESHOLD,
) -> List[LimitRow]:
    """|h_n(x) - h_infinity(x)| over n_list; must not increase, and end below threshold (None skips it)."""
    if list(n_list) != sorted(set(n_list)):
        raise DomainError("n_list must be strictly increasing")
    alpha = _alpha(alpha)
    limit = h_infinity_eval(alpha, x, tol)
    rows = []
    for n in n_list:
        value = h_eval(HFunction(alpha, n), x)
        rows.append(LimitRow(n, float(value), float(limit), float(abs(value - limit))))
    for before, after in zip(rows, rows[1:]):
        if after.error > before.error:
            raise VerificationFailure(
                f"|h_n - h_inf| grew from {before.error} (n={before.n}) to {after.error} (n={after.n})"
            )
    if threshold is not None and rows and rows[-1].error > threshold:
        raise VerificationFailure(f"final error {rows[-1].error} above threshold {threshold}")
    return rows


def first_zeros(f: Callable[[float], float], k: int, xmax: float, step: float = 0.05) -> List[float]:
    """First k zeros of f on (-1, xmax], by a sign-change scan refined with brentq."""
    if k < 1:
        raise DomainError("first_zeros needs k >= 1")
    if step <= 0:
        raise DomainError("scan step must be positive")
    zeros: List[float] = []
    previous: Optional[Tuple[float, float]] = None
    i = 1
    while len(zeros) < k:
        x = -1.0 + i * step
        if x > xmax:
            break
        value = float(f(x))
        if value == 0.0:
            zeros.append(x)
            previous = None
        elif previous is not None and (previous[1] < 0) != (value < 0):
            zeros.append(brentq(f, previous[0], x, xtol=1e-10))
            previous = (x, value)
        else:
            previous = (x, value)
        i += 1
    if len(zeros) < k:
        raise ZeroSearchError(k, len(zeros), xmax)
    return zeros


class ZeroDistance(NamedTuple):
    n: int
    zeros: Tuple[float, ...]
    distance: float


def zero_convergence(
    alpha: Scalar, k: int, n_list: Sequence[int], xmax: float, step: float = 0.05
) -> List[ZeroDistance]:
    """Max distance between the first k zeros of h_n and of h_infinity, per n."""
    alpha = _alpha(alpha)
    target = first_zeros(lambda t: h_infinity_eval(alpha, t), k, xmax, step)
    rows = []
    for n in n_list:
        h = HFunction(alpha, n)
        zeros = first_zeros(lambda t, h=h: h_eval(h, t), k, xmax, step)
        distance = max(abs(a - b) for a, b in zip(zeros, target))
        rows.append(ZeroDistance(n, tuple(zeros), distance))
    return rows
