import math
from fractions import Fraction
from functools import partial

from scipy.special import gammaln

from core.config import VerificationConfig
from core.exact_core import pochhammer
from core.integrate import gauss_laguerre_rule, laguerre_orthonorm_check
from core.radial import (
    RadialMode,
    bsum_check,
    contiguity_combination,
    energy_level,
    phi_inner_product,
    phi_inner_product_quadrature,
    phi_norm_closed_form,
    recurrence_norm_step,
)
from core.specfun import LaguerreSpec, laguerre_recurrence_residual, ode_residual
from suites.base import Outcome, VerificationSuite, close_to, exact_equal


def _zero_poly(poly) -> Outcome:
    return Outcome("0", str(poly), poly.is_zero)


class OrthogonalitySuite(VerificationSuite):
    """Laguerre facts, the degree-scaled orthogonality of phi_n and its proof pipelines."""

    name = "ortho"

    def __init__(self):
        self.norm_rel_tol = 1e-10
        self.pipeline_degree_max = 10
        self.energy_nmax = 5
        self.energy_lmax = 2
        self.weight_sum_sizes = (1, 10, 20)

    def plan(self, config: VerificationConfig):
        for alpha in config.alpha_grid:
            yield from self._laguerre_facts(alpha, config.degree_max)
            yield from self._strange_orthogonality(alpha, config.degree_max)
            yield from self._proof_pipelines(alpha)
        yield from self._energy_levels()
        for size in self.weight_sum_sizes:
            for alpha in config.alpha_grid:
                yield "quadrature_weight_sum", {"N": size, "a": alpha}, partial(self._weight_sum, size, alpha)

    # -- Laguerre ----------------------------------------------------------

    def _laguerre_facts(self, alpha: Fraction, degree_max: int):
        for n in range(degree_max + 1):
            inputs = {"n": n, "alpha": alpha}
            yield "laguerre_ode_residual", inputs, partial(self._ode, n, alpha)
            if n:
                yield "laguerre_recurrence_residual", inputs, partial(self._recurrence, n, alpha)
            yield "recurrence_norm_step", inputs, partial(self._norm_step, n, alpha)
            for m in range(n + 1):
                yield (
                    "laguerre_orthonormality",
                    {"m": m, "n": n, "alpha": alpha},
                    partial(self._orthonormality, m, n, alpha),
                )

    @staticmethod
    def _ode(n: int, alpha: Fraction) -> Outcome:
        return _zero_poly(ode_residual(LaguerreSpec(n, alpha)))

    @staticmethod
    def _recurrence(n: int, alpha: Fraction) -> Outcome:
        return _zero_poly(laguerre_recurrence_residual(n, alpha))

    @staticmethod
    def _norm_step(n: int, alpha: Fraction) -> Outcome:
        expected = (alpha + 2 * n + 1) * pochhammer(alpha + 1, n) / pochhammer(1, n)
        return exact_equal(expected, recurrence_norm_step(n, alpha))

    @staticmethod
    def _orthonormality(m: int, n: int, alpha: Fraction) -> Outcome:
        expected = pochhammer(alpha + 1, n) / pochhammer(1, n) if m == n else Fraction(0)
        return exact_equal(expected, laguerre_orthonorm_check(m, n, alpha))

    # -- phi_n -------------------------------------------------------------

    def _strange_orthogonality(self, alpha: Fraction, degree_max: int):
        for n in range(degree_max + 1):
            for m in range(n):
                yield (
                    "strange_orthogonality",
                    {"m": m, "n": n, "alpha": alpha},
                    partial(self._cross_term, m, n, alpha),
                )
            inputs = {"n": n, "alpha": alpha}
            yield "phi_norm", inputs, partial(self._norm, n, alpha)
            yield "phi_norm_quadrature", inputs, partial(self._norm_quadrature, n, alpha)

    @staticmethod
    def _cross_term(m: int, n: int, alpha: Fraction) -> Outcome:
        return exact_equal(Fraction(0), phi_inner_product(m, n, alpha).exact.coefficient)

    def _norm(self, n: int, alpha: Fraction) -> Outcome:
        return close_to(
            phi_norm_closed_form(n, alpha), phi_inner_product(n, n, alpha).value, self.norm_rel_tol
        )

    def _norm_quadrature(self, n: int, alpha: Fraction) -> Outcome:
        return close_to(
            phi_norm_closed_form(n, alpha), phi_inner_product_quadrature(n, n, alpha), self.norm_rel_tol
        )

    def _proof_pipelines(self, alpha: Fraction):
        top = self.pipeline_degree_max
        for m in range(1, top + 1):
            for n in range(1, top + 1):
                if m == n:
                    continue
                yield (
                    "bsum_agrees_and_vanishes",
                    {"m": m, "n": n, "alpha": alpha},
                    partial(self._bsum, m, n, alpha),
                )
                beta = (alpha + 2 * n + 1) / (alpha + m + n + 1)
                gamma = beta * (beta - 2) / (1 - beta) ** 2
                yield (
                    "contiguity_combination",
                    {"m": m, "n": n, "alpha": alpha, "gamma": gamma},
                    partial(self._contiguity, m, n, alpha, gamma),
                )

    @staticmethod
    def _bsum(m: int, n: int, alpha: Fraction) -> Outcome:
        return exact_equal(Fraction(0), bsum_check(m, n, alpha))

    @staticmethod
    def _contiguity(m: int, n: int, alpha: Fraction, gamma: Fraction) -> Outcome:
        return exact_equal(Fraction(0), contiguity_combination(m, n, alpha, gamma))

    # -- hydrogen levels and quadrature ------------------------------------

    def _energy_levels(self):
        for n in range(self.energy_nmax + 1):
            for l in range(self.energy_lmax + 1):  # noqa: E741
                yield (
                    "hydrogen_energy_level",
                    {"N": 3, "l": l, "n": n, "k": 1},
                    partial(self._energy, n, l),
                )

    @staticmethod
    def _energy(n: int, l: int) -> Outcome:  # noqa: E741
        expected = -(Fraction(1, 4 * (n + l + 1)) ** 2)
        return exact_equal(expected, energy_level(RadialMode(3, l, n, 1)))

    @staticmethod
    def _weight_sum(size: int, a: Fraction) -> Outcome:
        rule = gauss_laguerre_rule(size, a)
        expected = math.exp(float(gammaln(float(a) + 1)))
        return close_to(expected, math.fsum(rule.weights.tolist()), 1e-12, exact=False)
