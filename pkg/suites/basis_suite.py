import math
from fractions import Fraction
from functools import partial

from scipy.special import gammaln

from core.config import VerificationConfig
from core.integrate import default_rule_size, gauss_laguerre_rule, quad_integrate
from core.meixner_basis import (
    column_norm,
    h_norm_via_meixner,
    h_orthogonality_rhs,
    h_orthogonality_sum,
    illustration_closed_form,
    illustration_overlap,
    meixner_norm,
    meixner_norm_sum,
    orthogonal_block,
    recentering_coefficient,
    transform_entry,
    transform_entry_closed_form,
    transform_entry_from_h,
)
from core.specfun import laguerre_poly
from suites.base import Outcome, VerificationSuite, below, close_to, exact_equal


class BasisSuite(VerificationSuite):
    """The phi_n to Laguerre change of basis and the orthogonality of the h_n."""

    name = "basis"

    def __init__(self):
        self.entry_max = 8
        self.h_sum_max = 8
        self.h_offdiag_max = 4
        self.illustration_betas = (Fraction(1, 2), Fraction(3, 2), Fraction(1, 3))
        self.gram_tol = 1e-8
        self.sum_rel_tol = 1e-10
        self.meixner_cases = ((Fraction(3), Fraction(1, 4)), (Fraction(5, 2), Fraction(9, 16)))

    def plan(self, config: VerificationConfig):
        yield "transform_entry_1_1", {"alpha": 0}, self._entry_example
        for alpha in config.alpha_grid:
            yield from self._entries(alpha)
            yield (
                "orthogonal_block_gram",
                {"alpha": alpha, "nmax": config.nmax, "mmax": config.mmax},
                partial(self._gram, alpha, config.nmax, config.mmax),
            )
            for m in range(config.nmax + 1):
                yield "column_norm", {"m": m, "alpha": alpha}, partial(self._column_norm, m, alpha)
            if alpha < 0:
                continue
            yield from self._h_orthogonality(alpha, config.tol)
        for gamma, c in self.meixner_cases:
            for n in range(4):
                for m in range(n + 1):
                    yield (
                        "meixner_orthogonality_sum",
                        {"n": n, "m": m, "gamma": gamma, "c": c},
                        partial(self._meixner_sum, n, m, gamma, c, config.tol),
                    )

    @staticmethod
    def _entry_example() -> Outcome:
        entry = transform_entry(1, 1, 0)
        return close_to(27 / 8, entry.value, 1e-14)

    def _entries(self, alpha: Fraction):
        top = self.entry_max
        for n in range(top + 1):
            for m in range(top + 1):
                inputs = {"n": n, "m": m, "alpha": alpha}
                yield "transform_entry_closed_form", inputs, partial(self._entry, n, m, alpha)
                if n and m and alpha >= 0:
                    yield "transform_entry_from_h", inputs, partial(self._entry_from_h, n, m, alpha)
                for beta in self.illustration_betas:
                    yield (
                        "illustration_overlap",
                        {"n": n, "m": m, "alpha": alpha, "beta": beta},
                        partial(self._illustration, n, m, alpha, beta),
                    )

    @staticmethod
    def _entry(n: int, m: int, alpha: Fraction) -> Outcome:
        direct = transform_entry(n, m, alpha)
        closed = transform_entry_closed_form(n, m, alpha)
        return Outcome(closed.coefficient, direct.coefficient, direct == closed)

    @staticmethod
    def _entry_from_h(n: int, m: int, alpha: Fraction) -> Outcome:
        closed = transform_entry_closed_form(n, m, alpha)
        recomposed = transform_entry_from_h(n, m, alpha)
        return Outcome(closed.coefficient, recomposed.coefficient, recomposed == closed)

    @staticmethod
    def _illustration(n: int, m: int, alpha: Fraction, beta: Fraction) -> Outcome:
        return exact_equal(illustration_closed_form(n, m, alpha, beta), illustration_overlap(n, m, alpha, beta))

    def _gram(self, alpha: Fraction, nmax: int, mmax: int) -> Outcome:
        block = orthogonal_block(alpha, nmax, mmax)
        return below(self.gram_tol, block.gram_deviation())

    @staticmethod
    def _column_norm(m: int, alpha: Fraction) -> Outcome:
        # x = (alpha+1) s turns N_m into a Gauss-Laguerre integral with exponent alpha+1
        poly = laguerre_poly(m, alpha + 1)
        rule = gauss_laguerre_rule(default_rule_size(m, m), alpha + 1)
        quadrature = quad_integrate(lambda s: float(poly(s)) ** 2, rule)
        scale = math.exp((float(alpha) + 2) * math.log(float(alpha) + 1) - float(gammaln(float(alpha) + 2)))
        return close_to(scale * quadrature, column_norm(m, alpha), 1e-10)

    def _h_orthogonality(self, alpha: Fraction, tol: float):
        for n in range(1, self.h_sum_max + 1):
            inputs = {"n": n, "l": n, "alpha": alpha}
            yield "h_orthogonality_diagonal", inputs, partial(self._h_diagonal, n, alpha, tol)
            yield "h_norm_via_meixner", inputs, partial(self._h_norm, n, alpha)
            yield (
                "recentering_coefficient",
                {"n": n, "alpha": alpha},
                partial(self._recentering, n, alpha),
            )
        for n in range(1, self.h_offdiag_max + 1):
            for l in range(1, n):  # noqa: E741
                yield (
                    "h_orthogonality_offdiagonal",
                    {"n": n, "l": l, "alpha": alpha},
                    partial(self._h_offdiagonal, n, l, alpha, tol),
                )

    def _h_diagonal(self, n: int, alpha: Fraction, tol: float) -> Outcome:
        result = h_orthogonality_sum(n, n, alpha, tol)
        return close_to(result.rhs, result.sum, self.sum_rel_tol)

    def _h_offdiagonal(self, n: int, l: int, alpha: Fraction, tol: float) -> Outcome:  # noqa: E741
        return below(self.sum_rel_tol, h_orthogonality_sum(n, l, alpha, tol).sum)

    @staticmethod
    def _h_norm(n: int, alpha: Fraction) -> Outcome:
        return close_to(h_orthogonality_rhs(n, n, alpha).value, h_norm_via_meixner(n, alpha).value, 1e-12)

    @staticmethod
    def _recentering(n: int, alpha: Fraction) -> Outcome:
        return exact_equal(n * (alpha + n + 1) / (alpha + 1), recentering_coefficient(n, alpha))

    @staticmethod
    def _meixner_sum(n: int, m: int, gamma: Fraction, c: Fraction, tol: float) -> Outcome:
        total = meixner_norm_sum(n, m, gamma, c, tol)
        if n != m:
            return below(1e-12, total)
        return close_to(meixner_norm(n, gamma, c), total, 1e-12)
