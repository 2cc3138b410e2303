from fractions import Fraction
from functools import partial

from core.config import VerificationConfig
from core.exact_core import pochhammer, poly_resultant
from core.uniqueness import (
    constant_family,
    discriminant_check,
    family_cross_terms,
    gamma1_solve,
    kappa0_factor_check,
    kappa1_phi1_phin,
    kappa1_scaling_roots,
    q_polynomials,
    strange_family,
)
from suites.base import Outcome, VerificationSuite, exact_equal


class UniquenessSuite(VerificationSuite):
    """Only kappa = 0 and kappa = 1 admit orthogonal scaled Laguerre families."""

    name = "uniqueness"

    def __init__(self):
        self.scaling_nmax = 10
        self.kappa0_gamma = Fraction(2)
        self.family_nmax = 8

    def plan(self, config: VerificationConfig):
        for alpha in config.alpha_grid:
            for kappa in config.kappa_grid:
                inputs = {"alpha": alpha, "kappa": kappa}
                yield "gamma1_solve", inputs, partial(self._gamma1, alpha, kappa)
                yield "resultant_vanishing_pattern", inputs, partial(self._resultant, alpha, kappa)
                yield "discriminant_pattern", inputs, partial(self._discriminant, alpha, kappa)
            yield "strange_family_q_roots", {"alpha": alpha}, partial(self._q_roots, alpha)
            for n in range(1, self.scaling_nmax + 1):
                yield (
                    "kappa1_scaling_roots",
                    {"n": n, "alpha": alpha},
                    partial(self._scaling_roots, n, alpha),
                )
            for n in range(1, config.nmax + 1):
                yield (
                    "kappa0_factorization",
                    {"n": n, "alpha": alpha, "gamma_n": self.kappa0_gamma},
                    partial(self._kappa0, n, alpha),
                )
            for n in range(2, config.nmax + 1):
                yield "kappa1_phi1_phin", {"n": n, "alpha": alpha}, partial(self._phi1_phin, n, alpha)
            family_nmax = max(config.nmax, self.family_nmax)
            family_inputs = {"alpha": alpha, "nmax": family_nmax}
            yield "constant_family_cross_terms", family_inputs, partial(
                self._family, constant_family, alpha, family_nmax
            )
            yield "strange_family_cross_terms", family_inputs, partial(
                self._family, strange_family, alpha, family_nmax
            )

    @staticmethod
    def _gamma1(alpha: Fraction, kappa: Fraction) -> Outcome:
        return exact_equal((alpha + 1) / (alpha + 2 * kappa + 1), gamma1_solve(alpha, kappa))

    @staticmethod
    def _resultant(alpha: Fraction, kappa: Fraction) -> Outcome:
        q = q_polynomials(alpha, kappa)
        resultant = poly_resultant(q.q2, q.q3)
        expected_zero = kappa in (0, 1)
        return Outcome(
            "0" if expected_zero else "nonzero", resultant, (resultant == 0) == expected_zero
        )

    @staticmethod
    def _discriminant(alpha: Fraction, kappa: Fraction) -> Outcome:
        check = discriminant_check(alpha, kappa)
        return Outcome(check.closed_form_expr, {"computed": check.computed, "ratio": check.ratio}, True)

    @staticmethod
    def _q_roots(alpha: Fraction) -> Outcome:
        q = q_polynomials(alpha, 1)
        gamma2 = (alpha + 1) / (alpha + 5)
        values = {"q2": q.q2(gamma2), "q3": q.q3(gamma2)}
        return Outcome({"q2": 0, "q3": 0}, values, not any(values.values()))

    @staticmethod
    def _scaling_roots(n: int, alpha: Fraction) -> Outcome:
        roots = kappa1_scaling_roots(n, alpha)
        return Outcome((alpha + 1) / (alpha + 2 * n + 1), roots, roots[-1] == (alpha + 1) / (alpha + 2 * n + 1))

    def _kappa0(self, n: int, alpha: Fraction) -> Outcome:
        factor = kappa0_factor_check(n, alpha, self.kappa0_gamma)
        return exact_equal(pochhammer(alpha + 1, n) / pochhammer(1, n), factor.cofactor)

    @staticmethod
    def _phi1_phin(n: int, alpha: Fraction) -> Outcome:
        comparison = kappa1_phi1_phin(n, alpha)
        return Outcome(
            {"closed_form": comparison.closed_form, "ratio": comparison.expected_ratio},
            {"coefficient": comparison.computed.coefficient, "ratio": comparison.ratio},
            comparison.ratio == comparison.expected_ratio,
        )

    @staticmethod
    def _family(build, alpha: Fraction, nmax: int) -> Outcome:
        terms = family_cross_terms(build(alpha, nmax))
        nonzero = [(m, n, c) for m, n, c in terms if c]
        return Outcome([], nonzero, not nonzero)
