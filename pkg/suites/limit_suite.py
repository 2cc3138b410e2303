from fractions import Fraction
from functools import partial

from core.config import VerificationConfig
from core.errors import ZeroSearchError
from core.meixner_basis import HFunction, h_eval
from core.meixner_operator import first_zeros, h_infinity_eval, limit_study, zero_convergence
from suites.base import Outcome, VerificationSuite, close_to, exact_equal


class LimitSuite(VerificationSuite):
    """Pointwise convergence of h_n to h_infinity and of their first zeros."""

    name = "limit"

    def __init__(self):
        self.alphas = (Fraction(0), Fraction(1))
        self.points = (0.5, 1.0, 2.5)
        self.n_list = (10, 50, 200)
        self.final_threshold = 0.01
        self.zero_n_list = (5, 20, 80)
        self.zero_count = 1

    def plan(self, config: VerificationConfig):
        yield "hand_values", {"alpha": 0, "x": 1}, self._hand_values
        yield "limit_at_origin", {"alpha": 0, "x": 0}, self._origin
        for alpha in self.alphas:
            for x in self.points:
                yield (
                    "limit_study",
                    {"alpha": alpha, "x": x, "n_list": list(self.n_list)},
                    partial(self._limit, alpha, x),
                )
        yield (
            "zero_convergence",
            {"alpha": 0, "k": self.zero_count, "n_list": list(self.zero_n_list), "xmax": config.xmax},
            partial(self._zeros, config.xmax, config.zero_step),
        )
        yield "h1_zero", {"alpha": 0}, partial(self._h1_zero, config.xmax, config.zero_step)
        yield "h0_has_no_zero", {"alpha": 0}, partial(self._h0_no_zero, config.xmax, config.zero_step)

    @staticmethod
    def _hand_values() -> Outcome:
        computed = {
            "h1": h_eval(HFunction(0, 1), 1),
            "h2": h_eval(HFunction(0, 2), 1),
            "h_inf": h_infinity_eval(0, 1),
        }
        return exact_equal({"h1": Fraction(7, 9), "h2": Fraction(13, 18), "h_inf": Fraction(2, 3)}, computed)

    def _origin(self) -> Outcome:
        rows = limit_study(0, 0, self.n_list)
        return exact_equal([0.0] * len(rows), [row.error for row in rows])

    def _limit(self, alpha: Fraction, x: float) -> Outcome:
        rows = limit_study(alpha, x, self.n_list, threshold=self.final_threshold)
        errors = [row.error for row in rows]
        strictly = all(after < before for before, after in zip(errors, errors[1:]))
        return Outcome("strictly decreasing", errors, strictly, exact=False)

    def _zeros(self, xmax: float, step: float) -> Outcome:
        rows = zero_convergence(0, self.zero_count, self.zero_n_list, xmax, step)
        distances = [row.distance for row in rows]
        decreasing = all(after < before for before, after in zip(distances, distances[1:]))
        return Outcome("decreasing", distances, decreasing, exact=False)

    @staticmethod
    def _h1_zero(xmax: float, step: float) -> Outcome:
        h = HFunction(0, 1)
        zeros = first_zeros(lambda t: h_eval(h, t), 1, xmax, step)
        return close_to(12 / 5, zeros[0], 1e-9)

    @staticmethod
    def _h0_no_zero(xmax: float, step: float) -> Outcome:
        h = HFunction(0, 0)
        try:
            zeros = first_zeros(lambda t: h_eval(h, t), 1, xmax, step)
        except ZeroSearchError as e:
            return Outcome("ZeroSearchError", {"found": e.found}, e.found == 0)
        return Outcome("ZeroSearchError", zeros, False)
