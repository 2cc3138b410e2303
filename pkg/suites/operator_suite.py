from fractions import Fraction
from functools import partial

import numpy as np

from core.config import VerificationConfig
from core.meixner_basis import HFunction, h_eval
from core.meixner_operator import (
    DiscreteFunction,
    SpectralSolution,
    apply_D,
    apply_D_regrouped,
    eigen_residual,
    series_solution,
    solve_difference,
    symmetry_residual,
)
from core.specfun import meixner_difference_residual, meixner_recurrence_residual
from suites.base import Outcome, VerificationSuite, exact_equal


class OperatorSuite(VerificationSuite):
    """The difference operator D: symmetry, its h_n eigenfunctions and the spectral family."""

    name = "operator"

    def __init__(self):
        self.eigen_nmax = 10
        self.eigen_xmax = 60
        self.symmetry_pairs = 100
        self.symmetry_xmax = 20
        self.series_xmax = 40
        self.spectral_gammas = (Fraction(1, 2), Fraction(3, 2), Fraction(0), Fraction(3))
        self.meixner_cases = ((Fraction(3), Fraction(1, 4)), (Fraction(7, 2), Fraction(1, 9)))
        self.meixner_nmax = 6
        self.difference_xmax = 10

    def plan(self, config: VerificationConfig):
        for alpha in config.alpha_grid:
            if alpha < 0:
                continue
            for n in range(1, self.eigen_nmax + 1):
                inputs = {"n": n, "alpha": alpha}
                yield (
                    "eigen_residual",
                    {**inputs, "xmax": self.eigen_xmax},
                    partial(self._eigen, n, alpha),
                )
                yield "solve_difference_recovers_h", inputs, partial(self._solve, n, alpha)
            yield (
                "symmetry_random_pairs",
                {"alpha": alpha, "pairs": self.symmetry_pairs, "seed": config.seed},
                partial(self._symmetry, alpha, config.seed),
            )
            yield "regrouped_operator", {"alpha": alpha}, partial(self._regrouped, alpha, config.seed)
            for gamma in self.spectral_gammas:
                inputs = {"gamma_spec": gamma, "alpha": alpha}
                yield "characteristic_equation", inputs, partial(self._characteristic, gamma, alpha)
                yield (
                    "series_solves_difference",
                    {**inputs, "xmax": self.series_xmax},
                    partial(self._series, gamma, alpha),
                )
        for gamma, c in self.meixner_cases:
            for n in range(self.meixner_nmax + 1):
                inputs = {"n": n, "gamma": gamma, "c": c}
                yield "meixner_recurrence", inputs, partial(self._meixner_recurrence, n, gamma, c)
                yield "meixner_difference", inputs, partial(self._meixner_difference, n, gamma, c)

    def _eigen(self, n: int, alpha: Fraction) -> Outcome:
        result = eigen_residual(n, alpha, self.eigen_xmax)
        return Outcome(
            {"residual": 0, "eigenvalue": (alpha + 1) ** 2 / (n * (alpha + n + 1))},
            {"residual": result.residual, "eigenvalue": result.eigenvalue},
            result.residual == 0,
        )

    def _solve(self, n: int, alpha: Fraction) -> Outcome:
        lam = -((alpha + 1) ** 2) / (n * (alpha + n + 1))
        solution = solve_difference(lam, alpha, self.eigen_xmax)
        h = HFunction(alpha, n - 1)
        mismatches = [
            x for x in range(self.eigen_xmax + 1) if solution(x) != h_eval(h, x)
        ]
        return Outcome([], mismatches, not mismatches)

    @staticmethod
    def _random_function(rng: np.random.Generator, size: int) -> DiscreteFunction:
        return DiscreteFunction.from_values(
            [Fraction(int(v), int(d)) for v, d in zip(rng.integers(-9, 10, size), rng.integers(1, 6, size))]
        )

    def _symmetry(self, alpha: Fraction, seed: int) -> Outcome:
        rng = np.random.default_rng(seed)
        size = self.symmetry_xmax + 1
        worst = Fraction(0)
        for _ in range(self.symmetry_pairs):
            f1 = self._random_function(rng, size)
            f2 = self._random_function(rng, size)
            worst = max(worst, symmetry_residual(f1, f2, alpha, self.symmetry_xmax))
        return exact_equal(Fraction(0), worst)

    def _regrouped(self, alpha: Fraction, seed: int) -> Outcome:
        rng = np.random.default_rng(seed + 1)
        f = self._random_function(rng, self.symmetry_xmax + 2)
        mismatches = [
            x
            for x in range(self.symmetry_xmax + 1)
            if apply_D(f, alpha, x) != apply_D_regrouped(f, alpha, x)
        ]
        return Outcome([], mismatches, not mismatches)

    @staticmethod
    def _characteristic(gamma: Fraction, alpha: Fraction) -> Outcome:
        return exact_equal(Fraction(0), SpectralSolution(gamma, alpha).characteristic_residual())

    def _series(self, gamma: Fraction, alpha: Fraction) -> Outcome:
        solution = SpectralSolution(gamma, alpha)
        recurrence = solve_difference(solution.lam, alpha, self.series_xmax)
        mismatches = [
            x
            for x in range(self.series_xmax + 1)
            if series_solution(gamma, alpha, x) != recurrence(x)
        ]
        return Outcome([], mismatches, not mismatches)

    @staticmethod
    def _meixner_recurrence(n: int, gamma: Fraction, c: Fraction) -> Outcome:
        residual = meixner_recurrence_residual(n, gamma, c)
        return Outcome("0", str(residual), residual.is_zero)

    def _meixner_difference(self, n: int, gamma: Fraction, c: Fraction) -> Outcome:
        residuals = [
            meixner_difference_residual(n, gamma, c, x) for x in range(self.difference_xmax + 1)
        ]
        return exact_equal([Fraction(0)] * len(residuals), residuals)
