"""
Data tables behind the verification runs, as pandas DataFrames.
Floats print with 17 significant digits; exact columns hold "p/q" strings.
"""

import json
import logging
from fractions import Fraction

import numpy as np
import pandas as pd

from core.config import VerificationConfig
from core.errors import ConfigError, ZeroSearchError
from core.exact_core import format_rational
from core.meixner_basis import HFunction, h_eval, orthogonal_block
from core.meixner_operator import first_zeros, h_infinity_eval, limit_study
from core.radial import RadialMode, energy_level

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"

ENERGY_NMAX = 5
ENERGY_LMAX = 2
H_VALUE_DEGREES = (1, 2)
H_VALUE_STEP = 0.25
ZERO_DEGREES = (5, 20, 80)
ZERO_COUNT = 3
LIMIT_POINTS = (0.5, 1.0, 2.5)
LIMIT_DEGREES = (10, 50, 200)


def transform_matrix_table(config: VerificationConfig) -> pd.DataFrame:
    """Normalized I(n, m) / (||phi_n|| N_m^(1/2)), rows n, columns m."""
    alpha = config.alpha_grid[0]
    block = orthogonal_block(alpha, config.nmax, config.mmax)
    frame = pd.DataFrame(
        block.normalized,
        index=pd.Index(range(config.nmax + 1), name="n"),
        columns=[f"m={m}" for m in range(config.mmax + 1)],
    )
    return frame.reset_index()


def energy_levels_table(config: VerificationConfig) -> pd.DataFrame:
    rows = []
    for n in range(ENERGY_NMAX + 1):
        for l in range(ENERGY_LMAX + 1):  # noqa: E741
            mode = RadialMode(3, l, n, 1)
            energy = energy_level(mode)
            rows.append({
                "N": 3, "k": 1, "n": n, "l": l,
                "energy": format_rational(energy),
                "energy_float": float(energy),
            })
    return pd.DataFrame(rows)


def h_values_table(config: VerificationConfig) -> pd.DataFrame:
    alpha = config.alpha_grid[0]
    xs = np.arange(0.0, config.xmax + H_VALUE_STEP / 2, H_VALUE_STEP)
    columns = {"x": xs}
    for n in H_VALUE_DEGREES:
        h = HFunction(alpha, n)
        columns[f"h_{n}"] = [float(h_eval(h, float(x))) for x in xs]
    columns["h_inf"] = [float(h_infinity_eval(alpha, float(x))) for x in xs]
    return pd.DataFrame(columns)


def _zeros_or_fewer(f, xmax: float, step: float, label: str) -> list:
    try:
        return first_zeros(f, ZERO_COUNT, xmax, step)
    except ZeroSearchError as e:
        logger.warning("%s: %s", label, e)
        if not e.found:
            return []
        return first_zeros(f, e.found, xmax, step)


def zeros_table(config: VerificationConfig) -> pd.DataFrame:
    alpha = config.alpha_grid[0]
    rows = []
    targets = [(str(n), HFunction(alpha, n)) for n in ZERO_DEGREES]
    for label, h in targets:
        zeros = _zeros_or_fewer(lambda t, h=h: h_eval(h, t), config.xmax, config.zero_step, f"h_{label}")
        rows.extend({"n": label, "index": i + 1, "zero": z} for i, z in enumerate(zeros))
    zeros = _zeros_or_fewer(
        lambda t: h_infinity_eval(alpha, t), config.xmax, config.zero_step, "h_inf"
    )
    rows.extend({"n": "inf", "index": i + 1, "zero": z} for i, z in enumerate(zeros))
    return pd.DataFrame(rows, columns=["n", "index", "zero"])


def limit_errors_table(config: VerificationConfig) -> pd.DataFrame:
    alpha = config.alpha_grid[0]
    rows = []
    for x in LIMIT_POINTS:
        for row in limit_study(alpha, x, LIMIT_DEGREES, config.tol, threshold=None):
            rows.append({"alpha": format_rational(Fraction(alpha)), "x": x, **row._asdict()})
    return pd.DataFrame(rows)


TABLES = {
    "transform-matrix": transform_matrix_table,
    "energy-levels": energy_levels_table,
    "h-values": h_values_table,
    "zeros": zeros_table,
    "limit-errors": limit_errors_table,
}


def build_table(kind: str, config: VerificationConfig) -> pd.DataFrame:
    if kind not in TABLES:
        raise ConfigError(f"unknown table {kind!r}; choose from {', '.join(TABLES)}")
    logger.info("--- Building %s table ---", kind)
    return TABLES[kind](config)


def table_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT)


def table_to_json(frame: pd.DataFrame) -> str:
    return json.dumps(frame.to_dict(orient="records"), indent=2) + "\n"
