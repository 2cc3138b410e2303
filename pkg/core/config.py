import logging
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Tuple

from dotenv import find_dotenv, load_dotenv

from core.errors import ConfigError
from core.exact_core import as_rational

DEFAULT_ALPHA_GRID = "0,1/2,1,2,7/3"
DEFAULT_KAPPA_GRID = "-1/3,0,1/4,1/2,1,3/2,2,3"


def parse_rational_list(text: str) -> Tuple[Fraction, ...]:
    """Parse "0,1/2,7/3" into Fractions."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ConfigError(f"empty rational list: {text!r}")
    try:
        return tuple(as_rational(item) for item in items)
    except (ValueError, TypeError) as e:
        raise ConfigError(f"invalid rational list {text!r}: {e}") from e


@dataclass(frozen=True)
class VerificationConfig:
    alpha_grid: Tuple[Fraction, ...]
    kappa_grid: Tuple[Fraction, ...]
    nmax: int = 6
    mmax: int = 200
    degree_max: int = 12
    tol: float = 1e-12
    xmax: float = 30.0
    zero_step: float = 0.05
    seed: int = 20020517
    log_level: str = "INFO"

    def validate(self) -> "VerificationConfig":
        for alpha in self.alpha_grid:
            if alpha <= -1:
                raise ConfigError(f"alpha must exceed -1, got {alpha}")
            for kappa in self.kappa_grid:
                if alpha + kappa + 1 <= 0:
                    raise ConfigError(f"alpha+kappa+1 must be positive, got alpha={alpha} kappa={kappa}")
        for name in ("nmax", "mmax", "degree_max"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("tol", "xmax", "zero_step"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if logging.getLevelName(self.log_level.upper()) not in (10, 20, 30, 40, 50):
            raise ConfigError(f"unknown log level {self.log_level!r}")
        return self


def _env(name: str, default: str) -> str:
    return os.getenv(name, default).strip()


def _convert(name: str, raw: str, kind):
    try:
        return kind(raw)
    except ValueError as e:
        raise ConfigError(f"{name}={raw!r} is not a valid {kind.__name__}") from e


def load_config(**overrides) -> VerificationConfig:
    """
    Build the run configuration. Reads a .env file (never overriding the
    process environment), then LAGMEIX_* variables at call time, then explicit
    overrides such as CLI flags. None-valued overrides are ignored.
    """
    load_dotenv(find_dotenv(usecwd=True), override=False)

    config = VerificationConfig(
        alpha_grid=parse_rational_list(_env("LAGMEIX_ALPHA_GRID", DEFAULT_ALPHA_GRID)),
        kappa_grid=parse_rational_list(_env("LAGMEIX_KAPPA_GRID", DEFAULT_KAPPA_GRID)),
        nmax=_convert("LAGMEIX_NMAX", _env("LAGMEIX_NMAX", "6"), int),
        mmax=_convert("LAGMEIX_MMAX", _env("LAGMEIX_MMAX", "200"), int),
        degree_max=_convert("LAGMEIX_DEGREE_MAX", _env("LAGMEIX_DEGREE_MAX", "12"), int),
        tol=_convert("LAGMEIX_TOL", _env("LAGMEIX_TOL", "1e-12"), float),
        xmax=_convert("LAGMEIX_XMAX", _env("LAGMEIX_XMAX", "30"), float),
        zero_step=_convert("LAGMEIX_ZERO_STEP", _env("LAGMEIX_ZERO_STEP", "0.05"), float),
        seed=_convert("LAGMEIX_SEED", _env("LAGMEIX_SEED", "20020517"), int),
        log_level=_env("LAGMEIX_LOG_LEVEL", "INFO"),
    )

    updates = {}
    for key, value in overrides.items():
        if value is None:
            continue
        if key not in VerificationConfig.__dataclass_fields__:
            raise ConfigError(f"unknown configuration key {key!r}")
        if key in ("alpha_grid", "kappa_grid") and isinstance(value, str):
            value = parse_rational_list(value)
        updates[key] = value
    return replace(config, **updates).validate()


def configure_logging(level: str = "INFO") -> None:
    """Root logger on stderr so stdout stays clean for tables and reports."""
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
