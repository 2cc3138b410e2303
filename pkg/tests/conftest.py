from fractions import Fraction

import pytest

from core.config import VerificationConfig

LAGMEIX_VARS = (
    "LAGMEIX_ALPHA_GRID",
    "LAGMEIX_KAPPA_GRID",
    "LAGMEIX_NMAX",
    "LAGMEIX_MMAX",
    "LAGMEIX_DEGREE_MAX",
    "LAGMEIX_TOL",
    "LAGMEIX_XMAX",
    "LAGMEIX_ZERO_STEP",
    "LAGMEIX_SEED",
    "LAGMEIX_LOG_LEVEL",
)


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No LAGMEIX_* variables and no .env above the working directory."""
    for name in LAGMEIX_VARS:
        # setenv first so teardown also removes anything a .env file loads
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def small_config():
    return VerificationConfig(
        alpha_grid=(Fraction(0), Fraction(1, 2)),
        kappa_grid=(Fraction(-1, 3), Fraction(0), Fraction(1, 2), Fraction(1)),
        nmax=2,
        mmax=40,
        degree_max=4,
    ).validate()
