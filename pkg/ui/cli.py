"""
Command-line front-end.

    python -m ui.cli run-suite all --format json --out report.json
    python -m ui.cli emit-table transform-matrix --alpha 0 --nmax 4 --mmax 12

Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
"""

import functools
import logging
import sys

import click

from core.config import configure_logging, load_config
from core.errors import ConfigError, DomainError, VerificationFailure
from core.graph import SUITE_ORDER, run_suite
from utils.report_writer import report_to_csv, report_to_json
from utils.table_writer import TABLES, build_table, table_to_csv, table_to_json

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def config_options(command):
    """Flags shared by every command; unset flags fall back to .env and LAGMEIX_* values."""
    options = [
        click.option("--alpha", "alpha_grid", help="Comma list of rational alphas (tables use the first)."),
        click.option("--kappa-grid", help="Comma list of rational kappas."),
        click.option("--nmax", type=int),
        click.option("--mmax", type=int),
        click.option("--tol", type=float),
        click.option("--xmax", type=float),
        click.option("--out", default="-", show_default=True, help="Output path, - for stdout."),
        click.option("--format", "fmt", type=click.Choice(["csv", "json"]), help="Defaults to json for reports and csv for tables."),
        click.option("--log-level", help="DEBUG, INFO, WARNING or ERROR."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _load(log_level, **overrides):
    try:
        config = load_config(log_level=log_level, **overrides)
    except ConfigError as e:
        raise click.UsageError(str(e)) from e
    configure_logging(config.log_level)
    return config


def _write(text: str, out: str) -> None:
    if out == "-":
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        click.echo(f"Error: cannot write {out}: {e}", err=True)
        sys.exit(EXIT_USAGE)
    logger.info("Wrote %s", out)


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ConfigError, DomainError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except VerificationFailure as e:
            click.echo(f"Verification failed: {e}", err=True)
            sys.exit(EXIT_FAILURE)

    return wrapper


@click.group()
def cli():
    """Exact and numerical verification of the scaled Laguerre and Meixner identities."""


@cli.command("run-suite")
@click.argument("name", type=click.Choice(SUITE_ORDER + ["all"]))
@config_options
@click.option("--timings", is_flag=True, help="Include per-check runtimes (breaks determinism).")
@_guard
def run_suite_command(name, out, fmt, timings, log_level, **overrides):
    config = _load(log_level, **overrides)
    report = run_suite(name, config)
    text = report_to_csv(report, timings) if fmt == "csv" else report_to_json(report, timings)
    _write(text, out)
    summary = report.summary
    click.echo(
        f"{name}: {summary['passed']}/{summary['total']} checks passed, {summary['errors']} error(s)",
        err=True,
    )
    sys.exit(EXIT_PASS if report.passed else EXIT_FAILURE)


@cli.command("emit-table")
@click.argument("kind", type=click.Choice(list(TABLES)))
@config_options
@_guard
def emit_table_command(kind, out, fmt, log_level, **overrides):
    config = _load(log_level, **overrides)
    frame = build_table(kind, config)
    _write(table_to_json(frame) if fmt == "json" else table_to_csv(frame), out)


def main():
    cli()


if __name__ == "__main__":
    main()
