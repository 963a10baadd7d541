"""``addsep`` command line.

Exit codes: 0 affirmative, 2 negative with a certificate on stdout, 1 input
error (message as JSON on stderr).
"""
from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from addsep import analysis, fixtures, links, selftest
from addsep.errors import AddSepError
from addsep.matrix import parse_function_table, parse_point_set

OK, ERROR, NEGATIVE = 0, 1, 2


def _emit(payload, fmt: str) -> None:
    indent = 2 if fmt == "pretty" else None
    click.echo(json.dumps(payload, indent=indent))


class InputFileError(AddSepError):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputFileError(f"{path}: {exc}") from None


def _guard(fn):
    """Map library and file errors to exit code 1."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except AddSepError as exc:
            click.echo(json.dumps({"error": type(exc).__name__, "message": str(exc)}), err=True)
            sys.exit(ERROR)

    return wrapper


format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "pretty"]), default="json", show_default=True,
    help="Compact or indented JSON output.",
)


@click.group()
@click.version_option(package_name="addsep")
def cli() -> None:
    """Decide whether every function on a finite point set splits additively.

    \b
    Commands:
      check       goodness verdict (rank criterion) with a loop if not good
      loop        just the loop certificate, or "no-loop"
      verify      validate a loop certificate document
      decompose   explicit u_1..u_n tables, or an obstructing loop
      components  linked components for n = 2, 3
      selftest    oracle and cross-validation suites
      fixtures    write the fixture corpus to a directory
    """


@cli.command("check")
@click.argument("path")
@click.option("--seed", type=int, default=0, help="Accepted for uniformity; check is deterministic.")
@format_option
@_guard
def check_command(path, seed, fmt):
    """Print the goodness verdict. Exit 0 if good, 2 if not."""
    s = parse_point_set(_read(path))
    v = analysis.is_good(s)
    _emit(v.to_json(), fmt)
    sys.exit(OK if v.good else NEGATIVE)


@cli.command("loop")
@click.argument("path")
@format_option
@_guard
def loop_command(path, fmt):
    """Print a loop certificate (exit 2) or "no-loop" (exit 0)."""
    s = parse_point_set(_read(path))
    loop = analysis.find_loop(s)
    if loop is None:
        _emit("no-loop", fmt)
        sys.exit(OK)
    _emit(loop.to_json(), fmt)
    sys.exit(NEGATIVE)


@cli.command("verify")
@click.argument("path")
@format_option
@_guard
def verify_command(path, fmt):
    """Check a certificate document. Exit 0 if it is a loop, 2 if not."""
    cert = analysis.LoopCertificate.from_json(_read(path))
    ok = analysis.verify_loop(cert)
    _emit({"valid": ok}, fmt)
    sys.exit(OK if ok else NEGATIVE)


@cli.command("decompose")
@click.argument("set_path")
@click.argument("function_path")
@format_option
@_guard
def decompose_command(set_path, function_path, fmt):
    """Solve for u_1..u_n. Exit 0 with tables, 2 with an obstruction."""
    s = parse_point_set(_read(set_path))
    f = parse_function_table(_read(function_path), s)
    result = analysis.decompose(s, f)
    _emit(result.to_json(), fmt)
    sys.exit(OK if isinstance(result, analysis.Decomposition) else NEGATIVE)


@cli.command("components")
@click.argument("path")
@click.option("--max-paths", type=int, default=links.DEFAULT_MAX_PATHS, show_default=True,
              help="Abort n=3 link enumeration beyond this many paths.")
@format_option
@_guard
def components_command(path, max_paths, fmt):
    """Linked components and whether each is uniquely linked."""
    s = parse_point_set(_read(path))
    _emit(links.linked_components(s, max_paths).to_json(), fmt)
    sys.exit(OK)


@cli.command("selftest")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--exhaustive-n2", is_flag=True, help="Only the n=2 rank vs. links suite.")
@click.option("--hereditary", "hereditary_path", default=None,
              help="Only sample subsets of this (good) point-set file.")
@click.option("--random-sets", type=int, default=1000, show_default=True,
              help="Random sets per randomized suite.")
@click.option("--trials", type=int, default=100, show_default=True,
              help="Subsets sampled per set in the hereditary suite.")
@format_option
@_guard
def selftest_command(seed, exhaustive_n2, hereditary_path, random_sets, trials, fmt):
    """Run the cross-validation suites. Exit 0 if all pass, 2 otherwise."""
    target = parse_point_set(_read(hereditary_path)) if hereditary_path else None
    results = selftest.run(
        seed, exhaustive_n2=exhaustive_n2, hereditary=target, random_sets=random_sets, trials=trials
    )
    payload = [r.to_json() for r in results]
    for r in payload:
        r.pop("seconds")
    passed = all(r.passed for r in results)
    _emit({"passed": passed, "seed": seed, "suites": payload}, fmt)
    sys.exit(OK if passed else NEGATIVE)


@cli.command("fixtures")
@click.argument("directory")
@_guard
def fixtures_command(directory):
    """Write the standard fixture files into DIRECTORY."""
    for path in fixtures.write_fixtures(directory):
        click.echo(str(path))


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
