"""Command line: ``twobridge <command>``.

Exit status is 0 on success, 1 when a check fails, 2 on bad usage.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .. import conway, jones, obstruction, seifert
from ..conway import ConwayError
from .config import DEFAULT, LARGE, load_config
from .enumeration import EnumerationSpec
from .pipelines import oracle_check, run_enumeration, verify_paper


def _form(ctx, param, value):
    try:
        return conway.parse(value)
    except ConwayError as exc:
        raise click.BadParameter(str(exc)) from exc


def _finish(ok: bool) -> None:
    sys.exit(0 if ok else 1)


@click.group()
def main():
    """Exact invariants and surgery obstructions for positive 2-bridge knots."""


@main.command()
@click.option("--conway", "form", required=True, callback=_form, help='e.g. "C[4,-2,2,-4]" or "4,-2,2,-4"')
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def invariants(form, as_json):
    """Print det, a2, a4, 4v3, the Conway and Jones polynomials, and the signature."""
    inv = obstruction.invariants(form)
    d = {
        "key": form.key(),
        "form": str(form),
        "g": inv.g,
        "det": inv.det,
        "a2": inv.a2,
        "a4": inv.a4,
        "four_v3": inv.four_v3,
        "conway": str(seifert.conway_polynomial(form)),
        "alexander": str(seifert.alexander_polynomial(form)),
        "jones": str(jones.jones_polynomial(form)),
        "signature": seifert.ordinary_signature(form),
        "fraction": list(conway.fractions(form)[-1]),
        "torus_2k": conway.is_torus_2k(form),
    }
    if as_json:
        click.echo(json.dumps(d, indent=2))
    else:
        for k, v in d.items():
            click.echo(f"{k:10} {v}")


@main.command()
@click.option("--conway", "form", required=True, callback=_form)
@click.option("--density", nargs=2, type=int, default=(11, 30), show_default=True,
              help="signature window N p_max (informational)")
def obstruct(form, density):
    """Run both obstructions and print the verdict report as JSON."""
    r = obstruction.verdict(form, density=tuple(density))
    click.echo(json.dumps(r.to_dict(), indent=2))
    _finish(r.verdict is not obstruction.Verdict.INCONCLUSIVE)


@main.command(name="enumerate")
@click.option("--max-complexity", type=click.IntRange(min=2), required=True)
@click.option("--dedup", type=click.Choice(["none", "symmetry"]), default="none", show_default=True)
@click.option("--genus", nargs=2, type=int, default=None, help="g_min g_max")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="report.json or report.csv; summary only when omitted")
def enumerate_cmd(max_complexity, dedup, genus, workers, out):
    """Verdicts for every positive form with s(K) <= N."""
    spec = EnumerationSpec(max_complexity, tuple(genus) if genus else None, dedup)
    report = run_enumeration(spec, workers=workers)
    if out is not None:
        if out.suffix == ".csv":
            out.write_text(report.to_csv())
        elif out.suffix == ".json":
            out.write_text(report.to_json())
        else:
            raise click.UsageError("--out must end in .json or .csv")
    click.echo(json.dumps({"spec": spec.to_dict(), "counts": report.counts}, indent=2))
    click.echo(f"{len(report.reports)} forms in {report.wall_time:.2f}s", err=True)
    _finish(report.ok)


def _print_cases(report) -> None:
    for c in report.cases:
        status = "ok" if c.passed else ("KNOWN" if c.known_deviation else "FAIL")
        click.echo(f"[{status:5}] {c.name:34} {c.checked:6} checked  {c.claim}")
        if not c.passed:
            shown = min(c.counterexamples, key=lambda x: str(x.get("form", "")))
            click.echo(f"        counterexample: {shown}")
            if c.known_deviation:
                click.echo(f"        {c.known_deviation}")


@main.command(name="verify-paper")
@click.option("--grid", type=click.Choice(["default", "large"]), default="default", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="key = value file overriding grid sizes")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def verify_paper_cmd(grid, config_path, out):
    """Replay the named families and cases over parameter grids."""
    cfg = LARGE if grid == "large" else DEFAULT
    if config_path:
        try:
            cfg = load_config(config_path, cfg)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
    report = verify_paper(cfg)
    _print_cases(report)
    if out is not None:
        out.write_text(report.to_json())
    _finish(report.ok)


@main.command(name="oracle-check")
@click.option("--max-complexity", type=click.IntRange(min=2), default=12, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def oracle_check_cmd(max_complexity, out):
    """Cross-check every invariant against an independent computation."""
    report = oracle_check(max_complexity)
    for s in report.oracle:
        click.echo(f"[{'ok' if s.passed else 'FAIL':4}] {s.name:20} {s.checked:6} checked  {s.note}")
        if s.failure:
            click.echo(f"       first disagreement: {s.failure}")
    if out is not None:
        out.write_text(report.to_json())
    _finish(report.ok)


if __name__ == "__main__":
    main()
