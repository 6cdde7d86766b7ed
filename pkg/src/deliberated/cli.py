"""Command-line front end.

Thin client over the library: parse inputs, call one operation, print a
structured report.  Exit codes: 0 for pass/valid verdicts, 1 for
fail/invalid ones, 2 for usage or input errors.  Set DJ_COLOR=0 to force
plain output.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click

from . import formats
from .agents import Agent
from .conditions import check_cac
from .core import NotClearCut, UnknownIdentifier, is_clear_cut
from .dialogue import run_validation_dialogue
from .fixtures import FIXTURE_NAMES, instance_text
from .generate import PROFILES, fuzz_theorems
from .models import (
    extract_cac_subset,
    is_gamma_operationally_valid,
    is_operationally_valid,
    model_claims,
    require_valid_model,
    synthesize_model,
)

PASS_EXIT = 0
FAIL_EXIT = 1
INPUT_EXIT = 2


def _style(text: str, **kwargs) -> str:
    if os.environ.get("DJ_COLOR") == "0":
        return text
    return click.style(text, **kwargs)


def _load_instance(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        sys.exit(_input_error(f"cannot read {path}: {exc}"))
    try:
        return formats.parse_instance(text)
    except formats.DocumentError as exc:
        sys.exit(_input_error(f"{path}: {exc}"))


def _load_model(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        sys.exit(_input_error(f"cannot read {path}: {exc}"))
    try:
        return formats.parse_model(text)
    except formats.DocumentError as exc:
        sys.exit(_input_error(f"{path}: {exc}"))


def _input_error(message: str) -> int:
    click.echo(_style("error: " + message, fg="red"), err=True)
    return INPUT_EXIT


def _resolve_gamma(sit, gamma, gamma_file, gamma_all):
    picked = [x for x in (gamma, gamma_file, gamma_all) if x]
    if len(picked) > 1:
        raise click.UsageError("choose only one of --gamma, --gamma-file, --gamma-all")
    if gamma_all:
        return frozenset(sit.arguments)
    if gamma_file:
        try:
            names = Path(gamma_file).read_text(encoding="utf-8").split()
        except OSError as exc:
            sys.exit(_input_error(f"cannot read {gamma_file}: {exc}"))
        return frozenset(names)
    if gamma:
        return frozenset(x.strip() for x in gamma.split(",") if x.strip())
    return None


def _fmt_set(values) -> str:
    return "{" + ", ".join(sorted(values)) + "}"


@click.group()
def main() -> None:
    """Deliberated-judgment engine."""


@main.command()
@click.argument("instance", type=click.Path())
def judge(instance: str) -> None:
    """Print per-proposition statuses and the deliberated judgment."""
    sit = _load_instance(instance)
    report = is_clear_cut(sit)
    judged = sorted(t for t, s in report.statuses if s == "justifiable")
    click.echo("deliberated judgment")
    click.echo(f"  T_i = {_fmt_set(judged)}")
    for t, status in report.statuses:
        colour = {"justifiable": "green", "untenable": "red"}.get(status, "yellow")
        click.echo(f"  {t}: " + _style(status, fg=colour))
    click.echo(f"  clear-cut: {'yes' if report.clear_cut else 'no'}")
    sys.exit(PASS_EXIT if report.clear_cut else FAIL_EXIT)


@main.command()
@click.argument("instance", type=click.Path())
@click.option("--gamma", default=None, help="comma-separated argument ids")
@click.option("--gamma-file", default=None, type=click.Path())
@click.option("--gamma-all", is_flag=True, help="use the whole argument pool")
@click.option("--json", "as_json", is_flag=True, help="emit the report document")
def check(instance, gamma, gamma_file, gamma_all, as_json) -> None:
    """Run the sufficiency conditions (CAC) on a chosen argument subset."""
    sit = _load_instance(instance)
    g = _resolve_gamma(sit, gamma, gamma_file, gamma_all)
    if g is None:
        raise click.UsageError("one of --gamma, --gamma-file or --gamma-all is required")
    try:
        report = check_cac(sit, g)
    except UnknownIdentifier as exc:
        sys.exit(_input_error(str(exc)))
    if as_json:
        click.echo(formats.serialize_check_report(report), nl=False)
    else:
        click.echo(f"gamma = {_fmt_set(report.gamma)}")
        for name, sub in (
            ("answerability", report.answerability),
            ("closed-reinstatement", report.closed_reinstatement),
            ("covering", report.covering),
        ):
            mark = _style("pass", fg="green") if sub.passed else _style("fail", fg="red")
            click.echo(f"  {name}: {mark}")
            for w in sub.witnesses:
                click.echo(f"    witness: {w}")
        click.echo(f"  width bound j: {report.j}")
        click.echo(f"  length bound k: {report.k if report.k is not None else 'none (cyclic)'}")
        verdict = _style("CAC", fg="green") if report.cac else _style("not CAC", fg="red")
        click.echo(f"  verdict: {verdict}")
    sys.exit(PASS_EXIT if report.cac else FAIL_EXIT)


@main.command()
@click.argument("instance", type=click.Path())
@click.option("--model", "model_path", required=True, type=click.Path())
@click.option("--gamma", default=None)
@click.option("--gamma-file", default=None, type=click.Path())
@click.option("--gamma-all", is_flag=True)
def validate(instance, model_path, gamma, gamma_file, gamma_all) -> None:
    """Check a model's operational validity against ground truth."""
    sit = _load_instance(instance)
    m = _load_model(model_path)
    try:
        require_valid_model(sit, m)
    except UnknownIdentifier as exc:
        sys.exit(_input_error(str(exc)))
    g = _resolve_gamma(sit, gamma, gamma_file, gamma_all)
    try:
        verdict = (
            is_operationally_valid(sit, m)
            if g is None
            else is_gamma_operationally_valid(sit, g, m)
        )
    except UnknownIdentifier as exc:
        sys.exit(_input_error(str(exc)))
    click.echo(f"claims T_eta = {_fmt_set(model_claims(sit, m))}")
    if verdict.valid:
        click.echo(_style("operationally valid", fg="green"))
        sys.exit(PASS_EXIT)
    click.echo(_style("invalid", fg="red"))
    for f in verdict.failures:
        click.echo(f"  {f.kind}: {f.subject}")
    sys.exit(FAIL_EXIT)


@main.command()
@click.argument("instance", type=click.Path())
def synth(instance: str) -> None:
    """Synthesize an operationally valid model from a clear-cut situation."""
    sit = _load_instance(instance)
    try:
        m = synthesize_model(sit)
    except NotClearCut as exc:
        click.echo(_style("not clear-cut", fg="red"))
        for t in exc.neither:
            click.echo(f"  undecided: {t}")
        sys.exit(FAIL_EXIT)
    click.echo(formats.serialize_model(m), nl=False)
    sys.exit(PASS_EXIT)


@main.command()
@click.argument("instance", type=click.Path())
@click.option("--set", "chosen", default=None, help="comma-separated argument ids")
def extract(instance, chosen) -> None:
    """Extract a settling subset from an efficient set of arguments."""
    sit = _load_instance(instance)
    pool = (
        frozenset(x.strip() for x in chosen.split(",") if x.strip())
        if chosen
        else frozenset(sit.arguments)
    )
    try:
        result = extract_cac_subset(sit, pool)
    except UnknownIdentifier as exc:
        sys.exit(_input_error(str(exc)))
    if not result.ok:
        click.echo(_style("set is not efficient", fg="red"))
        for t in result.efficiency_failure.witnesses:
            click.echo(f"  witness proposition: {t}")
        sys.exit(FAIL_EXIT)
    click.echo(f"gamma = {_fmt_set(result.gamma)}")
    report = result.cac_report
    click.echo(f"cac: {'yes' if report.cac else 'no'} (j={report.j}, k={report.k})")
    sys.exit(PASS_EXIT if report.cac else FAIL_EXIT)


@main.command()
@click.option("--count", default=100, type=int)
@click.option("--seed", default=0, type=int)
@click.option(
    "--profile",
    default="mixed",
    help="free, layered, cac-enforced, or mixed",
)
@click.option("--checks", default=None, help="comma-separated check names")
def fuzz(count, seed, profile, checks) -> None:
    """Fuzz the framework's theorems on generated instances."""
    profiles = PROFILES if profile == "mixed" else (profile,)
    selected = (
        tuple(x.strip() for x in checks.split(",") if x.strip()) if checks else None
    )
    try:
        report = fuzz_theorems(count, seed, profiles, selected)
    except ValueError as exc:
        sys.exit(_input_error(str(exc)))
    click.echo(report.render(), nl=False)
    sys.exit(PASS_EXIT if not report.violations else FAIL_EXIT)


@main.command()
@click.argument("instance", type=click.Path())
@click.option("--model", "model_path", required=True, type=click.Path())
@click.option("--agent", "policy", default="static",
              type=click.Choice(["static", "cyclic", "drift"]))
@click.option("--agent-seed", default=0, type=int)
@click.option("--start-perspective", default=None)
@click.option("--budget", default=1, type=int)
@click.option("--gamma", default=None)
@click.option("--gamma-file", default=None, type=click.Path())
@click.option("--gamma-all", is_flag=True)
@click.option("--transcript", "transcript_path", default=None, type=click.Path(),
              help="write the transcript document here")
def dialogue(instance, model_path, policy, agent_seed, start_perspective,
             budget, gamma, gamma_file, gamma_all, transcript_path) -> None:
    """Validate a model against a simulated oracle, query by query."""
    sit = _load_instance(instance)
    m = _load_model(model_path)
    g = _resolve_gamma(sit, gamma, gamma_file, gamma_all)
    if g is None:
        g = frozenset(sit.arguments)
    try:
        oracle = Agent(sit, policy, seed=agent_seed, current=start_perspective or "")
        transcript = run_validation_dialogue(oracle, m, g, budget)
    except (ValueError, UnknownIdentifier) as exc:
        sys.exit(_input_error(str(exc)))
    for e in transcript.entries:
        answer = "yes" if e.answer else "no"
        click.echo(f"  {e.kind} {e.pair[0]} -> {e.pair[1]}: {answer}")
    colour = {"valid": "green", "invalid": "red"}.get(transcript.verdict, "yellow")
    click.echo("verdict: " + _style(transcript.verdict, fg=colour))
    for f in transcript.failures:
        click.echo(f"  {f.kind}: {f.subject}")
    for o in transcript.unresolved:
        click.echo(f"  unresolved: {o}")
    if transcript_path:
        Path(transcript_path).write_text(
            formats.serialize_transcript(transcript), encoding="utf-8"
        )
    sys.exit(PASS_EXIT if transcript.verdict == "valid" else FAIL_EXIT)


@main.command()
@click.argument("name", required=False)
def instances(name) -> None:
    """List bundled instances, or print one."""
    if name is None:
        for n in FIXTURE_NAMES:
            click.echo(n)
        sys.exit(PASS_EXIT)
    try:
        click.echo(instance_text(name), nl=False)
    except KeyError as exc:
        sys.exit(_input_error(str(exc)))
    sys.exit(PASS_EXIT)


@main.command()
@click.option("--port", default=8000, type=int)
@click.option("--host", default="127.0.0.1")
def serve(port, host) -> None:
    """Run the HTTP session service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
