"""Command-line front. Each subcommand is a thin adapter over one library
operation; state lives in a session log file (flag --session or the
RECWB_SESSION environment variable).

Exit codes: 0 success / verdict true, 1 verdict false or gate rejection,
2 usage or format error.
"""

from __future__ import annotations

import os
import shutil
import sys
from pathlib import Path

import click

from . import harness
from .certify import CertificateError
from .lang import FUEL_EXHAUSTED, ProgramSyntaxError, interpret, parse, pretty_print
from .numbering import decode_program, encode_program, index_str, parse_index
from .qproc import Session, SessionFormatError

ENV_SESSION = "RECWB_SESSION"


class IndexParam(click.ParamType):
    name = "index"

    def convert(self, value, param, ctx):
        try:
            return parse_index(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


INDEX = IndexParam()


def _session_path(ctx) -> Path:
    path = ctx.obj.get("session") or os.environ.get(ENV_SESSION)
    if not path:
        raise click.UsageError("no session file; pass --session or set " + ENV_SESSION)
    return Path(path)


def _load_session(ctx) -> tuple[Session, Path]:
    path = _session_path(ctx)
    if path.exists():
        try:
            return Session.load(path), path
        except SessionFormatError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
    return Session(), path


def _fail_gate(exc) -> "NoReturn":
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


def _emit(ctx, pairs) -> None:
    if ctx.obj.get("format") == "machine":
        for k, v in pairs:
            click.echo(f"{k}={v}")
    else:
        for _, v in pairs:
            click.echo(v)


@click.group()
@click.option("--session", type=click.Path(), default=None,
              help=f"Session log file (default from ${ENV_SESSION}).")
@click.option("--format", "output_format", type=click.Choice(["text", "machine"]),
              default="text", help="Output format.")
@click.pass_context
def main(ctx, session, output_format):
    """Workbench for diagonal program construction over a bijective
    program numbering, with a certificate-gated memo procedure."""
    ctx.obj = {"session": session, "format": output_format}


@main.command()
@click.argument("program_file", type=click.Path(exists=True))
@click.pass_context
def encode(ctx, program_file):
    """Encode a program file to its index."""
    try:
        program = parse(Path(program_file).read_text())
    except ProgramSyntaxError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit(ctx, [("index", index_str(encode_program(program)))])


@main.command()
@click.argument("index", type=INDEX)
def decode(index):
    """Print the canonical text of the program at INDEX."""
    click.echo(pretty_print(decode_program(index)), nl=False)


@main.command()
@click.argument("index", type=INDEX)
@click.argument("input", type=INDEX)
@click.option("--fuel", type=int, default=harness.DEFAULT_FUEL, show_default=True)
@click.pass_context
def run(ctx, index, input, fuel):
    """Run the program at INDEX on INPUT within the fuel budget."""
    out = interpret(decode_program(index), input, fuel)
    if out is FUEL_EXHAUSTED:
        _emit(ctx, [("outcome", "FUEL-EXHAUSTED")])
        sys.exit(1)
    _emit(ctx, [("value", index_str(out.value)), ("fuel_used", str(out.fuel_used))])


@main.command()
@click.argument("j", type=INDEX)
@click.pass_context
def psi(ctx, j):
    """Diagonal index for the certified enumerator J (gated)."""
    session, path = _load_session(ctx)
    try:
        cert = session.issue_total(harness.psi(j), ("psi", j))
    except CertificateError as exc:
        _fail_gate(exc)
    session.save(path)
    _emit(ctx, [("index", index_str(cert.subject))])


@main.command()
@click.argument("claim", type=click.Choice(["total", "enum"]))
@click.argument("index", type=INDEX)
@click.option("--by", "rule", required=True,
              type=click.Choice(["syntactic", "psi", "compose", "const", "prepend"]))
@click.argument("premises", type=INDEX, nargs=-1)
@click.pass_context
def certify(ctx, claim, index, rule, premises):
    """Issue a certificate for INDEX via RULE with PREMISES."""
    session, path = _load_session(ctx)
    try:
        if claim == "total":
            cert = session.issue_total(index, (rule, *premises))
        else:
            cert = session.issue_enum(index, (rule, *premises))
    except CertificateError as exc:
        _fail_gate(exc)
    session.save(path)
    _emit(ctx, [("subject", index_str(cert.subject)), ("kind", cert.kind),
                ("claim", cert.claim)])


@main.group()
def q():
    """The memo procedure: feed enumerators, query the memo function."""


@q.command("feed")
@click.argument("j", type=INDEX)
@click.pass_context
def q_feed(ctx, j):
    """Feed a certified enumerator J."""
    session, path = _load_session(ctx)
    try:
        returned = session.q_feed(j)
    except CertificateError as exc:
        _fail_gate(exc)
    session.save(path)
    slot, value = session.alpha_entries[-1]
    _emit(ctx, [("returned", index_str(returned)), ("slot", str(slot)),
                ("value", index_str(value))])


@q.command("query")
@click.argument("x", type=INDEX)
@click.pass_context
def q_query(ctx, x):
    """Query the memo function at X (may insert (X, c))."""
    session, path = _load_session(ctx)
    returned = session.q_query(int(x))
    session.save(path)
    _emit(ctx, [("returned", index_str(returned))])


@q.command("both")
@click.argument("x", type=INDEX)
@click.argument("j", type=INDEX)
@click.pass_context
def q_both(ctx, x, j):
    """One step with both inputs set."""
    session, path = _load_session(ctx)
    try:
        returned = session.q_step(x=int(x), j=j)
    except CertificateError as exc:
        _fail_gate(exc)
    session.save(path)
    _emit(ctx, [("returned", index_str(returned))])


@main.group()
def verify():
    """Finite-prefix checks; exit 0 on verdict true, 1 on false."""


def _report_out(ctx, report, figure):
    click.echo(report.text())
    if figure:
        from .figures import render_report_figure

        render_report_figure(report, figure)
        click.echo(f"figure written to {figure}")
    sys.exit(0 if report.verdict else 1)


@verify.command("diagonal")
@click.argument("j", type=INDEX)
@click.option("--n", "prefix_n", type=int, default=harness.DEFAULT_N, show_default=True)
@click.option("--fuel", type=int, default=harness.DEFAULT_FUEL, show_default=True)
@click.option("--figure", type=click.Path(), default=None,
              help="Also render the report as a PNG.")
@click.pass_context
def verify_diagonal(ctx, j, prefix_n, fuel, figure):
    """Check the plus-1 diagonal law for J on n <= N."""
    session, _ = _load_session(ctx)
    try:
        report = harness.verify_diagonal(session, j, prefix_n, fuel)
    except CertificateError as exc:
        _fail_gate(exc)
    _report_out(ctx, report, figure)


@verify.command("escape")
@click.argument("j", type=INDEX)
@click.option("--n", "prefix_n", type=int, default=100, show_default=True)
@click.option("--fuel", type=int, default=harness.DEFAULT_FUEL, show_default=True)
@click.option("--figure", type=click.Path(), default=None)
@click.pass_context
def verify_escape(ctx, j, prefix_n, fuel, figure):
    """Check the diagonal index escapes J's sampled range on n <= N."""
    session, _ = _load_session(ctx)
    try:
        report = harness.verify_escape(session, j, prefix_n, fuel)
    except CertificateError as exc:
        _fail_gate(exc)
    _report_out(ctx, report, figure)


@verify.command("thm5")
@click.argument("j", type=INDEX)
@click.option("--n", "prefix_n", type=int, default=harness.DEFAULT_N, show_default=True)
@click.option("--fuel", type=int, default=harness.DEFAULT_FUEL, show_default=True)
@click.option("--figure", type=click.Path(), default=None)
@click.pass_context
def verify_thm5(ctx, j, prefix_n, fuel, figure):
    """Feed J and exhibit the finite-prefix contradiction witness."""
    session, path = _load_session(ctx)
    try:
        report = harness.theorem5_witness(session, j, prefix_n, fuel)
    except CertificateError as exc:
        _fail_gate(exc)
    session.save(path)
    _report_out(ctx, report, figure)


@main.command()
@click.argument("which", type=click.Choice(["1", "2"]))
@click.option("--k", type=int, default=3, show_default=True,
              help="Chain depth for scenario 2.")
@click.option("--save-session", "save_to", type=click.Path(), default=None,
              help="Write the scenario's session log here.")
@click.pass_context
def example(ctx, which, k, save_to):
    """Run a worked scenario on a fresh session."""
    try:
        t = harness.run_example1() if which == "1" else harness.run_example2(k)
    except (AssertionError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(t.text())
    if save_to:
        t.session.save(save_to)
        click.echo(f"session written to {save_to}")


@main.group()
def session():
    """Session log management."""


@session.command("save")
@click.argument("path", type=click.Path())
@click.pass_context
def session_save(ctx, path):
    """Copy the current session log to PATH."""
    src = _session_path(ctx)
    if not src.exists():
        Session().save(src)
    shutil.copyfile(src, path)
    click.echo(f"saved to {path}")


@session.command("load")
@click.argument("path", type=click.Path(exists=True))
@click.pass_context
def session_load(ctx, path):
    """Validate PATH by replay and install it as the current session log."""
    try:
        Session.load(path)
    except SessionFormatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    dst = _session_path(ctx)
    shutil.copyfile(path, dst)
    click.echo(f"loaded {path} into {dst}")


@session.command("replay")
@click.argument("path", type=click.Path(exists=True))
@click.pass_context
def session_replay(ctx, path):
    """Replay PATH from an empty store and report the resulting state."""
    try:
        s = Session.load(path)
    except SessionFormatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _emit(ctx, [("records", str(len(s.log))),
                ("alpha_size", str(len(s.alpha_entries))),
                ("version", str(s.version))])


if __name__ == "__main__":
    main()
