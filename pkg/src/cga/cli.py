"""Command-line interface: REPL, one-shot evaluation and script runner.

Exit codes: 0 success, 1 evaluation error, 2 parse error.  The default
backend comes from CGA_BACKEND (exact | symbolic | float) and can be
overridden per invocation with --backend.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import AlgebraError, EvalError, LexError, ParseError
from .expr import is_blank
from .scalars import BACKEND_NAMES
from .session import Session

_COMMAND_HELP = (
    "commands: :backend exact|symbolic|float, :vars, :clear NAME, "
    ":load FILE, :json on|off, :quit"
)


class _Quit(Exception):
    pass


def _default_backend() -> str:
    name = os.environ.get("CGA_BACKEND", "symbolic")
    return name if name in BACKEND_NAMES else "symbolic"


def _emit(lines, text):
    lines.append(text)


def _run_statement(session: Session, source: str, number: int, out):
    """Evaluate one statement, appending transcript lines; returns a status."""
    try:
        outcome = session.evaluate(source)
    except (LexError, ParseError) as exc:
        _emit(out, f"Parse error: {exc}")
        return 2
    except (EvalError, AlgebraError, ZeroDivisionError, ValueError, TypeError) as exc:
        _emit(out, f"Error: {exc}")
        return 1
    for warning in outcome.warnings:
        _emit(out, f"warning: {warning}")
    if not outcome.suppressed:
        _emit(out, f"Out[{number}] = {outcome.text}")
    return 0


def _run_command(session: Session, line: str, out):
    parts = line.split()
    command, args = parts[0], parts[1:]
    if command == ":quit":
        raise _Quit()
    if command == ":backend":
        if len(args) != 1 or args[0] not in BACKEND_NAMES:
            _emit(out, f"Error: :backend needs one of {', '.join(BACKEND_NAMES)}")
            return
        session.set_backend(args[0])
        _emit(out, f"backend: {args[0]} (environment cleared)")
        return
    if command == ":vars":
        for name in sorted(session.env):
            _emit(out, f"{name} = {session.render(session.env[name])}")
        return
    if command == ":clear":
        if len(args) != 1:
            _emit(out, "Error: :clear needs a name")
            return
        try:
            session.clear(args[0])
        except EvalError as exc:
            _emit(out, f"Error: {exc}")
        return
    if command == ":json":
        if args != ["on"] and args != ["off"]:
            _emit(out, "Error: :json needs on or off")
            return
        session.json_output = args[0] == "on"
        return
    if command == ":load":
        if len(args) != 1:
            _emit(out, "Error: :load needs a file name")
            return
        try:
            text = open(args[0], encoding="utf-8").read()
        except OSError as exc:
            _emit(out, f"Error: {exc}")
            return
        _run_lines(session, text.splitlines(), out, echo=True)
        return
    _emit(out, f"Error: unknown command {command} ({_COMMAND_HELP})")


def _run_lines(session: Session, lines, out, echo: bool):
    """Run script lines; returns (any_parse_error, any_eval_error)."""
    parse_err = eval_err = False
    for raw in lines:
        line = raw.strip()
        if line.startswith(":"):
            _run_command(session, line, out)
            continue
        try:
            if is_blank(line):
                continue
        except LexError:
            pass  # let the statement path report the position
        number = session.counter + 1
        if echo:
            _emit(out, f"In[{number}]= {line}")
        status = _run_statement(session, line, number, out)
        if status == 2:
            parse_err = True
            session.counter += 1  # errors still consume an input number
        elif status == 1:
            eval_err = True
            session.counter += 1
    return parse_err, eval_err


def _repl(args) -> int:
    session = Session(backend=args.backend)
    print(f"cga calculator, {session.backend.name} backend ({_COMMAND_HELP})")
    while True:
        try:
            line = input(f"In[{session.counter + 1}]= ")
        except EOFError:
            print()
            return 0
        except KeyboardInterrupt:
            print()
            continue
        line = line.strip()
        if not line:
            continue
        out = []
        if line.startswith(":"):
            try:
                _run_command(session, line, out)
            except _Quit:
                return 0
        else:
            number = session.counter + 1
            if _run_statement(session, line, number, out) != 0:
                session.counter += 1
        for text in out:
            print(text)


def _eval_once(args) -> int:
    session = Session(backend=args.backend, json_output=args.json)
    try:
        outcome = session.evaluate(args.expression)
    except (LexError, ParseError) as exc:
        print(f"Parse error: {exc}", file=sys.stderr)
        return 2
    except (EvalError, AlgebraError, ZeroDivisionError, ValueError, TypeError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
    for warning in outcome.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(outcome.text)
    return 0


def _run_file(args) -> int:
    session = Session(backend=args.backend)
    try:
        text = open(args.file, encoding="utf-8").read()
    except OSError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1
    out = []
    try:
        parse_err, eval_err = _run_lines(session, text.splitlines(), out, echo=True)
    except _Quit:
        parse_err = eval_err = False
    transcript = "\n".join(out) + ("\n" if out else "")
    sys.stdout.write(transcript)
    if args.transcript:
        with open(args.transcript, "w", encoding="utf-8") as fh:
            fh.write(transcript)
    if parse_err:
        return 2
    if eval_err:
        return 1
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cga",
        description="Conformal geometric algebra calculator for G(4,1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    repl = sub.add_parser("repl", help="interactive session")
    repl.add_argument("--backend", choices=BACKEND_NAMES, default=_default_backend())
    repl.set_defaults(fn=_repl)

    once = sub.add_parser("eval", help="evaluate one expression and print it")
    once.add_argument("expression")
    once.add_argument("--backend", choices=BACKEND_NAMES, default=_default_backend())
    once.add_argument("--json", action="store_true", help="print the JSON serialization")
    once.set_defaults(fn=_eval_once)

    run = sub.add_parser("run", help="run a script and print the transcript")
    run.add_argument("file")
    run.add_argument("--backend", choices=BACKEND_NAMES, default=_default_backend())
    run.add_argument("--transcript", help="also write the transcript to this file")
    run.set_defaults(fn=_run_file)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
