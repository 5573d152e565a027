"""``prok``: run a session file (or stdin) and print its reports."""

import argparse
import json
import os
import sys

from ..errors import ProkError
from ..poly.gb import DEFAULT_BUDGET
from ..poly.parse import ParseError
from ..prosys import DEFAULT_PRO_BUDGET
from .runner import INPUT_ERROR, SCHEMA_VERSION, Options, report_document, run
from .session import SessionError, parse_session


def _pro_budget(text):
    try:
        S, r = text.split(":")
        S, r = int(S), int(r)
    except ValueError:
        raise argparse.ArgumentTypeError("expected S:R, e.g. 3:12")
    if S < 1 or r < 1:
        raise argparse.ArgumentTypeError("S and R must be positive")
    return S, r


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser():
    p = argparse.ArgumentParser(prog="prok", description=__doc__.split("\n")[0].strip("`"))
    p.add_argument("file", nargs="?", help="session file; reads stdin when omitted or '-'")
    p.add_argument("--json", action="store_true", help="emit the versioned JSON report")
    p.add_argument("--budget-groebner", type=_positive, metavar="N",
                   help=f"S-pair reductions per Gröbner run (default {DEFAULT_BUDGET}, "
                        "or PROK_BUDGET_GROEBNER)")
    p.add_argument("--budget-pro", type=_pro_budget, metavar="S:R",
                   default=DEFAULT_PRO_BUDGET,
                   help="default pro bounds when a command gives no 'upto' (default 3:12)")
    p.add_argument("--builtin", metavar="NAME",
                   help="bind situation E to a builtin: cusp, node, swan(p), truncated(N)")
    p.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="omit timing from JSON output")
    return p


def _groebner_budget(flag):
    if flag is not None:
        return flag
    env = os.environ.get("PROK_BUDGET_GROEBNER")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ProkError(f"PROK_BUDGET_GROEBNER must be an integer, got {env!r}")
        if n < 1:
            raise ProkError("PROK_BUDGET_GROEBNER must be positive")
        return n
    return None


def _text_report(reports):
    lines = []
    for r in reports:
        lines.append(f"[{r.index}] {r.command}")
        lines.append(f"    status: {r.status} ({r.provenance})")
        lines.append(f"    result: {json.dumps(r.result, sort_keys=True)}")
        if r.certificates:
            lines.append(f"    certificates: {json.dumps(r.certificates, sort_keys=True)}")
    return "\n".join(lines) + ("\n" if lines else "")


def _error_document(kind, exc):
    doc = {"schema": SCHEMA_VERSION, "reports": [],
           "error": {"kind": kind, "message": str(exc)}}
    line = getattr(exc, "line", None)
    if line is not None:
        doc["error"]["line"] = line
        doc["error"]["column"] = exc.col
    return doc


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.file and args.file != "-":
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"prok: cannot read input: {exc}", file=sys.stderr)
        return INPUT_ERROR
    try:
        options = Options(budget_groebner=_groebner_budget(args.budget_groebner),
                          budget_pro=args.budget_pro)
        session = parse_session(text, builtin=args.builtin)
    except (ParseError, SessionError, ProkError) as exc:
        kind = "syntax" if isinstance(exc, ParseError) else "session"
        if args.json:
            _emit(json.dumps(_error_document(kind, exc), indent=2, sort_keys=True) + "\n", args.out)
        print(f"prok: {exc}", file=sys.stderr)
        return INPUT_ERROR
    reports, code = run(session, options)
    if args.json:
        doc = report_document(reports, timing=not args.no_timing)
        doc["exit_code"] = code
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(_text_report(reports), args.out)
    return code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
