import io
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from prok.cli import format_program, parse_program, parse_session, run
from prok.cli.main import main
from prok.cli.runner import Options
from prok.cli.session import SessionError
from prok.cli.syntax import (
    HomDecl,
    IdealDecl,
    IdealExpr,
    ModuleDecl,
    Program,
    RingDecl,
    SituationDecl,
    SystemExpr,
    command,
)
from prok.poly.parse import ParseError

ROOT = Path(__file__).resolve().parent.parent
CORPUS = sorted((ROOT / "corpus").glob("*.pk"))
SCHEMA = json.loads((ROOT / "schema" / "report-v1.json").read_text())

CUSP = """
ring A = QQ[x,y]/(y^2 - x^3);
ring B = QQ[t];
hom f : A -> B = {x -> t^2, y -> t^3} gens (1, t);
situation E = excision(f, ideal(x, y));
gw E;
"""


def run_cli(argv, stdin="", monkeypatch=None):
    """Call main() in-process, returning (code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin, sys.stdout, sys.stderr
    sys.stdin, sys.stdout, sys.stderr = io.StringIO(stdin), out, err
    try:
        code = main(argv)
    finally:
        sys.stdin, sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def json_run(text, *flags):
    code, out, _ = run_cli(["--json", "--no-timing", *flags], text)
    return code, json.loads(out)


# parsing ------------------------------------------------------------------------

def test_single_ring_binding():
    prog = parse_program("ring A = QQ[x,y]/(y^2-x^3);")
    assert len(prog.statements) == 1
    st = prog.statements[0]
    assert isinstance(st, RingDecl) and st.name == "A" and st.variables == ("x", "y")


def test_missing_semicolon_is_an_end_of_input_error():
    with pytest.raises(ParseError) as info:
        parse_program("ring A = QQ[x,y]/(y^2-x^3)")
    assert "end-of-input" in str(info.value) or info.value.line == 1
    assert "';'" in str(info.value)


def test_syntax_errors_carry_positions():
    with pytest.raises(ParseError) as info:
        parse_program("ring A = QQ[x];\ngw E E;")
    assert (info.value.line, info.value.col) == (2, 6)
    with pytest.raises(ParseError) as info:
        parse_program("frobnicate A;")
    assert (info.value.line, info.value.col) == (1, 1)
    with pytest.raises(ParseError):
        parse_program("ring A = RR[x];")


def test_unresolved_name():
    with pytest.raises(SessionError, match="unresolved name 'E'"):
        parse_session("gw E;")


def test_type_mismatch():
    text = ("ring A = QQ[x]; ring B = QQ[y];"
            "module M over A = coker [[x]]; module N over B = coker [[y]];"
            "tor(M, N, 1);")
    with pytest.raises(SessionError, match="type mismatch"):
        parse_session(text)
    with pytest.raises(SessionError, match="type mismatch"):
        parse_session("ring A = QQ[x]; gw A;")


def test_checker_rejects_bad_declarations():
    bad = [
        "ring A = QQ[x]; ring A = QQ[y];",
        "ring A = QQ[x]/(y);",
        "ring A = QQ[x,y]; ring B = QQ[t]; hom f : A -> B = {x -> t};",
        "ring A = QQ[x]; ring B = QQ[t]; hom f : A -> B = {x -> s};",
        "situation E = builtin:swan(4);",
        "situation E = builtin:cusp; klow E degree 2;",
        "reduce (x) in (x, y) bound 0;",
    ]
    for text in bad:
        with pytest.raises(SessionError):
            parse_session(text)


def test_cusp_session_parses_with_formatting():
    prog = parse_program(CUSP)
    assert format_program(prog).count(";") == 5
    assert parse_program(format_program(prog)) == prog


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_round_trip(path):
    prog = parse_program(path.read_text())
    assert parse_program(format_program(prog)) == prog


# generated ASTs ----------------------------------------------------------------

VARS = st.sampled_from(["x", "y", "z", "t", "u"])
NAMES = st.sampled_from(["A", "B", "E", "M", "N", "I", "J2", "f"])
SMALL = st.integers(min_value=1, max_value=20)

exprs = st.recursive(
    st.one_of(st.integers(0, 99).map(lambda n: ("num", n)), VARS.map(lambda v: ("var", v))),
    lambda sub: st.one_of(
        st.tuples(st.sampled_from(["add", "sub", "mul"]), sub, sub),
        sub.map(lambda e: ("neg", e)),
        st.tuples(st.just("pow"), sub, st.integers(0, 9)),
    ),
    max_leaves=8,
)
expr_tuples = st.lists(exprs, min_size=1, max_size=3).map(tuple)
ideals = st.one_of(
    st.builds(IdealExpr, name=NAMES, power=SMALL),
    st.builds(IdealExpr, gens=expr_tuples, power=SMALL),
)
bases = st.sampled_from(["QQ", "ZZ", "GF(2)", "GF(7)"])
opt = lambda s: st.one_of(st.none(), s)

statements = st.one_of(
    st.builds(RingDecl, NAMES, bases, st.lists(VARS, max_size=3, unique=True).map(tuple),
              st.one_of(st.just(()), expr_tuples)),
    st.builds(HomDecl, NAMES, NAMES, NAMES,
              st.lists(st.tuples(VARS, exprs), min_size=1, max_size=3).map(tuple),
              opt(expr_tuples)),
    st.builds(IdealDecl, NAMES, NAMES, expr_tuples),
    st.builds(ModuleDecl, NAMES, NAMES,
              st.integers(1, 3).flatmap(
                  lambda w: st.lists(st.lists(exprs, min_size=w, max_size=w).map(tuple),
                                     min_size=1, max_size=3).map(tuple))),
    st.builds(SituationDecl, NAMES, hom=NAMES, ideal=ideals),
    st.builds(SituationDecl, NAMES,
              builtin=st.sampled_from(["cusp", "node", "swan(3)", "truncated(4)",
                                       "truncated(3, GF(2))"])),
    st.builds(lambda v, n: command(v, target=n),
              st.sampled_from(["gw", "conductor", "validate", "kernel", "swan"]), NAMES),
    st.builds(lambda n, d: command("klow", target=n, degree=d), NAMES, st.integers(-3, 1)),
    st.builds(lambda v, sys_, s, r: command(v, system=sys_, s=s, r=r),
              st.sampled_from(["prozero", "proiso"]),
              st.one_of(st.builds(lambda k, n: SystemExpr(k, (n,)),
                                  st.sampled_from(["gw", "swan"]), NAMES),
                        st.builds(lambda n, d: SystemExpr("tor", (n, d)), NAMES, SMALL),
                        st.builds(lambda a, b, d: SystemExpr("tor", (a, b, d)), NAMES, NAMES, SMALL)),
              opt(SMALL), opt(SMALL)),
    st.builds(lambda n, d, s, r: command("criteria", target=n, depth=d, s=s, r=r),
              NAMES, opt(SMALL), opt(SMALL), opt(SMALL)),
    st.builds(lambda a, b, d: command("tor", left=a, right=b, degree=d), NAMES, NAMES, SMALL),
    st.builds(lambda m, l: command("resolve", module=m, length=l), NAMES, opt(SMALL)),
    st.builds(lambda n, b, x: command("mennicke", target=n, b=b, x=x), NAMES, exprs, exprs),
    st.builds(lambda v, a, b, r, n: command(v, first=a, second=b, ring=r, bound=n),
              st.sampled_from(["reduce", "artin-rees", "intertwine"]), ideals, ideals,
              opt(NAMES), SMALL),
    st.builds(lambda m, o: command("snf", matrix=m, over=o),
              st.integers(1, 3).flatmap(
                  lambda w: st.lists(st.lists(st.integers(-50, 50), min_size=w, max_size=w)
                                     .map(tuple), min_size=1, max_size=3).map(tuple)),
              opt(bases)),
)


@settings(max_examples=300, deadline=None)
@given(st.lists(statements, max_size=6).map(lambda s: Program(tuple(s))))
def test_generated_round_trip(prog):
    assert parse_program(format_program(prog)) == prog


# running ------------------------------------------------------------------------

def test_cusp_session_end_to_end():
    code, doc = json_run(CUSP)
    assert code == 0
    (rep,) = doc["reports"]
    assert rep["verb"] == "gw" and rep["status"] == "ok"
    assert rep["result"] == {"field": "QQ", "dimension": 1, "is_zero": False}


def test_builtin_cusp_prozero():
    code, doc = json_run("gw E; prozero gw(E) upto s=3 r=8;", "--builtin", "cusp")
    assert code == 0
    gw, pz = doc["reports"]
    assert gw["index"] == 1 and pz["index"] == 2
    assert gw["result"]["dimension"] == 1
    assert pz["result"]["witness"] == {"1": 2, "2": 4, "3": 6}


def test_builtin_swan3():
    code, doc = json_run("gw E;", "--builtin", "swan(3)")
    assert code == 0
    assert doc["reports"][0]["result"]["torsion"] == [3]


def test_empty_session():
    code, doc = json_run("")
    assert code == 0 and doc["reports"] == []
    code, out, _ = run_cli([], "")
    assert code == 0 and out == ""


def test_refutation_exit_code():
    code, doc = json_run("reduce (x^2) in (x, y)^2 bound 6;")
    assert code == 2
    assert doc["reports"][0]["status"] == "bound-exhausted"
    code, doc = json_run("situation E = builtin:truncated(3); prozero gw(E) upto s=2 r=3;")
    assert code == 0


def test_input_error_exit_code():
    code, out, err = run_cli(["--json"], "ring A = QQ[x]")
    assert code == 3
    doc = json.loads(out)
    assert doc["error"]["kind"] == "syntax"
    assert "end-of-input" in err
    code, _, err = run_cli([], "gw E;")
    assert code == 3 and "unresolved" in err
    code, _, _ = run_cli([str(ROOT / "no-such-file.pk")])
    assert code == 3


def test_rejected_situation_skips_dependents():
    text = ("ring A = QQ[x,y]; ring B = QQ[x,y]/(x);"
            "hom f : A -> B = {x -> x, y -> y} gens (1);"
            "situation E = excision(f, ideal(x)); gw E;")
    code, doc = json_run(text)
    assert code == 2
    assert [r["status"] for r in doc["reports"]] == ["rejected", "skipped"]


def test_budget_flag_and_environment(monkeypatch):
    text = "situation E = builtin:swan(5); gw E;"
    code, doc = json_run(text, "--budget-groebner", "1")
    assert code == 2 and doc["reports"][0]["status"] == "budget"
    monkeypatch.setenv("PROK_BUDGET_GROEBNER", "1")
    code, doc = json_run(text)
    assert code == 2
    monkeypatch.setenv("PROK_BUDGET_GROEBNER", "many")
    code, _, _ = run_cli([], text)
    assert code == 3


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(["--json", "--out", str(target)], "snf [[2, 4], [6, 8]];")
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["reports"][0]["result"]["diagonal"] == ["2", "4"]


def test_snf_command_certificate():
    code, doc = json_run("snf [[2, 0], [0, 3]]; snf [[2, 4]] over GF(2);")
    first, second = doc["reports"]
    assert first["result"]["cokernel"] == {"rank": 0, "torsion": [6]}
    assert first["certificates"]["unimodular_factorization"] is True
    assert second["result"]["diagonal"] == ["0"]


def test_provenance_fields():
    code, doc = json_run("klow E degree 0; klow E degree 1; criteria E upto s=2 r=6;",
                         "--builtin", "truncated(3)")
    provs = [r["provenance"] for r in doc["reports"]]
    assert provs == ["cited-rule", "computed", "mixed"]


def test_text_output_mentions_every_command():
    code, out, _ = run_cli(["--builtin", "node"], "gw E; conductor E;")
    assert code == 0
    assert "[1] gw E;" in out and "[2] conductor E;" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "prok", "--json", "--no-timing"],
                          input="snf [[3]];", capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["reports"][0]["result"]["diagonal"] == ["3"]


# reports ------------------------------------------------------------------------

@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_reports_validate_against_schema(path):
    code, out, _ = run_cli(["--json", str(path)])
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["exit_code"] == code


def test_error_document_validates():
    _, out, _ = run_cli(["--json"], "gw E;")
    jsonschema.validate(json.loads(out), SCHEMA)


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_replay_is_deterministic(path):
    first = run_cli(["--json", "--no-timing", str(path)])
    second = run_cli(["--json", "--no-timing", str(path)])
    assert first == second


def test_library_run_matches_cli():
    session = parse_session(CUSP)
    reports, code = run(session, Options())
    assert code == 0
    assert reports[0].result["dimension"] == 1
