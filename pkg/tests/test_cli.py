import io
import json

import pytest
from hypothesis import given, strategies as st

from quadchar2.cli import EXIT_LIBRARY, EXIT_OK, EXIT_REFUTED, EXIT_USAGE, Options, execute, main
from quadchar2.script import Command, Let, PfisterExpr, ScriptError, parse, print_node


def run(text, **opts):
    out = io.StringIO()
    status = execute(parse(text), Options(**opts), out)
    return status, out.getvalue()


def test_parse_examples():
    (let,) = parse("let F = GF(2)(t)").statements
    assert isinstance(let, Let) and let.name == "F"
    (cmd,) = parse("split [1/t, 1+t)").statements
    assert isinstance(cmd, Command) and cmd.verb == "split"
    (pf,) = parse("let p = pf<<t; 1]]").statements
    assert isinstance(pf.expr, PfisterExpr) and len(pf.expr.slots) == 1


@pytest.mark.parametrize(
    "text, message",
    [
        ("split [1/t, 1+t", "expected"),
        ("arf [t, 1)", "type mismatch"),
        ("arf Q[1, u]", "unbound name"),
        ("let x = t\nsplit x", "type mismatch"),
        ("let F = GF(6)", "power of 2"),
    ],
)
def test_parse_errors_have_positions(text, message):
    with pytest.raises(ScriptError) as e:
        parse(text)
    assert message in str(e.value)
    assert e.value.line >= 1 and e.value.col >= 1


SCRIPT = """\
# a small session
let K = GF(2)(t).adj_sqrt(t)
let phi = perp(Q[1, t], Q[t, sqrt#1])
transfer bil<sqrt#1>
transfer phi
frob [sqrt#1, t)
let G = GF(4)(t)
let q = pf<<w*t, 1/t; 1+w]]
hyp perp(q, q)
eq [1/t, 1+t) + [1/t, 1+t), [t, t^2)
"""


def test_round_trip():
    s = parse(SCRIPT)
    assert parse(print_node(s)) == s


@st.composite
def elem_texts(draw, depth=2):
    if depth == 0 or draw(st.booleans()):
        return draw(st.sampled_from(["0", "1", "t", "w"]))
    op = draw(st.sampled_from(["+", "*", "/"]))
    return f"({draw(elem_texts(depth=depth - 1))}) {op} ({draw(elem_texts(depth=depth - 1))})"


@given(elem_texts(), elem_texts(), elem_texts())
def test_round_trip_generated(a, b, c):
    text = f"let G = GF(4)(t)\nsplit [{a}, {b}) + [{c}, t)\narf perp(Q[{a}, {b}], scale(t, Q[1, {c}]))"
    s = parse(text)
    assert parse(print_node(s)) == s


def test_execute_examples():
    status, out = run("let F = GF(2)\narf Q[1, 1]")
    assert status == EXIT_OK and "nontrivial (rep 1)" in out
    status, out = run("inv [1/t,1+t)")
    assert "{t: 1, t + 1: 1, inf: 0}" in out


def test_transfer_output():
    status, out = run("let K = GF(2)(t).adj_sqrt(t)\ntransfer bil<sqrt#1>\ntransfer bil<1 + sqrt#1>")
    assert status == EXIT_OK
    assert "bil<1, t>" in out and "bil<1, t + 1>" in out


def test_output_parses_back():
    status, out = run("let K = GF(2)(t).adj_sqrt(t)\ntransfer perp(Q[1, t], Q[t, sqrt#1])")
    form = out.split(": ", 1)[1].strip()
    parse(f"arf {form}")


def test_library_error_keeps_going():
    status, out = run("e2 Q[1, t]\nsplit [t, t)", json=True)
    doc = json.loads(out)
    assert status == EXIT_LIBRARY
    assert [r["verdict"] for r in doc["results"]] == ["error", "yes"]
    assert doc["results"][0]["index"] == 0


def test_json_and_human_agree():
    _, human = run("split [1/t, 1+t)\niso Q[1, t]")
    _, js = run("split [1/t, 1+t)\niso Q[1, t]", json=True)
    for r in json.loads(js)["results"]:
        assert r["output"] in human


def test_verify_json_deterministic():
    a = run("verify lemma-2.1 --trials 5 --seed 7", json=True)
    b = run("verify lemma-2.1 --trials 5 --seed 7", json=True)
    assert a == b and a[0] == EXIT_OK
    doc = json.loads(a[1])
    assert doc["statement"] == "lemma-2.1" and doc["seed"] == 7 and len(doc["trials"]) == 5


def test_verify_unknown_statement():
    status, out = run("verify nope")
    assert status == EXIT_USAGE and "unknown statement" in out


def test_refutation_exit_code(monkeypatch):
    from quadchar2 import cli
    from quadchar2.theorems import TrialReport

    monkeypatch.setattr(cli, "run_suite", lambda s, n, seed: [TrialReport(s, {}, "refuted", "planted failure")])
    status, _ = run("verify lemma-2.1 --trials 1")
    assert status == EXIT_REFUTED


def test_main_inline_and_file(tmp_path, capsys):
    assert main(["split", "[1/t, 1+t)"]) == EXIT_OK
    assert "nonsplit" in capsys.readouterr().out
    path = tmp_path / "s.q"
    path.write_text("let F = GF(2)\narf Q[0, 0]\n")
    assert main([str(path)]) == EXIT_OK
    assert "trivial" in capsys.readouterr().out


def test_main_verify_flags(capsys):
    assert main(["verify", "lemma-2.3", "--trials", "3", "--seed", "2"]) == EXIT_OK
    assert "3 verified" in capsys.readouterr().out


def test_main_parse_error(capsys):
    assert main(["split", "[1/t"]) == EXIT_USAGE
    assert "parse error" in capsys.readouterr().err


def test_main_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("QUADCHAR2_BUDGET", "x")
    assert main(["split", "[t, t)"]) == EXIT_USAGE
    monkeypatch.setenv("QUADCHAR2_BUDGET", "3")
    assert main(["iso", "Q[1, t]"]) == EXIT_OK


def test_main_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("split [1/t, t)\n"))
    assert main([]) == EXIT_OK
    assert "split" in capsys.readouterr().out


def test_timeout_reports_unknown():
    status, out = run("verify prop-3.1-planted --trials 50", timeout_ms=5)
    assert status == EXIT_OK and "timed out" in out
