import subprocess
import sys

import pytest

from pdfa import parse_dfa, render_dfa, transition_counts
from pdfa.bounds import BoundCheckReport, BoundId, Relation
from pdfa.cli import main
from pdfa.witnesses import unary_cycle, union_symbol_witness


@pytest.fixture
def witness_file(tmp_path):
    def save(dfa, name="input.pdfa"):
        path = tmp_path / name
        path.write_text(render_dfa(dfa), encoding="utf-8")
        return str(path)

    return save


def test_analyze_prints_complexity_block(witness_file, capsys):
    path = witness_file(union_symbol_witness(3, 2))
    assert main(["analyze", path]) == 0
    assert capsys.readouterr().out == "sc=3\ntc=5\ntc[b]=2\ntc[c]=3\nclasses=4\n"


def test_analyze_rejects_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.pdfa"
    bad.write_text("alphabet a\nstates x\n", encoding="utf-8")
    assert main(["analyze", str(bad)]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "line 2" in err


def test_analyze_missing_file(capsys):
    assert main(["analyze", "/nonexistent/there.pdfa"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_analyze_writes_dot(witness_file, tmp_path, capsys):
    path = witness_file(unary_cycle(3))
    dot = tmp_path / "out.dot"
    assert main(["analyze", path, "--dot", str(dot)]) == 0
    capsys.readouterr()
    assert "doublecircle" in dot.read_text(encoding="utf-8")


def test_union_command_reports_both_layers(witness_file, tmp_path, capsys):
    a = witness_file(unary_cycle(2), "a.pdfa")
    b = witness_file(unary_cycle(3), "b.pdfa")
    out = tmp_path / "u.pdfa"
    min_out = tmp_path / "m.pdfa"
    rc = main(["union", a, b, "--out", str(out), "--min-out", str(min_out)])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("constructed states=6 tc=6")
    assert lines[1].startswith("minimized states=6 tc=6")
    minimized = parse_dfa(min_out.read_text(encoding="utf-8"))
    assert minimized.state_count == 6
    assert minimized.accepting == frozenset({0, 2, 3, 4})
    constructed = parse_dfa(out.read_text(encoding="utf-8"))
    assert constructed.state_count == 6


def test_intersect_command(witness_file, capsys):
    a = witness_file(unary_cycle(2), "a.pdfa")
    b = witness_file(unary_cycle(3), "b.pdfa")
    assert main(["intersect", a, b]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "constructed states=6 tc=6 tc[b]=6"
    assert lines[1] == "minimized states=6 tc=6 tc[b]=6"


def test_complement_command(witness_file, capsys):
    path = witness_file(union_symbol_witness(3, 1))
    assert main(["complement", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "constructed states=4 tc=8 tc[b]=4 tc[c]=4"


def test_union_requires_matching_alphabets(witness_file, capsys):
    a = witness_file(unary_cycle(2), "a.pdfa")
    b = witness_file(union_symbol_witness(3, 1), "b.pdfa")
    assert main(["union", a, b]) == 2
    assert "alphabet" in capsys.readouterr().err


def test_witness_prints_pdfa_text(capsys):
    assert main(["witness", "union-symbol", "--n", "3", "--k", "1"]) == 0
    out = capsys.readouterr().out
    assert parse_dfa(out) == union_symbol_witness(3, 1)


def test_witness_file_output(tmp_path, capsys):
    out = tmp_path / "w.pdfa"
    rc = main(["witness", "unary-singleton", "--n", "4", "--out", str(out)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    d = parse_dfa(out.read_text(encoding="utf-8"))
    assert transition_counts(d).total == 4


def test_witness_multi_loop_flags(capsys):
    rc = main(["witness", "union-multi", "--n", "4", "--loop", "a=1", "--loop", "b=3"])
    assert rc == 0
    d = parse_dfa(capsys.readouterr().out)
    assert transition_counts(d).per_symbol == {"a": 1, "b": 3, "c": 4}


def test_witness_rejects_out_of_range_parameters(capsys):
    assert main(["witness", "union-symbol", "--n", "3", "--k", "3"]) == 2
    assert "k" in capsys.readouterr().err


def test_witness_requires_its_parameters(capsys):
    assert main(["witness", "union-symbol", "--k", "1"]) == 2
    assert "--n" in capsys.readouterr().err


def test_witness_bad_loop_syntax(capsys):
    assert main(["witness", "union-multi", "--n", "3", "--loop", "ab3"]) == 2
    assert "SYMBOL=COUNT" in capsys.readouterr().err


def test_check_single_bound_line_format(capsys):
    rc = main([
        "check", "union-symbol-tight",
        "--n1", "2", "--n2", "3", "--k1", "1", "--k2", "2",
        "--format", "lines",
    ])
    assert rc == 0
    out = capsys.readouterr().out
    assert out == (
        "union-symbol-tight n1=2 n2=3 k1=1 k2=2 formula=8 measured=8 verdict=EQUAL\n"
    )


def test_check_table_format(capsys):
    rc = main(["check", "intersection-tight", "--n1", "2", "--n2", "3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("BOUND")
    assert "1 checks: 1 equal" in out


def test_check_rejects_non_coprime_input(capsys):
    assert main(["check", "union-symbol-tight", "--n1", "4", "--n2", "6"]) == 2
    assert "gcd" in capsys.readouterr().err


def test_check_requires_bound_or_all(capsys):
    assert main(["check"]) == 2
    assert "--all" in capsys.readouterr().err


def test_check_all_small_grid(capsys):
    rc = main(["check", "--all", "--max-n", "3", "--pairs", "5", "--format", "lines"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "verdict=VIOLATION" not in out
    # Same invocation, same bytes.
    assert main(["check", "--all", "--max-n", "3", "--pairs", "5", "--format", "lines"]) == 0
    assert capsys.readouterr().out == out


def test_check_exit_code_on_violation(monkeypatch, capsys):
    import pdfa.cli as cli_mod

    fake = BoundCheckReport(
        BoundId.UNION_TOTAL_UPPER, {"pairs": 1}, 4, 9, Relation.VIOLATION, details="boom"
    )
    monkeypatch.setattr(cli_mod, "run_suite", lambda **kw: [fake])
    assert main(["check", "--all"]) == 3
    assert "VIOLATION" in capsys.readouterr().out


def test_oracle_min_transitions(witness_file, tmp_path, capsys):
    path = witness_file(union_symbol_witness(3, 1))
    out = tmp_path / "wit.pdfa"
    rc = main(["oracle", "min-transitions", path, "--out", str(out)])
    assert rc == 0
    assert capsys.readouterr().out == "min_total=4\nmin[b]=1\nmin[c]=3\n"
    witness = parse_dfa(out.read_text(encoding="utf-8"))
    assert transition_counts(witness).total == 4


def test_oracle_min_transitions_rejects_small_cap(witness_file, capsys):
    path = witness_file(union_symbol_witness(3, 1))
    assert main(["oracle", "min-transitions", path, "--max-states", "2"]) == 2
    assert "state complexity" in capsys.readouterr().err


def test_oracle_verify_lemma1_pass(capsys):
    rc = main(["oracle", "verify-lemma1", "--max-states", "2", "--alphabet", "a"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out == (
        "verify-lemma1 max_states=2 alphabet=a dfas=48 languages=8 "
        "counterexamples=0 verdict=pass\n"
    )


def test_oracle_verify_lemma1_failure_exit_code(monkeypatch, capsys):
    import pdfa.cli as cli_mod
    from pdfa.oracle import Lemma1Report
    from pdfa import Alphabet

    fake = Lemma1Report(1, Alphabet("a"), 4, 2, ("minimize() changed the language of:\nX",))
    monkeypatch.setattr(cli_mod, "verify_lemma1", lambda *a, **kw: fake)
    assert main(["oracle", "verify-lemma1", "--max-states", "1", "--alphabet", "a"]) == 1
    out = capsys.readouterr().out
    assert "verdict=fail" in out
    assert "changed the language" in out


def test_oracle_equiv(witness_file, capsys):
    a = witness_file(unary_cycle(2), "a.pdfa")
    b = witness_file(unary_cycle(2), "b.pdfa")
    c = witness_file(unary_cycle(3), "c.pdfa")
    assert main(["oracle", "equiv", a, b]) == 0
    assert capsys.readouterr().out == "equivalent\n"
    assert main(["oracle", "equiv", a, c]) == 1
    assert capsys.readouterr().out == "not equivalent\n"


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "pdfa.cli", "witness", "epsilon"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "alphabet a b\nstates 1\nstart 0\naccept 0\n"
