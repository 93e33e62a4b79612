import json

import pytest

from strengthlab.cli import COMMANDS, main
from strengthlab.errors import IdealSyntaxError, NonHomogeneous, UnknownVariable
from strengthlab.io import format_ideal, parse_ideal_file, parse_ideal_text, parse_polynomial
from strengthlab.poly import Ring

from conftest import F3


def test_parse_examples():
    I = parse_ideal_text("field F 3\nvars x1 x2\nx1^2 + x2^2\n")
    assert I.ring.field == F3 and len(I.generators) == 1
    x1, x2 = I.ring.gens()
    assert I.generators[0] == x1**2 + x2**2


def test_parse_errors():
    with pytest.raises(NonHomogeneous) as e:
        parse_ideal_text("field Q\nvars x1 x2\n# comment\nx1 + 1\n")
    assert e.value.line == 4
    with pytest.raises(UnknownVariable):
        parse_ideal_text("field Q\nvars x1\nx1*y\n")
    with pytest.raises(IdealSyntaxError) as e:
        parse_ideal_text("field Q\nvars x1\nx1 ** \n")
    assert e.value.line == 3
    with pytest.raises(IdealSyntaxError):
        parse_ideal_text("vars x1\n")


def test_parse_polynomial_forms():
    R = Ring(F3, 2)
    x1, x2 = R.gens()
    assert parse_polynomial("2*x1*x2 - x2^2", R) == 2 * x1 * x2 - x2**2
    assert parse_polynomial("1/2*x1", R) == 2 * x1
    assert parse_polynomial("-x1", R) == -x1


def test_corpus_round_trip(corpus):
    files = sorted(corpus.glob("*.ideal"))
    assert len(files) >= 10
    for path in files:
        I = parse_ideal_file(path)
        J = parse_ideal_text(format_ideal(I, "round trip"))
        assert J.ring == I.ring and J.generators == I.generators


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_ci_test_golden(capsys, corpus):
    code, out = run(capsys, "ci-test", "--input", str(corpus / "twisted_cubic.ideal"), "--json")
    assert code == 0
    assert out.strip() == '{"codim":2,"mu":3,"is_ci":false}'


def test_unit_ideal_exit_one(capsys, corpus):
    code, out = run_json(capsys, "dim", "--input", str(corpus / "unit.ideal"))
    assert code == 1 and out["error"]["type"] == "UnitIdeal"


@pytest.mark.parametrize("command", COMMANDS)
def test_every_command_runs(capsys, corpus, command):
    args = [command]
    if command == "verify-lemma":
        args += ["--trials", "3"]
    elif command == "gen":
        args += ["--kind", "Fermat"]
    elif command in ("strength", "collective-strength", "reduce-gens"):
        args += ["--input", str(corpus / "quadric_zoo_f3.ideal")]
    else:
        args += ["--input", str(corpus / "twisted_cubic.ideal")]
    if command == "member":
        args += ["--poly", "x0*x3^2 - x1*x2*x3"]
    code, out = run_json(capsys, *args)
    assert code == 0, out
    assert "error" not in out
    code, text = run(capsys, *args)
    assert code == 0 and text.strip()


def test_command_outputs(capsys, corpus):
    tc = str(corpus / "twisted_cubic.ideal")
    _, out = run_json(capsys, "member", "--input", tc, "--poly", "x0*x3^2 - x1*x2*x3")
    assert out == {"member": True, "normal_form": "0"}
    _, out = run_json(capsys, "mingens", "--input", tc)
    assert out["mu"] == 3 and out["nu"] == 6
    _, out = run_json(capsys, "sing-codim", "--input", str(corpus / "hyperplane.ideal"))
    assert out["sing_codim"] == "infinity"
    _, out = run_json(capsys, "strength", "--input", str(corpus / "quadric_cone.ideal"))
    assert out["lower"] == out["upper"] == 1 and len(out["witness"]) == 2
    _, out = run_json(capsys, "sing-ideal", "--input", tc, "--c", "1")
    assert "warning" in out
    _, out = run_json(capsys, "reduce-gens", "--input", str(corpus / "lemma_prefix_f3.ideal"))
    assert [s["upper"] for s in out["strengths"]] == [1, 0]


def test_error_paths(capsys, corpus, tmp_path):
    code, out = run_json(capsys, "nonsense")
    assert code == 1 and out["error"]["type"] == "UsageError"
    code, out = run_json(capsys, "dim")
    assert code == 1 and "error" in out
    code, out = run_json(capsys, "dim", "--input", str(tmp_path / "missing.ideal"))
    assert code == 1 and "error" in out
    bad = tmp_path / "bad.ideal"
    bad.write_text("field Q\nvars x1\nx1 + 1\n")
    code, out = run_json(capsys, "gb", "--input", str(bad))
    assert code == 1 and out["error"]["type"] == "NonHomogeneous"
    code, out = run_json(capsys, "strength", "--input", str(corpus / "fermat_cubic_4.ideal"), "--method", "search")
    assert code == 1 and out["error"]["type"] == "UnsupportedField"


def test_budget_exit_two(capsys, corpus, monkeypatch):
    zoo = str(corpus / "quadric_zoo_f5.ideal")
    code, out = run_json(capsys, "strength", "--input", zoo, "--method", "search", "--budget", "5")
    assert code == 2 and out["error"]["type"] == "SearchSpaceTooLarge"
    monkeypatch.setenv("STRENGTHLAB_BUDGET", "5")
    code, out = run_json(capsys, "strength", "--input", zoo, "--method", "search")
    assert code == 2


def test_gen_text_reparses(capsys, tmp_path):
    code, text = run(capsys, "gen", "--kind", "CompleteIntersection", "--params", "p=Q,c=2,d=2", "--seed", "3")
    assert code == 0
    path = tmp_path / "g.ideal"
    path.write_text(text)
    I = parse_ideal_file(path)
    assert len(I.generators) == 2
    code, out = run_json(capsys, "ci-test", "--input", str(path))
    assert out["is_ci"] is True


def test_repeated_runs_identical(capsys, corpus):
    args = ["report", "--input", str(corpus / "fermat_quartic_5.ideal"), "--json"]
    assert run(capsys, *args) == run(capsys, *args)
    args = ["verify-lemma", "--trials", "5", "--seed", "11", "--json"]
    assert run(capsys, *args) == run(capsys, *args)
