"""
Command-line behavior through run() and the entry point
"""

import json

import pytest

import nonassoc_toolkit
from src.cli import run
from src.cli import solve_commands
from src.nonassoc.algebras import sample_algebra
from src.nonassoc.formats import render_algebra, render_identity
from src.nonassoc.identities import POISSON, TRANSPOSED_LEIBNIZ
from src.nonassoc.superalgebra import skew_sp24, sp_family


@pytest.fixture
def files(write_file):
    """Input files shared by the command tests"""
    return {
        "jacobi": write_file("jacobi.id", "named: jacobi\n"),
        "associativity": write_file("assoc.id", "named: associativity\n"),
        "flexibility": write_file("flex.id", "named: flexibility\n"),
        "poisson": write_file("poisson.id", render_identity(POISSON)),
        "lambda": write_file("poisson.lambda", "lambda: 4 -4 0 4 2 0 2 4 -2 2 -2 -2\n"),
        "law": write_file("tl.law", "named: transposed_leibniz\n"),
        "heisenberg": write_file("h3.alg", render_algebra(sample_algebra("heisenberg"))),
        "nonflexible": write_file("nonflex.alg", render_algebra(sample_algebra("nonflexible"))),
        "sp24": write_file("sp24.alg", render_algebra(sp_family("SP2,4", 2, 7))),
        "skew": write_file("skew.alg", render_algebra(skew_sp24(2, 7))),
        "identity3": write_file("id3.endo", "1 0 0\n0 1 0\n0 0 1\n"),
        "broken": write_file("broken.id", "left: 1 2 3\nright: 0 0 0 0 0 0\n"),
    }


class TestIdentityCommands:
    def test_polarize(self, config, files):
        report = run(["polarize", files["jacobi"]], config)
        assert report.exit_code == 0
        assert report.lines[0] == "lambda: 0 0 0 0 0 0 0 0 0 4 -4 -4"

    def test_depolarize(self, config, files):
        report = run(["depolarize", files["lambda"]], config)
        assert report.lines == [str(POISSON)]

    def test_encode_and_decode(self, config, files):
        assert run(["encode-dist", files["law"]], config).lines == [str(TRANSPOSED_LEIBNIZ)]
        report = run(["decode-dist", files["jacobi"]], config)
        assert report.lines[0].startswith("❌ NOT DISTRIBUTIVE")
        assert report.lines[1] == "mismatched positions: 1 2 3 4 5 6"

    def test_implies(self, config, files):
        assert run(["implies", files["jacobi"], files["jacobi"]], config).lines[0] == "✅ IMPLIED"
        report = run(["implies", files["jacobi"], files["associativity"]], config)
        assert report.lines[0] == "❌ NO SOLUTION"
        assert report.result["certificate"] is not None

    def test_consequences(self, config, files):
        report = run(["consequences", files["poisson"]], config)
        assert report.lines[0] == "dim 3"
        assert report.result["dimension"] == 3

    def test_module_rank(self, config):
        report = run(["module-rank", "1", "0", "0", "0", "0", "0"], config)
        assert report.lines == ["rank 6", "image columns: 1 2 3 4 5 6"]
        report = run(["module-rank", "1,1,1,1,1,1"], config)
        assert report.lines == ["rank 1", "image columns: 1"]

    def test_module_rank_needs_six_values(self, config):
        assert run(["module-rank", "1", "2"], config).exit_code == 2

    def test_rank_table(self, config):
        report = run(["rank-table"], config)
        assert report.lines
        assert all(line.startswith("✅") for line in report.lines)


class TestSolveCommands:
    def test_poisson(self, config):
        report = run(["solve", "poisson"], config)
        assert report.exit_code == 0
        assert "3 1 0 -1 -1 1 | -3 0 0 0 0 0" in report.lines
        assert "a = (-1, -1/3, 0)" in report.lines

    def test_transposed_has_no_solution(self, config):
        report = run(["solve", "transposed"], config)
        assert report.exit_code == 0
        assert "❌ NO SOLUTION" in report.lines
        assert report.result["solved"] is False

    def test_cyclic(self, config):
        report = run(["solve", "cyclic"], config)
        assert report.lines[0].startswith("law: ")
        assert "witness:" in report.lines


class TestOperadCommands:
    def test_dim3(self, config, files):
        assert run(["operad", "dim3", files["jacobi"]], config).lines == ["11"]
        assert run(["operad", "dim3", files["poisson"]], config).lines == ["6"]

    def test_dual(self, config, files):
        report = run(["operad", "dual", files["jacobi"]], config)
        assert report.lines[:2] == ["dim R^⊥ = 11", "dim dual(3) = 1"]

    def test_free_dims(self, config):
        assert run(["operad", "free-dims", "--max", "3"], config).lines == ["1 1 1 2"]
        assert run(["operad", "free-dims"], config).lines == ["1 1 1 2 5"]
        assert run(["operad", "free-dims", "--max", "6"], config).exit_code == 2

    def test_selfdual_note(self, config, files):
        report = run(["operad", "selfdual", files["jacobi"]], config)
        assert report.lines[0].startswith("self-dual: no")
        assert report.result == {"self_dual": False, "relations": 1}


class TestAlgebraCommands:
    def test_verify_plain(self, config, files):
        assert run(["verify", files["heisenberg"], files["jacobi"]], config).lines == ["PASS"]
        report = run(["verify", files["nonflexible"], files["flexibility"]], config)
        assert report.lines == ["FAIL at (1,1,1) residual -2 0"]
        assert report.result["mode"] == "plain"

    def test_verify_graded_uses_the_koszul_lift(self, config, files):
        report = run(["verify", files["sp24"], files["poisson"]], config)
        assert report.result["mode"] == "signed"
        assert report.lines == ["PASS"]
        assert run(["verify", files["skew"], files["poisson"]], config).result["passed"] is False

    def test_poly_check(self, config):
        report = run(["poly-check", "transposed_leibniz", "--degree", "3", "--trials", "2"], config)
        assert report.lines == ["PASS (66 triples)"]
        report = run(["poly-check", "leibniz", "--degree", "3", "--trials", "0"], config)
        assert report.result["passed"] is False

    def test_poly_check_unknown_relation(self, config):
        assert run(["poly-check", "no_such_law"], config).exit_code == 2

    def test_power(self, config, files):
        report = run(["power", files["skew"], "--element=1,1", "--n", "3"], config)
        assert report.lines == ["❌ 2 distinct value(s) of x^3", "0 -14", "0 14"]
        report = run(["power", files["sp24"], "--element=1,1"], config)
        assert report.result["associates"] is True
        assert report.result["values"] == [["46", "26"]]

    def test_power_out_of_range(self, config, files):
        assert run(["power", files["skew"], "--element=1,1", "--n", "7"], config).exit_code == 2


class TestSuperAndHomLie:
    def test_conditions(self, config):
        report = run(["super", "conditions"], config)
        assert len(report.result["conditions"]) == 5
        assert len(report.lines) == 6

    def test_super_verify(self, config, files):
        report = run(["super", "verify", files["skew"]], config)
        assert report.result["super_poisson"]["passed"] is False
        assert report.result["superflexibility"]["passed"] is True

    def test_super_verify_needs_grading(self, config, files):
        assert run(["super", "verify", files["heisenberg"]], config).exit_code == 2

    def test_axioms(self, config):
        report = run(["super", "axioms"], config)
        assert "  terms off the Koszul rule: 3" in report.lines
        assert "  terms off the Koszul rule: 3 9 10 11 12" in report.lines

    def test_homlie(self, config, files):
        assert run(["homlie", "gv", files["heisenberg"]], config).lines[0] == "dim G(V) = 6"
        report = run(["homlie", "check", files["heisenberg"], files["identity3"]], config)
        assert report.lines[-1] == "f is not in G(V): e1•e2 != e2•e1"
        assert report.result["antiassociator"] is None


class TestErrors:
    def test_parse_error_exit_code(self, config, files):
        report = run(["polarize", files["broken"]], config)
        assert report.exit_code == 2
        assert report.lines[0].startswith(f"❌ {files['broken']}:1:12: ")
        assert report.result["error_code"] == "PARSE_ERROR"

    def test_missing_file(self, config, tmp_path):
        assert run(["polarize", str(tmp_path / "absent.id")], config).exit_code == 2

    def test_internal_fault(self, config, monkeypatch):
        def broken():
            raise RuntimeError("boom")

        monkeypatch.setattr(solve_commands, "solve_poisson", broken)
        report = run(["solve", "poisson"], config)
        assert report.exit_code == 1
        assert report.result["error_code"] == "RuntimeError"

    def test_usage_errors(self, config):
        assert run(["no-such-command"], config).exit_code == 2
        assert run([], config).exit_code == 0


class TestEntryPoint:
    def test_json_output(self, capsys, tmp_path):
        env_file = str(tmp_path / "missing.env")
        with pytest.raises(SystemExit) as info:
            nonassoc_toolkit.main(["--env-file", env_file, "--format", "json", "solve", "transposed"])
        assert info.value.code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["command"] == "solve transposed"
        assert payload["result"]["solved"] is False

    def test_text_output_and_exit_code(self, capsys, write_file, tmp_path):
        broken = write_file("bad.alg", "dim 2\ne 1 3 = 0 1\n")
        identity = write_file("j.id", "named: jacobi\n")
        env_file = str(tmp_path / "missing.env")
        with pytest.raises(SystemExit) as info:
            nonassoc_toolkit.main(["--env-file", env_file, "verify", broken, identity])
        assert info.value.code == 2
        assert "❌" in capsys.readouterr().out

    def test_format_from_configuration(self, capsys, write_file):
        env_file = write_file("json.env", "OUTPUT_FORMAT=json\n")
        with pytest.raises(SystemExit):
            nonassoc_toolkit.main(["--env-file", env_file, "operad", "free-dims", "--max", "2"])
        assert json.loads(capsys.readouterr().out)["result"]["dimensions"] == [1, 1, 1]
