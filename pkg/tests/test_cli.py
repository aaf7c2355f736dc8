"""The command-line interface: outputs, formats, and exit codes."""

import json

from hybridhopf import cli
from hybridhopf.hybrid import BasisIndex
from hybridhopf.scalar import B
from hybridhopf.structure import StructureMaps, build_structure
from hybridhopf.tensor import Tensor2


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpressionCommands:
    def test_mul(self, capsys):
        code, out, _ = run_cli(capsys, "mul", "g", "nu")
        assert code == 0
        assert out == "g + mu\n"

    def test_delta_variant_b(self, capsys):
        code, out, _ = run_cli(capsys, "delta", "mu", "--variant", "b")
        assert code == 0
        assert out == "(1/(2*b)) * mu⊗mu\n"

    def test_counit(self, capsys):
        code, out, _ = run_cli(capsys, "counit", "nu", "--variant", "b")
        assert (code, out) == (0, "-2*i*b\n")

    def test_antipode(self, capsys):
        code, out, _ = run_cli(capsys, "antipode", "mu")
        assert out == "2*b^2*g + 2*b^2*mu + 2*i*b^2*nu\n"

    def test_eps_maps(self, capsys):
        code, out, _ = run_cli(capsys, "et", "nu")
        assert out == "i*b + (b - i)*mu + (i*b + 1)*nu\n"
        code, out, _ = run_cli(capsys, "es", "mu")
        assert out == "b + i*b*mu - b*nu\n"

    def test_eval_numeric(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "(1/b)*mu", "--b", "2")
        assert (code, out) == (0, "1/2*mu\n")

    def test_eval_round_trips_its_own_output(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "2*b^2*g + 2*b^2*mu + 2*i*b^2*nu")
        code2, out2, _ = run_cli(capsys, "eval", out.strip())
        assert out2 == out

    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "table")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 5
        assert lines[2].startswith("g ")
        assert "1 - nu" in lines[2]
        assert "-g - mu" in lines[4]


class TestCheckCommand:
    def test_all_pass_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--variant", "a")
        assert code == 0
        assert out.endswith("116 checks: 116 passed, 0 failed (variant a, b = symbolic)\n")

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--variant", "b", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert isinstance(payload, list)
        summary = payload[-1]
        assert summary == {
            "total": 116,
            "passed": 116,
            "failed": 0,
            "variant": "b",
            "b_mode": "symbolic",
        }
        for entry in payload[:-1]:
            assert set(entry) == {"name", "inputs", "status", "lhs", "rhs", "residual"}
            assert entry["status"] == "pass"

    def test_output_is_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "check", "--format", "json")
        _, second, _ = run_cli(capsys, "check", "--format", "json")
        assert first == second

    def test_numeric_mode(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--b", "3/5")
        assert code == 0
        assert "b = 3/5" in out

    def test_env_var_sets_default_format(self, capsys, monkeypatch):
        monkeypatch.setenv("HYBRIDHOPF_FORMAT", "json")
        code, out, _ = run_cli(capsys, "check", "--variant", "a")
        json.loads(out)
        assert code == 0

    def test_corrupted_table_exits_one(self, capsys, monkeypatch):
        def corrupted(variant):
            maps = build_structure(variant)
            bad = maps.delta[BasisIndex.G] + Tensor2.from_terms(
                [(BasisIndex.NU, BasisIndex.NU, 2 * B)]
            )
            delta = list(maps.delta)
            delta[BasisIndex.G] = bad
            return StructureMaps(maps.variant, tuple(delta), maps.counit, maps.antipode)

        monkeypatch.setattr("hybridhopf.checker.build_structure", corrupted)
        code, out, _ = run_cli(capsys, "check")
        assert code == 1
        assert "FAIL" in out
        assert "residual" in out


class TestIntegralsCommand:
    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "integrals", "--side", "left", "--source", "paper")
        assert code == 0
        assert "left integral space (variant a, paper-system), dimension 2:" in out
        assert "1 + (i*b + 1)/b*mu - nu" in out

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "integrals", "--side", "right", "--format", "json")
        payload = json.loads(out)
        assert payload["dimension"] == 2
        assert payload["side"] == "right"
        assert payload["denominators_vanish_only_at_zero"] is True
        assert len(payload["basis"]) == 2
        assert all(len(vec) == 4 for vec in payload["basis"])

    def test_paper_system_for_variant_b_is_an_error(self, capsys):
        code, _, err = run_cli(capsys, "integrals", "--source", "paper", "--variant", "b")
        assert code == 2
        assert "variant" in err.lower()


class TestErrorPaths:
    def test_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "2 + nosuch")
        assert code == 2
        assert "position 4" in err

    def test_zero_parameter(self, capsys):
        code, _, err = run_cli(capsys, "eval", "(1/b)*mu", "--b", "0")
        assert code == 2
        assert "nonzero" in err

    def test_division_by_zero(self, capsys):
        code, _, err = run_cli(capsys, "eval", "1/(b - b)")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 2

    def test_bad_b_literal(self, capsys):
        code, _, err = run_cli(capsys, "check", "--b", "b")
        assert code == 2

    def test_pole_in_numeric_mode(self, capsys):
        # eps(g) = 1/b is finite for nonzero b; a pole needs an expression
        code, _, err = run_cli(capsys, "eval", "(1/(b - 2))*mu", "--b", "2")
        assert code == 2
        assert "vanishes" in err
