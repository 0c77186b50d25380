import json

import pytest

from ulamdist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSequence:
    def test_csv_exact_bytes(self, capsys):
        code, out, _ = run(capsys, "sequence", "--class", "u", "--n", "4")
        assert code == 0
        assert out == "n,k,count\n4,1,1\n4,2,13\n4,3,9\n4,4,1\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "sequence", "--class", "u", "--n", "4", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data == {
            "class": "all_permutations",
            "n": 4,
            "counts": {"1": 1, "2": 13, "3": 9, "4": 1},
        }

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "sequence", "--class", "h", "--n", "6")
        _, second, _ = run(capsys, "sequence", "--class", "h", "--n", "6")
        assert first == second

    def test_protected_with_lm(self, capsys):
        code, out, _ = run(
            capsys, "sequence", "--class", "p", "--n", "5", "--lm", "2,4"
        )
        assert code == 0
        total = sum(int(line.split(",")[2]) for line in out.splitlines()[1:])
        assert total == 8

    def test_shapes_method(self, capsys):
        _, enum_out, _ = run(capsys, "sequence", "--class", "u", "--n", "6")
        _, shape_out, _ = run(
            capsys, "sequence", "--class", "u", "--n", "6", "--method", "shapes"
        )
        assert enum_out == shape_out

    def test_budget_refusal_is_usage_error(self, capsys):
        code, _, err = run(capsys, "sequence", "--class", "u", "--n", "13")
        assert code == 2
        assert "ULAM_BUDGET" in err

    def test_unknown_class(self, capsys):
        code, _, err = run(capsys, "sequence", "--class", "zzz", "--n", "3")
        assert code == 2
        assert "zzz" in err


class TestVerify:
    def test_conjecture_small(self, capsys):
        code, out, _ = run(capsys, "verify", "conjecture", "--n-max", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3
        for n, line in enumerate(lines, start=1):
            data = json.loads(line)
            assert data["class"] == "all_permutations"
            assert data["n"] == n
            assert data["holds"] is True
            assert data["witnesses"] == []

    def test_injection_hook(self, capsys):
        code, out, _ = run(
            capsys, "verify", "injection", "--kind", "hook", "--n", "5", "--k", "1"
        )
        assert code == 0
        data = json.loads(out)
        assert data["ok"] is True and data["domain_size"] == 6

    def test_injection_protected(self, capsys):
        code, out, _ = run(
            capsys, "verify", "injection", "--kind", "protected", "--n", "6",
            "--lm", "2,4",
        )
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_formulas_small(self, capsys):
        code, out, _ = run(capsys, "verify", "formulas", "--n-max", "5")
        assert code == 0
        for line in out.strip().splitlines():
            assert json.loads(line)["ok"] is True


class TestRsk:
    def test_forward(self, capsys):
        code, out, _ = run(capsys, "rsk", "--perm", "3,1,4,2")
        assert code == 0
        assert out.strip() == "1,2/3,4;1,3/2,4"

    def test_inverse_round_trip(self, capsys):
        _, out, _ = run(capsys, "rsk", "--perm", "3,1,4,2")
        code, out, _ = run(capsys, "rsk", "--inverse", out.strip())
        assert code == 0
        assert out.strip() == "3,1,4,2"

    def test_malformed_perm(self, capsys):
        code, _, err = run(capsys, "rsk", "--perm", "3,1,x")
        assert code == 2
        assert "'x'" in err


class TestInject:
    def test_hook(self, capsys):
        code, out, _ = run(capsys, "inject", "hook", "--t1", "1/2/3", "--t2", "1,2,3")
        assert code == 0
        assert out.strip() == "1,2/3;1,3/2"

    def test_domain_error_is_usage_error(self, capsys):
        code, _, err = run(capsys, "inject", "hook", "--t1", "1,2/3", "--t2", "1,2,3")
        assert code == 2
        assert err.startswith("error:")

    def test_malformed_tableau(self, capsys):
        code, _, err = run(capsys, "inject", "hook", "--t1", "1,q/3", "--t2", "1,2,3")
        assert code == 2
        assert "'q'" in err


class TestPath:
    def test_tableau_to_path(self, capsys):
        code, out, _ = run(capsys, "path", "--tableau", "1,3,4,5,6,7/2")
        assert code == 0
        assert out.strip() == "ENEEEEE"

    def test_flip(self, capsys):
        code, out, _ = run(capsys, "path", "flip", "--p", "EENENNE", "--q", "ENEEEEE")
        assert code == 0
        assert out.strip() == "EENENEE ENEEENE"

    def test_invalid_path_token(self, capsys):
        code, _, err = run(capsys, "path", "flip", "--p", "EEX", "--q", "ENE")
        assert code == 2
        assert "'X'" in err

    def test_missing_arguments(self, capsys):
        code, _, err = run(capsys, "path")
        assert code == 2


class TestUsageErrors:
    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
