import json

import hypeuler.cli as cli
from hypeuler.verify import CheckResult


def run_capture(capsys, args):
    code = cli.run(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSeriesCommand:
    def test_json_low_degrees(self, capsys):
        code, out, _ = run_capture(
            capsys,
            [
                "series",
                "--genus",
                "2",
                "--max-points",
                "2",
                "--basis",
                "powersum",
                "--format",
                "json",
            ],
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["genus"] == 2 and doc["basis"] == "powersum"
        t0 = doc["terms"][0]
        assert t0 == {"n": 0, "coeffs": [{"monomial": [], "value": "1"}]}
        t1 = doc["terms"][1]
        assert t1["coeffs"] == [{"monomial": [[1, 1]], "value": "2"}]

    def test_text_output(self, capsys):
        code, out, _ = run_capture(
            capsys, ["series", "--genus", "3", "--max-points", "2"]
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t^0: 1"
        assert lines[1] == "t^1: 2*p1"
        assert lines[2] == "t^2: p1^2 + p2"

    def test_csv_output(self, capsys):
        code, out, _ = run_capture(
            capsys,
            ["series", "--genus", "2", "--max-points", "2", "--format", "csv"],
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,monomial,value"
        assert "1,p1,2" in lines

    def test_schur_basis(self, capsys):
        code, out, _ = run_capture(
            capsys,
            [
                "series",
                "--genus",
                "2",
                "--max-points",
                "2",
                "--basis",
                "schur",
                "--format",
                "json",
            ],
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["terms"][1]["coeffs"] == [
            {"partition": [1], "value": "2"}
        ]
        # even genus: t^2 carries s[2] + s[1,1]
        assert doc["terms"][2]["coeffs"] == [
            {"partition": [2], "value": "1"},
            {"partition": [1, 1], "value": "1"},
        ]

    def test_sign_twisted_conjugates(self, capsys):
        _, standard, _ = run_capture(
            capsys,
            [
                "series",
                "--genus",
                "3",
                "--max-points",
                "3",
                "--basis",
                "schur",
                "--format",
                "json",
            ],
        )
        _, twisted, _ = run_capture(
            capsys,
            [
                "series",
                "--genus",
                "3",
                "--max-points",
                "3",
                "--basis",
                "schur",
                "--format",
                "json",
                "--schur-convention",
                "sign-twisted",
            ],
        )
        std = {
            tuple(c["partition"]): c["value"]
            for c in json.loads(standard)["terms"][3]["coeffs"]
        }
        twi = {
            tuple(c["partition"]): c["value"]
            for c in json.loads(twisted)["terms"][3]["coeffs"]
        }
        assert std != twi
        assert twi == {(1, 1, 1): std[(3,)], (3,): std[(1, 1, 1)]}

    def test_deterministic_output(self, capsys):
        args = [
            "series",
            "--genus",
            "4",
            "--max-points",
            "6",
            "--format",
            "json",
        ]
        _, first, _ = run_capture(capsys, args)
        _, second, _ = run_capture(capsys, args)
        assert first == second


class TestEulerCommand:
    def test_table_contains_known_value(self, capsys):
        code, out, _ = run_capture(
            capsys, ["euler", "--genus", "3", "--max-points", "6"]
        )
        assert code == 0
        assert any(
            line.startswith("n=4") and line.endswith("-6")
            for line in out.splitlines()
        )

    def test_json(self, capsys):
        code, out, _ = run_capture(
            capsys,
            ["euler", "--genus", "2", "--max-points", "7", "--format", "json"],
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["values"][4] == {"n": 4, "chi": "-4"}
        assert doc["values"][7] == {"n": 7, "chi": "168"}

    def test_csv(self, capsys):
        code, out, _ = run_capture(
            capsys,
            ["euler", "--genus", "3", "--max-points", "4", "--format", "csv"],
        )
        assert code == 0
        assert out.splitlines() == [
            "n,chi",
            "0,1",
            "1,2",
            "2,2",
            "3,0",
            "4,-6",
        ]


class TestVerifyCommand:
    def test_small_battery_passes(self, capsys):
        code, out, _ = run_capture(
            capsys,
            [
                "verify",
                "--genus-range",
                "2..3",
                "--max-points",
                "5",
                "--double-sum-depth",
                "8",
                "--totient-limit",
                "200",
            ],
        )
        assert code == 0
        lines = out.splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1] == "9/9 checks passed"

    def test_roundtrip_flag_adds_check(self, capsys):
        code, out, _ = run_capture(
            capsys,
            [
                "verify",
                "--genus-range",
                "2..2",
                "--max-points",
                "4",
                "--double-sum-depth",
                "4",
                "--totient-limit",
                "50",
                "--roundtrip",
            ],
        )
        assert code == 0
        assert "PASS basis-roundtrip" in out

    def test_failure_exits_one(self, capsys, monkeypatch):
        monkeypatch.setattr(
            cli,
            "run_battery",
            lambda *a, **k: [CheckResult("stub", False, "forced failure")],
        )
        code, out, _ = run_capture(
            capsys, ["verify", "--genus-range", "2..2", "--max-points", "2"]
        )
        assert code == 1
        assert "FAIL stub" in out


class TestExitCodes:
    def test_small_genus_is_domain_error(self, capsys):
        code, _, err = run_capture(
            capsys, ["euler", "--genus", "1", "--max-points", "3"]
        )
        assert code == 2
        assert "genus" in err

    def test_series_small_genus(self, capsys):
        code, _, _ = run_capture(
            capsys, ["series", "--genus", "0", "--max-points", "3"]
        )
        assert code == 2

    def test_negative_points(self, capsys):
        for cmd in ("series", "euler"):
            code, _, err = run_capture(
                capsys, [cmd, "--genus", "2", "--max-points", "-1"]
            )
            assert code == 2
            assert "max points" in err or "order" in err

    def test_malformed_flags(self, capsys):
        assert cli.run(["series", "--genus", "2", "--bogus"]) == 2
        capsys.readouterr()

    def test_bad_range(self, capsys):
        code, _, err = run_capture(
            capsys, ["verify", "--genus-range", "5", "--max-points", "2"]
        )
        assert code == 2
        assert "A..B" in err

    def test_missing_command(self, capsys):
        assert cli.run([]) == 2
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert cli.run(["--help"]) == 0
        capsys.readouterr()
