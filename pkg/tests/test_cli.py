"""End-to-end tests of the command-line interface: exit codes, schemas,
determinism of machine-readable output."""

import io
import json
from pathlib import Path

from wildmckay.cli import main, run_to_string

DATA = Path(__file__).resolve().parent.parent / "data"


def run(argv):
    buffer = io.StringIO()
    code = main(argv, stdout=buffer)
    return code, buffer.getvalue()


class TestExitCodes:
    def test_pass_is_zero(self):
        code, _ = run(["mass", "expcheck", "--nmax", "6"])
        assert code == 0

    def test_unknown_subcommand_is_two(self):
        code, _ = run(["mass", "frobnicate"])
        assert code == 2

    def test_unknown_group_is_two(self):
        code, _ = run(["nonsense"])
        assert code == 2

    def test_completeness_guard_is_two(self):
        code, _ = run(["mckay", "verify", "--p", "3", "--n", "4"])
        assert code == 2

    def test_non_prime_rejected(self):
        code, _ = run(["etale", "mass", "--p", "6", "--n", "2"])
        assert code == 2

    def test_budget_exceeded_is_two(self):
        code, _ = run(
            ["padic", "count", "--input", str(DATA / "sample_circle.json"), "--m", "4", "--budget", "100"]
        )
        assert code == 2

    def test_malformed_input_is_two(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _ = run(["padic", "count", "--input", str(bad), "--m", "1"])
        assert code == 2

    def test_missing_file_is_two(self):
        code, _ = run(["stringy", "eval", "--input", "no-such-file.json"])
        assert code == 2

    def test_smoothness_violation_is_one(self, tmp_path):
        node = tmp_path / "node.json"
        node.write_text(json.dumps({"p": 5, "n": 2, "d": 1, "polys": [[[[1, 1], 1]]]}))
        code, _ = run(["padic", "measure", "--input", str(node), "--mmax", "2"])
        assert code == 1


class TestReports:
    def test_mass_serre_json(self):
        code, out = run(["mass", "serre", "--n", "2", "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert report["mass"]["pretty"] == "q^(-1)"
        assert report["mass"]["terms"] == [[-1, 1, 1, 1]]

    def test_etale_enumerate_json(self):
        code, out = run(["etale", "enumerate", "--p", "5", "--n", "2", "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert report["field_classes"] == 3
        assert report["etale_algebras"] == 4
        assert report["complete"] is True
        assert len(report["rows"]) == 3

    def test_etale_enumerate_reports_wild_strata(self):
        code, out = run(["etale", "enumerate", "--p", "5", "--n", "5", "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert [1, 5] in report["wild_strata_skipped"]
        assert report["complete"] is False

    def test_etale_enumerate_with_fixtures(self):
        code, out = run(
            [
                "etale",
                "enumerate",
                "--p",
                "5",
                "--n",
                "2",
                "--fixtures",
                str(DATA / "sample_fixtures.json"),
                "--format",
                "json",
            ]
        )
        assert code == 0
        report = json.loads(out)
        assert report["fixtures"]["ok"] is True
        assert len(report["fixtures"]["matched"]) == 3

    def test_etale_mass_exact_match(self):
        code, out = run(["etale", "mass", "--p", "7", "--n", "3", "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert report["mass"] == "57/49"
        assert report["match"] is True

    def test_crossvalidate_sample_fixtures(self):
        code, out = run(
            ["etale", "crossvalidate", "--fixtures", str(DATA / "sample_fixtures.json"), "--format", "json"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["ok"] is True
        assert report["uncheckable"] == 3

    def test_crossvalidate_mismatch_exits_one(self, tmp_path):
        bogus = tmp_path / "fixtures.json"
        bogus.write_text(
            json.dumps([{"p": 5, "n": 2, "e": 2, "f": 1, "c": 1, "aut": 3, "label": "bogus"}])
        )
        code, out = run(["etale", "crossvalidate", "--fixtures", str(bogus), "--format", "json"])
        assert code == 1

    def test_mckay_verify_writes_table(self, tmp_path):
        table = tmp_path / "table.json"
        code, out = run(
            ["mckay", "verify", "--p", "5", "--n", "2", "--table", str(table), "--format", "json"]
        )
        assert code == 0
        dumped = json.loads(table.read_text())
        assert dumped["passed"] is True
        assert dumped["mass_side"] == [750, 1]
        assert len(dumped["rows"]) == 4

    def test_stringy_eval_with_numeric(self):
        code, out = run(
            [
                "stringy",
                "eval",
                "--input",
                str(DATA / "sample_snc_pair.json"),
                "--at-q",
                "9",
                "--format",
                "json",
            ]
        )
        assert code == 0
        report = json.loads(out)
        # 3 + (q^(1/2)+1) + 2/(q+1) + q at q=9 -> 4 + 3 + 1/5 + 9 + 1/5... exact: 3+4+0.2+9 = 16.2
        assert report["evaluated"]["approx"].startswith("16.2")

    def test_stringy_divergent_input(self, tmp_path):
        data = tmp_path / "pair.json"
        data.write_text(
            json.dumps(
                {"horizontal": [1], "vertical": [{"a": 0, "strata": [{"subset": [1], "count": 2}]}]}
            )
        )
        code, out = run(["stringy", "eval", "--input", str(data), "--format", "json"])
        assert code == 0
        assert json.loads(out)["value"] == "Infinite"

    def test_padic_count_report(self):
        code, out = run(
            ["padic", "count", "--input", str(DATA / "sample_circle.json"), "--m", "2", "--format", "json"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["count"] == 20
        assert report["normalized"] == "4/5"

    def test_padic_measure_report(self):
        code, out = run(
            ["padic", "measure", "--input", str(DATA / "sample_circle.json"), "--mmax", "3", "--format", "json"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["counts"] == [4, 20, 100]
        assert report["measure"] == "4/5"

    def test_padic_integral_divergent(self):
        code, out = run(["padic", "integral", "--c", "1", "--p", "5", "--format", "json"])
        assert code == 0
        assert json.loads(out)["exact"] == "Infinite"

    def test_padic_nullset(self):
        code, out = run(
            ["padic", "nullset", "--input", str(DATA / "sample_circle.json"), "--m", "1", "--format", "json"]
        )
        assert code == 0
        assert json.loads(out)["fraction"] == "4/25"


class TestDeterminism:
    COMMANDS = [
        ["mass", "expcheck", "--nmax", "5", "--format", "json"],
        ["mass", "invert", "--nmax", "5", "--format", "csv"],
        ["etale", "enumerate", "--p", "7", "--n", "4", "--format", "json"],
        ["mckay", "verify", "--p", "7", "--n", "3", "--format", "csv"],
        ["stringy", "point", "--a", "1", "--c", "1/2,-1", "--at-q", "5", "--format", "json"],
    ]

    def test_json_and_csv_outputs_are_byte_identical(self):
        for argv in self.COMMANDS:
            assert run_to_string(argv) == run_to_string(argv), argv


class TestSelftest:
    def test_selftest_passes(self):
        code, out = run(["selftest", "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert report["all_passed"] is True
        assert len(report["rows"]) == 10
