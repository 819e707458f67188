import json

import pytest

from chargebasis.cli import run_command
from chargebasis.reports import ReportGenerator
from chargebasis.utils.config import RunConfig


def run_json(capsys, *argv):
    code = run_command(list(argv))
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.usefixtures("in_tmp")
class TestCommands:
    def test_cocharge(self, capsys):
        code, report = run_json(capsys, "cocharge", "--w", "3516247")
        assert code == 0
        assert report["command"] == "cocharge"
        assert report["result"]["cocharge_word"] == [1, 2, 0, 2, 0, 1, 2]
        assert report["result"]["cocharge"] == 8

    def test_charge_monomial(self, capsys):
        code, report = run_json(capsys, "charge-monomial", "--w", "2413")
        assert code == 0
        assert report["result"]["exponents"] == [0, 1, 0, 1]
        assert report["result"]["degree"] == 2

    def test_ctype_from_tableau(self, capsys):
        code, report = run_json(capsys, "ctype", "--tableau", "[[1,2,3,7],[4,5],[6,8]]")
        assert code == 0
        assert report["pass"] is True
        assert report["result"]["direct"] == [3, 2, 1, 1, 1]

    def test_ctype_needs_one_source(self, capsys):
        assert run_command(["ctype"]) == 2
        assert run_command(["ctype", "--w", "21", "--tableau", "[[1],[2]]"]) == 2

    def test_blasiak(self, capsys):
        code, report = run_json(capsys, "blasiak", "--word", "211001")
        assert code == 0
        assert report["result"]["shape"] == [2, 2, 2]
        assert report["result"]["filling"] == [[5, 4], [3, 2], [1, 6]]
        assert report["result"]["row_consistency"] is True

    def test_chains(self, capsys):
        code, report = run_json(
            capsys, "chains", "--word", "1200112010", "--decomposition", "[[1,2,3,4,6,7],[5,8,9,10]]"
        )
        assert code == 0
        assert report["pass"] is True
        assert report["result"]["shape"] == [4, 3, 3]
        assert report["result"]["ctype"] == [4, 3, 3]

    def test_basis(self, capsys):
        code, report = run_json(capsys, "basis", "--mu", "3,1")
        assert code == 0
        assert report["result"]["size"] == 12
        assert report["result"]["degree_histogram"] == [1, 3, 5, 3]
        assert report["config"]["mu"] == [3, 1]

    def test_descent_basis_from_n(self, capsys):
        code, report = run_json(capsys, "basis", "--kind", "descent", "--n", "3")
        assert code == 0
        assert report["result"]["size"] == 6

    def test_hilbert(self, capsys):
        code, report = run_json(capsys, "hilbert", "--mu", "2,2")
        assert code == 0
        assert report["pass"] is True
        assert report["result"]["series"] == [1, 3, 2]

    def test_antisym(self, capsys):
        code, report = run_json(capsys, "antisym", "--mu", "3,1", "--gamma", "2,2")
        assert code == 0
        assert report["result"]["size"] == 2
        assert report["result"]["e_coefficient"] == [0, 0, 1, 1]

    def test_verify(self, capsys):
        code, report = run_json(capsys, "verify", "--mu", "1,1")
        assert code == 0
        assert report["pass"] is True
        assert report["result"]["dimension"] == 2

    def test_verify_beyond_groebner_limit(self, capsys):
        assert run_command(["verify", "--mu", "2,2,1,1"]) == 2

    def test_check_theorems_golden(self, capsys):
        code, report = run_json(capsys, "check-theorems", "--suite", "golden")
        assert code == 0
        [summary] = report["result"]["suites"]
        assert summary["suite"] == "golden"
        assert summary["failure_count"] == 0

    def test_check_theorems_sized(self, capsys):
        code, report = run_json(capsys, "check-theorems", "--suite", "thm-a", "--n", "5")
        assert code == 0
        assert report["result"]["suites"][0]["n"] == 5


@pytest.mark.usefixtures("in_tmp")
class TestInputErrors:
    def test_non_partition(self):
        assert run_command(["basis", "--mu", "1,2"]) == 2

    def test_non_permutation(self):
        assert run_command(["cocharge", "--w", "1224"]) == 2

    def test_unknown_suite(self):
        assert run_command(["check-theorems", "--suite", "nope"]) == 2

    def test_suite_beyond_limit(self):
        assert run_command(["check-theorems", "--suite", "thm-a", "--n", "9"]) == 2

    def test_gamma_size_mismatch(self):
        assert run_command(["verify", "--mu", "2,1", "--gamma", "2,2"]) == 2

    def test_bad_tableau_json(self):
        assert run_command(["ctype", "--tableau", "[[1,2"]) == 2


@pytest.mark.usefixtures("in_tmp")
class TestOutput:
    def test_deterministic_output_is_reproducible(self, capsys):
        argv = ["hilbert", "--mu", "3,1", "--deterministic"]
        assert run_command(argv) == 0
        first = capsys.readouterr().out
        assert run_command(argv) == 0
        assert capsys.readouterr().out == first
        assert "timings" not in json.loads(first)

    def test_timings_by_default(self, capsys):
        _, report = run_json(capsys, "hilbert", "--mu", "2,1")
        assert "basis" in report["timings"]

    def test_csv(self, capsys):
        assert run_command(["basis", "--mu", "3,1", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "exponents,monomial,degree"
        assert len(lines) == 13

    def test_output_file(self, in_tmp):
        assert run_command(["basis", "--mu", "2,1", "--output", "basis.json", "--deterministic"]) == 0
        report = json.loads((in_tmp / "reports" / "basis.json").read_text())
        assert report["result"]["size"] == 3

    def test_threads_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("CHARGEBASIS_THREADS", "3")
        _, report = run_json(capsys, "basis", "--mu", "2,1")
        assert report["config"]["workers"] == 3


class TestReportGenerator:
    def test_build_and_render(self):
        reports = ReportGenerator(deterministic=True)
        report = reports.build("basis", RunConfig(mu=(2, 1)), {"size": 3}, passed=True, timings={"basis": 0.5})
        assert "timings" not in report
        assert report["config"]["mu"] == [2, 1]
        text = reports.render_json(report)
        assert json.loads(text)["pass"] is True
        assert text == reports.render_json(report)

    def test_timings_rounded(self):
        report = ReportGenerator().build("x", RunConfig(), {}, timings={"a": 0.1234567891})
        assert report["timings"] == {"a": 0.123457}
        assert "pass" not in report

    def test_csv_joins_lists(self):
        text = ReportGenerator().render_csv([{"exponents": [0, 1], "degree": 1}])
        assert text == "exponents,degree\n0 1,1\n"

    def test_write_and_summary(self, tmp_path):
        reports = ReportGenerator(output_dir=str(tmp_path / "out"))
        report = reports.build("verify", RunConfig(n=2), {"rank": 2}, passed=False, timings={"rank": 1.0})
        path = reports.write(report, "verify.json")
        assert json.loads(open(path).read())["result"] == {"rank": 2}
        summary = open(reports.write_summary(report, "verify.md")).read()
        assert "**Status**: FAIL" in summary
        assert "- rank: 1.000s" in summary
