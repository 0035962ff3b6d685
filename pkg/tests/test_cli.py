"""Command line behaviour: exit codes, report shape, option plumbing."""

import json
import subprocess
import sys

import pytest

from sicfield.cli import main, render_number


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--json")
    return code, json.loads(out)


class TestRenderNumber:
    def test_twelve_significant_digits(self):
        assert render_number(0.4370160244488211) == "0.437016024449"

    def test_ties_go_to_even(self):
        from fractions import Fraction

        # both ties resolve to the even digit 2, from above and below
        assert render_number(Fraction(123456789012_5, 10**4)) == "123456789.012"
        assert render_number(Fraction(123456789011_5, 10**4)) == "123456789.012"

    def test_short_values_stay_short(self):
        assert render_number(0.25) == "0.25"
        assert render_number(5) == "5"


class TestVerifyD4:
    def test_clean_run_passes(self, capsys):
        code, reports = run_json(capsys, "verify-d4")
        assert code == 0
        assert len(reports) == 20
        assert all(r["status"] == "pass" for r in reports)

    def test_reports_carry_the_four_fields(self, capsys):
        _, reports = run_json(capsys, "verify-d4")
        for report in reports:
            assert sorted(report) == ["category", "check", "details", "status"]
            assert report["category"] == "verify-d4"

    def test_corrupted_phase_fails_named_checks(self, capsys):
        code, reports = run_json(capsys, "verify-d4", "--corrupt", "1,2")
        assert code == 1
        failed = {r["check"] for r in reports if r["status"] == "fail"}
        assert "idempotent" in failed
        assert any(check.startswith("overlap_") for check in failed)

    def test_corrupt_wants_a_pair(self, capsys):
        code, _, err = run_cli(capsys, "verify-d4", "--corrupt", "banana")
        assert code == 2
        assert "expected a pair" in err

    def test_text_mode_prints_a_line_per_check(self, capsys):
        code, out, _ = run_cli(capsys, "verify-d4")
        assert code == 0
        lines = [line for line in out.splitlines() if line]
        assert len(lines) == 20
        assert all(line.startswith("[PASS]") for line in lines)


class TestMinpoly:
    def test_prints_the_polynomial(self, capsys):
        code, out, _ = run_cli(capsys, "minpoly", "u + 1/u")
        assert code == 0
        assert out.strip() == "t^4 - 6t^2 + 4"

    def test_json_report_shape(self, capsys):
        code, reports = run_json(capsys, "minpoly", "u + 1/u")
        assert code == 0
        (report,) = reports
        details = report["details"]
        assert details["minimal_polynomial"] == "t^4 - 6t^2 + 4"
        assert details["degree"] == 4
        assert details["algebraic_integer"] is True
        assert details["unit"] is False

    def test_element_serialization(self, capsys):
        _, reports = run_json(capsys, "minpoly", "u/2 + 1")
        element = reports[0]["details"]["element"]
        assert len(element["coords"]) == 16
        assert element["coords"][0] == "1"
        assert element["coords"][1] == "1/2"
        assert set(element["approx"]) == {"re", "im"}

    def test_unit_flagged_as_unit(self, capsys):
        _, reports = run_json(capsys, "minpoly", "u1")
        assert reports[0]["details"]["unit"] is True
        assert reports[0]["details"]["minimal_polynomial"] == "t^2 - 2t - 1"

    def test_syntax_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "minpoly", "u ^")
        assert code == 2
        assert "offset 3" in err

    def test_unknown_name_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "minpoly", "bogus + 1")
        assert code == 2
        assert "unknown name" in err

    def test_zero_division_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "minpoly", "1/(u - u)")
        assert code == 2
        assert "error" in err

    def test_extended_precision_agrees_with_double(self, capsys):
        _, fast = run_json(capsys, "minpoly", "tau * u2")
        _, slow = run_json(capsys, "minpoly", "tau * u2", "--precision", "extended")
        a = fast[0]["details"]["element"]["approx"]
        b = slow[0]["details"]["element"]["approx"]
        assert float(a["re"]) == pytest.approx(float(b["re"]), abs=1e-11)
        assert float(a["im"]) == pytest.approx(float(b["im"]), abs=1e-11)


class TestGalois:
    def test_all_checks_pass(self, capsys):
        code, reports = run_json(capsys, "galois")
        assert code == 0
        assert all(r["status"] == "pass" for r in reports)

    def test_census_and_certificate(self, capsys):
        _, reports = run_json(capsys, "galois")
        by_check = {r["check"]: r for r in reports}
        assert by_check["order_census"]["details"]["census"] == {
            "1": 1, "2": 11, "4": 4,
        }
        cert = by_check["structure_certificate"]["details"]
        assert cert["isomorphism_type"] == "Z2 x D8"

    def test_action_table_lists_the_generators(self, capsys):
        _, reports = run_json(capsys, "galois")
        actions = next(r for r in reports if r["check"] == "generator_actions")
        table = actions["details"]["actions"]
        assert sorted(table) == ["g1", "g2", "g3", "g4"]
        assert sorted(table["g1"]) == [
            "i", "isqrt_sqrt5p1", "sqrt2", "sqrt5", "tau",
        ]
        # complex conjugation fixes the real constants
        sqrt2 = table["g1"]["sqrt2"]["approx"]
        assert float(sqrt2["re"]) == pytest.approx(2 ** 0.5)
        assert abs(float(sqrt2["im"])) < 1e-12


class TestUnits:
    def test_fifteen_phases_and_five_units(self, capsys):
        code, reports = run_json(capsys, "units")
        assert code == 0
        phases = [r for r in reports if r["check"].startswith("phase_")]
        units = [r for r in reports if r["check"].startswith("unit_")]
        assert len(phases) == 15
        assert len(units) == 5
        assert all(r["status"] == "pass" for r in reports)

    def test_phase_details(self, capsys):
        # the phases live in the degree-8 inner field, so their degrees
        # divide 8; the entry at (0, 2) is -1 with degree 1
        _, reports = run_json(capsys, "units")
        by_check = {r["check"]: r for r in reports}
        assert by_check["phase_01"]["details"]["minpoly_degree"] == 8
        assert by_check["phase_02"]["details"]["minpoly_degree"] == 1

    def test_unit_degrees(self, capsys):
        _, reports = run_json(capsys, "units")
        by_check = {r["check"]: r for r in reports}
        degrees = [by_check[f"unit_u{k}"]["details"]["degree"] for k in range(1, 6)]
        assert degrees == [2, 4, 8, 8, 8]


class TestSearch:
    def test_small_dimension_converges(self, capsys):
        code, reports = run_json(capsys, "search", "--dim", "3")
        assert code == 0
        (report,) = reports
        assert report["details"]["converged"] is True
        assert float(report["details"]["residual"]) < 1e-10

    def test_fourth_moment_reported(self, capsys):
        _, reports = run_json(capsys, "search", "--dim", "2")
        details = reports[0]["details"]
        assert float(details["fourth_moment"]) == pytest.approx(4 / 3, abs=1e-8)
        assert float(details["fourth_moment_target"]) == pytest.approx(4 / 3)
        assert len(details["fiducial"]) == 2

    def test_dim_is_required(self, capsys):
        code, _, _ = run_cli(capsys, "search")
        assert code == 2

    def test_hopeless_budget_exits_1(self, capsys):
        code, reports = run_json(
            capsys, "search", "--dim", "5",
            "--restarts", "1", "--max-iterations", "3",
        )
        assert code == 1
        assert reports[0]["status"] == "fail"


class TestDiscriminant:
    @pytest.mark.parametrize("dim, value, squarefree", [
        (4, 5, 5),
        (5, 12, 3),
        (7, 32, 2),
    ])
    def test_known_values(self, capsys, dim, value, squarefree):
        code, reports = run_json(capsys, "discriminant", "--dim", str(dim))
        assert code == 0
        details = reports[0]["details"]
        assert details["value"] == value
        assert details["squarefree_part"] == squarefree

    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "discriminant", "--dim", "4")
        assert code == 0
        assert "5" in out and "squarefree" in out

    def test_small_dimension_rejected(self, capsys):
        code, _, err = run_cli(capsys, "discriminant", "--dim", "3")
        assert code == 2
        assert "error" in err


class TestConfig:
    def test_config_supplies_defaults(self, capsys, tmp_path):
        config = tmp_path / "options.json"
        config.write_text(json.dumps({"json": True, "dim": 4}))
        code, out, _ = run_cli(capsys, "discriminant", "--config", str(config))
        assert code == 0
        reports = json.loads(out)
        assert reports[0]["details"]["value"] == 5

    def test_command_line_beats_config(self, capsys, tmp_path):
        config = tmp_path / "options.json"
        config.write_text(json.dumps({"dim": 4}))
        code, reports = run_json(
            capsys, "discriminant", "--dim", "5", "--config", str(config),
        )
        assert code == 0
        assert reports[0]["details"]["value"] == 12

    def test_unknown_key_rejected(self, capsys, tmp_path):
        config = tmp_path / "options.json"
        config.write_text(json.dumps({"bogus": 1}))
        code, _, err = run_cli(capsys, "discriminant", "--dim", "4",
                               "--config", str(config))
        assert code == 2
        assert "bogus" in err

    def test_missing_file_rejected(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "discriminant", "--dim", "4",
                               "--config", str(tmp_path / "absent.json"))
        assert code == 2


class TestParsing:
    def test_unknown_subcommand_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "frobnicate")
        assert code == 2

    def test_no_subcommand_exits_2(self, capsys):
        code, _, _ = run_cli(capsys)
        assert code == 2

    def test_help_exits_0(self, capsys):
        code, out, _ = run_cli(capsys, "--help")
        assert code == 0
        assert "verify-d4" in out

    def test_console_script_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "sicfield.cli", "minpoly", "u + 1/u"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "t^4 - 6t^2 + 4"
