import json
import subprocess
import sys


from cocircular.cli import main


def run_cli(*argv):
    return main(list(argv))


class TestClassifyCommand:
    def test_equal_masses(self, capsys):
        assert run_cli("classify", "--alpha", "1", "--masses", "1,1,1,1") == 0
        out = capsys.readouterr().out
        assert "CENTERED_CANDIDATE" in out

    def test_certified_instance(self, capsys):
        assert run_cli("classify", "--alpha", "1", "--masses", "3,2,1,5") == 0
        out = capsys.readouterr().out
        assert "CERTIFIED_NOT_CC" in out
        assert "ANTIPODAL_CERTIFICATE" in out

    def test_too_few_masses_is_usage_error(self, capsys):
        assert run_cli("classify", "--alpha", "2", "--masses", "1,1") == 2

    def test_nonpositive_mass_is_usage_error(self):
        assert run_cli("classify", "--alpha", "1", "--masses", "1,-1,1") == 2

    def test_unconverged_exit_three(self, capsys):
        code = run_cli(
            "classify", "--alpha", "1", "--masses", "1,4,2,1,1",
            "--max-iters", "1",
        )
        assert code == 3
        assert "UNCONVERGED" in capsys.readouterr().out

    def test_json_output(self, capsys):
        assert run_cli(
            "classify", "--alpha", "1", "--masses", "1,1,1,1,1", "--format", "json"
        ) == 0
        row = json.loads(capsys.readouterr().out)
        assert row["verdict_tag"] == "CENTERED_CANDIDATE"
        assert row["n"] == 5
        assert len(row["theta"]) == 5

    def test_missing_flags_usage(self, capsys):
        assert run_cli("classify", "--alpha", "1") == 2


class TestScanCommand:
    def test_deterministic_bytes(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        args = (
            "scan", "--n", "5", "--alpha", "1", "--special", "1,2",
            "--trials", "1", "--seed", "11", "--control",
        )
        assert run_cli(*args, "--out", str(out1)) == 0
        assert run_cli(*args, "--out", str(out2)) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_csv_json_values_match(self, tmp_path):
        base = (
            "scan", "--n", "5", "--alpha", "0.5", "--special", "2,3",
            "--trials", "1", "--seed", "4",
        )
        csv_path = tmp_path / "r.csv"
        json_path = tmp_path / "r.json"
        assert run_cli(*base, "--out", str(csv_path), "--format", "csv") == 0
        assert run_cli(*base, "--out", str(json_path), "--format", "json") == 0
        rows_json = json.loads(json_path.read_text())["rows"]
        lines = [
            line for line in csv_path.read_text().splitlines()
            if line and not line.startswith("#")
        ]
        header = lines[0].split(",")
        assert len(lines) - 1 == len(rows_json)
        for line, rj in zip(lines[1:], rows_json):
            cells = dict(zip(header, line.split(",")))
            for key, value in rj.items():
                if isinstance(value, list):
                    assert [float(x) for x in cells[key].split(";")] == value
                elif isinstance(value, float):
                    assert float(cells[key]) == value
                elif value is None:
                    assert cells[key] == ""
                else:
                    assert cells[key] == str(value)

    def test_summary_footer(self, tmp_path, capsys):
        assert run_cli(
            "scan", "--n", "5", "--alpha", "1", "--masses", "1,1,1,1,1",
        ) == 0
        out = capsys.readouterr().out
        assert "# rows: 1" in out
        assert "CENTERED_CANDIDATE" in out

    def test_requires_n_or_masses(self):
        assert run_cli("scan", "--alpha", "1", "--trials", "1") == 2

    def test_unwritable_out(self, tmp_path):
        target = tmp_path / "missing-dir" / "r.csv"
        code = run_cli(
            "scan", "--n", "5", "--alpha", "1", "--masses", "1,1,1,1,1",
            "--out", str(target),
        )
        assert code == 2


class TestVerifyCommand:
    def test_theorem_integer(self, capsys):
        assert run_cli("verify", "theorem-integer", "--n-max", "40") == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "satisfiable systems found: 0" in out

    def test_quadrilateral_small(self, capsys):
        assert run_cli("verify", "quadrilateral", "--trials", "2000") == 0
        assert "PASS" in capsys.readouterr().out

    def test_gradient_small(self, capsys):
        assert run_cli("verify", "gradient", "--trials", "10") == 0

    def test_lemma_chain_small(self, capsys):
        assert run_cli("verify", "lemma-chain", "--trials", "8") == 0

    def test_two_unequal_small(self, capsys):
        assert run_cli("verify", "two-unequal", "--trials", "2") == 0

    def test_antipodal_reports_tie_failures(self, capsys):
        # the closed form matches exactly, but the reflection entry is
        # usually not the most negative group element, so the suite fails
        code = run_cli("verify", "antipodal", "--trials", "6")
        out = capsys.readouterr().out
        assert "closed form vs reflection entry" in out
        assert "failures 0" in out
        assert code == 1

    def test_unknown_suite(self):
        assert run_cli("verify", "nosuchsuite") == 2


class TestConfigFile:
    def test_config_supplies_defaults(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"alpha": 1.0, "masses": "1,1,1,1"}))
        assert run_cli("--config", str(cfg), "classify") == 0
        assert "CENTERED_CANDIDATE" in capsys.readouterr().out

    def test_explicit_flags_win(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"masses": "1,1,1,1"}))
        assert run_cli(
            "--config", str(cfg), "classify", "--alpha", "1",
            "--masses", "3,2,1,5",
        ) == 0
        assert "CERTIFIED_NOT_CC" in capsys.readouterr().out

    def test_bad_config(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{not json")
        assert run_cli("--config", str(cfg), "classify", "--alpha", "1",
                       "--masses", "1,1,1") == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cocircular.cli", "classify", "--alpha", "1",
         "--masses", "1,1,1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "CENTERED_CANDIDATE" in proc.stdout
