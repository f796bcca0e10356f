import json
import subprocess
import sys

import gelfand.cli as cli
from gelfand.catalog import Family, verify
from gelfand.diffalg import ModelConfig


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "gelfand.cli", *args],
        capture_output=True,
        text=False,
    )


A1_ARGS = (
    "--model", "commuting", "--ops", "1", "--mode", "pre",
    "--verify", "novikov", "--format", "json",
)


class TestJsonOutput:
    def test_a1_config_fields(self):
        proc = run_cli(*A1_ARGS)
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["model"] == "commuting"
        assert doc["ops"] == 1
        assert doc["mode"] == "pre"
        assert doc["basis_size"] == 12
        assert doc["rank"] == 6
        assert doc["kernel_dim"] == 6
        assert doc["verdicts"]["family"] == "novikov"
        assert doc["verdicts"]["eq"] is True
        assert len(doc["kernel_basis"]) == 6

    def test_byte_identical_across_runs(self):
        out1 = run_cli(*A1_ARGS).stdout
        out2 = run_cli(*A1_ARGS).stdout
        assert out1 == out2

    def test_round_trips_the_report(self):
        doc = json.loads(run_cli(*A1_ARGS).stdout)
        report = verify(Family.NOVIKOV, ModelConfig(commuting=True, num_operators=1))
        assert doc == json.loads(cli.report_json(report))
        assert doc["kernel_dim"] == report.kernel_dim
        assert doc["rank"] == report.rank
        assert doc["verdicts"]["contains_all"] == report.verdicts.contains_all

    def test_no_timing_in_json(self):
        doc = json.loads(run_cli(*A1_ARGS).stdout)
        assert "elapsed" not in doc

    def test_rational_coefficients_as_strings(self):
        doc = json.loads(run_cli(*A1_ARGS).stdout)
        coeffs = {t["coeff"] for vec in doc["kernel_basis"] for t in vec}
        assert coeffs <= {"1", "-1"}  # this kernel happens to be integral


class TestTextOutput:
    def test_contains_summary_and_identities(self):
        proc = run_cli("--model", "commuting", "--ops", "1", "--verify", "novikov")
        text = proc.stdout.decode()
        assert proc.returncode == 0
        assert "kernel dimension: 6" in text
        assert "verdict[novikov]" in text
        assert "elapsed:" in text
        assert "=" in text  # identities rendered as LHS = RHS


class TestExitCodes:
    def test_verification_failure_is_exit_1(self):
        proc = run_cli("--ops", "1", "--verify", "prelie")
        assert proc.returncode == 1

    def test_ops_zero_is_config_error(self):
        proc = run_cli("--ops", "0")
        assert proc.returncode == 2
        assert "ops" in proc.stderr.decode()

    def test_unknown_flag(self):
        assert run_cli("--frobnicate").returncode == 2

    def test_bad_choice(self):
        assert run_cli("--model", "sideways").returncode == 2

    def test_family_needs_single_operator(self):
        proc = run_cli("--ops", "2", "--verify", "novikov")
        assert proc.returncode == 2
        assert "novikov" in proc.stderr.decode()


class TestConfigFile:
    def test_file_equals_flags(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "# comment line\n"
            "model = commuting\n"
            "ops = 1\n"
            "mode = pre\n"
            "verify = novikov\n"
            "format = json\n"
        )
        from_file = run_cli("--config", str(cfg))
        from_flags = run_cli(*A1_ARGS)
        assert from_file.returncode == 0
        assert from_file.stdout == from_flags.stdout

    def test_flag_overrides_file(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("ops = 1\nverify = prelie\nformat = json\n")
        proc = run_cli("--config", str(cfg), "--verify", "novikov")
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["verdicts"]["family"] == "novikov"

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("opz = 3\n")
        proc = run_cli("--config", str(cfg))
        assert proc.returncode == 2
        assert "opz" in proc.stderr.decode()

    def test_missing_file(self):
        assert run_cli("--config", "/nonexistent/run.cfg").returncode == 2


class TestSelftestWiring:
    def test_calls_suites_with_seed(self, monkeypatch):
        calls = {}

        def fake_run_all(seed):
            calls["seed"] = seed
            return True

        monkeypatch.setattr(cli, "run_all", fake_run_all)
        assert cli.main(["--selftest", "--seed", "17"]) == 0
        assert calls["seed"] == 17

    def test_failure_exit_code(self, monkeypatch):
        monkeypatch.setattr(cli, "run_all", lambda seed: False)
        assert cli.main(["--selftest"]) == 1

    def test_small_real_run(self, capsys):
        from gelfand.selftest import run_all

        assert run_all(seed=5, cases=20)
