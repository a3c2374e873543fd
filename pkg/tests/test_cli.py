import csv
import json
import subprocess
import sys

import pytest

from mrwitness import cli


def run_cli(*argv):
    """In-process invocation capturing stdout; returns (exit_code, text)."""
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(list(argv))
    return code, buf.getvalue()


class TestBasicCommands:
    def test_decompose(self):
        code, out = run_cli("decompose", "--n", "9")
        assert code == 0 and out == "d=1 s=3\n"

    def test_classify(self):
        code, out = run_cli("classify", "--n", "9", "--w", "8")
        assert code == 0 and out == "w=8 class=minus-one stage=0\n"
        code, out = run_cli("classify", "--n", "9", "--w", "6")
        assert code == 0 and out == "w=6 class=non-coprime gcd=3\n"

    def test_witnesses_counts(self):
        code, out = run_cli("witnesses", "--n", "9")
        assert code == 0
        assert "witnesses=4" in out and "non_coprime=3" in out

    def test_witnesses_prime_is_domain_error(self, capsys):
        code, _ = run_cli("witnesses", "--n", "7")
        assert code == 1
        assert "n is prime: witness set empty" in capsys.readouterr().err

    def test_bounds(self):
        code, out = run_cli("bounds", "--n", "9")
        assert code == 0
        lines = dict(line.split("=", 1) for line in out.strip().splitlines())
        assert lines["strong_liar_count"] == "2"
        assert lines["rabin_ok_liar_def"] == "true"
        assert lines["least_witness"] == "2"
        assert lines["bach_ok"] == "true"
        assert lines["paper_witness_fraction"] == "1/2"

    def test_weyl(self):
        code, out = run_cli("weyl", "--n", "9", "--k", "2")
        rows = out.strip().splitlines()
        assert code == 0 and rows[0] == "k,magnitude,ratio"
        assert len(rows) == 3

    def test_interval(self):
        code, out = run_cli("interval", "--n", "9", "--a", "0", "--b", "0.5")
        assert code == 0 and "fraction=0.5" in out

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["decompose"])  # missing --n
        assert exc.value.code == 2

    def test_unknown_command_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == 2


class TestDataCommands:
    def test_histogram_csv(self, tmp_path):
        out_path = tmp_path / "h.csv"
        code, out = run_cli("histogram", "--n", "9", "--bins", "2", "--out", str(out_path))
        assert code == 0
        rows = list(csv.reader(out_path.open()))
        assert rows == [["bin_index", "count"], ["0", "2"], ["1", "2"]]
        assert "total_witnesses=4" in out

    def test_sums_json_key_order(self):
        code, out = run_cli("sums", "--n", "9", "--k", "1")
        assert code == 0
        payload = json.loads(out)
        assert list(payload) == [
            "n",
            "k",
            "witness_sum",
            "nonwitness_sum",
            "shared_factor_sum",
            "dth_root_sum",
            "minus_one_sum",
            "per_stage_sums",
            "stage_duplicates",
            "residual_total",
            "residual_partition",
        ]
        assert payload["residual_total"] < 1e-9
        assert list(payload["witness_sum"]) == ["re", "im", "term_count", "error_budget"]

    def test_ramanujan(self):
        code, out = run_cli("ramanujan", "--n", "9", "--k", "3")
        assert code == 0
        assert "closed=-3" in out and "agrees=true" in out

    def test_gauss(self):
        code, out = run_cli("gauss", "--n", "9", "--char", "3", "--k", "1")
        assert code == 0
        assert "path=vanishing" in out and "agrees_with_brute=true" in out

    def test_gauss_power_flag(self):
        # chi_1^3 = chi_3 mod 9
        code, out = run_cli("gauss", "--n", "9", "--char", "1", "--k", "1", "--power", "3")
        assert code == 0 and "char_index=3" in out

    def test_cancel(self):
        code, out = run_cli("cancel", "--n", "9", "--alpha", "2", "--b", "7", "--k", "1")
        assert code == 0
        assert "solution_count=2" in out and "agrees=true" in out

    def test_determinism(self, tmp_path):
        a = run_cli("sums", "--n", "45", "--k", "3")
        b = run_cli("sums", "--n", "45", "--k", "3")
        assert a == b
        h1 = tmp_path / "a.csv"
        h2 = tmp_path / "b.csv"
        run_cli("histogram", "--n", "225", "--bins", "7", "--out", str(h1))
        run_cli("histogram", "--n", "225", "--bins", "7", "--out", str(h2))
        assert h1.read_bytes() == h2.read_bytes()


class TestScanCommand:
    def test_scan_csv(self, tmp_path):
        cfg = tmp_path / "exp.cfg"
        out_path = tmp_path / "rows.csv"
        cfg.write_text(
            "# demo experiment\n"
            "n_values = 9, 15, 7\n"
            "k_max = 2\n"
            "bins = 2\n"
            f"output_path = {out_path}\n"
            "output_format = csv\n"
        )
        code, _ = run_cli("scan", "--config", str(cfg))
        assert code == 0
        rows = list(csv.reader(out_path.open()))
        assert rows[0] == [
            "n",
            "witness_count",
            "witness_fraction",
            "star_discrepancy",
            "least_witness",
            "weyl_ratio_1",
            "weyl_ratio_2",
            "flatness",
            "error",
        ]
        assert rows[1][0] == "9" and rows[1][1] == "4"
        assert rows[3][0] == "7" and rows[3][-1] != ""  # error row, scan continued
        assert "runtime" not in rows[0]  # timing is stderr-only

    def test_scan_json_and_magnitudes(self, tmp_path):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("n_magnitudes = 1000\nk_max = 1\noutput_format = json\n")
        code, out = run_cli("scan", "--config", str(cfg))
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["n"] == 1001

    def test_scan_range(self, tmp_path):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("n_range = 9..27\nk_max = 1\n")
        code, out = run_cli("scan", "--config", str(cfg))
        assert code == 0
        ns = [row.split(",")[0] for row in out.strip().splitlines()[1:]]
        assert ns == ["9", "15", "21", "25", "27"]

    def test_bad_config_is_usage_error(self, tmp_path):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("nonsense_key = 1\nn_values = 9\n")
        code, _ = run_cli("scan", "--config", str(cfg))
        assert code == 2
        cfg.write_text("k_max = 2\n")  # no n source
        code, _ = run_cli("scan", "--config", str(cfg))
        assert code == 2

    def test_scan_checks_run(self, tmp_path):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("n_values = 9\nchecks = figure1\n")
        code, out = run_cli("scan", "--config", str(cfg))
        assert code == 0
        assert "PASS figure1" in out


class TestVerifyCommand:
    def test_single_suite_pass(self):
        code, out = run_cli("verify", "--suite", "figure1")
        assert code == 0
        assert out.startswith("PASS figure1")

    def test_findings_csv(self, tmp_path):
        out_path = tmp_path / "findings.csv"
        code, out = run_cli("verify", "--suite", "trend", "--out", str(out_path))
        assert code == 0
        rows = list(csv.reader(out_path.open()))
        assert rows[0][0] == "suite"
        assert len(rows) == 5  # header + one row per magnitude

    def test_unknown_suite_rejected(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--suite", "nope"])
        assert exc.value.code == 2


class TestEntryPoint:
    def test_subprocess_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "mrwitness.cli", "decompose", "--n", "25"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "d=3 s=3\n"


class TestThreads:
    def test_env_var_fallback(self, monkeypatch):
        from mrwitness import concurrency

        monkeypatch.setenv("WITNESS_THREADS", "3")
        concurrency.set_thread_count(None)
        assert concurrency.thread_count() == 3
        concurrency.set_thread_count(2)  # flag wins over the env var
        assert concurrency.thread_count() == 2
        assert concurrency.thread_count(override=5) == 5
        concurrency.set_thread_count(None)

    def test_flag_parses(self):
        code, out = run_cli("--threads", "1", "decompose", "--n", "9")
        assert code == 0 and out == "d=1 s=3\n"
        from mrwitness import concurrency

        concurrency.set_thread_count(None)
