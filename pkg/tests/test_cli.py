"""Tests for the command-line interface: outputs, formats and exit codes."""

import json

import numpy as np
import pytest

from memchan import __version__, normalized_information, preset_probs
from memchan.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_sq2_perfect_memory(capsys):
    code, out, _ = run_cli(capsys, "info", "--channel", "depolarizing", "--p", "0.15",
                           "--scheme", "sq2", "--mu", "1")
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("bits per use:"))
    assert float(line.split(":")[1]) == 2.0


def test_info_phase_damping_bell(capsys):
    code, out, _ = run_cli(capsys, "info", "--channel", "phase-damping", "--p", "0.5",
                           "--scheme", "bell", "--mu", "0")
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("bits per use:"))
    # (2 - H(0.625)) / 2
    assert float(line.split(":")[1]) == pytest.approx(0.5227829985375174, abs=1e-12)


def test_info_json_round_trips_inputs_bit_exactly(capsys):
    code, out, _ = run_cli(capsys, "info", "--p0", "0.85", "--px", "0.05",
                           "--py", "0.05", "--pz", "0.05",
                           "--scheme", "at", "--mu", "0.371", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"inputs", "results", "version"}
    assert doc["version"] == __version__
    assert doc["inputs"]["command"] == "info"
    assert doc["inputs"]["mu"] == 0.371
    assert doc["inputs"]["channel"]["probs"] == {
        "p0": 0.85, "px": 0.05, "py": 0.05, "pz": 0.05}
    # document survives a full serialization round trip unchanged
    assert json.loads(json.dumps(doc)) == doc


def test_info_rejects_unnormalized_probs(capsys):
    code, out, err = run_cli(capsys, "info", "--p0", "0.5", "--px", "0.6",
                             "--py", "0", "--pz", "0", "--scheme", "bell", "--mu", "0")
    assert code == 2
    assert out == ""
    assert "error:" in err and "sum" in err


def test_info_rejects_conflicting_channel_flags(capsys):
    code, _, err = run_cli(capsys, "info", "--channel", "depolarizing", "--p", "0.1",
                           "--p0", "1", "--px", "0", "--py", "0", "--pz", "0",
                           "--scheme", "bell", "--mu", "0")
    assert code == 2 and "not both" in err
    code, _, err = run_cli(capsys, "info", "--scheme", "bell", "--mu", "0")
    assert code == 2 and "no channel" in err


def test_info_rejects_bad_mu_and_preset(capsys):
    code, _, _ = run_cli(capsys, "info", "--channel", "depolarizing", "--p", "0.1",
                         "--scheme", "bell", "--mu", "1.5")
    assert code == 2
    code, _, _ = run_cli(capsys, "info", "--channel", "nope", "--p", "0.1",
                         "--scheme", "bell", "--mu", "0.5")
    assert code == 2  # argparse choice error


def test_sweep_two_step_grid(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--channel", "depolarizing", "--p", "0.15",
                           "--schemes", "bell,sq1", "--mu-steps", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "mu,bell,sq1"
    assert len(lines) == 3
    assert lines[1].startswith("0,")
    assert lines[2].startswith("1,")


def test_sweep_values_reparse_to_printed_precision(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--channel", "two-pauli", "--p", "0.5",
                           "--schemes", "product-x,bell", "--mu-steps", "5")
    assert code == 0
    probs = preset_probs("two-pauli", 0.5)
    rows = out.strip().split("\n")[1:]
    for row in rows:
        mu_text, px_text, bell_text = row.split(",")
        mu = float(mu_text)
        for kind, text in (("product-x", px_text), ("bell", bell_text)):
            exact = normalized_information(kind, probs, mu)
            assert float(text) == float(format(exact, ".12g"))


def test_sweep_deterministic_byte_output(tmp_path, capsys):
    args = ("sweep", "--channel", "depolarizing", "--p", "0.15",
            "--mu-steps", "11", "--format", "csv")
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert run_cli(capsys, *args, "--output", str(first))[0] == 0
    assert run_cli(capsys, *args, "--output", str(second))[0] == 0
    a = first.read_bytes()
    assert a == second.read_bytes()
    assert b"\r" not in a and a.decode("utf-8").startswith("mu,")


def test_sweep_csv_brackets_first_figure_threshold(tmp_path, capsys):
    out_path = tmp_path / "fig.csv"
    code, _, _ = run_cli(capsys, "sweep", "--channel", "depolarizing", "--p", "0.15",
                         "--mu-steps", "101", "--output", str(out_path))
    assert code == 0
    rows = out_path.read_text().strip().split("\n")
    header = rows[0].split(",")
    i_sq1, i_sq2 = header.index("sq1"), header.index("sq2")
    table = [list(map(float, row.split(","))) for row in rows[1:]]
    diffs = [row[i_sq1] - row[i_sq2] for row in table]
    flips = [i for i in range(len(diffs) - 1) if diffs[i] * diffs[i + 1] < 0]
    assert len(flips) == 1
    assert table[flips[0]][0] <= 0.171 <= table[flips[0] + 1][0]


def test_sweep_brackets_two_pauli_crossing(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--channel", "two-pauli", "--p", "0.5",
                           "--schemes", "product-x,bell", "--mu-steps", "101")
    assert code == 0
    rows = [list(map(float, row.split(","))) for row in out.strip().split("\n")[1:]]
    diffs = [(mu, px - bell) for mu, px, bell in rows]
    flips = [i for i in range(len(diffs) - 1) if diffs[i][1] * diffs[i + 1][1] < 0]
    assert len(flips) == 1
    assert diffs[flips[0]][0] <= 0.409 <= diffs[flips[0] + 1][0]


def test_sweep_json_document(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--channel", "bit-flip", "--p", "0.5",
                           "--schemes", "at,sq1", "--mu-steps", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["inputs"]["schemes"] == ["at", "sq1"]
    assert doc["results"]["mu"] == [0.0, 0.5, 1.0]
    np.testing.assert_allclose(doc["results"]["columns"]["at"],
                               doc["results"]["columns"]["sq1"], atol=1e-9)


def test_sweep_usage_errors(capsys):
    code, _, _ = run_cli(capsys, "sweep", "--channel", "depolarizing", "--p", "0.15",
                         "--mu-steps", "1")
    assert code == 2
    code, _, _ = run_cli(capsys, "sweep", "--channel", "depolarizing", "--p", "0.15",
                         "--schemes", "bell,ghz")
    assert code == 2


def test_sweep_unwritable_output_is_io_error(tmp_path, capsys):
    missing = tmp_path / "no" / "such" / "dir" / "out.csv"
    code, _, err = run_cli(capsys, "sweep", "--channel", "depolarizing", "--p", "0.15",
                           "--mu-steps", "3", "--output", str(missing))
    assert code == 3
    assert "error:" in err


def test_threshold_first_figure(capsys):
    code, out, _ = run_cli(capsys, "threshold", "--channel", "depolarizing",
                           "--p", "0.15", "--pair", "sq1,sq2")
    assert code == 0
    assert float(out.strip()) == pytest.approx(0.171, abs=0.005)
    assert len(out.strip().split(".")[1]) == 6


def test_threshold_none_with_note(capsys):
    code, out, err = run_cli(capsys, "threshold", "--p0", "0.25", "--px", "0.25",
                             "--py", "0.25", "--pz", "0.25", "--pair", "sq1,sq2")
    assert code == 0
    assert out.strip() == "none"
    assert "sq2" in err


def test_threshold_degenerate_pair_reports_none(capsys):
    code, out, err = run_cli(capsys, "threshold", "--channel", "bit-flip", "--p", "0.5",
                             "--pair", "at,sq1")
    assert code == 0
    assert out.strip() == "none"
    assert "coincide" in err


def test_threshold_pair_validation(capsys):
    code, _, _ = run_cli(capsys, "threshold", "--channel", "depolarizing", "--p", "0.15",
                         "--pair", "sq1,sq1")
    assert code == 2
    code, _, _ = run_cli(capsys, "threshold", "--channel", "depolarizing", "--p", "0.15",
                         "--pair", "sq1")
    assert code == 2


def test_threshold_curve_csv_and_max(tmp_path, capsys):
    out_path = tmp_path / "curve.csv"
    code, out, _ = run_cli(capsys, "threshold-curve", "--pair", "sq1,sq2",
                           "--p-min", "0.03", "--p-max", "0.15", "--p-steps", "5",
                           "--output", str(out_path))
    assert code == 0
    rows = out_path.read_text().strip().split("\n")
    assert rows[0] == "p,mu_t"
    assert len(rows) == 6
    assert out.startswith("max mu_t:")


def test_threshold_curve_gap_cells(capsys):
    code, out, err = run_cli(capsys, "threshold-curve", "--pair", "sq1,sq2",
                             "--p-min", "0.25", "--p-max", "0.25", "--p-steps", "2")
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[1] == "0.25," and rows[2] == "0.25,"
    assert "none" in err


def test_threshold_curve_deterministic_byte_output(tmp_path, capsys):
    args = ("threshold-curve", "--pair", "sq1,sq2", "--p-min", "0.05",
            "--p-max", "0.12", "--p-steps", "4")
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert run_cli(capsys, *args, "--output", str(first))[0] == 0
    assert run_cli(capsys, *args, "--output", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()


def test_threshold_curve_usage_errors(capsys):
    code, _, _ = run_cli(capsys, "threshold-curve", "--pair", "sq1,sq2",
                         "--p-min", "0.1", "--p-max", "0.2", "--p-steps", "1")
    assert code == 2
    code, _, _ = run_cli(capsys, "threshold-curve", "--pair", "sq1,sq2",
                         "--p-min", "0.1", "--p-max", "0.4", "--p-steps", "4")
    assert code == 2


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--trials", "2", "--seed", "7")
    assert code == 0
    assert "verification passed" in out


def test_verify_fails_below_floating_noise(capsys):
    code, out, _ = run_cli(capsys, "verify", "--trials", "1", "--seed", "7",
                           "--tolerance", "1e-30")
    assert code == 1
    assert "FAILED" in out and "worst case" in out


def test_verify_zero_trials_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "verify", "--trials", "0")
    assert code == 2


def test_verify_respects_thread_cap(capsys, monkeypatch):
    monkeypatch.setenv("MEMCHAN_THREADS", "1")
    code, out, _ = run_cli(capsys, "verify", "--trials", "1", "--seed", "3")
    assert code == 0 and "verification passed" in out
    monkeypatch.setenv("MEMCHAN_THREADS", "0")
    code, _, err = run_cli(capsys, "verify", "--trials", "1", "--seed", "3")
    assert code == 2 and "MEMCHAN_THREADS" in err


def test_presets_lists_all_six(capsys):
    code, out, _ = run_cli(capsys, "presets")
    assert code == 0
    for name in ("depolarizing", "bit-flip", "phase-flip", "bit-phase-flip",
                 "two-pauli", "phase-damping"):
        assert name in out


def test_unknown_subcommand_is_usage_error(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2


def test_module_entry_point():
    import subprocess
    import sys

    result = subprocess.run([sys.executable, "-m", "memchan", "--version"],
                            capture_output=True, text=True)
    assert result.returncode == 0
    assert result.stdout.strip() == f"memchan {__version__}"
