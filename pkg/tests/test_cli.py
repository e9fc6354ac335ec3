import json

import numpy as np
import pytest

from grovercorr.cli import build_parser, main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSweep:
    def test_two_qubit_sweep(self, capsys):
        code, out, _ = run_cli(["sweep", "--n", "2", "--rmax", "1", "--grid", "16"], capsys)
        assert code == 0
        lines = out.strip().split("\n")
        header = lines[0].split(",")
        assert header[:6] == ["r", "theta_r", "a", "b", "P", "rate"]
        assert len(lines) == 3  # header + r=0, r=1
        row1 = dict(zip(header, lines[2].split(",")))
        assert float(row1["P"]) == pytest.approx(1.0, abs=1e-12)

    def test_columns_follow_partition_flag(self, capsys):
        code, out, _ = run_cli(
            ["sweep", "--n", "4", "--rmax", "0", "--grid", "16", "--partition", "1:rest"],
            capsys,
        )
        header = out.strip().split("\n")[0].split(",")
        assert "MI_1rest" in header and "MI_11" not in header

    def test_initial_row_uncorrelated(self, capsys):
        code, out, _ = run_cli(["sweep", "--n", "6", "--rmax", "0", "--grid", "32"], capsys)
        lines = out.strip().split("\n")
        header = lines[0].split(",")
        row = dict(zip(header, lines[1].split(",")))
        for column in (
            "C11_closed", "C11_wootters", "EOF_11", "MI_11", "CC_11", "QD_11",
            "MI_1rest", "CC_1rest", "QD_1rest", "C_1", "C_2", "C_3",
        ):
            assert abs(float(row[column])) <= 1e-9, column

    def test_default_rmax_and_k_list(self, capsys):
        code, out, _ = run_cli(
            ["sweep", "--n", "5", "--grid", "16", "--partition", "1:1"], capsys
        )
        lines = out.strip().split("\n")
        assert len(lines) == 2 + 2 * 4  # header + r in [0, 2R], R = 4
        assert lines[0].split(",")[-2:] == ["C_1", "C_2"]

    def test_rows_parse_finite(self, capsys):
        code, out, _ = run_cli(["sweep", "--n", "5", "--rmax", "8", "--grid", "16"], capsys)
        for line in out.strip().split("\n")[1:]:
            values = [float(x) for x in line.split(",")]
            assert all(np.isfinite(values))

    def test_json_matches_csv(self, capsys, tmp_path):
        args = ["sweep", "--n", "4", "--rmax", "2", "--grid", "16"]
        _, csv_out, _ = run_cli(args, capsys)
        _, json_out, _ = run_cli(args + ["--format", "json"], capsys)
        header = csv_out.strip().split("\n")[0].split(",")
        rows = json_out.strip()
        payload = json.loads(rows)
        assert [list(entry) for entry in payload] == [header] * len(payload)
        csv_row = dict(zip(header, csv_out.strip().split("\n")[1].split(",")))
        for key, value in payload[0].items():
            assert float(csv_row[key]) == pytest.approx(value, abs=1e-12)

    def test_deterministic_output_files(self, tmp_path, capsys):
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        for path in (first, second):
            code, _, _ = run_cli(
                ["sweep", "--n", "5", "--grid", "32", "--output", str(path)], capsys
            )
            assert code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_pair_columns_track_search_window_peak(self, capsys, tmp_path):
        path = tmp_path / "n11.csv"
        code, _, _ = run_cli(
            ["sweep", "--n", "11", "--rmax", "35", "--grid", "16", "--k-list", "1",
             "--partition", "1:1", "--output", str(path)],
            capsys,
        )
        lines = path.read_text().strip().split("\n")
        header = lines[0].split(",")
        closed = [float(dict(zip(header, ln.split(",")))["C11_closed"]) for ln in lines[1:]]
        peak = int(np.argmax(closed))
        assert peak in (17, 18)
        assert closed[peak] == pytest.approx(0.0216, abs=0.0005)

    def test_bad_k_list_exits_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["sweep", "--n", "4", "--k-list", "3"])
        assert err.value.code == 2

    def test_unknown_partition_exits_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["sweep", "--n", "4", "--partition", "2:2"])
        assert err.value.code == 2


class TestVerify:
    def test_small_register_passes(self, capsys):
        code, out, _ = run_cli(["verify", "--n", "4", "--grid", "32"], capsys)
        assert code == 0
        assert "FAIL" not in out
        assert "reduced matrix k=1" in out

    def test_trivial_two_qubits(self, capsys):
        code, out, _ = run_cli(["verify", "--n", "2", "--grid", "16"], capsys)
        assert code == 0

    def test_nonzero_target(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--n", "4", "--grid", "32", "--target", "11"], capsys
        )
        assert code == 0

    def test_capacity_exit_three(self, capsys):
        code, _, err = run_cli(["verify", "--n", "13"], capsys)
        assert code == 3
        assert "capacity" in err

    def test_impossible_tolerance_fails(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--n", "3", "--grid", "16", "--tol-matrix", "1e-30"], capsys
        )
        assert code == 1
        assert "FAIL" in out


class TestPeaks:
    def test_table_rows(self, capsys):
        code, out, _ = run_cli(["peaks", "--n-range", "4:6"], capsys)
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 4  # header + three rows
        row4 = lines[1].split()
        assert row4[0] == "4"
        assert row4[2:5] == ["3", "1", "1"]  # R, r1, r2

    def test_eleven_flags_formula_numeric_gap(self, capsys):
        code, out, _ = run_cli(["peaks", "--n-range", "11:11"], capsys)
        row = out.strip().split("\n")[1]
        assert " 17 " in row  # r1 = r2 = 17 from the rounded formulas
        assert "argmax 18 != r2" in row  # numeric concurrence peak sits at 18

    def test_bad_range_exits_two(self, capsys):
        for bad in ("6:4", "1:5", "2:61", "abc"):
            with pytest.raises(SystemExit) as err:
                main(["peaks", "--n-range", bad])
            assert err.value.code == 2


class TestMatrix:
    def test_four_qubit_dump(self, capsys):
        code, out, _ = run_cli(["matrix", "--n", "4", "--r", "1", "--k", "2"], capsys)
        assert code == 0
        assert "diag0    = 0.578125" in out
        assert "offdiag0 = 0.234375" in out
        assert "bulk     = 0.140625" in out
        assert "trace = 1.000000000000" in out

    def test_uniform_single_qubit(self, capsys):
        code, out, _ = run_cli(["matrix", "--n", "5", "--r", "0", "--k", "1"], capsys)
        assert code == 0
        assert out.count("0.5") >= 4

    def test_k_equal_n_exits_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["matrix", "--n", "4", "--r", "1", "--k", "4"])
        assert err.value.code == 2


class TestParser:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as err:
            build_parser().parse_args([])
        assert err.value.code == 2
