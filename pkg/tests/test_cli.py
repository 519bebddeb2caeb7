import subprocess
import sys

import pytest

from momqmc.cli import main
from momqmc.harness import read_csv
from momqmc.integrands import keister_exact


class TestExact:
    def test_dim_one_closed_form(self, capsys):
        assert main(["exact", "--dim", "1"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "1.38038844704314"
        assert abs(float(out) - 1.3803884470431430) <= 1e-13

    def test_dim_three_matches_library(self, capsys):
        assert main(["exact", "--dim", "3"]) == 0
        printed = float(capsys.readouterr().out)
        assert printed == pytest.approx(keister_exact(3).value, rel=1e-14)

    def test_unsupported_dim_fails(self, capsys):
        assert main(["exact", "--dim", "40"]) != 0
        assert "error:" in capsys.readouterr().err


class TestRunAndPlot:
    def test_end_to_end(self, tmp_path, capsys):
        out_csv = tmp_path / "results.csv"
        rc = main([
            "run", "--pointset", "lattice", "--dims", "2",
            "--log2n-min", "8", "--log2n-max", "9",
            "--replicates", "3", "--trials", "2", "--seed", "5",
            "--out", str(out_csv),
        ])
        assert rc == 0
        summary = capsys.readouterr().out
        assert "wrote 2 rows" in summary
        assert "/2 cells" in summary  # win-fraction report
        rows = read_csv(out_csv)
        assert len(rows) == 2
        assert all(r.pointset_kind == "lattice" for r in rows)

        outdir = tmp_path / "plots"
        assert main(["plot", "--in", str(out_csv), "--outdir", str(outdir)]) == 0
        assert sorted(p.name for p in outdir.iterdir()) == [
            "lattice_d2_comparison.svg", "lattice_d2_difference.svg",
        ]

    def test_repeat_runs_byte_identical(self, tmp_path):
        args = ["run", "--dims", "2", "--log2n-min", "8", "--log2n-max", "9",
                "--replicates", "3", "--trials", "2", "--seed", "1"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b), "--threads", "3"]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_invalid_range_diagnostic(self, tmp_path, capsys):
        rc = main(["run", "--log2n-min", "10", "--log2n-max", "9",
                   "--out", str(tmp_path / "x.csv")])
        assert rc != 0
        err = capsys.readouterr().err
        assert err.startswith("error:")
        assert "log2n" in err

    def test_unparseable_dims_diagnostic(self, tmp_path, capsys):
        rc = main(["run", "--dims", "2,banana",
                   "--out", str(tmp_path / "x.csv")])
        assert rc != 0
        assert capsys.readouterr().err.startswith("error:")

    def test_unknown_flag_exits_nonzero(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["run", "--frobnicate"])
        assert exc_info.value.code != 0

    def test_unknown_pointset_rejected(self):
        with pytest.raises(SystemExit):
            main(["run", "--pointset", "halton"])

    def test_defaults_match_experiment_settings(self):
        from momqmc.cli import _build_parser

        args = _build_parser().parse_args(["run"])
        assert args.pointset == "lattice"
        assert args.dims == "2,3,5,8"
        assert (args.log2n_min, args.log2n_max) == (8, 19)
        assert args.replicates == 11
        assert args.trials == 25
        assert args.seed == 0


class TestPoints:
    def test_dump_shape_and_range(self, capsys):
        assert main(["points", "--pointset", "dnb2", "--dim", "3",
                     "--log2n", "4", "--seed", "9"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 16
        for line in lines:
            cells = line.split(",")
            assert len(cells) == 3
            for cell in cells:
                value = float(cell)
                assert 0.0 <= value < 1.0

    def test_deterministic_given_seed(self, capsys):
        main(["points", "--dim", "2", "--log2n", "3", "--seed", "4"])
        first = capsys.readouterr().out
        main(["points", "--dim", "2", "--log2n", "3", "--seed", "4"])
        assert capsys.readouterr().out == first
        main(["points", "--dim", "2", "--log2n", "3", "--seed", "5"])
        assert capsys.readouterr().out != first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "momqmc", "exact", "--dim", "1"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1.38038844704314"
