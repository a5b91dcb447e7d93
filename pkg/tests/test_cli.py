# tests/test_cli.py
"""Tests for the spinpair command line."""

import math
from pathlib import Path

import pytest

from spinpair.cli import CounterexampleAngle
from spinpair.cli import InlineSchmidt
from spinpair.cli import StateFileSource
from spinpair.cli import main
from spinpair.cli import parse_args
from spinpair.hamiltonian import HamiltonianParams

PI = "3.141592653589793"
QUARTER_PI = "0.7853981633974483"

PRODUCT_FALSIFY = [
    "falsify",
    "--alpha", "0",
    "--beta", "0",
    "--n-theta", "0",
    "--n-phi", "0",
    "--m-theta", PI,
    "--m-phi", "0",
    "--lambda", "1",
    "--t-end", PI,
]  # fmt: skip


def usage_exit(argv: list[str]) -> int:
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    return int(exc_info.value.code)


class TestParseArgs:
    """Test flag mapping and defaults."""

    def test_counterexample_config(self):
        """Flags map onto the Heisenberg setup and a 201-point grid."""
        config = parse_args(["counterexample", "--a", QUARTER_PI, "--lambda", "1", "--t-end", PI])
        assert config.command == "counterexample"
        assert config.hamiltonian == HamiltonianParams.heisenberg(1.0)
        assert config.grid is not None
        assert (config.grid.t_start, config.grid.t_end, config.grid.samples) == (0.0, math.pi, 201)
        assert config.state_source == CounterexampleAngle(math.pi / 4)
        assert config.output is None

    def test_inline_schmidt_defaults(self):
        """Omitted beta and azimuths default to zero."""
        config = parse_args(
            ["evolve", "--alpha", "1", "--n-theta", "0.5", "--m-theta", "2", "--lambda", "1", "--t-end", "1"]
        )
        source = config.state_source
        assert isinstance(source, InlineSchmidt)
        assert source.params.beta == 0.0
        assert source.params.n0.phi == 0.0

    def test_falsify_tolerance(self, singlet_file: Path):
        """--tolerance and --state-file reach the config."""
        config = parse_args(
            ["falsify", "--state-file", str(singlet_file), "--lambda", "1", "--t-end", "1", "--tolerance", "1e-6"]
        )
        assert config.tolerance == 1e-6
        assert config.state_source == StateFileSource(singlet_file)

    def test_sweep_default_angles(self):
        """--a-count spreads angles evenly over [0, pi]."""
        config = parse_args(["sweep", "--lambda", "1", "--t-end", "1", "--a-count", "5"])
        assert config.a_values == pytest.approx((0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi))

    def test_debug_flag(self, singlet_file: Path):
        """--debug is a top-level flag."""
        assert parse_args(["--debug", "schmidt", "--state-file", str(singlet_file)]).debug


class TestUsageErrors:
    """Every usage error exits with code 2 and names the flag."""

    def test_no_state_source(self, capsys):
        """A command needing a state fails without one."""
        assert usage_exit(["evolve", "--lambda", "1", "--t-end", "1"]) == 2
        assert "state source" in capsys.readouterr().err

    def test_conflicting_sources(self, capsys, singlet_file: Path):
        """Two state sources are named in the error."""
        argv = ["evolve", "--a", "1", "--state-file", str(singlet_file), "--lambda", "1", "--t-end", "1"]
        assert usage_exit(argv) == 2
        err = capsys.readouterr().err
        assert "--state-file" in err and "--a" in err

    def test_malformed_number(self, capsys):
        """A non-numeric value names its flag."""
        assert usage_exit(["counterexample", "--a", "x", "--lambda", "1", "--t-end", "1"]) == 2
        assert "--a" in capsys.readouterr().err

    def test_unknown_flag(self):
        """Unknown flags are usage errors."""
        assert usage_exit(["counterexample", "--a", "1", "--lambda", "1", "--t-end", "1", "--bogus"]) == 2

    def test_missing_required(self, capsys):
        """A missing --t-end is reported."""
        assert usage_exit(["counterexample", "--a", "1", "--lambda", "1"]) == 2
        assert "--t-end" in capsys.readouterr().err

    def test_incomplete_inline_state(self, capsys):
        """Inline Schmidt input needs --n-theta."""
        assert usage_exit(["evolve", "--alpha", "1", "--lambda", "1", "--t-end", "1"]) == 2
        assert "--n-theta" in capsys.readouterr().err

    def test_angle_out_of_domain(self):
        """a = 4 is outside [0, pi]."""
        assert usage_exit(["counterexample", "--a", "4", "--lambda", "1", "--t-end", "1"]) == 2

    def test_reversed_grid(self):
        """t_start after t_end is a usage error."""
        assert usage_exit(["counterexample", "--a", "1", "--lambda", "1", "--t-start", "2", "--t-end", "1"]) == 2

    def test_infinite_value(self):
        """Infinite parameters are rejected."""
        assert usage_exit(["counterexample", "--a", "1", "--lambda", "inf", "--t-end", "1"]) == 2


class TestCounterexampleCommand:
    """Test the counterexample subcommand end to end."""

    def test_summary_reports_agreement(self, capsys):
        """CSV on stdout, agreement summary last on stderr."""
        code = main(["counterexample", "--a", QUARTER_PI, "--lambda", "1", "--t-end", PI])
        captured = capsys.readouterr()
        assert code == 0
        body = [line for line in captured.out.splitlines() if not line.startswith("#")]
        assert body[0] == "t,entropy,alpha,beta,alpha_closed,beta_closed,gw_fidelity"
        assert len(body) == 202
        assert captured.err.splitlines()[-1].startswith("max|cos(alpha)-closed| < 1e-9")

    def test_out_file_moves_summary_to_stdout(self, capsys, tmp_path: Path):
        """With --out the summary moves to stdout."""
        out = tmp_path / "traj.csv"
        code = main(["counterexample", "--a", "1.2", "--lambda", "1", "--t-end", PI, "--out", str(out)])
        assert code == 0
        assert out.read_text(encoding="utf-8").count("\n") > 201
        assert capsys.readouterr().out.splitlines()[-1].startswith("max|cos(alpha)-closed| < 1e-9")

    def test_field_is_rejected(self, capsys):
        """A Zeeman field leaves no closed form to compare."""
        code = main(["counterexample", "--a", "1", "--lambda", "1", "--omega1", "0.5", "--t-end", "1"])
        assert code == 2
        assert "Error:" in capsys.readouterr().err


class TestFalsifyCommand:
    """Test falsify verdicts and exit codes."""

    def test_product_state_fails(self, capsys):
        """|+z>|-z> deviates by a full bit and exits 3."""
        code = main(PRODUCT_FALSIFY)
        out = capsys.readouterr().out
        assert code == 3
        deviation_line = next(line for line in out.splitlines() if "max_entropy_deviation" in line)
        assert "1.0000000000" in deviation_line
        assert "FAILS" in out

    def test_counterexample_state_fails(self, tmp_path: Path, capsys):
        """--a pi/4 writes the report CSV and prints the text report."""
        out = tmp_path / "report.csv"
        code = main(["falsify", "--a", QUARTER_PI, "--lambda", "1", "--t-end", PI, "--out", str(out)])
        assert code == 3
        header, row = out.read_text(encoding="utf-8").splitlines()
        assert header == "min_fidelity,argmin_t,max_entropy_deviation,argmax_t,verdict"
        assert float(row.split(",")[0]) == pytest.approx(math.sqrt(0.5), abs=1e-9)
        assert "0.7071067812" in capsys.readouterr().out

    def test_no_interaction_holds(self, capsys):
        """lambda = 0 exits 0 with HOLDS."""
        argv = [
            "falsify", "--alpha", "1.1", "--beta", "0.4",
            "--n-theta", "0.7", "--n-phi", "2", "--m-theta", "2.2", "--m-phi", "5",
            "--omega1", "1.3", "--omega2", "-0.6", "--lambda", "0", "--t-end", "6.283185307179586",
        ]  # fmt: skip
        assert main(argv) == 0
        assert "HOLDS" in capsys.readouterr().out


class TestSchmidtCommand:
    """Test the schmidt subcommand and its I/O failures."""

    def test_singlet(self, singlet_file: Path, capsys):
        """The singlet reports one bit."""
        assert main(["schmidt", "--state-file", str(singlet_file)]) == 0
        out = capsys.readouterr().out
        entropy_line = next(line for line in out.splitlines() if "entropy" in line)
        assert "1.0000000000" in entropy_line

    def test_missing_file_exits_one(self, tmp_path: Path, capsys):
        """An absent state file is an I/O failure."""
        assert main(["schmidt", "--state-file", str(tmp_path / "nope.txt")]) == 1
        assert "Error:" in capsys.readouterr().err

    def test_malformed_file_exits_one(self, tmp_path: Path):
        """A truncated state file is an I/O failure."""
        path = tmp_path / "bad.txt"
        path.write_text("1 0\n", encoding="utf-8")
        assert main(["schmidt", "--state-file", str(path)]) == 1

    def test_debug_logs_to_stderr(self, singlet_file: Path, capsys):
        """Debug events never reach stdout."""
        assert main(["--debug", "schmidt", "--state-file", str(singlet_file)]) == 0
        captured = capsys.readouterr()
        assert "schmidt_decomposed" in captured.err
        assert "schmidt_decomposed" not in captured.out


class TestEvolveCommand:
    """Test evolve output files."""

    def test_byte_identical_files(self, singlet_file: Path, tmp_path: Path):
        """Two runs write identical bytes."""
        argv = ["evolve", "--state-file", str(singlet_file), "--omega1", "1", "--lambda", "0.5", "--t-end", "10"]
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main([*argv, "--out", str(first)]) == 0
        assert main([*argv, "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_unwritable_output_exits_one(self, tmp_path: Path, capsys):
        """A missing output directory exits 1."""
        out = tmp_path / "missing-dir" / "traj.csv"
        assert main(["evolve", "--a", "1", "--lambda", "1", "--t-end", "1", "--out", str(out)]) == 1
        assert "Error:" in capsys.readouterr().err


class TestSweepCommand:
    """Test the entanglement sweep table."""

    def test_explicit_angles(self, capsys):
        """--a-values gives one row per angle."""
        code = main(["sweep", "--a-values", "0,1.5707963267948966", "--lambda", "1", "--t-end", PI])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        body = [line for line in lines if not line.startswith("#")]
        assert body[0] == "a,entropy_initial,entropy_min,entropy_max,max_entropy_deviation"
        assert len(body) == 3
        product = body[2].split(",")
        assert float(product[3]) == pytest.approx(1.0, abs=1e-9)
