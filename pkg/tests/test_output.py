# tests/test_output.py
"""Tests for CSV and plain-text output formatters."""

import math

import pytest

from spinpair.dynamics import SwingRow
from spinpair.dynamics import TimeGrid
from spinpair.dynamics import counterexample_initial
from spinpair.dynamics import simulate_trajectory
from spinpair.falsifier import FalsificationReport
from spinpair.falsifier import Verdict
from spinpair.output import format_discrepancy_lines
from spinpair.output import format_float
from spinpair.output import format_report_csv
from spinpair.output import format_report_text
from spinpair.output import format_schmidt_text
from spinpair.output import format_swing_csv
from spinpair.output import format_trajectory_csv
from spinpair.schmidt import entanglement_entropy
from spinpair.schmidt import schmidt_decompose


@pytest.fixture
def sample_report() -> FalsificationReport:
    """A FAILS report from the a = pi/4 setup."""
    return FalsificationReport(
        min_fidelity=math.sqrt(0.5),
        argmin_t=math.pi / 2,
        max_entropy_deviation=0.3991242,
        argmax_t=math.pi / 4,
        verdict=Verdict.FAILS,
        grid=TimeGrid(0.0, math.pi, 201),
        tolerance=1e-9,
    )


class TestFormatFloat:
    """Test the shortest round-trip float format."""

    def test_seventeen_significant_digits(self):
        """Floats round-trip through their text form."""
        assert format_float(0.1) == "0.10000000000000001"
        assert float(format_float(1 / 3)) == 1 / 3

    def test_none_is_empty(self):
        """Missing values are empty fields."""
        assert format_float(None) == ""

    def test_integral_value(self):
        """Integral values drop the fraction."""
        assert format_float(2.0) == "2"


class TestTrajectoryCsv:
    """Test trajectory CSV layout."""

    def test_metadata_then_header_then_rows(self, heisenberg):
        """Comment lines precede the header and one row per time."""
        traj = simulate_trajectory(heisenberg, counterexample_initial(1.0), TimeGrid(0.0, 1.0, 3))
        lines = format_trajectory_csv(traj).splitlines()
        meta = [line for line in lines if line.startswith("#")]
        body = [line for line in lines if not line.startswith("#")]
        assert "# lam=1" in meta
        assert "# samples=3" in meta
        assert any(line.startswith("# counterexample_a=") for line in meta)
        assert any(line.startswith("# psi0[+-]=") for line in meta)
        assert lines.index(body[0]) == len(meta)
        assert body[0] == "t,entropy,alpha,beta,alpha_closed,beta_closed,gw_fidelity"
        assert len(body) == 4

    def test_absent_columns_are_empty(self, heisenberg, random_state):
        """Closed-form and ansatz columns are blank outside the family."""
        traj = simulate_trajectory(heisenberg, random_state(), TimeGrid(0.0, 1.0, 2))
        rows = [line for line in format_trajectory_csv(traj).splitlines() if not line.startswith("#")][1:]
        for row in rows:
            fields = row.split(",")
            assert len(fields) == 7
            assert fields[4:] == ["", "", ""]

    def test_byte_identical(self, heisenberg):
        """Formatting is deterministic."""
        psi = counterexample_initial(0.4)
        grid = TimeGrid(0.0, 2.0, 11)
        first = format_trajectory_csv(simulate_trajectory(heisenberg, psi, grid))
        second = format_trajectory_csv(simulate_trajectory(heisenberg, psi, grid))
        assert first == second

    def test_extra_metadata(self, heisenberg):
        """Extra metadata becomes comment lines."""
        traj = simulate_trajectory(heisenberg, counterexample_initial(1.0), TimeGrid(0.0, 1.0, 2))
        assert "# source=test\n" in format_trajectory_csv(traj, extra={"source": "test"})


class TestReportFormats:
    """Test falsification report CSV and text."""

    def test_csv_row(self, sample_report):
        """One header and one row ending in the verdict."""
        lines = format_report_csv(sample_report).splitlines()
        assert lines[0] == "min_fidelity,argmin_t,max_entropy_deviation,argmax_t,verdict"
        assert lines[1].endswith(",FAILS")
        assert float(lines[1].split(",")[0]) == math.sqrt(0.5)

    def test_text_report(self, sample_report):
        """Ten-digit values, no escape codes, lines within 80 columns."""
        text = format_report_text(sample_report)
        assert "min_fidelity" in text
        assert "0.7071067812" in text
        assert "1.5707963268" in text
        assert "FAILS" in text
        assert "\x1b[" not in text
        assert all(len(line) <= 80 for line in text.splitlines())


class TestSchmidtText:
    """Test the Schmidt summary."""

    def test_singlet_entropy(self, singlet):
        """The singlet prints one bit."""
        text = format_schmidt_text(schmidt_decompose(singlet), entanglement_entropy(singlet))
        entropy_line = next(line for line in text.splitlines() if "entropy" in line)
        assert "1.0000000000" in entropy_line
        assert "alpha" in text
        assert "m_theta" in text


class TestSwingCsv:
    """Test the sweep table."""

    def test_layout(self):
        """Metadata, header, then rows."""
        rows = [SwingRow(a=0.5, entropy_initial=0.2, entropy_min=0.1, entropy_max=1.0, max_entropy_deviation=0.8)]
        lines = format_swing_csv(rows, {"lam": 1.0, "samples": 5}).splitlines()
        assert lines[:2] == ["# lam=1", "# samples=5"]
        assert lines[2] == "a,entropy_initial,entropy_min,entropy_max,max_entropy_deviation"
        assert lines[3].startswith("0.5,")


class TestDiscrepancyLines:
    """Test the closed-form agreement summary."""

    def test_within_tolerance(self):
        """Both bounds reported as met."""
        text = format_discrepancy_lines(2e-12, 3e-11, 1e-9, 1e-8)
        lines = text.splitlines()
        assert lines[0].startswith("max|beta-closed| < 1e-8")
        assert lines[-1].startswith("max|cos(alpha)-closed| < 1e-9")

    def test_outside_tolerance(self):
        """An alpha miss is reported with >=."""
        text = format_discrepancy_lines(1e-3, 0.0, 1e-9, 1e-8)
        assert text.splitlines()[-1].startswith("max|cos(alpha)-closed| >= 1e-9")
