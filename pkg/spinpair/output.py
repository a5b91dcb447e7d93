# spinpair/output.py
"""Output formatters for spinpair results.

This module provides:
- CSV for trajectories, falsification reports and entanglement sweeps
  ('#' metadata lines with the full parameter set, then header and rows)
- Aligned plain-text blocks rendered with Rich (no color, fixed width)

Identical inputs give byte-identical output: no timestamps, floats at
CSV_SIGNIFICANT_DIGITS significant digits.

Usage:
    from spinpair.output import format_trajectory_csv, format_report_text

    print(format_trajectory_csv(traj), end="")
    print(format_report_text(report), end="")
"""

import csv
from collections.abc import Iterable
from collections.abc import Mapping
from io import StringIO
from typing import Any

from rich import box
from rich.console import Console
from rich.table import Table

from spinpair.config import CSV_SIGNIFICANT_DIGITS
from spinpair.config import REPORT_CSV_HEADER
from spinpair.config import REPORT_TEXT_WIDTH
from spinpair.config import SWING_CSV_HEADER
from spinpair.config import TRAJECTORY_CSV_HEADER
from spinpair.dynamics import SwingRow
from spinpair.dynamics import Trajectory
from spinpair.falsifier import FalsificationReport
from spinpair.qstate import BASIS_LABELS
from spinpair.qstate import TwoQubitState
from spinpair.schmidt import SchmidtForm


def format_float(x: float | None) -> str:
    """17 significant digits; None becomes an empty field."""
    if x is None:
        return ""
    return f"{x:.{CSV_SIGNIFICANT_DIGITS}g}"


def _state_metadata(psi: TwoQubitState) -> dict[str, str]:
    return {
        f"psi0[{label}]": f"{format_float(a.real)} {format_float(a.imag)}"
        for label, a in zip(BASIS_LABELS, psi.amps)
    }


def _write_metadata(buf: StringIO, metadata: Mapping[str, Any]) -> None:
    for key, value in metadata.items():
        text = format_float(value) if isinstance(value, float) else str(value)
        buf.write(f"# {key}={text}\n")


def trajectory_metadata(traj: Trajectory) -> dict[str, Any]:
    meta: dict[str, Any] = dict(traj.params.as_dict())
    meta.update(
        t_start=traj.grid.t_start,
        t_end=traj.grid.t_end,
        samples=traj.grid.samples,
    )
    if traj.counterexample is not None:
        meta["counterexample_a"] = traj.counterexample.a
        meta["counterexample_lambda"] = traj.counterexample.lam
    meta.update(_state_metadata(traj.initial))
    return meta


def format_trajectory_csv(traj: Trajectory, extra: Mapping[str, Any] | None = None) -> str:
    """Trajectory CSV: metadata, header, one row per grid point."""
    buf = StringIO()
    metadata = trajectory_metadata(traj)
    if extra:
        metadata.update(extra)
    _write_metadata(buf, metadata)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRAJECTORY_CSV_HEADER)
    for p in traj.points:
        writer.writerow(
            [
                format_float(p.t),
                format_float(p.entropy),
                format_float(p.alpha),
                format_float(p.beta),
                format_float(p.alpha_closed),
                format_float(p.beta_closed),
                format_float(p.gw_fidelity),
            ]
        )
    return buf.getvalue()


def format_report_csv(report: FalsificationReport) -> str:
    """Header plus the single report row."""
    buf = StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_CSV_HEADER)
    writer.writerow(
        [
            format_float(report.min_fidelity),
            format_float(report.argmin_t),
            format_float(report.max_entropy_deviation),
            format_float(report.argmax_t),
            report.verdict.value,
        ]
    )
    return buf.getvalue()


def format_swing_csv(rows: Iterable[SwingRow], metadata: Mapping[str, Any]) -> str:
    buf = StringIO()
    _write_metadata(buf, metadata)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWING_CSV_HEADER)
    for r in rows:
        writer.writerow(
            [
                format_float(r.a),
                format_float(r.entropy_initial),
                format_float(r.entropy_min),
                format_float(r.entropy_max),
                format_float(r.max_entropy_deviation),
            ]
        )
    return buf.getvalue()


def _render(table: Table) -> str:
    """Render a table to plain text without terminal styling."""
    string_buffer = StringIO()
    console = Console(
        file=string_buffer,
        width=REPORT_TEXT_WIDTH,
        color_system=None,
        force_terminal=False,
        highlight=False,
        emoji=False,
    )
    console.print(table)
    return string_buffer.getvalue()


def _key_value_table(title: str) -> Table:
    table = Table(
        title=title,
        box=box.SIMPLE,
        show_header=True,
        header_style="",
        title_style="",
    )
    table.add_column("quantity")
    table.add_column("value", justify="right")
    table.add_column("at t", justify="right")
    return table


def format_report_text(report: FalsificationReport) -> str:
    """Aligned plain-text falsification report."""
    table = _key_value_table("Product-precession ansatz vs exact evolution")
    table.add_row("min_fidelity", f"{report.min_fidelity:.10f}", f"{report.argmin_t:.10f}")
    table.add_row(
        "max_entropy_deviation",
        f"{report.max_entropy_deviation:.10f}",
        f"{report.argmax_t:.10f}",
    )
    table.add_row("tolerance", f"{report.tolerance:.3e}", "")
    table.add_row(
        "grid",
        f"[{report.grid.t_start:g}, {report.grid.t_end:g}] x {report.grid.samples}",
        "",
    )
    table.add_row("verdict", report.verdict.value, "")
    return _render(table)


def format_schmidt_text(form: SchmidtForm, entropy: float) -> str:
    """Aligned plain-text Schmidt summary of one state."""
    table = Table(title="Schmidt decomposition", box=box.SIMPLE, header_style="", title_style="")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    rows = [
        ("alpha", form.alpha),
        ("beta", form.beta),
        ("n_theta", form.n.theta),
        ("n_phi", form.n.phi),
        ("m_theta", form.m.theta),
        ("m_phi", form.m.phi),
        ("coefficient_1", form.coefficients[0]),
        ("coefficient_2", form.coefficients[1]),
        ("entropy", entropy),
    ]
    for name, value in rows:
        table.add_row(name, f"{value:.10f}")
    return _render(table)


def _compact_sci(x: float) -> str:
    """1e-09 -> 1e-9."""
    mantissa, exponent = f"{x:.0e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def format_discrepancy_lines(alpha_err: float, beta_err: float, alpha_tol: float, beta_tol: float) -> str:
    """Closed-form comparison summary; the cos(alpha) line comes last."""
    beta_rel = "<" if beta_err < beta_tol else ">="
    alpha_rel = "<" if alpha_err < alpha_tol else ">="
    return (
        f"max|beta-closed| {beta_rel} {_compact_sci(beta_tol)} (observed {beta_err:.3e})\n"
        f"max|cos(alpha)-closed| {alpha_rel} {_compact_sci(alpha_tol)} (observed {alpha_err:.3e})\n"
    )
