"""CLI entrypoint for spinpair.

This module provides the main() function that serves as the entry point
for the 'spinpair' command when installed via pip install -e .

Exit codes:
    0  success, or falsification verdict HOLDS
    1  I/O failure (unreadable state file, unwritable output)
    2  usage error (unknown flag, malformed number, conflicting sources)
    3  falsification verdict FAILS, or counterexample closed-form mismatch
"""

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from spinpair.config import CLOSED_FORM_ALPHA_TOL
from spinpair.config import CLOSED_FORM_BETA_TOL
from spinpair.config import DEBUG_ENABLED
from spinpair.config import DEFAULT_ANISOTROPY
from spinpair.config import DEFAULT_FALSIFY_TOL
from spinpair.config import DEFAULT_OMEGA
from spinpair.config import DEFAULT_SAMPLES
from spinpair.config import DEFAULT_SWEEP_COUNT
from spinpair.config import DEFAULT_T_START
from spinpair.config import EXIT_FAILS
from spinpair.config import EXIT_IO
from spinpair.config import EXIT_OK
from spinpair.dynamics import TimeGrid
from spinpair.exceptions import InvalidParameterError
from spinpair.exceptions import SpinPairError
from spinpair.falsifier import AnsatzParams
from spinpair.hamiltonian import HamiltonianParams
from spinpair.logging import LogContext
from spinpair.logging import configure_logging
from spinpair.logging import get_logger
from spinpair.qstate import BlochAngles
from spinpair.qstate import TwoQubitState

log = get_logger(__name__)

COMMANDS = ("evolve", "counterexample", "falsify", "schmidt", "sweep")
INLINE_FLAGS = ("alpha", "beta", "n_theta", "n_phi", "m_theta", "m_phi")


@dataclass(frozen=True)
class InlineSchmidt:
    """State given by Schmidt angle, phase and Bloch directions on the command line."""

    params: AnsatzParams


@dataclass(frozen=True)
class StateFileSource:
    path: Path


@dataclass(frozen=True)
class CounterexampleAngle:
    a: float


StateSource = InlineSchmidt | StateFileSource | CounterexampleAngle


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs; built by parse_args()."""

    command: str
    hamiltonian: HamiltonianParams | None = None
    grid: TimeGrid | None = None
    state_source: StateSource | None = None
    output: Path | None = None
    tolerance: float = DEFAULT_FALSIFY_TOL
    a_values: tuple[float, ...] = ()
    progress: bool = False
    debug: bool = False


def finite_float(text: str) -> float:
    """argparse type: a finite decimal number."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return value


def float_list(text: str) -> tuple[float, ...]:
    """argparse type: comma-separated finite numbers."""
    return tuple(finite_float(part) for part in text.split(",") if part.strip())


def _dynamics_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("Hamiltonian and time grid")
    group.add_argument("--omega1", type=finite_float, default=DEFAULT_OMEGA, help="Larmor frequency of spin 1")
    group.add_argument("--omega2", type=finite_float, default=DEFAULT_OMEGA, help="Larmor frequency of spin 2")
    group.add_argument("--lambda", dest="lam", type=finite_float, required=True, help="Interaction strength")
    group.add_argument("--ax", type=finite_float, default=DEFAULT_ANISOTROPY, help="x anisotropy (default: 1/4)")
    group.add_argument("--ay", type=finite_float, default=DEFAULT_ANISOTROPY, help="y anisotropy (default: 1/4)")
    group.add_argument("--az", type=finite_float, default=DEFAULT_ANISOTROPY, help="z anisotropy (default: 1/4)")
    group.add_argument("--t-start", type=finite_float, default=DEFAULT_T_START, help="First grid time (default: 0)")
    group.add_argument("--t-end", type=finite_float, required=True, help="Last grid time")
    group.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_SAMPLES,
        help=f"Grid points including both ends (default: {DEFAULT_SAMPLES})",
    )
    group.add_argument("--out", type=Path, help="Write output here instead of stdout")
    return parent


def _state_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("initial state (exactly one source)")
    group.add_argument("--alpha", type=finite_float, help="Schmidt angle in [0, pi]")
    group.add_argument("--beta", type=finite_float, help="Schmidt phase in (-pi, pi] (default: 0)")
    group.add_argument("--n-theta", type=finite_float, help="Polar angle of n")
    group.add_argument("--n-phi", type=finite_float, help="Azimuth of n (default: 0)")
    group.add_argument("--m-theta", type=finite_float, help="Polar angle of m")
    group.add_argument("--m-phi", type=finite_float, help="Azimuth of m (default: 0)")
    group.add_argument("--state-file", type=Path, help="State file (four 're im' lines)")
    group.add_argument("--a", type=finite_float, help="Counterexample mixing angle in [0, pi]")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinpair",
        description="Exact two-spin entanglement dynamics and product-precession ansatz checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  spinpair counterexample --a 0.7853981633974483 --lambda 1 --t-end 3.141592653589793
  spinpair falsify --alpha 0 --beta 0 --n-theta 0 --n-phi 0 --m-theta 3.141592653589793 \\
      --m-phi 0 --lambda 1 --t-end 3.141592653589793
  spinpair evolve --state-file singlet.txt --omega1 1 --lambda 0.5 --t-end 10 --out traj.csv
  spinpair schmidt --state-file singlet.txt
  spinpair sweep --a-count 9 --lambda 1 --t-end 3.141592653589793
        """,
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")

    subparsers = parser.add_subparsers(dest="command", required=True, help="Available commands")
    dynamics = _dynamics_parent()
    state = _state_parent()

    subparsers.add_parser(
        "evolve",
        parents=[dynamics, state],
        help="Write the entanglement trajectory of any initial state as CSV",
    )

    counter = subparsers.add_parser(
        "counterexample",
        parents=[dynamics],
        help="Trajectory of cos(a/2)|1,0> + sin(a/2)|0,0> with closed-form columns",
    )
    counter.add_argument("--a", type=finite_float, required=True, help="Mixing angle in [0, pi]")

    falsify = subparsers.add_parser(
        "falsify",
        parents=[dynamics, state],
        help="Compare the product-precession ansatz with exact evolution",
    )
    falsify.add_argument(
        "--tolerance",
        type=finite_float,
        default=DEFAULT_FALSIFY_TOL,
        help=f"HOLDS threshold (default: {DEFAULT_FALSIFY_TOL:g})",
    )

    schmidt = subparsers.add_parser("schmidt", help="Schmidt data and entropy of a state file")
    schmidt.add_argument("--state-file", type=Path, required=True, help="State file")
    schmidt.add_argument("--out", type=Path, help="Write output here instead of stdout")

    sweep = subparsers.add_parser(
        "sweep",
        parents=[dynamics],
        help="Entropy range of the counterexample across mixing angles",
    )
    sweep.add_argument("--a-values", type=float_list, help="Comma-separated mixing angles")
    sweep.add_argument(
        "--a-count",
        type=int,
        default=DEFAULT_SWEEP_COUNT,
        help=f"Uniform mixing angles over [0, pi] (default: {DEFAULT_SWEEP_COUNT})",
    )
    sweep.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    return parser


def _state_source(args: argparse.Namespace, parser: argparse.ArgumentParser) -> StateSource:
    inline_given = [f for f in INLINE_FLAGS if getattr(args, f, None) is not None]
    sources = []
    if inline_given:
        sources.append("--alpha/--beta/--n-*/--m-*")
    if args.state_file is not None:
        sources.append("--state-file")
    if args.a is not None:
        sources.append("--a")
    if len(sources) > 1:
        parser.error(f"conflicting state sources: {', '.join(sources)}")
    if not sources:
        parser.error("no state source: give --state-file, --a, or --alpha with --n-theta and --m-theta")

    if args.state_file is not None:
        return StateFileSource(args.state_file)
    if args.a is not None:
        return CounterexampleAngle(args.a)

    missing = [f for f in ("alpha", "n_theta", "m_theta") if getattr(args, f) is None]
    if missing:
        flags = ", ".join("--" + f.replace("_", "-") for f in missing)
        parser.error(f"inline Schmidt state needs {flags}")
    params = AnsatzParams(
        alpha=args.alpha,
        beta=args.beta if args.beta is not None else 0.0,
        n0=BlochAngles(args.n_theta, args.n_phi if args.n_phi is not None else 0.0),
        m0=BlochAngles(args.m_theta, args.m_phi if args.m_phi is not None else 0.0),
    )
    return InlineSchmidt(params)


def parse_args(argv: list[str] | None = None) -> RunConfig:
    """Parse the command line into a RunConfig.

    Usage errors (unknown flag, malformed number, conflicting or missing
    state source, out-of-domain values) exit with code 2.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "schmidt":
            return RunConfig(
                command="schmidt",
                state_source=StateFileSource(args.state_file),
                output=args.out,
                debug=args.debug,
            )

        hp = HamiltonianParams(args.omega1, args.omega2, args.lam, args.ax, args.ay, args.az)
        grid = TimeGrid(args.t_start, args.t_end, args.samples)

        source: StateSource | None
        a_values: tuple[float, ...] = ()
        if args.command == "counterexample":
            source = CounterexampleAngle(args.a)
            if not 0.0 <= args.a <= math.pi:
                parser.error(f"argument --a: {args.a!r} outside [0, pi]")
        elif args.command == "sweep":
            source = None
            if args.a_values:
                a_values = args.a_values
            elif args.a_count >= 1:
                a_values = tuple(float(a) for a in np.linspace(0.0, math.pi, args.a_count))
            else:
                parser.error("argument --a-count: must be at least 1")
            outside = [a for a in a_values if not 0.0 <= a <= math.pi]
            if outside:
                parser.error(f"argument --a-values: {outside} outside [0, pi]")
        else:
            source = _state_source(args, parser)

        return RunConfig(
            command=args.command,
            hamiltonian=hp,
            grid=grid,
            state_source=source,
            output=args.out,
            tolerance=getattr(args, "tolerance", DEFAULT_FALSIFY_TOL),
            a_values=a_values,
            progress=getattr(args, "progress", False),
            debug=args.debug,
        )
    except SpinPairError as e:
        parser.error(e.message)


def _initial_state(source: StateSource) -> TwoQubitState:
    from spinpair.dynamics import counterexample_initial
    from spinpair.schmidt import superpose
    from spinpair.statefile import load_state

    if isinstance(source, InlineSchmidt):
        p = source.params
        return superpose(p.alpha, p.beta, p.n0, p.m0)
    if isinstance(source, StateFileSource):
        return load_state(source.path)
    return counterexample_initial(source.a)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _require(config: RunConfig) -> tuple[HamiltonianParams, TimeGrid]:
    if config.hamiltonian is None or config.grid is None:
        raise InvalidParameterError(f"{config.command} needs Hamiltonian and grid parameters")
    return config.hamiltonian, config.grid


def cmd_evolve(config: RunConfig) -> int:
    """Handle the evolve command.

    Args:
        config: Parsed run configuration.

    Returns:
        Exit code.
    """
    from spinpair.dynamics import simulate_trajectory
    from spinpair.output import format_trajectory_csv

    hp, grid = _require(config)
    assert config.state_source is not None
    traj = simulate_trajectory(hp, _initial_state(config.state_source), grid)
    _emit(format_trajectory_csv(traj), config.output)
    return EXIT_OK


def cmd_counterexample(config: RunConfig) -> int:
    """Handle the counterexample command.

    Writes the trajectory CSV, then the closed-form discrepancy summary
    (to stdout when the CSV went to a file, to stderr otherwise).

    Returns:
        0 when both discrepancies are within tolerance, 3 otherwise.
    """
    from spinpair.dynamics import max_closed_form_discrepancy
    from spinpair.dynamics import simulate_trajectory
    from spinpair.output import format_discrepancy_lines
    from spinpair.output import format_trajectory_csv

    hp, grid = _require(config)
    assert isinstance(config.state_source, CounterexampleAngle)
    traj = simulate_trajectory(hp, _initial_state(config.state_source), grid)
    if traj.counterexample is None:
        raise InvalidParameterError(
            "counterexample needs isotropic exchange without field (omega1 = omega2 = 0, ax = ay = az)"
        )
    _emit(format_trajectory_csv(traj), config.output)

    alpha_err, beta_err = max_closed_form_discrepancy(traj)
    summary = format_discrepancy_lines(alpha_err, beta_err, CLOSED_FORM_ALPHA_TOL, CLOSED_FORM_BETA_TOL)
    (sys.stdout if config.output is not None else sys.stderr).write(summary)
    log.info("counterexample_discrepancy", alpha_err=alpha_err, beta_err=beta_err)
    if alpha_err < CLOSED_FORM_ALPHA_TOL and beta_err < CLOSED_FORM_BETA_TOL:
        return EXIT_OK
    return EXIT_FAILS


def cmd_falsify(config: RunConfig) -> int:
    """Handle the falsify command.

    Prints the plain-text report; --out receives the report CSV row.

    Returns:
        0 on HOLDS, 3 on FAILS.
    """
    from spinpair.falsifier import ansatz_from_state
    from spinpair.falsifier import falsify
    from spinpair.output import format_report_csv
    from spinpair.output import format_report_text

    hp, grid = _require(config)
    source = config.state_source
    assert source is not None
    if isinstance(source, InlineSchmidt):
        ap = source.params
    else:
        ap = ansatz_from_state(_initial_state(source))

    report = falsify(ap, hp, grid, config.tolerance)
    sys.stdout.write(format_report_text(report))
    if config.output is not None:
        config.output.write_text(format_report_csv(report), encoding="utf-8")
    return EXIT_OK if report.holds else EXIT_FAILS


def cmd_schmidt(config: RunConfig) -> int:
    """Handle the schmidt command.

    Returns:
        Exit code.
    """
    from spinpair.output import format_schmidt_text
    from spinpair.schmidt import entanglement_entropy
    from spinpair.schmidt import schmidt_decompose

    assert config.state_source is not None
    psi = _initial_state(config.state_source)
    form = schmidt_decompose(psi)
    _emit(format_schmidt_text(form, entanglement_entropy(psi)), config.output)
    return EXIT_OK


def cmd_sweep(config: RunConfig) -> int:
    """Handle the sweep command.

    Returns:
        Exit code.
    """
    from spinpair.dynamics import entanglement_swing
    from spinpair.output import format_swing_csv

    hp, grid = _require(config)
    rows = entanglement_swing(config.a_values, hp.lam, grid, progress=config.progress)
    metadata = {
        "lam": hp.lam,
        "t_start": grid.t_start,
        "t_end": grid.t_end,
        "samples": grid.samples,
    }
    _emit(format_swing_csv(rows, metadata), config.output)
    return EXIT_OK


HANDLERS = {
    "evolve": cmd_evolve,
    "counterexample": cmd_counterexample,
    "falsify": cmd_falsify,
    "schmidt": cmd_schmidt,
    "sweep": cmd_sweep,
}


def run(config: RunConfig) -> int:
    """Execute one parsed command and map failures to exit codes."""
    with LogContext(log, command=config.command) as clog:
        try:
            return HANDLERS[config.command](config)
        except SpinPairError as e:
            clog.error("command_failed", code=e.code, details=e.details)
            print(f"Error: {e.message}", file=sys.stderr)
            return e.exit_code
        except OSError as e:
            clog.error("io_failed", error=str(e))
            print(f"Error: {e}", file=sys.stderr)
            return EXIT_IO


def main(argv: list[str] | None = None) -> int:
    """Main CLI entrypoint for the 'spinpair' command.

    Returns:
        Exit code.
    """
    config = parse_args(argv)
    configure_logging(debug=config.debug or DEBUG_ENABLED)
    return run(config)


def cli_main() -> None:
    """Entry point wrapper that calls sys.exit().

    This is the function referenced in pyproject.toml [project.scripts].
    """
    sys.exit(main())
