# spinpair/falsifier.py
"""Product-precession ansatz and its falsification against exact evolution.

The ansatz claims that an interacting spin pair evolves as

    |Psi(t)> = e^{-i beta/2} cos(alpha/2)|n(t)>|m(t)> + e^{i beta/2} sin(alpha/2)|-n(t)>|-m(t)>

with each direction precessing at its own Larmor frequency and alpha, beta
frozen. Frozen alpha means frozen entanglement. That is exact without
interaction and wrong with it; falsify() measures how wrong.

Verdict rules:
- HOLDS: 1 - min fidelity <= tolerance AND max entropy deviation <= tolerance
- FAILS: otherwise
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from spinpair.config import DEFAULT_FALSIFY_TOL
from spinpair.dynamics import TimeGrid
from spinpair.dynamics import simulate_trajectory
from spinpair.exceptions import InvalidAnglesError
from spinpair.exceptions import InvalidParameterError
from spinpair.hamiltonian import HamiltonianParams
from spinpair.logging import get_logger
from spinpair.qstate import BlochAngles
from spinpair.qstate import TwoQubitState
from spinpair.qstate import antipode
from spinpair.qstate import precess_state
from spinpair.qstate import single_qubit_state
from spinpair.qstate import tensor
from spinpair.schmidt import schmidt_decompose
from spinpair.schmidt import superpose_branches

log = get_logger(__name__)


class Verdict(Enum):
    """Outcome of comparing the ansatz with exact evolution."""

    HOLDS = "HOLDS"
    FAILS = "FAILS"


@dataclass(frozen=True)
class AnsatzParams:
    """Schmidt angle, relative phase and initial Bloch directions."""

    alpha: float
    beta: float
    n0: BlochAngles
    m0: BlochAngles

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha <= math.pi):
            raise InvalidAnglesError(
                f"alpha={self.alpha!r} outside [0, pi]", details={"alpha": self.alpha}
            )
        if not (math.isfinite(self.beta) and -math.pi < self.beta <= math.pi):
            raise InvalidAnglesError(
                f"beta={self.beta!r} outside (-pi, pi]", details={"beta": self.beta}
            )


@dataclass(frozen=True)
class FalsificationReport:
    min_fidelity: float
    argmin_t: float
    max_entropy_deviation: float
    argmax_t: float
    verdict: Verdict
    grid: TimeGrid
    tolerance: float

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS


def gw_ansatz_state(ap: AnsatzParams, omega1: float, omega2: float, t: float) -> TwoQubitState:
    """Ansatz state at time t.

    The antipode convention fixes |-n(0)>, |-m(0)>; all four directions
    then precess with continuous phases, so at t = 0 this is exactly the
    initial state and without interaction it matches exact evolution.
    """
    n0 = single_qubit_state(ap.n0)
    m0 = single_qubit_state(ap.m0)
    anti_n0 = single_qubit_state(antipode(ap.n0))
    anti_m0 = single_qubit_state(antipode(ap.m0))
    first = tensor(precess_state(n0, omega1, t), precess_state(m0, omega2, t))
    second = tensor(precess_state(anti_n0, omega1, t), precess_state(anti_m0, omega2, t))
    return superpose_branches(ap.alpha, ap.beta, first, second)


def ansatz_from_state(psi: TwoQubitState) -> AnsatzParams:
    """Ansatz parameters reproducing psi at t = 0 (up to global phase)."""
    form = schmidt_decompose(psi)
    return AnsatzParams(alpha=form.alpha, beta=form.beta, n0=form.n, m0=form.m)


def falsify(
    ap: AnsatzParams,
    hp: HamiltonianParams,
    grid: TimeGrid,
    tolerance: float = DEFAULT_FALSIFY_TOL,
) -> FalsificationReport:
    """Evolve the ansatz's own initial state exactly and compare.

    Both branches share one initial state built from ap, and the ansatz
    precesses with hp's Larmor frequencies. Since the ansatz keeps E(t) =
    E(0), the exact entropy drift |E(t) - E(0)| is the violation of
    entanglement conservation.

    Raises:
        InvalidParameterError: If tolerance is negative or not finite.
    """
    if not (math.isfinite(tolerance) and tolerance >= 0.0):
        raise InvalidParameterError(f"tolerance must be a finite non-negative number, got {tolerance!r}")

    psi0 = gw_ansatz_state(ap, hp.omega1, hp.omega2, 0.0)
    traj = simulate_trajectory(hp, psi0, grid, gw=ap)
    times = traj.column("t")
    fidelities = traj.column("gw_fidelity")
    entropy = traj.column("entropy")
    deviation = np.abs(entropy - entropy[0])

    i_min = int(np.argmin(fidelities))
    i_max = int(np.argmax(deviation))
    min_fidelity = float(fidelities[i_min])
    max_deviation = float(deviation[i_max])
    holds = (1.0 - min_fidelity <= tolerance) and (max_deviation <= tolerance)
    report = FalsificationReport(
        min_fidelity=min_fidelity,
        argmin_t=float(times[i_min]),
        max_entropy_deviation=max_deviation,
        argmax_t=float(times[i_max]),
        verdict=Verdict.HOLDS if holds else Verdict.FAILS,
        grid=grid,
        tolerance=tolerance,
    )
    log.info(
        "falsification_complete",
        verdict=report.verdict.value,
        min_fidelity=min_fidelity,
        max_entropy_deviation=max_deviation,
    )
    return report
