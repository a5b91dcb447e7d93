# spinpair/dynamics.py
"""Entanglement trajectories under exact evolution, and the Heisenberg counterexample.

The counterexample starts from

    |Psi(0)> = cos(a/2)|1,0> + sin(a/2)|0,0>

under pure isotropic exchange. The triplet picks up e^{-i lambda t/2} and
the singlet e^{+3i lambda t/2}, so in the fixed basis (|+->, |-+>)

    cos alpha(t) = sin a cos(2 lambda t),   tan beta(t) = -tan a sin(2 lambda t)

and the entanglement oscillates instead of staying constant.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt
from tqdm import tqdm

from spinpair.config import CLOSED_FORM_RELATION_TOL
from spinpair.config import FAMILY_TOL
from spinpair.exceptions import InvalidAnglesError
from spinpair.exceptions import InvalidParameterError
from spinpair.exceptions import LeakageError
from spinpair.hamiltonian import HamiltonianParams
from spinpair.hamiltonian import build_hamiltonian
from spinpair.hamiltonian import evolve
from spinpair.hamiltonian import propagator_from_spectrum
from spinpair.hamiltonian import spectrum
from spinpair.logging import get_logger
from spinpair.qstate import TwoQubitState
from spinpair.qstate import fidelity
from spinpair.qstate import norm
from spinpair.qstate import require_normalized
from spinpair.qstate import wrap_angle
from spinpair.schmidt import FixedBasisSchmidt
from spinpair.schmidt import entanglement_entropy
from spinpair.schmidt import schmidt_decompose
from spinpair.schmidt import schmidt_fixed_basis

if TYPE_CHECKING:
    from spinpair.falsifier import AnsatzParams

log = get_logger(__name__)

SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class CounterexampleParams:
    """Mixing angle a in [0, pi] and exchange strength lambda.

    lam is the effective strength for anisotropy 1/4; for isotropic
    weights k it is 4 k lambda.
    """

    a: float
    lam: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.lam):
            raise InvalidParameterError(f"lambda must be finite, got {self.lam!r}")
        _check_mixing_angle(self.a)


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid with both endpoints included."""

    t_start: float
    t_end: float
    samples: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise InvalidParameterError("Grid endpoints must be finite")
        if self.t_end < self.t_start:
            raise InvalidParameterError(
                f"t_end={self.t_end} is before t_start={self.t_start}",
                details={"t_start": self.t_start, "t_end": self.t_end},
            )
        if self.samples < 2:
            raise InvalidParameterError(
                f"Grid needs at least 2 samples, got {self.samples}",
                details={"samples": self.samples},
            )

    def times(self) -> npt.NDArray[np.float64]:
        return np.linspace(self.t_start, self.t_end, self.samples)


@dataclass(frozen=True)
class TrajectoryPoint:
    """One grid time.

    alpha, beta follow the fixed-basis convention (alpha in [0, pi]) when
    fixed_basis is True, the canonical Schmidt form otherwise.
    """

    t: float
    entropy: float
    alpha: float
    beta: float
    fixed_basis: bool
    alpha_closed: float | None = None
    beta_closed: float | None = None
    gw_fidelity: float | None = None
    norm: float = 1.0


@dataclass(frozen=True)
class Trajectory:
    points: tuple[TrajectoryPoint, ...]
    params: HamiltonianParams
    initial: TwoQubitState
    grid: TimeGrid
    counterexample: CounterexampleParams | None = None

    def column(self, name: str) -> npt.NDArray[np.float64]:
        """Values of one TrajectoryPoint field; absent entries become NaN."""
        return np.array(
            [np.nan if getattr(p, name) is None else getattr(p, name) for p in self.points],
            dtype=np.float64,
        )


@dataclass(frozen=True)
class SwingRow:
    """Entropy range along one counterexample trajectory."""

    a: float
    entropy_initial: float
    entropy_min: float
    entropy_max: float
    max_entropy_deviation: float


def _check_mixing_angle(a: float) -> None:
    if not (math.isfinite(a) and 0.0 <= a <= math.pi):
        raise InvalidAnglesError(f"a={a!r} outside [0, pi]", details={"a": a})


def counterexample_initial(a: float) -> TwoQubitState:
    """cos(a/2)|1,0> + sin(a/2)|0,0> in the computational basis."""
    _check_mixing_angle(a)
    c = math.cos(0.5 * a)
    s = math.sin(0.5 * a)
    return TwoQubitState(np.array([0.0, (c + s) * SQRT_HALF, (c - s) * SQRT_HALF, 0.0]))


def _counterexample_amplitudes(p: CounterexampleParams, t: float) -> tuple[complex, complex]:
    """(|+->, |-+>) amplitudes at time t with the overall e^{i lambda t/2} dropped."""
    c = math.cos(0.5 * p.a)
    s = math.sin(0.5 * p.a)
    back = np.exp(-1j * p.lam * t)
    fwd = np.exp(1j * p.lam * t)
    u = (back * c + fwd * s) * SQRT_HALF
    v = (back * c - fwd * s) * SQRT_HALF
    return complex(u), complex(v)


def closed_form_state(p: CounterexampleParams, t: float) -> TwoQubitState:
    """Exact counterexample state at time t, overall phase included."""
    u, v = _counterexample_amplitudes(p, t)
    overall = np.exp(0.5j * p.lam * t)
    return TwoQubitState(np.array([0.0, overall * u, overall * v, 0.0]))


def closed_form_relations(p: CounterexampleParams, t: float) -> tuple[float, float]:
    """(sin a cos 2 lambda t, -tan a sin 2 lambda t): cos alpha and tan beta."""
    return (
        math.sin(p.a) * math.cos(2.0 * p.lam * t),
        -math.tan(p.a) * math.sin(2.0 * p.lam * t),
    )


def closed_form_alpha_beta(p: CounterexampleParams, t: float) -> FixedBasisSchmidt:
    """Branch-correct alpha(t), beta(t) from the exact amplitudes.

    beta comes from a two-argument arctangent of the amplitudes, so its
    branch is right where only tan beta is known. The scalar relations are
    checked as a guard and a mismatch is logged.
    """
    u, v = _counterexample_amplitudes(p, t)
    result = schmidt_fixed_basis(TwoQubitState(np.array([0.0, u, v, 0.0])))
    cos_alpha, tan_beta = closed_form_relations(p, t)
    alpha_err = abs(math.cos(result.alpha) - cos_alpha)
    beta_err = 0.0
    if abs(math.cos(p.a)) > CLOSED_FORM_RELATION_TOL:
        # tan beta compared without dividing by cos beta
        residual = math.sin(result.beta) - tan_beta * math.cos(result.beta)
        beta_err = abs(residual) / (1.0 + abs(tan_beta))
    if alpha_err > CLOSED_FORM_RELATION_TOL or beta_err > CLOSED_FORM_RELATION_TOL:
        log.warning(
            "closed_form_relation_mismatch",
            a=p.a,
            t=t,
            alpha_err=alpha_err,
            beta_err=beta_err,
        )
    return result


def detect_counterexample(hp: HamiltonianParams, psi0: TwoQubitState) -> CounterexampleParams | None:
    """Recognize the counterexample setup: isotropic exchange, no field, family state.

    Requires exact parameter equality (near misses do not count), zero
    corner amplitudes and real center amplitudes up to one global phase.
    a is recovered as pi/2 - 2 atan2(amps[2], amps[1]).
    """
    if not hp.is_heisenberg:
        return None
    amps = psi0.amps
    if abs(amps[0]) > FAMILY_TOL or abs(amps[3]) > FAMILY_TOL:
        return None
    lead = amps[1] if abs(amps[1]) >= abs(amps[2]) else amps[2]
    rotated = amps * np.exp(-1j * np.angle(lead))
    u, v = rotated[1], rotated[2]
    if abs(u.imag) > FAMILY_TOL or abs(v.imag) > FAMILY_TOL:
        return None
    if u.real < 0.0:
        u, v = -u, -v
    a = wrap_angle(0.5 * math.pi - 2.0 * math.atan2(v.real, u.real))
    if a < -FAMILY_TOL or a > math.pi + FAMILY_TOL:
        return None
    a = min(max(a, 0.0), math.pi)
    return CounterexampleParams(a=a, lam=4.0 * hp.ax * hp.lam)


def _near_heisenberg(hp: HamiltonianParams) -> bool:
    """Within FAMILY_TOL of the isotropic no-field pattern."""
    return max(abs(hp.omega1), abs(hp.omega2), abs(hp.ax - hp.ay), abs(hp.ay - hp.az)) <= FAMILY_TOL


def simulate_trajectory(
    hp: HamiltonianParams,
    psi0: TwoQubitState,
    grid: TimeGrid,
    gw: "AnsatzParams | None" = None,
) -> Trajectory:
    """Evolve psi0 exactly over the grid and record entanglement data.

    The spectrum is computed once; each point applies its own propagator
    to psi0, so points are independent and the ordering follows the grid.

    Raises:
        NotNormalizedError: If psi0 is not a unit state.
    """
    require_normalized(psi0)
    spec = spectrum(build_hamiltonian(hp))
    counterexample = detect_counterexample(hp, psi0)
    if counterexample is None and not hp.is_heisenberg and _near_heisenberg(hp):
        log.warning(
            "heisenberg_pattern_near_miss",
            omega1=hp.omega1,
            omega2=hp.omega2,
            anisotropy=(hp.ax, hp.ay, hp.az),
        )

    if gw is not None:
        from spinpair.falsifier import gw_ansatz_state

    points = []
    for t in grid.times():
        t = float(t)
        psi_t = evolve(propagator_from_spectrum(spec, t), psi0)
        try:
            fb = schmidt_fixed_basis(psi_t)
            alpha, beta, fixed = fb.alpha, fb.beta, True
        except LeakageError:
            sf = schmidt_decompose(psi_t)
            alpha, beta, fixed = sf.alpha, sf.beta, False

        alpha_closed = beta_closed = None
        if counterexample is not None:
            closed = closed_form_alpha_beta(counterexample, t)
            alpha_closed, beta_closed = closed.alpha, closed.beta

        gw_fid = None
        if gw is not None:
            gw_fid = fidelity(psi_t, gw_ansatz_state(gw, hp.omega1, hp.omega2, t))

        points.append(
            TrajectoryPoint(
                t=t,
                entropy=entanglement_entropy(psi_t),
                alpha=alpha,
                beta=beta,
                fixed_basis=fixed,
                alpha_closed=alpha_closed,
                beta_closed=beta_closed,
                gw_fidelity=gw_fid,
                norm=norm(psi_t),
            )
        )

    traj = Trajectory(
        points=tuple(points),
        params=hp,
        initial=psi0,
        grid=grid,
        counterexample=counterexample,
    )
    entropy = traj.column("entropy")
    log.info(
        "trajectory_simulated",
        samples=grid.samples,
        counterexample=counterexample is not None,
        entropy_min=float(entropy.min()),
        entropy_max=float(entropy.max()),
    )
    return traj


def max_closed_form_discrepancy(traj: Trajectory) -> tuple[float, float]:
    """(max |cos alpha - sin a cos 2 lambda t|, max |wrap(beta - beta_closed)|).

    Raises:
        InvalidParameterError: If the trajectory carries no counterexample columns.
    """
    p = traj.counterexample
    if p is None:
        raise InvalidParameterError("Trajectory is not a counterexample run")
    alpha_err = 0.0
    beta_err = 0.0
    for point in traj.points:
        cos_alpha, _ = closed_form_relations(p, point.t)
        alpha_err = max(alpha_err, abs(math.cos(point.alpha) - cos_alpha))
        if point.beta_closed is not None:
            beta_err = max(beta_err, abs(wrap_angle(point.beta - point.beta_closed)))
    return alpha_err, beta_err


def entanglement_swing(
    a_values: Iterable[float],
    lam: float,
    grid: TimeGrid,
    progress: bool = False,
) -> list[SwingRow]:
    """Entropy range of the counterexample trajectory for each mixing angle a.

    a = pi/2 starts as a product state and becomes maximally entangled;
    a = 0 is the triplet and stays at one bit.
    """
    hp = HamiltonianParams.heisenberg(lam)
    values = list(a_values)
    rows = []
    for a in tqdm(values, desc="Sweeping a", disable=not progress):
        traj = simulate_trajectory(hp, counterexample_initial(a), grid)
        entropy = traj.column("entropy")
        rows.append(
            SwingRow(
                a=float(a),
                entropy_initial=float(entropy[0]),
                entropy_min=float(entropy.min()),
                entropy_max=float(entropy.max()),
                max_entropy_deviation=float(np.max(np.abs(entropy - entropy[0]))),
            )
        )
    return rows
