# spinpair/schmidt.py
"""Schmidt decomposition and von Neumann entanglement entropy.

Any two-spin pure state can be written

    |psi> = e^{-i beta/2} cos(alpha/2) |n>|m> + e^{+i beta/2} sin(alpha/2) |-n>|-m>

with |-n> the antipode state of qstate. Two alpha conventions coexist:

- SchmidtForm folds alpha into [0, pi/2] (larger coefficient first) and
  works for any state.
- FixedBasisSchmidt keeps alpha in [0, pi] with n = +z, m = -z fixed; it
  applies only to states inside span{|+->, |-+>} and tracks trajectories
  whose cos(alpha) changes sign.

Entropy is symmetric under alpha -> pi - alpha, so both give the same E.
"""

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt

from spinpair.config import LEAKAGE_TOL
from spinpair.config import PHASE_FLOOR
from spinpair.exceptions import InvalidAnglesError
from spinpair.exceptions import InvalidParameterError
from spinpair.exceptions import LeakageError
from spinpair.hamiltonian import SIGMA_X
from spinpair.hamiltonian import SIGMA_Y
from spinpair.hamiltonian import SIGMA_Z
from spinpair.hamiltonian import hermitian_eigh_2x2
from spinpair.logging import get_logger
from spinpair.qstate import BlochAngles
from spinpair.qstate import SingleQubitState
from spinpair.qstate import TwoQubitState
from spinpair.qstate import antipode
from spinpair.qstate import bloch_angles_of
from spinpair.qstate import inner
from spinpair.qstate import require_normalized
from spinpair.qstate import single_qubit_state
from spinpair.qstate import tensor
from spinpair.qstate import wrap_angle

log = get_logger(__name__)

Subsystem = Literal[1, 2]

_PAULI = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}


def _check_beta(beta: float) -> None:
    if not (math.isfinite(beta) and -math.pi < beta <= math.pi):
        raise InvalidAnglesError(f"beta={beta!r} outside (-pi, pi]", details={"beta": beta})


@dataclass(frozen=True, eq=False)
class ReducedDensity2:
    """2x2 reduced density matrix of one spin."""

    entries: npt.NDArray[np.complex128]

    def eigenvalues(self) -> npt.NDArray[np.float64]:
        """Ascending eigenvalues from the closed-form 2x2 solver."""
        values, _ = self.eigensystem()
        return values

    def eigensystem(self) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.complex128]]:
        rho = self.entries
        return hermitian_eigh_2x2(rho[0, 0].real, rho[0, 1], rho[1, 1].real)

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)


@dataclass(frozen=True)
class SchmidtForm:
    """Canonical Schmidt data, alpha in [0, pi/2].

    beta is meaningless for product states (alpha = 0) and is reported as 0.
    """

    alpha: float
    beta: float
    n: BlochAngles
    m: BlochAngles

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha <= 0.5 * math.pi):
            raise InvalidAnglesError(
                f"alpha={self.alpha!r} outside [0, pi/2]", details={"alpha": self.alpha}
            )
        _check_beta(self.beta)

    @property
    def coefficients(self) -> tuple[float, float]:
        """Schmidt coefficients (cos(alpha/2), sin(alpha/2)), descending."""
        return math.cos(0.5 * self.alpha), math.sin(0.5 * self.alpha)


@dataclass(frozen=True)
class FixedBasisSchmidt:
    """alpha in [0, pi], beta in (-pi, pi] for states in span{|+->, |-+>}."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and 0.0 <= self.alpha <= math.pi):
            raise InvalidAnglesError(
                f"alpha={self.alpha!r} outside [0, pi]", details={"alpha": self.alpha}
            )
        _check_beta(self.beta)


def reduced_density(psi: TwoQubitState, subsystem: Subsystem = 1) -> ReducedDensity2:
    """Partial trace over the other spin."""
    require_normalized(psi)
    m = psi.matrix()
    if subsystem == 1:
        rho = m @ m.conj().T
    elif subsystem == 2:
        rho = m.T @ m.conj()
    else:
        raise InvalidParameterError(f"subsystem must be 1 or 2, got {subsystem!r}")
    return ReducedDensity2(rho)


def _gauge_fixed(v: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
    """Rotate the phase so the largest-magnitude component is real positive."""
    k = int(np.argmax(np.abs(v)))
    return v * np.exp(-1j * np.angle(v[k]))


def superpose(alpha: float, beta: float, n: BlochAngles, m: BlochAngles) -> TwoQubitState:
    """e^{-i beta/2} cos(alpha/2)|n>|m> + e^{i beta/2} sin(alpha/2)|-n>|-m>.

    No range checks; shared by recompose() and the product-precession ansatz.
    """
    first = tensor(single_qubit_state(n), single_qubit_state(m))
    second = tensor(single_qubit_state(antipode(n)), single_qubit_state(antipode(m)))
    return superpose_branches(alpha, beta, first, second)


def superpose_branches(
    alpha: float, beta: float, first: TwoQubitState, second: TwoQubitState
) -> TwoQubitState:
    c = np.exp(-0.5j * beta) * math.cos(0.5 * alpha)
    s = np.exp(0.5j * beta) * math.sin(0.5 * alpha)
    return TwoQubitState(c * first.amps + s * second.amps)


def schmidt_decompose(psi: TwoQubitState) -> SchmidtForm:
    """Canonical Schmidt form of a unit two-spin state.

    n is the dominant eigenvector of the spin-1 reduced density (gauge:
    largest component real positive); m is its partner on spin 2. The
    branch coefficients are then read off as overlaps with |n>|m> and
    |-n>|-m>, which puts every leftover phase into beta.

    Raises:
        NotNormalizedError: If psi is not a unit state.
    """
    rho = reduced_density(psi, 1)
    values, vectors = rho.eigensystem()
    dominant = _gauge_fixed(vectors[:, 1])
    p_hi = max(float(values[1]), 0.0)

    # partner on spin 2: f_j = sum_i conj(e_i) M_ij / sqrt(p)
    partner = _gauge_fixed(psi.matrix().T @ dominant.conj() / math.sqrt(p_hi))

    n = bloch_angles_of(SingleQubitState(complex(dominant[0]), complex(dominant[1])))
    m = bloch_angles_of(SingleQubitState(complex(partner[0]), complex(partner[1])))

    x = inner(tensor(single_qubit_state(n), single_qubit_state(m)), psi)
    y = inner(
        tensor(single_qubit_state(antipode(n)), single_qubit_state(antipode(m))), psi
    )
    alpha = min(2.0 * math.atan2(abs(y), abs(x)), 0.5 * math.pi)
    if abs(y) < PHASE_FLOOR:
        beta = 0.0
    else:
        beta = wrap_angle(float(np.angle(y) - np.angle(x)))
    log.debug("schmidt_decomposed", alpha=alpha, beta=beta)
    return SchmidtForm(alpha=alpha, beta=beta, n=n, m=m)


def recompose(f: SchmidtForm) -> TwoQubitState:
    """Two-spin state from its Schmidt data."""
    return superpose(f.alpha, f.beta, f.n, f.m)


def schmidt_coefficients(psi: TwoQubitState) -> tuple[float, float]:
    """Descending Schmidt coefficients, sqrt of reduced-density eigenvalues."""
    values = np.clip(reduced_density(psi, 1).eigenvalues(), 0.0, 1.0)
    return math.sqrt(values[1]), math.sqrt(values[0])


def _binary_entropy(p: float) -> float:
    total = 0.0
    for x in (p, 1.0 - p):
        if x > 0.0:
            total -= x * math.log2(x)
    return min(max(total, 0.0), 1.0)


def _spectrum_entropy(values: npt.NDArray[np.float64]) -> float:
    total = 0.0
    for x in np.clip(values, 0.0, 1.0):
        if x > 0.0:
            total -= float(x) * math.log2(float(x))
    return min(max(total, 0.0), 1.0)


def entropy_from_alpha(alpha: float) -> float:
    """Entanglement in bits of a state with Schmidt angle alpha in [0, pi]."""
    if not (math.isfinite(alpha) and 0.0 <= alpha <= math.pi):
        raise InvalidAnglesError(f"alpha={alpha!r} outside [0, pi]", details={"alpha": alpha})
    folded = min(alpha, math.pi - alpha)
    return _binary_entropy(math.cos(0.5 * folded) ** 2)


def entanglement_entropy(psi: TwoQubitState, subsystem: Subsystem = 1) -> float:
    """von Neumann entropy (bits) of one spin's reduced density."""
    return _spectrum_entropy(reduced_density(psi, subsystem).eigenvalues())


def schmidt_fixed_basis(psi: TwoQubitState) -> FixedBasisSchmidt:
    """alpha(t), beta(t) for states on span{|+->, |-+>}.

    With u = amps[1], v = amps[2]: alpha = 2 atan2(|v|, |u|) and
    beta = arg v - arg u, so psi = e^{-i beta/2}cos(alpha/2)|+-> +
    e^{i beta/2} sin(alpha/2)|-+> up to global phase. beta is 0 when
    either amplitude vanishes.

    Raises:
        LeakageError: If |amps[0]|^2 + |amps[3]|^2 reaches LEAKAGE_TOL.
    """
    amps = psi.amps
    weight = float(abs(amps[0]) ** 2 + abs(amps[3]) ** 2)
    if weight >= LEAKAGE_TOL:
        leaking = [i for i in (0, 3) if abs(amps[i]) ** 2 > 0.5 * LEAKAGE_TOL]
        raise LeakageError(leaking or [0, 3], weight, LEAKAGE_TOL)
    u, v = complex(amps[1]), complex(amps[2])
    alpha = 2.0 * math.atan2(abs(v), abs(u))
    if abs(u) < PHASE_FLOOR or abs(v) < PHASE_FLOOR:
        beta = 0.0
    else:
        beta = wrap_angle(float(np.angle(v) - np.angle(u)))
    return FixedBasisSchmidt(alpha=alpha, beta=beta)


def local_rotation(angle: float, axis: str) -> npt.NDArray[np.complex128]:
    """Single-spin rotation exp(-i angle sigma_axis / 2) about x, y or z."""
    try:
        sigma = _PAULI[axis]
    except KeyError:
        raise InvalidParameterError(f"axis must be one of x, y, z, got {axis!r}") from None
    return math.cos(0.5 * angle) * np.eye(2) - 1j * math.sin(0.5 * angle) * sigma


def apply_local(
    u1: npt.NDArray[np.complex128], u2: npt.NDArray[np.complex128], psi: TwoQubitState
) -> TwoQubitState:
    """(u1 (x) u2)|psi>."""
    return TwoQubitState(np.kron(u1, u2) @ psi.amps)
