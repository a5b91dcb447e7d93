# spinpair/qstate.py
"""Complex-amplitude state algebra for one and two spin-1/2 particles.

Conventions used across the package:
- hbar = 1; frequencies are angular frequencies.
- Single-qubit states use the half-angle phase convention
  |n> = e^{-i phi/2} cos(theta/2) |+z> + e^{+i phi/2} sin(theta/2) |-z>.
- Two-qubit amplitudes are ordered (|++>, |+->, |-+>, |-->), spin 1 first.

Values are immutable; every operation is a pure function.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from spinpair.config import NORM_TOL
from spinpair.config import PHASE_FLOOR
from spinpair.exceptions import InvalidAnglesError
from spinpair.exceptions import InvalidParameterError
from spinpair.exceptions import NotNormalizedError

TWO_PI = 2.0 * math.pi

BASIS_LABELS = ("++", "+-", "-+", "--")

ComplexVector = npt.NDArray[np.complex128]


def wrap_angle(x: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    y = math.remainder(x, TWO_PI)
    if y <= -math.pi:
        y += TWO_PI
    return y


def normalize_azimuth(phi: float) -> float:
    """Reduce an azimuth into [0, 2pi)."""
    y = phi % TWO_PI
    # phi slightly below zero rounds to exactly 2pi
    if y >= TWO_PI:
        y = 0.0
    return y


@dataclass(frozen=True)
class BlochAngles:
    """Polar angle theta in [0, pi] and azimuth phi in [0, 2pi).

    phi is normalized on construction. theta outside [0, pi] is rejected
    rather than wrapped, since wrapping would silently flip hemispheres.
    """

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise InvalidAnglesError(
                "Bloch angles must be finite",
                details={"theta": self.theta, "phi": self.phi},
            )
        if not 0.0 <= self.theta <= math.pi:
            raise InvalidAnglesError(
                f"theta={self.theta!r} outside [0, pi]", details={"theta": self.theta}
            )
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", normalize_azimuth(float(self.phi)))


@dataclass(frozen=True)
class SingleQubitState:
    """Amplitudes of |+z> (up) and |-z> (down)."""

    up: complex
    down: complex

    def as_array(self) -> ComplexVector:
        return np.array([self.up, self.down], dtype=np.complex128)

    @property
    def norm(self) -> float:
        return math.hypot(abs(self.up), abs(self.down))


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """Four complex amplitudes in the fixed basis (|++>, |+->, |-+>, |-->).

    Construction only checks shape and finiteness; operations that need a
    unit state call require_normalized(). Use from_amplitudes() to build a
    validated unit state.
    """

    amps: ComplexVector

    def __post_init__(self) -> None:
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if amps.shape != (4,):
            raise InvalidParameterError(
                f"Two-qubit state needs 4 amplitudes, got {amps.size}",
                details={"size": int(amps.size)},
            )
        if not np.all(np.isfinite(amps)):
            raise InvalidParameterError("State amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_amplitudes(
        cls, values: Sequence[complex] | ComplexVector, tol: float = NORM_TOL
    ) -> "TwoQubitState":
        """Build a unit state, renormalizing when the norm is within tol of 1.

        Raises:
            NotNormalizedError: If the norm is further than tol from 1.
        """
        state = cls(np.asarray(values, dtype=np.complex128))
        n = norm(state)
        if abs(n - 1.0) > tol:
            raise NotNormalizedError(n, tol)
        return cls(state.amps / n)

    def matrix(self) -> npt.NDArray[np.complex128]:
        """Amplitudes as a 2x2 array, row index spin 1, column index spin 2."""
        return self.amps.reshape(2, 2)

    def __repr__(self) -> str:
        body = ", ".join(f"{a.real:+.6f}{a.imag:+.6f}j" for a in self.amps)
        return f"TwoQubitState({body})"


def single_qubit_state(angles: BlochAngles) -> SingleQubitState:
    """Spin state pointing along the Bloch direction (theta, phi)."""
    half_theta = 0.5 * angles.theta
    half_phi = 0.5 * angles.phi
    return SingleQubitState(
        up=complex(np.exp(-1j * half_phi) * math.cos(half_theta)),
        down=complex(np.exp(1j * half_phi) * math.sin(half_theta)),
    )


def antipode(angles: BlochAngles) -> BlochAngles:
    """Opposite point on the sphere: (pi - theta, phi + pi).

    With the half-angle phase convention this fixes the phase of |-n> so
    that <n|-n> vanishes identically.
    """
    return BlochAngles(math.pi - angles.theta, angles.phi + math.pi)


def bloch_angles_of(s: SingleQubitState) -> BlochAngles:
    """Bloch direction of a (possibly unnormalized) single-qubit state.

    phi is taken as 0 at the poles, where it is undefined.
    """
    mag_up = abs(s.up)
    mag_down = abs(s.down)
    if mag_up == 0.0 and mag_down == 0.0:
        raise InvalidParameterError("Zero vector has no Bloch direction")
    theta = 2.0 * math.atan2(mag_down, mag_up)
    if min(mag_up, mag_down) < PHASE_FLOOR * max(mag_up, mag_down):
        return BlochAngles(theta, 0.0)
    phi = np.angle(s.down) - np.angle(s.up)
    return BlochAngles(theta, float(phi))


def precess(angles: BlochAngles, omega: float, t: float) -> BlochAngles:
    """Bloch direction after Larmor precession about z: phi -> phi + omega t."""
    return BlochAngles(angles.theta, angles.phi + omega * t)


def precess_state(s: SingleQubitState, omega: float, t: float) -> SingleQubitState:
    """Larmor precession applied to the amplitudes themselves.

    Uses the unwrapped azimuth phi(t) = phi(0) + omega t inside the
    half-angle phases, so the result is continuous in t. Rebuilding the
    state from precess() instead flips its sign whenever phi wraps past 2pi.
    """
    half = 0.5 * omega * t
    return SingleQubitState(
        up=complex(s.up * np.exp(-1j * half)),
        down=complex(s.down * np.exp(1j * half)),
    )


def tensor(s1: SingleQubitState, s2: SingleQubitState) -> TwoQubitState:
    """Product state |s1>_1 |s2>_2."""
    return TwoQubitState(np.kron(s1.as_array(), s2.as_array()))


def inner(psi: TwoQubitState, chi: TwoQubitState) -> complex:
    """<psi|chi>, antilinear in psi."""
    return complex(np.vdot(psi.amps, chi.amps))


def norm(psi: TwoQubitState) -> float:
    return float(np.linalg.norm(psi.amps))


def normalize(psi: TwoQubitState) -> TwoQubitState:
    n = norm(psi)
    if n == 0.0:
        raise InvalidParameterError("Cannot normalize the zero vector")
    return TwoQubitState(psi.amps / n)


def require_normalized(psi: TwoQubitState, tol: float = NORM_TOL) -> None:
    """Raise NotNormalizedError unless |psi| is within tol of 1."""
    n = norm(psi)
    if abs(n - 1.0) > tol:
        raise NotNormalizedError(n, tol)


def fidelity(psi: TwoQubitState, chi: TwoQubitState) -> float:
    """Overlap modulus |<psi|chi>|, blind to global phase.

    Clamped to 1 to absorb rounding on identical inputs.
    """
    return min(abs(inner(psi, chi)), 1.0)


def with_global_phase(psi: TwoQubitState, gamma: float) -> TwoQubitState:
    return TwoQubitState(psi.amps * np.exp(1j * gamma))
