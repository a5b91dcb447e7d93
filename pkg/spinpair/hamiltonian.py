# spinpair/hamiltonian.py
"""Two-spin Hamiltonian, exact diagonalization and time-evolution propagators.

The Hamiltonian is

    H = omega1 S_z^(1) + omega2 S_z^(2) + 8 lambda sum_q a_q S_q^(1) S_q^(2)

with hbar = 1 and S_q = sigma_q / 2, i.e.

    H = (omega1/2) sz(x)I + (omega2/2) I(x)sz + 2 lambda sum_q a_q sq(x)sq.

In the basis (|++>, |+->, |-+>, |-->) it splits into two decoupled 2x2
blocks: the corner block on {|++>, |-->} and the center block on
{|+->, |-+>}. The spectral path diagonalizes each block in closed form;
Hermitian matrices outside that pattern fall back to Jacobi rotations.

Usage:
    from spinpair.hamiltonian import HamiltonianParams, build_hamiltonian, propagator

    h = build_hamiltonian(HamiltonianParams.heisenberg(1.0))
    u = propagator(h, t=0.5)
"""

import math
from dataclasses import asdict
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from spinpair.config import BLOCK_ZERO_TOL
from spinpair.config import DEFAULT_ANISOTROPY
from spinpair.config import HERMITIAN_INPUT_TOL
from spinpair.config import JACOBI_MAX_SWEEPS
from spinpair.config import JACOBI_OFFDIAG_TOL
from spinpair.config import SERIES_MAX_TERMS
from spinpair.config import SERIES_SCALE_NORM
from spinpair.config import SERIES_TERM_TOL
from spinpair.config import UNITARY_TOL
from spinpair.exceptions import InvalidParameterError
from spinpair.exceptions import NonHermitianError
from spinpair.logging import get_logger
from spinpair.qstate import TwoQubitState

log = get_logger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]

IDENTITY2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# Basis indices of the two invariant blocks
CORNER_BLOCK = (0, 3)
CENTER_BLOCK = (1, 2)
BLOCK_NAMES = {CORNER_BLOCK: "corner", CENTER_BLOCK: "center"}
_BLOCK_RANK = {"corner": 0, "center": 1, "mixed": 2}

# (row, col) entries coupling the corner block to the center block
_CROSS_BLOCK_ENTRIES = tuple(
    (i, j) for i in range(4) for j in range(4) if (i in CORNER_BLOCK) != (j in CORNER_BLOCK)
)


@dataclass(frozen=True)
class HamiltonianParams:
    """Larmor frequencies, coupling strength and anisotropy.

    Attributes:
        omega1: Larmor frequency of spin 1 (rad/time).
        omega2: Larmor frequency of spin 2 (rad/time).
        lam: Interaction strength lambda (rad/time).
        ax, ay, az: Dimensionless anisotropy weights.
    """

    omega1: float = 0.0
    omega2: float = 0.0
    lam: float = 0.0
    ax: float = DEFAULT_ANISOTROPY
    ay: float = DEFAULT_ANISOTROPY
    az: float = DEFAULT_ANISOTROPY

    def __post_init__(self) -> None:
        bad = {k: v for k, v in asdict(self).items() if not math.isfinite(v)}
        if bad:
            raise InvalidParameterError(
                f"Hamiltonian parameters must be finite: {sorted(bad)}", details=bad
            )

    @classmethod
    def heisenberg(cls, lam: float, anisotropy: float = DEFAULT_ANISOTROPY) -> "HamiltonianParams":
        """Pure isotropic exchange, no field. anisotropy=1/4 gives 2 lambda S1.S2."""
        return cls(0.0, 0.0, lam, anisotropy, anisotropy, anisotropy)

    @property
    def is_heisenberg(self) -> bool:
        """Exact match of the isotropic no-field pattern (no tolerance)."""
        return (
            self.omega1 == 0.0
            and self.omega2 == 0.0
            and self.ax == self.ay == self.az
        )

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class HermitianMatrix4:
    """4x4 complex matrix, Hermitian within HERMITIAN_INPUT_TOL.

    Raises:
        NonHermitianError: Naming the entry pair with the largest mismatch.
    """

    entries: ComplexMatrix

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=np.complex128)
        if a.shape != (4, 4):
            raise InvalidParameterError(f"Expected a 4x4 matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InvalidParameterError("Matrix entries must be finite")
        check_hermitian(a, HERMITIAN_INPUT_TOL)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)


@dataclass(frozen=True, eq=False)
class Spectrum4:
    """Ascending eigenvalues with orthonormal eigenvector columns.

    blocks[k] names the invariant block eigenvector k lives in
    ("corner", "center", or "mixed" for the Jacobi path).
    """

    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: ComplexMatrix
    blocks: tuple[str, ...]

    def reconstruct(self) -> ComplexMatrix:
        """Sum_k E_k |k><k|."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def eigenstate(self, k: int) -> TwoQubitState:
        return TwoQubitState(self.eigenvectors[:, k])


@dataclass(frozen=True, eq=False)
class Propagator4:
    """Time-evolution operator U(t) = exp(-i H t)."""

    entries: ComplexMatrix

    @property
    def unitarity_defect(self) -> float:
        """max |U^dagger U - I| entrywise."""
        u = self.entries
        return float(np.max(np.abs(u.conj().T @ u - np.eye(4))))

    @property
    def dagger(self) -> "Propagator4":
        return Propagator4(self.entries.conj().T)

    def __matmul__(self, other: "Propagator4") -> "Propagator4":
        return Propagator4(self.entries @ other.entries)


def check_hermitian(a: ComplexMatrix, tol: float) -> None:
    """Raise NonHermitianError when a differs from a^dagger by more than tol."""
    diff = np.abs(a - a.conj().T)
    worst = float(diff.max())
    if worst > tol:
        row, col = np.unravel_index(int(np.argmax(diff)), diff.shape)
        row, col = int(min(row, col)), int(max(row, col))
        log.warning("non_hermitian_matrix", row=row, col=col, deviation=worst)
        raise NonHermitianError(row, col, worst, tol)


def build_hamiltonian(p: HamiltonianParams) -> HermitianMatrix4:
    """Matrix of the two-spin Hamiltonian, written out entry by entry.

    Nonzero pattern: the diagonal, the corner pair (|++>,|-->) with value
    2 lambda (ax - ay) and the center pair (|+->,|-+>) with 2 lambda (ax + ay).
    """
    zeeman_sum = 0.5 * (p.omega1 + p.omega2)
    zeeman_diff = 0.5 * (p.omega1 - p.omega2)
    zz = 2.0 * p.lam * p.az
    h = np.zeros((4, 4), dtype=np.complex128)
    h[0, 0] = zeeman_sum + zz
    h[1, 1] = zeeman_diff - zz
    h[2, 2] = -zeeman_diff - zz
    h[3, 3] = -zeeman_sum + zz
    h[0, 3] = h[3, 0] = 2.0 * p.lam * (p.ax - p.ay)
    h[1, 2] = h[2, 1] = 2.0 * p.lam * (p.ax + p.ay)
    return HermitianMatrix4(h)


def kron_hamiltonian(p: HamiltonianParams) -> HermitianMatrix4:
    """Same Hamiltonian assembled from Kronecker products of Pauli matrices.

    Independent construction used to cross-check build_hamiltonian.
    """
    h = 0.5 * p.omega1 * np.kron(SIGMA_Z, IDENTITY2) + 0.5 * p.omega2 * np.kron(IDENTITY2, SIGMA_Z)
    for weight, sigma in ((p.ax, SIGMA_X), (p.ay, SIGMA_Y), (p.az, SIGMA_Z)):
        h = h + 2.0 * p.lam * weight * np.kron(sigma, sigma)
    return HermitianMatrix4(h)


def is_block_structured(h: HermitianMatrix4) -> bool:
    """True when no entry couples the corner block to the center block."""
    return all(abs(h.entries[i, j]) <= BLOCK_ZERO_TOL for i, j in _CROSS_BLOCK_ENTRIES)


def hermitian_eigh_2x2(a: float, b: complex, d: float) -> tuple[npt.NDArray[np.float64], ComplexMatrix]:
    """Closed-form eigensystem of [[a, b], [conj(b), d]].

    Writes the matrix as m I + r (cos t sz + sin t (cos f sx + sin f sy))
    and returns ascending eigenvalues (m - r, m + r) with eigenvector
    columns. Deterministic: b = 0 gives basis vectors, lower diagonal first.
    """
    mean = 0.5 * (a + d)
    half_diff = 0.5 * (a - d)
    mag_b = abs(b)
    r = math.hypot(half_diff, mag_b)
    tilt = math.atan2(mag_b, half_diff)
    azimuth = -float(np.angle(b)) if mag_b > 0.0 else 0.0
    c = math.cos(0.5 * tilt)
    s = math.sin(0.5 * tilt)
    phase = np.exp(1j * azimuth)
    upper = np.array([c, phase * s], dtype=np.complex128)
    lower = np.array([-np.conj(phase) * s, c], dtype=np.complex128)
    values = np.array([mean - r, mean + r])
    vectors = np.column_stack([lower, upper])
    if a < d and mag_b == 0.0:
        # tilt = pi puts the larger entry first; keep basis order deterministic
        values = np.array([a, d])
        vectors = np.eye(2, dtype=np.complex128)
    return values, vectors


def _block_spectrum(h: ComplexMatrix) -> Spectrum4:
    entries: list[tuple[float, int, npt.NDArray[np.complex128], str]] = []
    for block in (CORNER_BLOCK, CENTER_BLOCK):
        i, j = block
        values, vectors = hermitian_eigh_2x2(h[i, i].real, h[i, j], h[j, j].real)
        name = BLOCK_NAMES[block]
        for k in range(2):
            full = np.zeros(4, dtype=np.complex128)
            full[i] = vectors[0, k]
            full[j] = vectors[1, k]
            entries.append((float(values[k]), _BLOCK_RANK[name], full, name))
    # ties broken by block membership: corner before center
    entries.sort(key=lambda e: (e[0], e[1]))
    return Spectrum4(
        eigenvalues=np.array([e[0] for e in entries]),
        eigenvectors=np.column_stack([e[2] for e in entries]),
        blocks=tuple(e[3] for e in entries),
    )


def _offdiag_norm(a: ComplexMatrix) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi_spectrum(h: ComplexMatrix) -> Spectrum4:
    """Cyclic complex Jacobi rotations until the off-diagonal norm vanishes."""
    a = h.copy()
    v = np.eye(4, dtype=np.complex128)
    sweeps = 0
    while _offdiag_norm(a) >= JACOBI_OFFDIAG_TOL:
        if sweeps >= JACOBI_MAX_SWEEPS:
            log.warning(
                "jacobi_not_converged",
                sweeps=sweeps,
                offdiag_norm=_offdiag_norm(a),
            )
            break
        for p in range(3):
            for q in range(p + 1, 4):
                if a[p, q] == 0:
                    continue
                _, r = hermitian_eigh_2x2(a[p, p].real, a[p, q], a[q, q].real)
                g = np.eye(4, dtype=np.complex128)
                g[np.ix_((p, q), (p, q))] = r
                a = g.conj().T @ a @ g
                a[p, q] = a[q, p] = 0.0
                v = v @ g
        sweeps += 1
    log.debug("jacobi_converged", sweeps=sweeps, offdiag_norm=_offdiag_norm(a))
    values = np.real(np.diag(a))
    order = np.argsort(values, kind="stable")
    return Spectrum4(
        eigenvalues=values[order],
        eigenvectors=v[:, order],
        blocks=("mixed",) * 4,
    )


def spectrum(h: HermitianMatrix4 | ComplexMatrix) -> Spectrum4:
    """Exact eigendecomposition of a 4x4 Hermitian matrix.

    Two-block matrices (every Hamiltonian from build_hamiltonian) use the
    closed-form 2x2 solver per block; anything else goes through Jacobi.

    Raises:
        NonHermitianError: If a raw array input is not Hermitian.
    """
    if not isinstance(h, HermitianMatrix4):
        h = HermitianMatrix4(np.asarray(h))
    if is_block_structured(h):
        return _block_spectrum(h.entries)
    log.debug("spectrum_jacobi_fallback")
    return _jacobi_spectrum(h.entries)


def propagator_from_spectrum(spec: Spectrum4, t: float) -> Propagator4:
    """U(t) = sum_k exp(-i E_k t) |k><k|."""
    if not math.isfinite(t):
        raise InvalidParameterError(f"Time must be finite, got {t!r}")
    v = spec.eigenvectors
    phases = np.exp(-1j * spec.eigenvalues * t)
    return Propagator4((v * phases) @ v.conj().T)


def propagator(h: HermitianMatrix4, t: float) -> Propagator4:
    """Spectral propagator exp(-i H t); unitary up to eigendecomposition error."""
    u = propagator_from_spectrum(spectrum(h), t)
    defect = u.unitarity_defect
    if defect > UNITARY_TOL:
        log.warning("propagator_unitarity_defect", t=t, defect=defect)
    return u


def propagator_oracle(h: HermitianMatrix4, t: float) -> Propagator4:
    """exp(-i H t) by scaling and squaring a truncated Taylor series.

    Independent of the eigensolver; exists to cross-validate propagator().
    """
    if not isinstance(h, HermitianMatrix4):
        h = HermitianMatrix4(np.asarray(h))
    if not math.isfinite(t):
        raise InvalidParameterError(f"Time must be finite, got {t!r}")
    a = -1j * t * h.entries
    a_norm = float(np.linalg.norm(a, 1))
    squarings = 0
    while a_norm / 2.0**squarings >= SERIES_SCALE_NORM:
        squarings += 1
    b = a / 2.0**squarings

    result = np.eye(4, dtype=np.complex128)
    term = np.eye(4, dtype=np.complex128)
    for k in range(1, SERIES_MAX_TERMS + 1):
        term = term @ b / k
        result = result + term
        if np.linalg.norm(term, 1) < SERIES_TERM_TOL:
            break

    for _ in range(squarings):
        result = result @ result
    log.debug("propagator_oracle", squarings=squarings, scaled_norm=a_norm / 2.0**squarings)
    return Propagator4(result)


def evolve(u: Propagator4, psi: TwoQubitState) -> TwoQubitState:
    """U |psi>."""
    return TwoQubitState(u.entries @ psi.amps)
