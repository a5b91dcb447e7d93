# tests/test_schmidt.py
"""Tests for Schmidt decomposition and entanglement entropy."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinpair.exceptions import InvalidAnglesError
from spinpair.exceptions import InvalidParameterError
from spinpair.exceptions import LeakageError
from spinpair.exceptions import NotNormalizedError
from spinpair.qstate import BlochAngles
from spinpair.qstate import TwoQubitState
from spinpair.qstate import fidelity
from spinpair.schmidt import SchmidtForm
from spinpair.schmidt import apply_local
from spinpair.schmidt import entanglement_entropy
from spinpair.schmidt import entropy_from_alpha
from spinpair.schmidt import local_rotation
from spinpair.schmidt import recompose
from spinpair.schmidt import reduced_density
from spinpair.schmidt import schmidt_coefficients
from spinpair.schmidt import schmidt_decompose
from spinpair.schmidt import schmidt_fixed_basis
from spinpair.schmidt import superpose

SQRT_HALF = math.sqrt(0.5)


def random_local_unitary(rng: np.random.Generator) -> np.ndarray:
    angles = rng.uniform(-math.pi, math.pi, size=3)
    return local_rotation(angles[0], "z") @ local_rotation(angles[1], "y") @ local_rotation(angles[2], "z")


class TestReducedDensity:
    """Test partial traces."""

    def test_trace_one_and_hermitian(self, random_state):
        """Reduced densities are unit-trace and Hermitian."""
        rho = reduced_density(random_state(), 1)
        assert rho.trace == pytest.approx(1.0, abs=1e-14)
        np.testing.assert_allclose(rho.entries, rho.entries.conj().T, atol=1e-15)

    def test_subsystems_share_spectrum(self, random_state):
        """Both subsystems have the same eigenvalues."""
        psi = random_state()
        np.testing.assert_allclose(
            reduced_density(psi, 1).eigenvalues(), reduced_density(psi, 2).eigenvalues(), atol=1e-14
        )

    def test_product_state_is_pure(self):
        """|+z>|-z> leaves spin 2 in |-z><-z|."""
        psi = TwoQubitState(np.array([0, 1, 0, 0]))
        np.testing.assert_allclose(reduced_density(psi, 2).entries, [[0, 0], [0, 1]])

    def test_unnormalized_rejected(self):
        """Partial traces need unit states."""
        with pytest.raises(NotNormalizedError):
            reduced_density(TwoQubitState(np.array([1.0, 1.0, 0, 0])))

    def test_bad_subsystem_rejected(self, singlet):
        """Only subsystems 1 and 2 exist."""
        with pytest.raises(InvalidParameterError):
            reduced_density(singlet, 3)  # type: ignore[arg-type]


class TestSchmidtDecompose:
    """Test the canonical decomposition."""

    def test_round_trip_random_states(self, random_state):
        """Recomposition reproduces 1000 random states."""
        for _ in range(1000):
            psi = random_state()
            assert fidelity(recompose(schmidt_decompose(psi)), psi) >= 1 - 1e-12

    def test_alpha_in_canonical_range(self, random_state):
        """alpha in [0, pi/2], beta in (-pi, pi]."""
        for _ in range(200):
            form = schmidt_decompose(random_state())
            assert 0.0 <= form.alpha <= math.pi / 2
            assert -math.pi < form.beta <= math.pi

    def test_coefficients_match_reduced_density(self, random_state):
        """Coefficients are the square roots of the reduced spectrum."""
        for _ in range(100):
            psi = random_state()
            form = schmidt_decompose(psi)
            np.testing.assert_allclose(form.coefficients, schmidt_coefficients(psi), atol=1e-12)

    def test_product_state(self):
        """|+z>|-z> has alpha = 0 and beta reported as 0."""
        form = schmidt_decompose(TwoQubitState(np.array([0, 1, 0, 0])))
        assert form.alpha == pytest.approx(0.0, abs=1e-12)
        assert form.beta == 0.0
        assert form.n.theta == pytest.approx(0.0)
        assert form.m.theta == pytest.approx(math.pi)

    def test_maximally_entangled_round_trip(self, singlet):
        """Degenerate coefficients: only the invariants are checked."""
        form = schmidt_decompose(singlet)
        assert form.alpha == pytest.approx(math.pi / 2, abs=1e-12)
        assert fidelity(recompose(form), singlet) == pytest.approx(1.0, abs=1e-12)

    def test_triplet_is_maximally_entangled(self):
        """(|+-> + |-+>)/sqrt(2) decomposes with alpha = pi/2 and rebuilds exactly."""
        triplet = TwoQubitState(np.array([0, SQRT_HALF, SQRT_HALF, 0]))
        form = schmidt_decompose(triplet)
        assert form.alpha == pytest.approx(math.pi / 2, abs=1e-12)
        assert form.coefficients == pytest.approx((SQRT_HALF, SQRT_HALF), abs=1e-12)
        assert fidelity(recompose(form), triplet) == pytest.approx(1.0, abs=1e-12)

    def test_global_phase_invariance(self, random_state):
        """A global phase leaves alpha unchanged."""
        psi = random_state()
        shifted = TwoQubitState(psi.amps * np.exp(0.9j))
        assert schmidt_decompose(shifted).alpha == pytest.approx(schmidt_decompose(psi).alpha, abs=1e-12)

    def test_alpha_out_of_range_rejected(self):
        """Canonical alpha above pi/2 raises."""
        with pytest.raises(InvalidAnglesError):
            SchmidtForm(alpha=2.0, beta=0.0, n=BlochAngles(0, 0), m=BlochAngles(0, 0))


class TestEntropy:
    """Test von Neumann entropy in bits."""

    def test_entropy_from_alpha_third(self):
        """p = 3/4 gives 0.811278 bits."""
        assert entropy_from_alpha(math.pi / 3) == pytest.approx(0.811278, abs=1e-6)

    def test_entropy_endpoints(self):
        """Zero at alpha = 0 and pi, one bit at pi/2."""
        assert entropy_from_alpha(0.0) == 0.0
        assert entropy_from_alpha(math.pi / 2) == pytest.approx(1.0, abs=1e-15)
        assert entropy_from_alpha(math.pi) == 0.0

    @given(st.floats(min_value=0.0, max_value=math.pi))
    def test_entropy_symmetric_about_half_pi(self, alpha):
        """E(alpha) = E(pi - alpha)."""
        assert entropy_from_alpha(alpha) == pytest.approx(entropy_from_alpha(math.pi - alpha), abs=1e-12)

    @pytest.mark.parametrize("alpha", [-0.1, 3.2, float("nan")])
    def test_entropy_from_alpha_domain(self, alpha):
        """alpha outside [0, pi] raises."""
        with pytest.raises(InvalidAnglesError):
            entropy_from_alpha(alpha)

    def test_singlet_is_one_bit(self, singlet):
        """The singlet is maximally entangled."""
        assert entanglement_entropy(singlet) == pytest.approx(1.0, abs=1e-12)

    def test_counterexample_initial_entropy(self):
        """a = pi/4 family state carries 0.600876 bits."""
        c, s = math.cos(math.pi / 8), math.sin(math.pi / 8)
        psi = TwoQubitState(np.array([0, (c + s) * SQRT_HALF, (c - s) * SQRT_HALF, 0]))
        assert entanglement_entropy(psi) == pytest.approx(0.600876, abs=1e-6)

    def test_subsystem_symmetry(self, random_state):
        """Either subsystem gives the same entropy."""
        for _ in range(100):
            psi = random_state()
            assert entanglement_entropy(psi, 1) == pytest.approx(entanglement_entropy(psi, 2), abs=1e-10)

    def test_matches_decomposed_alpha(self, random_state):
        """Entropy agrees with the decomposed alpha."""
        for _ in range(100):
            psi = random_state()
            assert entanglement_entropy(psi) == pytest.approx(
                entropy_from_alpha(schmidt_decompose(psi).alpha), abs=1e-10
            )

    def test_local_unitary_invariance(self, rng, random_state):
        """Local rotations leave entropy unchanged."""
        for _ in range(100):
            psi = random_state()
            moved = apply_local(random_local_unitary(rng), random_local_unitary(rng), psi)
            assert entanglement_entropy(moved) == pytest.approx(entanglement_entropy(psi), abs=1e-10)


class TestFixedBasisSchmidt:
    """Test alpha in [0, pi] on span{|+->, |-+>}."""

    def test_triplet(self):
        """Equal |+-> and |-+> weights give alpha = pi/2."""
        fb = schmidt_fixed_basis(TwoQubitState(np.array([0, SQRT_HALF, SQRT_HALF, 0])))
        assert fb.alpha == pytest.approx(math.pi / 2)
        assert fb.beta == pytest.approx(0.0)

    def test_singlet_phase(self, singlet):
        """The singlet's minus sign shows up as beta = pi."""
        fb = schmidt_fixed_basis(singlet)
        assert fb.alpha == pytest.approx(math.pi / 2)
        assert fb.beta == pytest.approx(math.pi)

    def test_alpha_beyond_half_pi(self):
        """Larger |-+> weight puts alpha above pi/2."""
        psi = TwoQubitState(np.array([0, 0.6, 0.8j, 0]))
        fb = schmidt_fixed_basis(psi)
        assert math.cos(fb.alpha) == pytest.approx(0.36 - 0.64)
        assert fb.beta == pytest.approx(math.pi / 2)

    def test_reproduces_state(self):
        """Fixed-basis angles rebuild the state."""
        psi = TwoQubitState(np.array([0, 0.6, -0.8j, 0]))
        fb = schmidt_fixed_basis(psi)
        rebuilt = superpose(fb.alpha, fb.beta, BlochAngles(0, 0), BlochAngles(math.pi, 0))
        assert fidelity(rebuilt, psi) == pytest.approx(1.0, abs=1e-12)

    def test_basis_state_has_zero_beta(self):
        """beta is reported as 0 when one branch vanishes."""
        fb = schmidt_fixed_basis(TwoQubitState(np.array([0, 0, 1j, 0])))
        assert fb.alpha == pytest.approx(math.pi)
        assert fb.beta == 0.0

    def test_leakage_rejected(self):
        """Corner-block weight is named."""
        psi = TwoQubitState(np.array([0.1, math.sqrt(0.99), 0, 0]))
        with pytest.raises(LeakageError) as exc_info:
            schmidt_fixed_basis(psi)
        assert exc_info.value.details["leaking"] == [0]


class TestLocalRotation:
    """Test single-spin rotations."""

    def test_unitary(self):
        """Rotations are unitary."""
        u = local_rotation(1.3, "y")
        np.testing.assert_allclose(u.conj().T @ u, np.eye(2), atol=1e-15)

    def test_bad_axis_rejected(self):
        """Only x, y and z axes exist."""
        with pytest.raises(InvalidParameterError):
            local_rotation(1.0, "w")
