# tests/conftest.py
"""Pytest configuration and shared fixtures."""

import math
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from spinpair.hamiltonian import HamiltonianParams
from spinpair.logging import configure_logging
from spinpair.qstate import TwoQubitState

SEED = 20240611


def random_unit_state(rng: np.random.Generator) -> TwoQubitState:
    """Haar-like random unit state from complex Gaussian amplitudes."""
    amps = rng.normal(size=4) + 1j * rng.normal(size=4)
    return TwoQubitState(amps / np.linalg.norm(amps))


@pytest.fixture(autouse=True)
def quiet_logging() -> None:
    """Route library log events through the CLI configuration (WARNING, stderr)."""
    configure_logging(debug=False)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so every run draws the same samples."""
    return np.random.default_rng(SEED)


@pytest.fixture
def random_state(rng: np.random.Generator) -> Callable[[], TwoQubitState]:
    """Factory returning a fresh random unit state per call."""
    return lambda: random_unit_state(rng)


@pytest.fixture
def heisenberg() -> HamiltonianParams:
    """Isotropic exchange with lambda = 1 and no field."""
    return HamiltonianParams.heisenberg(1.0)


@pytest.fixture
def singlet() -> TwoQubitState:
    """(|+-> - |-+>)/sqrt(2)."""
    s = math.sqrt(0.5)
    return TwoQubitState(np.array([0.0, s, -s, 0.0]))


@pytest.fixture
def singlet_file(tmp_path: Path) -> Path:
    """State file holding the singlet."""
    path = tmp_path / "singlet.txt"
    path.write_text(
        "# singlet\n0 0\n0.70710678118654752 0\n-0.70710678118654752 0\n0 0\n",
        encoding="utf-8",
    )
    return path
