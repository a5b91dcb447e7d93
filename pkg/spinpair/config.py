# spinpair/config.py
"""Configuration constants for spinpair.

All tolerances, CLI defaults, output formats and exit codes live here so
tests can monkeypatch a single place. There is no config file layer; the
command line is the only run-time input.
"""

import os

# Debug logging (same effect as the global --debug flag)
DEBUG_ENABLED = os.getenv("SPINPAIR_DEBUG", "false").lower() in ("true", "1", "yes")

# =============================================================================
# Numerical tolerances
# =============================================================================

NORM_TOL = 1e-12  # unit-norm check for states handed to operations
STATE_FILE_NORM_TOL = 1e-6  # state files within this of unit norm are renormalized
HERMITIAN_TOL = 1e-14  # build_hamiltonian output vs its conjugate transpose
HERMITIAN_INPUT_TOL = 1e-12  # largest deviation accepted by spectrum()
UNITARY_TOL = 1e-12  # U^dagger U - I, max entry
BLOCK_ZERO_TOL = 0.0  # cross-block entries must be exactly zero for the block path

# Jacobi rotations for Hermitian inputs outside the two-block pattern
JACOBI_OFFDIAG_TOL = 1e-13  # Frobenius norm of the off-diagonal part
JACOBI_MAX_SWEEPS = 50

# Scaling-and-squaring cross-check of the spectral propagator
SERIES_SCALE_NORM = 0.5  # scaled matrix 1-norm must fall below this
SERIES_TERM_TOL = 1e-16  # truncate the series once a term drops below this
SERIES_MAX_TERMS = 60

LEAKAGE_TOL = 1e-10  # weight outside span{|+->, |-+>} tolerated by fixed-basis Schmidt
FAMILY_TOL = 1e-10  # counterexample-family detection (zero corners, real amplitudes)
PHASE_FLOOR = 1e-14  # below this magnitude an amplitude carries no usable phase
CLOSED_FORM_RELATION_TOL = 1e-12  # self-check of cos(alpha), tan(beta) relations
CLOSED_FORM_ALPHA_TOL = 1e-9  # counterexample run: max |cos alpha - sin a cos 2 lambda t|
CLOSED_FORM_BETA_TOL = 1e-8  # counterexample run: max |wrap(beta - beta_closed)|

DEFAULT_FALSIFY_TOL = 1e-9  # HOLDS threshold for both fidelity loss and entropy drift

# =============================================================================
# CLI defaults
# =============================================================================

DEFAULT_OMEGA = 0.0
DEFAULT_ANISOTROPY = 0.25  # a_x = a_y = a_z = 1/4 is the isotropic Heisenberg case
DEFAULT_T_START = 0.0
DEFAULT_SAMPLES = 201
DEFAULT_SWEEP_COUNT = 13

# =============================================================================
# Output formats
# =============================================================================

CSV_SIGNIFICANT_DIGITS = 17  # lossless round trip for IEEE doubles
TRAJECTORY_CSV_HEADER = [
    "t",
    "entropy",
    "alpha",
    "beta",
    "alpha_closed",
    "beta_closed",
    "gw_fidelity",
]
REPORT_CSV_HEADER = [
    "min_fidelity",
    "argmin_t",
    "max_entropy_deviation",
    "argmax_t",
    "verdict",
]
SWING_CSV_HEADER = [
    "a",
    "entropy_initial",
    "entropy_min",
    "entropy_max",
    "max_entropy_deviation",
]
REPORT_TEXT_WIDTH = 80

# =============================================================================
# Exit codes
# =============================================================================

EXIT_OK = 0  # success, or falsification verdict HOLDS
EXIT_IO = 1  # unreadable input, unwritable output
EXIT_USAGE = 2  # bad flags or out-of-domain parameters
EXIT_FAILS = 3  # falsification verdict FAILS, closed-form mismatch
