# spinpair/exceptions.py
"""Exception classes for spinpair.

All custom exceptions inherit from SpinPairError and include:
- Error code (for scripts and log filtering)
- Human-readable message
- Process exit code used by the CLI
- Optional details dictionary for additional context
"""

from typing import Any

from spinpair.config import EXIT_IO
from spinpair.config import EXIT_USAGE


class SpinPairError(Exception):
    """Base exception for all spinpair errors.

    Attributes:
        message: Human-readable error message.
        code: Machine-readable error code (e.g., 'NOT_NORMALIZED').
        exit_code: Exit code the CLI returns for this error.
        details: Optional dictionary with additional error context.
    """

    def __init__(
        self,
        message: str,
        code: str = "SPINPAIR_ERROR",
        exit_code: int = EXIT_USAGE,
        details: dict[str, Any] | None = None,
    ) -> None:
        """Initialize spinpair error.

        Args:
            message: Human-readable error message.
            code: Error code for identification.
            exit_code: CLI exit code (default: usage error).
            details: Optional additional error context.
        """
        super().__init__(message)
        self.message = message
        self.code = code
        self.exit_code = exit_code
        self.details = details or {}


class InvalidAnglesError(SpinPairError):
    """Raised for angles outside their domain (theta, alpha, beta, a)."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="INVALID_ANGLES", details=details)


class InvalidParameterError(SpinPairError):
    """Raised for non-finite parameters, malformed grids or tolerances."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="INVALID_PARAMETER", details=details)


class NotNormalizedError(SpinPairError):
    """Raised when an operation that requires a unit state receives another.

    The details carry the observed norm and the tolerance applied.
    """

    def __init__(self, norm: float, tolerance: float) -> None:
        super().__init__(
            f"State norm {norm:.17g} differs from 1 by more than {tolerance:g}",
            code="NOT_NORMALIZED",
            details={"norm": norm, "tolerance": tolerance},
        )


class NonHermitianError(SpinPairError):
    """Raised when a matrix handed to the eigensolver is not Hermitian.

    Reports the entry pair (row, col) / (col, row) with the largest mismatch.
    """

    def __init__(self, row: int, col: int, deviation: float, tolerance: float) -> None:
        super().__init__(
            f"Matrix is not Hermitian: entries ({row},{col}) and ({col},{row}) "
            f"differ from conjugates by {deviation:.3e} (tolerance {tolerance:g})",
            code="NON_HERMITIAN",
            details={
                "row": row,
                "col": col,
                "deviation": deviation,
                "tolerance": tolerance,
            },
        )


class LeakageError(SpinPairError):
    """Raised when fixed-basis Schmidt data is requested outside span{|+->, |-+>}."""

    def __init__(self, leaking: list[int], weight: float, tolerance: float) -> None:
        names = ", ".join(f"amps[{i}]" for i in leaking)
        super().__init__(
            f"State leaks out of span{{|+->, |-+>}}: {names} carry weight "
            f"{weight:.3e} (tolerance {tolerance:g})",
            code="LEAKAGE",
            details={"leaking": leaking, "weight": weight, "tolerance": tolerance},
        )


class StateFileError(SpinPairError):
    """Raised for unreadable or malformed state files (I/O class exit code)."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message, code="STATE_FILE", exit_code=EXIT_IO, details=details)
