# spinpair/statefile.py
"""Plain-text two-spin state files.

Format: four non-comment lines "re im" in basis order (|++>, |+->, |-+>, |-->).
Lines starting with '#' and blank lines are ignored. A state within
STATE_FILE_NORM_TOL of unit norm is renormalized on load; anything
further off is rejected.

Example:
    # singlet
    0 0
    0.70710678118654752 0
    -0.70710678118654752 0
    0 0
"""

from pathlib import Path

import numpy as np

from spinpair.config import CSV_SIGNIFICANT_DIGITS
from spinpair.config import NORM_TOL
from spinpair.config import STATE_FILE_NORM_TOL
from spinpair.exceptions import StateFileError
from spinpair.logging import get_logger
from spinpair.qstate import BASIS_LABELS
from spinpair.qstate import TwoQubitState
from spinpair.qstate import norm

log = get_logger(__name__)


def parse_state(text: str, source: str = "<string>") -> TwoQubitState:
    """Parse state-file text.

    Raises:
        StateFileError: On malformed lines, wrong amplitude count or bad norm.
    """
    amps: list[complex] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise StateFileError(
                f"{source}:{lineno}: expected 're im', got {line!r}",
                details={"source": source, "line": lineno},
            )
        try:
            re_part, im_part = float(fields[0]), float(fields[1])
        except ValueError:
            raise StateFileError(
                f"{source}:{lineno}: malformed number in {line!r}",
                details={"source": source, "line": lineno},
            ) from None
        if not (np.isfinite(re_part) and np.isfinite(im_part)):
            raise StateFileError(
                f"{source}:{lineno}: amplitude must be finite",
                details={"source": source, "line": lineno},
            )
        amps.append(complex(re_part, im_part))

    if len(amps) != 4:
        raise StateFileError(
            f"{source}: expected 4 amplitudes, found {len(amps)}",
            details={"source": source, "count": len(amps)},
        )

    state = TwoQubitState(np.array(amps))
    n = norm(state)
    if abs(n - 1.0) > STATE_FILE_NORM_TOL:
        raise StateFileError(
            f"{source}: state norm {n:.10g} is not within {STATE_FILE_NORM_TOL:g} of 1",
            details={"source": source, "norm": n},
        )
    if abs(n - 1.0) > NORM_TOL:
        log.warning("state_renormalized", source=source, norm=n)
    return TwoQubitState(state.amps / n)


def load_state(path: Path) -> TwoQubitState:
    """Read a state file.

    Raises:
        StateFileError: If the file is unreadable or malformed.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise StateFileError(
            f"Cannot read state file {path}: {e.strerror or e}",
            details={"source": str(path)},
        ) from e
    return parse_state(text, source=str(path))


def dump_state(psi: TwoQubitState, comment: str | None = None) -> str:
    """Serialize to the state-file format with 17 significant digits."""
    digits = CSV_SIGNIFICANT_DIGITS
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append("# basis: " + ", ".join(f"|{label}>" for label in BASIS_LABELS))
    for amp in psi.amps:
        lines.append(f"{amp.real:.{digits}g} {amp.imag:.{digits}g}")
    return "\n".join(lines) + "\n"


def save_state(psi: TwoQubitState, path: Path, comment: str | None = None) -> None:
    Path(path).write_text(dump_state(psi, comment), encoding="utf-8")
