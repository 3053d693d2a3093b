"""Unit system and the package-wide comparison tolerance."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_TOL = 1e-12
TOL_ENV_VAR = "TACHYON_TOL"


def default_tolerance() -> float:
    """Absolute tolerance for float comparisons; ``TACHYON_TOL`` overrides it."""
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    tol = float(raw)
    if not tol > 0:
        raise ValueError(f"{TOL_ENV_VAR} must be positive, got {raw!r}")
    return tol


@dataclass(frozen=True)
class UnitSystem:
    """Speed of light and action quantum. Natural units by default."""

    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")

    @property
    def K(self) -> float:
        """Metric constant 1/c^2 of the Lorentzian world."""
        return 1.0 / self.c**2


NATURAL = UnitSystem()
