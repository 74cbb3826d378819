"""Evaluation-precision policy shared by every numerical kernel."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError

WORKING_MODES = ("double", "double_double")


@dataclass(frozen=True)
class Precision:
    """Requested accuracy and effort budget for a kernel evaluation.

    target_rel_error: relative tolerance the kernel aims for,
    max_terms: hard cap on series terms / refinement steps,
    working_mode: "double" (Kahan-compensated sums) or "double_double".
    """

    target_rel_error: float = 1e-13
    max_terms: int = 100_000
    working_mode: str = "double"

    def __post_init__(self):
        if not self.target_rel_error > 0.0:
            raise DomainError("target_rel_error must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if self.working_mode not in WORKING_MODES:
            raise DomainError(f"working_mode must be one of {WORKING_MODES}")

    @property
    def extended(self) -> bool:
        return self.working_mode == "double_double"


DEFAULT = Precision()
EXTENDED = Precision(working_mode="double_double")
