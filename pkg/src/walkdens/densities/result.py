"""Tagged evaluation results for the density evaluators."""

from __future__ import annotations

from dataclasses import dataclass

METHODS = ("closed_form", "series0", "log_continuation", "quadrature",
           "convolution", "asym_edge")


@dataclass(frozen=True)
class EvalResult:
    value: float
    err: float
    method: str
    region: str = ""

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.err < 0.0:
            raise ValueError("err must be nonnegative")

    def __float__(self):
        return self.value
