"""Tagged numeric results for moment evaluations."""

from __future__ import annotations

from dataclasses import dataclass, field

METHODS = (
    "exact_combinatorial",
    "recurrence",
    "hyp_single",
    "hyp_two_term",
    "bessel_integral",
    "functional_eq",
    "convolution",
    "quadrature_of_density",
    "monte_carlo",
)


@dataclass(frozen=True)
class MomentValue:
    value: float
    err: float
    method: str
    flags: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.err < 0.0:
            raise ValueError("err must be nonnegative")
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")

    def __float__(self):
        return self.value
