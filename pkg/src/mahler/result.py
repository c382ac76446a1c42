"""Common result record for every numerical measure computation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

#: Method tags used by the producing operations.
METHODS = ("jensen", "circle-quadrature", "torus-qmc", "torus-mc")


@dataclass(frozen=True)
class MeasureResult:
    """A measure value together with its numerical uncertainty.

    value          -- the computed measure
    error_estimate -- honest (conservative) absolute error estimate
    method         -- one of METHODS, identifying the engine that produced it
    effort         -- node / sample count spent
    seed           -- RNG seed when the method is randomized, else None
    converged      -- False when the engine hit its effort cap before
                      reaching the requested tolerance (value is still the
                      best available estimate)
    """

    value: float
    error_estimate: float
    method: str
    effort: int = 0
    seed: int | None = None
    converged: bool = True

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if not math.isfinite(self.error_estimate) or self.error_estimate < 0:
            raise ValueError("error_estimate must be finite and non-negative")

    def as_dict(self):
        d = {
            "value": self.value,
            "error_estimate": self.error_estimate,
            "method": self.method,
            "effort": self.effort,
            "seed": self.seed,
        }
        if not self.converged:
            d["converged"] = False
        return d
