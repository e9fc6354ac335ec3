"""Closed-form geometry of the Grover iteration.

Everything here is scalar arithmetic on the two-dimensional rotation picture:
the register state stays in the span of the marked and unmarked directions,
so one angle per iteration determines amplitudes, success probability and
the iteration counts at which probability and its growth rate peak.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class CapacityError(Exception):
    """A dense computation would exceed the supported problem size."""


def closest_integer(x: float) -> int:
    """Nearest integer to ``x``; exact halves round away from zero."""
    if not math.isfinite(x):
        raise ValueError(f"closest_integer requires a finite value, got {x!r}")
    if x >= 0.0:
        return int(math.floor(x + 0.5))
    return int(math.ceil(x - 0.5))


@dataclass(frozen=True)
class GroverConfig:
    """Search setup: ``n`` qubits spanning ``2**n`` database entries, ``j`` of
    which are marked; ``target`` is the marked basis index used by the dense
    constructions (they additionally require ``j == 1``)."""

    n: int
    j: int = 1
    target: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be at least 1, got {self.n}")
        if not 1 <= self.j < self.size:
            raise ValueError(
                f"marked count must satisfy 1 <= j < 2**n, got j={self.j} for n={self.n}"
            )
        if not 0 <= self.target < self.size:
            raise ValueError(f"target index {self.target} outside [0, {self.size})")

    @property
    def size(self) -> int:
        return 2**self.n


def rotation_angle(config: GroverConfig) -> float:
    """Angle by which one iteration rotates the state toward the marked direction.

    Computed as ``2*asin(sqrt(j/N))``; the equivalent ``acos((N-2j)/N)`` loses
    precision once ``2j/N`` drops below ~1e-8, this form does not.
    """
    return 2.0 * math.asin(math.sqrt(config.j / config.size))


@dataclass(frozen=True)
class IterationPoint:
    """Scalar snapshot after ``r`` iterations.

    ``a`` is the amplitude on the normalized marked direction, ``b`` the
    amplitude on each individual unmarked basis state, ``p`` the probability
    of measuring a marked state and ``rate`` its growth per iteration.
    """

    r: int
    theta_r: float
    a: float
    b: float
    p: float
    rate: float


def iteration_point(config: GroverConfig, r: int) -> IterationPoint:
    if r < 0:
        raise ValueError(f"iteration count must be nonnegative, got {r}")
    alpha = rotation_angle(config)
    theta = (2 * r + 1) * alpha / 2.0
    a = math.sin(theta)
    b = math.cos(theta) / math.sqrt(config.size - config.j)
    rate = alpha * math.sin((2 * r + 1) * alpha)
    return IterationPoint(r=r, theta_r=theta, a=a, b=b, p=a * a, rate=rate)


def optimal_iterations(config: GroverConfig) -> int:
    """Iteration count maximizing the success probability."""
    alpha = rotation_angle(config)
    return closest_integer((math.pi / 2.0 - alpha / 2.0) / alpha)


def peak_iterations(config: GroverConfig) -> tuple[int, int]:
    """Iteration counts where the probability growth rate and the pairwise
    concurrence peak, per the respective stationarity conditions.

    The two rounded arguments differ by exactly 0.25, so the results differ
    by 0 or 1.
    """
    if config.j != 1:
        raise ValueError("peak iteration formulas assume a single marked state")
    alpha = rotation_angle(config)
    r1 = closest_integer((math.pi / (2.0 * alpha) - 1.0) / 2.0)
    r2 = closest_integer((math.pi / (2.0 * alpha) - 1.5) / 2.0)
    return r1, r2


@dataclass(frozen=True)
class Angles:
    alpha: float
    theta0: float
    optimal: int
    rate_peak: int
    concurrence_peak: int


def angles(config: GroverConfig) -> Angles:
    """Bundle of the per-configuration angle quantities (single marked state)."""
    alpha = rotation_angle(config)
    r1, r2 = peak_iterations(config)
    return Angles(
        alpha=alpha,
        theta0=math.pi / 2.0 - alpha / 2.0,
        optimal=optimal_iterations(config),
        rate_peak=r1,
        concurrence_peak=r2,
    )
