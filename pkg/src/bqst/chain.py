"""Chain specifications and their nearest-neighbour coupling profiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

Profile = Literal["quasi_uniform", "uniform", "perfect_transfer"]
PROFILES = ("quasi_uniform", "uniform", "perfect_transfer")


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


@dataclass(frozen=True)
class ChainSpec:
    """Chain of ``n`` sites with bulk coupling 1 and a named boundary profile.

    For ``quasi_uniform`` the outermost bond pair is ``x`` and the next pair
    is ``y``; ``x`` and ``y`` are ignored by the other profiles.
    """

    n: int
    profile: Profile = "quasi_uniform"
    x: float = 1.0
    y: float = 1.0

    def __post_init__(self) -> None:
        if self.profile not in PROFILES:
            raise DomainError(f"profile: unknown profile {self.profile!r}")
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise DomainError(f"n: chain length must be an integer, got {self.n!r}")
        min_n = 5 if self.profile == "quasi_uniform" else 2
        if self.n < min_n:
            raise DomainError(f"n: {self.profile} chain needs n >= {min_n}, got {self.n}")
        if self.profile == "quasi_uniform":
            for name in ("x", "y"):
                value = getattr(self, name)
                if not (0.0 < value <= 1.0) or not np.isfinite(value):
                    raise DomainError(f"{name}: coupling must lie in (0, 1], got {value!r}")

    @classmethod
    def quasi_uniform(cls, n: int, x: float, y: float) -> ChainSpec:
        return cls(n, "quasi_uniform", float(x), float(y))

    @classmethod
    def uniform(cls, n: int) -> ChainSpec:
        return cls(n, "uniform")

    @classmethod
    def perfect_transfer(cls, n: int) -> ChainSpec:
        return cls(n, "perfect_transfer")

    @property
    def boundary(self) -> tuple[float, float]:
        """Boundary couplings ``(x, y)`` as seen by the analytic solution."""
        if self.profile == "quasi_uniform":
            return self.x, self.y
        if self.profile == "uniform":
            return 1.0, 1.0
        raise DomainError("profile: perfect_transfer has no (x, y) parametrisation")


def couplings(spec: ChainSpec) -> np.ndarray:
    """Return the ``n - 1`` bond strengths ``A[i, i+1]`` of the chain."""
    n = spec.n
    if spec.profile == "uniform":
        return np.ones(n - 1)
    if spec.profile == "perfect_transfer":
        i = np.arange(1, n)
        return np.pi / (n + 1) * np.sqrt(i * (n - i))
    values = np.ones(n - 1)
    # n = 5 leaves no bulk bond: [x, y, y, x]
    values[0] = values[-1] = spec.x
    values[1] = values[-2] = spec.y
    return values


def hopping_matrix(spec: ChainSpec) -> np.ndarray:
    """Dense symmetric tridiagonal coupling matrix ``A`` (zero diagonal)."""
    off = couplings(spec)
    return np.diag(off, 1) + np.diag(off, -1)
