"""End-to-end transition amplitude, arrival-time search and fidelities."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainSpec, DomainError
from .spectral import ModeSolution

GRID_STEP = 0.2
REFINE_TOL = 1e-6
_BLOCK = 64
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

# exp(i pi m) for 2m mod 4, exact for half-integer m
_PARITY = np.array([1.0, 1.0j, -1.0, -1.0j])


@dataclass(frozen=True)
class FidelityPair:
    average: float
    entanglement: float


@dataclass(frozen=True)
class AmplitudeResult:
    spec: ChainSpec
    t_grid: np.ndarray
    u_values: np.ndarray
    arrival_time: float
    peak_amplitude: float

    @property
    def delay(self) -> float:
        return self.arrival_time - (self.spec.n + 1)

    @property
    def fidelity(self) -> FidelityPair:
        return fidelities(self.peak_amplitude)


def mode_weights(modes: ModeSolution) -> np.ndarray:
    """Complex weights ``P_m exp(i pi m)`` of the end-to-end sum."""
    return modes.density * _PARITY[modes.m2 % 4]


def evaluate(modes: ModeSolution, t):
    """``|u(t)|`` for scalar or array ``t``; O(n) per time."""
    c = mode_weights(modes)
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty(t_arr.shape)
    for start in range(0, t_arr.size, _BLOCK):
        tb = t_arr[start : start + _BLOCK]
        out[start : start + _BLOCK] = np.abs(np.exp(-1j * np.outer(tb, modes.omega)) @ c)
    if np.ndim(t) == 0:
        return float(out[0])
    return out


def _scan(modes: ModeSolution, t: np.ndarray, dt: float) -> np.ndarray:
    # Uniform grid: reuse exp(-i k dt w) across blocks, one fresh exp per block.
    c = mode_weights(modes)
    steps = np.exp(-1j * np.outer(dt * np.arange(_BLOCK), modes.omega))
    out = np.empty(t.size)
    for start in range(0, t.size, _BLOCK):
        nb = min(_BLOCK, t.size - start)
        anchor = c * np.exp(-1j * t[start] * modes.omega)
        out[start : start + nb] = np.abs(steps[:nb] @ anchor)
    return out


def default_window(n: int) -> tuple[float, float]:
    return float(n), n + 10.0 * n ** (1.0 / 3.0) + 50.0


def golden_max(f, a: float, b: float, tol: float = REFINE_TOL) -> tuple[float, float]:
    """Golden-section search for a maximum of ``f`` on ``[a, b]``."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    t = 0.5 * (a + b)
    return t, f(t)


def find_arrival(
    modes: ModeSolution,
    window: tuple[float, float] | None = None,
    dt: float = GRID_STEP,
) -> AmplitudeResult:
    """Locate the arrival peak of ``|u(t)|``: grid scan, then golden section."""
    lo, hi = window if window is not None else default_window(modes.n)
    if not hi > lo:
        raise DomainError(f"window: empty time window [{lo}, {hi}]")
    t = np.arange(lo, hi + 0.5 * dt, dt)
    t = t[t <= hi]
    u = _scan(modes, t, dt)
    # first occurrence wins ties, i.e. the earlier time
    best = int(np.argmax(u))
    a = t[max(best - 1, 0)]
    b = t[min(best + 1, t.size - 1)]
    if b > a:
        t_star, u_star = golden_max(lambda s: evaluate(modes, s), float(a), float(b))
        if u_star < u[best]:
            t_star, u_star = float(t[best]), float(u[best])
    else:
        t_star, u_star = float(t[best]), float(u[best])
    return AmplitudeResult(modes.spec, t, u, t_star, min(u_star, 1.0))


def fidelities(u: float) -> FidelityPair:
    """Average and entanglement fidelity for end-to-end amplitude ``u``."""
    if not 0.0 <= u <= 1.0:
        raise DomainError(f"u: amplitude must lie in [0, 1], got {u!r}")
    return FidelityPair(1.0 / 3.0 + (1.0 + u) ** 2 / 6.0, (1.0 + u) ** 2 / 4.0)
