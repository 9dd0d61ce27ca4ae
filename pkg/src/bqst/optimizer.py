"""Maximisation of the arrival amplitude over the boundary couplings."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .amplitude import fidelities, find_arrival
from .chain import ChainSpec, DomainError
from .simplex import nelder_mead
from .spectral import bimodal_threshold, solve_modes

Mode = Literal["two_param", "fixed_y", "constrained_Y"]

LARGE_N = 25001
XTOL = 1e-4
# leading-order optimum couplings, used only to seed very long chains
_SEED_X_TWO = 1.954  # x ~ 1.954 n^(-1/3)
_SEED_Y_TWO = 1.662  # y ~ 1.662 n^(-1/6)
_SEED_X_Y1 = 1.030  # x ~ 1.030 n^(-1/6) with y = 1


def arrival_peak(n: int, x: float, y: float) -> float:
    """Peak end-to-end amplitude ``u~(x, y)`` at arrival."""
    return find_arrival(solve_modes(ChainSpec.quasi_uniform(n, x, y))).peak_amplitude


@dataclass
class OptimumReport:
    n: int
    mode: Mode
    x_opt: float
    y_opt: float
    u_opt: float
    f_opt: float
    fe_opt: float
    arrival_time: float
    evaluations: int
    fix_y: float | None = None
    converged: bool = True
    boundary: bool = False
    trace: list[tuple[float, float, float]] = field(default_factory=list)

    @property
    def delay(self) -> float:
        return self.arrival_time - (self.n + 1)


@dataclass(frozen=True)
class FidelityMap:
    """Average fidelity at arrival; ``f_values[j, i]`` belongs to
    ``(x_grid[i], y_grid[j])``."""

    n: int
    x_grid: np.ndarray
    y_grid: np.ndarray
    f_values: np.ndarray

    def argmax(self) -> tuple[float, float]:
        j, i = np.unravel_index(int(np.argmax(self.f_values)), self.f_values.shape)
        return float(self.x_grid[i]), float(self.y_grid[j])


def _map(func, items, workers: int | None):
    items = list(items)
    if workers is None or workers <= 1:
        return [func(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def _couplings(mode: Mode, p: np.ndarray, fix_y: float | None) -> tuple[float, float]:
    if mode == "two_param":
        return float(p[0]), float(p[1])
    if mode == "fixed_y":
        return float(p[0]), float(fix_y)
    x = float(p[0])
    return x, float(bimodal_threshold(x)) if 0.0 < x <= 1.0 else 1.0


def optimize(
    n: int,
    mode: Mode = "two_param",
    fix_y: float | None = None,
    xtol: float = XTOL,
    workers: int | None = None,
    keep_trace: bool = False,
) -> OptimumReport:
    """Find the boundary couplings maximising the arrival amplitude.

    A coarse grid (21 x 21 for two couplings, 41 points for one) seeds a
    Nelder-Mead descent on ``-u~``.  Chains with ``n >= 25001`` skip the grid and
    start from the large-``n`` scaling of the optimum instead.
    """
    if n < 5:
        raise DomainError(f"n: optimisation needs n >= 5, got {n}")
    if mode not in ("two_param", "fixed_y", "constrained_Y"):
        raise DomainError(f"mode: unknown optimisation mode {mode!r}")
    if mode == "fixed_y":
        if fix_y is None or not 0.0 < fix_y <= 1.0:
            raise DomainError(f"fix_y: fixed second coupling must lie in (0, 1], got {fix_y!r}")
        fix_y = float(fix_y)

    evaluations = 0

    def objective(p: np.ndarray) -> float:
        nonlocal evaluations
        if np.any(p <= 0.0) or np.any(p > 1.0):
            # outside (0, 1]: worse than any admissible amplitude
            return 1.0 + float(np.abs(np.clip(p, 1e-12, 1.0) - p).sum())
        evaluations += 1
        return -arrival_peak(n, *_couplings(mode, p, fix_y))

    dim = 2 if mode == "two_param" else 1
    if n >= LARGE_N:
        if mode == "fixed_y":
            seed = np.array([_SEED_X_Y1 * n ** (-1.0 / 6.0)])
        else:
            seed = np.array([_SEED_X_TWO * n ** (-1.0 / 3.0), _SEED_Y_TWO * n ** (-1.0 / 6.0)])[:dim]
        step = 0.1 * seed
    else:
        size = 21 if dim == 2 else 41
        axis = np.linspace(0.0, 1.0, size + 1)[1:]
        if dim == 2:
            points = [np.array([x, y]) for x in axis for y in axis]
        else:
            points = [np.array([x]) for x in axis]
        values = _map(objective, points, workers)
        # ties: smaller x, then smaller y (points are already in that order)
        seed = points[int(np.argmin(values))]
        step = np.full(dim, axis[1] - axis[0])
        step = np.where(seed + step > 1.0, -step, step)

    res = nelder_mead(objective, seed, step, xtol=xtol, keep_trace=keep_trace)
    x_opt, y_opt = _couplings(mode, res.x, fix_y)
    arrival = find_arrival(solve_modes(ChainSpec.quasi_uniform(n, x_opt, y_opt)))
    fid = fidelities(arrival.peak_amplitude)
    edge = 2.0 * xtol
    boundary = bool(np.any(res.x <= edge) or np.any(res.x >= 1.0 - edge))
    trace = []
    if keep_trace:
        trace = [(*_couplings(mode, p, fix_y), -v) for p, v in res.trace]
    return OptimumReport(
        n=n,
        mode=mode,
        x_opt=x_opt,
        y_opt=y_opt,
        u_opt=arrival.peak_amplitude,
        f_opt=fid.average,
        fe_opt=fid.entanglement,
        arrival_time=arrival.arrival_time,
        evaluations=evaluations,
        fix_y=fix_y,
        converged=res.converged,
        boundary=boundary,
        trace=trace,
    )


def fidelity_map(
    n: int,
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    steps: int | tuple[int, int],
    workers: int | None = None,
) -> FidelityMap:
    """Average fidelity at arrival on a regular ``(x, y)`` grid."""
    nx, ny = (steps, steps) if np.isscalar(steps) else steps
    if nx < 2 or ny < 2:
        raise DomainError(f"steps: need at least 2 points per axis, got {steps!r}")
    for name, (a, b) in (("x_range", x_range), ("y_range", y_range)):
        if not (0.0 < a < b <= 1.0):
            raise DomainError(f"{name}: range must satisfy 0 < a < b <= 1, got {(a, b)!r}")
    xs = np.linspace(*x_range, nx)
    ys = np.linspace(*y_range, ny)
    nodes = [(x, y) for y in ys for x in xs]
    u = _map(lambda p: arrival_peak(n, *p), nodes, workers)
    f = np.array([fidelities(v).average for v in u]).reshape(ny, nx)
    return FidelityMap(n, xs, ys, f)
