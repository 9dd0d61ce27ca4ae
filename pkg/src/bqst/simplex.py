"""Nelder-Mead simplex minimisation with a simplex-diameter stopping rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


@dataclass
class SimplexResult:
    x: np.ndarray
    fun: float
    evaluations: int
    iterations: int
    converged: bool
    trace: list[tuple[np.ndarray, float]] = field(default_factory=list)


def _diameter(pts: np.ndarray) -> float:
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((diff**2).sum(-1)).max())


def nelder_mead(
    func: Callable[[np.ndarray], float],
    x0,
    step,
    xtol: float = 1e-4,
    max_iter: int = 1000,
    keep_trace: bool = False,
) -> SimplexResult:
    """Minimise ``func`` from ``x0``; stops once the simplex diameter < ``xtol``.

    ``step`` is the initial edge length along each axis (scalar or per-axis).
    Ordering ties are broken lexicographically on the vertex coordinates so the
    run is fully deterministic.
    """
    x0 = np.atleast_1d(np.asarray(x0, dtype=float))
    dim = x0.size
    steps = np.broadcast_to(np.asarray(step, dtype=float), (dim,))
    pts = np.vstack([x0] + [x0 + steps[i] * np.eye(dim)[i] for i in range(dim)])
    vals = np.array([func(p) for p in pts])
    nfev = dim + 1
    trace: list[tuple[np.ndarray, float]] = []

    def order():
        keys = [(v, *p) for v, p in zip(vals, pts)]
        idx = sorted(range(len(keys)), key=keys.__getitem__)
        return pts[idx], vals[idx]

    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        pts, vals = order()
        if keep_trace:
            trace.append((pts[0].copy(), float(vals[0])))
        if _diameter(pts) < xtol:
            converged = True
            break
        centroid = pts[:-1].mean(axis=0)
        worst = pts[-1]
        xr = centroid + (centroid - worst)
        fr = func(xr)
        nfev += 1
        if fr < vals[0]:
            xe = centroid + 2.0 * (centroid - worst)
            fe = func(xe)
            nfev += 1
            pts[-1], vals[-1] = (xe, fe) if fe < fr else (xr, fr)
        elif fr < vals[-2]:
            pts[-1], vals[-1] = xr, fr
        else:
            if fr < vals[-1]:
                xc = centroid + 0.5 * (xr - centroid)
            else:
                xc = centroid + 0.5 * (worst - centroid)
            fc = func(xc)
            nfev += 1
            if fc < min(fr, vals[-1]):
                pts[-1], vals[-1] = xc, fc
            else:
                pts[1:] = pts[0] + 0.5 * (pts[1:] - pts[0])
                vals[1:] = [func(p) for p in pts[1:]]
                nfev += dim
    pts, vals = order()
    return SimplexResult(pts[0].copy(), float(vals[0]), nfev, it, converged, trace)
