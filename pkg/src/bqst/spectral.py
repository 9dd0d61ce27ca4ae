"""Analytic spectrum of the quasi-uniform chain.

The allowed momenta ``q`` solve ``(n + 1) q + 2 phi(q) = pi m`` with ``m``
running over ``-(n-1)/2 .. (n-1)/2`` in unit steps (half-integers for even
``n``).  Eigenfrequencies are ``sin q``.  Everything here is O(n) and never
touches a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chain import ChainSpec, DomainError

HALF_PI = 0.5 * np.pi


def phase_shift(x, y, q):
    """Branch-continuous phase shift ``phi_q``; odd in ``q``, zero at ``q = 0``.

    Evaluated as ``-arg(u_k)`` with ``u_k = 1 + (2-x²-y²) e^{-2ik} + (1-y²) e^{-4ik}``
    and ``k = pi/2 - q``.  On ``|q| < pi/2`` the result stays inside
    ``(-pi, pi)``, so the principal argument is already the continuous branch
    anchored at ``u_k = x² > 0`` for ``q = 0``.
    """
    q = np.asarray(q, dtype=float)
    # e^{-2ik} = -e^{2iq}; written in q so that q = 0 gives a real u_k exactly
    e2 = np.exp(2j * q)
    uk = 1.0 - (2.0 - x * x - y * y) * e2 + (1.0 - y * y) * e2 * e2
    return -np.angle(uk)


def phase_shift_arctan(x, y, q):
    """Same phase shift via the arctangent, extended past ``pi/2`` where the
    denominator changes sign (cross-check route for :func:`phase_shift`)."""
    q = np.asarray(q, dtype=float)
    num = y * y * np.sin(2.0 * q)
    den = x * x - (2.0 - y * y) * (1.0 - np.cos(2.0 * q))
    with np.errstate(divide="ignore"):
        base = np.arctan(num / den)
    base = np.where(den == 0.0, np.copysign(HALF_PI, q), base)
    sheet = np.where(den < 0.0, np.copysign(np.pi, q), 0.0)
    return base + sheet - 2.0 * q


def _uk_squared(x, y, s2):
    """``|u_k|²`` as a sum of squares; the expanded quartic in ``sin q``
    cancels badly when ``y`` is small."""
    return (x * x - 2.0 * (2.0 - y * y) * s2) ** 2 + 4.0 * y**4 * s2 * (1.0 - s2)


def phase_shift_derivative(x, y, q):
    """Closed-form ``d phi_q / dq``; always ``>= -2``.

    ``-2 + 2y²[x² + 2(2-x²-y²) sin²q] / |u_k|²`` with
    ``|u_k|² = x⁴ + 4[y⁴ - x²(2-y²)] sin²q + 16(1-y²) sin⁴q``.
    """
    s2 = np.sin(q) ** 2
    num = 2.0 * y * y * (x * x + 2.0 * (2.0 - x * x - y * y) * s2)
    return -2.0 + num / _uk_squared(x, y, s2)


def mode_density(x, y, q, n):
    """First-site weight ``P_q = U_{q,1}^2`` of the mode at momentum ``q``.

    ``2/(n+1+2phi'_q) * x²y² / [x⁴ + (4-x²-2y²)² tan²q - 16(1-y²) sin²q]``;
    the bracket times ``cos²q`` is ``|u_k|²``, which is what gets evaluated.
    """
    q = np.asarray(q, dtype=float)
    norm = 2.0 / (n + 1 + 2.0 * phase_shift_derivative(x, y, q))
    return norm * x * x * y * y * np.cos(q) ** 2 / _uk_squared(x, y, np.sin(q) ** 2)


def mode_density_explicit(x, y, k, n):
    """Mode density written in the original ``k = pi/2 - q`` variable, with
    the phase-shift derivative eliminated."""
    c2 = np.cos(k) ** 2
    s2 = np.sin(k) ** 2
    bracket = (x * x - 2.0 * (2.0 - y * y) * c2) ** 2 + 4.0 * y**4 * c2 * s2
    den = (n - 3) * bracket + 4.0 * y * y * (x * x + 2.0 * (2.0 - x * x - y * y) * c2)
    return 2.0 * x * x * y * y * s2 / den


def group_velocity(x, y, q, n):
    return (n + 1) * np.cos(q) / (n + 1 + 2.0 * phase_shift_derivative(x, y, q))


def bimodal_threshold(x):
    """Second-bond value ``Y(x)`` below which the mode density turns bimodal."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0) or np.any(x > 1.0):
        raise DomainError(f"x: coupling must lie in (0, 1], got {x!r}")
    return np.sqrt(np.sqrt(2.0) * x - 0.5 * x * x)


@dataclass(frozen=True)
class ModeSolution:
    """Solved modes, ordered by increasing ``m`` (decreasing eigenvalue index).

    ``m2`` holds ``2 m`` as an exact integer so that half-integer labels of
    even chains never drift.
    """

    spec: ChainSpec
    m2: np.ndarray
    q: np.ndarray
    omega: np.ndarray
    density: np.ndarray
    velocity: np.ndarray
    iterations: int = 0

    @property
    def m(self) -> np.ndarray:
        return self.m2 / 2.0

    @property
    def n(self) -> int:
        return self.spec.n

    def __len__(self) -> int:
        return len(self.q)


def _secular(x, y, q, n, target):
    g = (n + 1) * q + 2.0 * phase_shift(x, y, q) - target
    dg = n + 1 + 2.0 * phase_shift_derivative(x, y, q)
    return g, dg


def solve_roots(x: float, y: float, n: int, max_iter: int = 200) -> tuple[np.ndarray, np.ndarray, int]:
    """Solve the secular equation for every ``m`` at once.

    Safeguarded Newton inside the bracket ``(pi m -/+ 2 pi) / (n + 1)``
    (``|phi| < pi``), falling back to bisection whenever a Newton step leaves
    the current bracket.  ``g`` is strictly increasing because ``phi' >= -2``.
    Returns ``(m2, q, iterations)``.
    """
    m2 = np.arange(-(n - 1), n, 2)
    target = 0.5 * np.pi * m2
    lo = np.maximum((target - 2.0 * np.pi) / (n + 1), -HALF_PI)
    hi = np.minimum((target + 2.0 * np.pi) / (n + 1), HALF_PI)
    q = target / (n + 1)
    # |g| below this is rounding noise of the (n+1) q term
    g_tol = max(1e-13, 8.0 * np.finfo(float).eps * (n + 1) * HALF_PI)
    active = np.ones(n, dtype=bool)
    last_step = hi - lo
    it = 0
    for it in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        qa = q[idx]
        g, dg = _secular(x, y, qa, n, target[idx])
        lo[idx] = np.where(g < 0.0, qa, lo[idx])
        hi[idx] = np.where(g > 0.0, qa, hi[idx])
        q_new = qa - g / dg
        # bisect when Newton leaves the bracket or fails to halve the last step
        bisect = (q_new <= lo[idx]) | (q_new >= hi[idx]) | (np.abs(q_new - qa) > 0.5 * last_step[idx])
        q_new = np.where(bisect, 0.5 * (lo[idx] + hi[idx]), q_new)
        last_step[idx] = np.abs(q_new - qa)
        ulps = 4e-16 * np.maximum(1.0, np.abs(qa))
        small_g = np.abs(g) <= g_tol
        done = small_g | (~bisect & (last_step[idx] <= ulps)) | (hi[idx] - lo[idx] <= ulps)
        q[idx] = np.where(small_g, qa, q_new)
        active[idx[done]] = False
        if not active.any():
            break
    else:
        raise RuntimeError(f"secular equation did not converge for x={x}, y={y}, n={n}")
    return m2, q, it


def solve_modes(spec: ChainSpec) -> ModeSolution:
    """All ``n`` modes of a quasi-uniform (or uniform) chain."""
    if spec.profile == "perfect_transfer":
        raise DomainError("profile: the analytic solution covers quasi_uniform and uniform chains only")
    x, y = spec.boundary
    n = spec.n
    m2, q, it = solve_roots(x, y, n)
    if np.any(np.diff(q) <= 0.0):
        raise RuntimeError(f"mode ordering violated for {spec}")
    density = mode_density(x, y, q, n)
    velocity = group_velocity(x, y, q, n)
    return ModeSolution(spec, m2, q, np.sin(q), density, velocity, it)
