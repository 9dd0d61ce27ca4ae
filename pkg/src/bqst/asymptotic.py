"""Infinite-chain limit of the optimal arrival amplitude.

With ``y`` locked to the bimodal threshold, the end-to-end amplitude of a
long chain depends on the couplings and the time only through the rescaled
time ``tau = (x/2)^3 t / 6`` and delay ``sigma = (x/2) s``:

    u_inf(tau, sigma) = (2 sqrt2 / pi) int_0^inf cos(Phi(xi)) / (1 + xi^4) dxi,
    Phi(xi) = tau xi^3 - sigma xi + 2 atan2(sqrt2 xi, 1 - xi^2).

``xi = tan z`` maps the integral onto ``z in (0, pi/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .amplitude import fidelities
from .simplex import nelder_mead

_PREFACTOR = 2.0 * np.sqrt(2.0) / np.pi
_SQRT2 = np.sqrt(2.0)
# max of (1 + xi^2) / (1 + xi^4), bounds the slope of the arctangent term
_ATAN_SLOPE = 2.0 * _SQRT2 * 1.21


@dataclass(frozen=True)
class AsymptoticParams:
    tau: float
    sigma: float


def phase(xi, tau: float, sigma: float):
    # atan2 keeps the phase continuous across xi = 1 (z = pi/4)
    return tau * xi**3 - sigma * xi + 2.0 * np.arctan2(_SQRT2 * xi, 1.0 - xi * xi)


def _phase_slope(xi, tau, sigma):
    return 3.0 * tau * xi * xi - sigma + 2.0 * _SQRT2 * (1.0 + xi * xi) / (1.0 + xi**4)


def _weight(xi):
    return 1.0 / (1.0 + xi**4)


def _panels(tau: float, sigma: float, cutoff: float, max_phase: float, max_width: float) -> np.ndarray:
    """Breakpoints on ``[0, cutoff]`` with a bounded phase increment per panel;
    ``xi = 1`` is always a breakpoint."""
    edges = [0.0]
    a = 0.0
    while a < cutoff:
        h = max_width
        while True:
            b = a + h
            slope = 3.0 * abs(tau) * b * b + abs(sigma) + _ATAN_SLOPE
            if slope * h <= max_phase:
                break
            h = max_phase / slope
        b = min(a + h, cutoff)
        if a < 1.0 < b:
            b = 1.0
        edges.append(b)
        a = b
    return np.asarray(edges)


def _cutoff(tau: float, sigma: float) -> float:
    # beyond this the cubic term dominates the phase slope
    return max(16.0, 2.0 * np.sqrt((abs(sigma) + 3.0) / (3.0 * abs(tau))))


def _tail(L: float, tau: float, sigma: float) -> float:
    """Two integrations by parts of ``int_L^inf w cos(Phi)``."""
    h = 1e-4 * L
    def g(xi):
        return _weight(xi) / _phase_slope(xi, tau, sigma)
    gp = (g(L + h) - g(L - h)) / (2.0 * h)
    ph = phase(L, tau, sigma)
    return -g(L) * np.sin(ph) - gp / _phase_slope(L, tau, sigma) * np.cos(ph)


@lru_cache(maxsize=8)
def _gauss(order: int):
    return np.polynomial.legendre.leggauss(order)


def u_infinity(
    params: AsymptoticParams | tuple[float, float],
    order: int = 16,
    max_phase: float = 0.5 * np.pi,
) -> float:
    """Asymptotic arrival amplitude ``u_inf(tau, sigma)``.

    For ``tau != 0`` the integral is cut at a point where the cubic phase
    dominates, the part below is done with ``order``-point Gauss-Legendre
    panels whose phase increment stays below ``max_phase``, and the tail is
    added from its integration-by-parts expansion.  ``tau == 0`` has no
    cubic term and goes through adaptive quadrature in ``z``.
    """
    tau, sigma = (params.tau, params.sigma) if isinstance(params, AsymptoticParams) else params
    tau, sigma = float(tau), float(sigma)
    if tau == 0.0:
        return _u_infinity_z(tau, sigma)
    L = _cutoff(tau, sigma)
    edges = _panels(tau, sigma, L, max_phase, 0.25)
    nodes, weights = _gauss(order)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    xi = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    body = float(np.sum(w * _weight(xi) * np.cos(phase(xi, tau, sigma))))
    return _PREFACTOR * (body + _tail(L, tau, sigma))


def _z_integrand(z, tau, sigma):
    t = np.tan(z)
    return (1.0 + t * t) / (1.0 + t**4) * np.cos(phase(t, tau, sigma))


def _u_infinity_z(tau: float, sigma: float) -> float:
    # integrand -> 0 as z -> pi/2; split where the atan2 argument crosses zero
    left = quad(_z_integrand, 0.0, 0.25 * np.pi, args=(tau, sigma), epsabs=1e-13, limit=500)[0]
    right = quad(_z_integrand, 0.25 * np.pi, 0.5 * np.pi, args=(tau, sigma), epsabs=1e-13, limit=500)[0]
    return _PREFACTOR * (left + right)


def unfolded_integral(params: AsymptoticParams, half_width: float = 60.0, order: int = 16) -> complex:
    """Complex integral over ``xi in [-half_width, half_width]`` (no tail).

    The phase is odd and the weight even, so the imaginary part vanishes; the
    real part reproduces :func:`u_infinity` up to the truncated tail.
    """
    tau, sigma = params.tau, params.sigma
    edges = _panels(tau, sigma, half_width, 0.5 * np.pi, 0.25)
    edges = np.concatenate((-edges[::-1], edges[1:]))
    nodes, weights = _gauss(order)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    xi = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel()
    val = np.sum(w * _weight(xi) * np.exp(1j * phase(xi, tau, sigma)))
    return complex(0.5 * _PREFACTOR * val)


@dataclass(frozen=True)
class AsymptoticOptimum:
    params: AsymptoticParams
    value: float
    evaluations: int

    @property
    def fidelity(self) -> float:
        return fidelities(self.value).average


def maximize_u_infinity(
    tau_range: tuple[float, float] = (0.01, 1.0),
    sigma_range: tuple[float, float] = (0.0, 10.0),
    steps: int = 50,
    xtol: float = 1e-8,
) -> AsymptoticOptimum:
    """Global maximum of ``u_inf``: 50 x 50 grid scan, then simplex refinement."""
    taus = np.linspace(*tau_range, steps)
    sigmas = np.linspace(*sigma_range, steps)
    best = (-np.inf, 0.0, 0.0)
    for tau in taus:
        for sigma in sigmas:
            v = u_infinity((tau, sigma))
            # strict '>' keeps the smaller tau, then smaller sigma, on ties
            if v > best[0]:
                best = (v, tau, sigma)
    _, tau0, sigma0 = best
    step = (taus[1] - taus[0], sigmas[1] - sigmas[0])
    res = nelder_mead(lambda p: -u_infinity((p[0], p[1])), (tau0, sigma0), step, xtol=xtol)
    tau, sigma = res.x
    return AsymptoticOptimum(AsymptoticParams(float(tau), float(sigma)), -res.fun, steps * steps + res.evaluations)


@dataclass(frozen=True)
class ScalingConstants:
    """Leading large-``n`` behaviour of the optimum:
    ``x ~ x_coeff n^(-1/3)``, ``y ~ y_coeff n^(-1/6)``, ``s ~ delay_coeff n^(1/3)``."""

    tau: float
    sigma: float
    u_inf: float
    x_coeff: float
    y_coeff: float
    delay_coeff: float

    @property
    def fidelity(self) -> float:
        return fidelities(self.u_inf).average


def scaling_constants(optimum: AsymptoticOptimum | None = None) -> ScalingConstants:
    if optimum is None:
        optimum = maximize_u_infinity()
    tau, sigma = optimum.params.tau, optimum.params.sigma
    # t ~ n, so x = 2 (6 tau / n)^(1/3); y = Y(x) ~ 2^(1/4) x^(1/2); s = 2 sigma / x
    x_coeff = 2.0 * (6.0 * tau) ** (1.0 / 3.0)
    y_coeff = 2.0**0.25 * x_coeff**0.5
    delay_coeff = 2.0 * sigma / x_coeff
    return ScalingConstants(tau, sigma, optimum.value, x_coeff, y_coeff, delay_coeff)
