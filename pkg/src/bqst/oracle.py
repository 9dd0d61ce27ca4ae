"""Brute-force verification path: dense diagonalisation and the
characteristic-polynomial recursion.  Shares nothing with :mod:`bqst.spectral`
except the coupling profile."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .chain import ChainSpec, DomainError, couplings

MAX_DENSE_N = 5000
_RESCALE_EVERY = 64


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues of ``A`` in decreasing order; ``eigenvectors[n, i] = U_{ni}``
    with ``U_{n1} > 0``."""

    spec: ChainSpec
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def frequencies(self) -> np.ndarray:
        return 0.5 * self.eigenvalues

    @property
    def first_site_weights(self) -> np.ndarray:
        return self.eigenvectors[:, 0] ** 2


def diagonalize(spec: ChainSpec, max_n: int = MAX_DENSE_N) -> EigenSystem:
    if spec.n > max_n:
        raise DomainError(f"n: dense diagonalisation limited to n <= {max_n}, got {spec.n}")
    off = couplings(spec)
    try:
        w, v = eigh_tridiagonal(np.zeros(spec.n), off)
    except LinAlgError as exc:
        raise RuntimeError(f"tridiagonal eigensolver failed for {spec}") from exc
    order = np.argsort(w)[::-1]
    w = w[order]
    u = v[:, order].T.copy()
    u *= np.where(u[:, :1] < 0.0, -1.0, 1.0)
    return EigenSystem(spec, w, u)


def amplitude_direct(eig: EigenSystem, i: int, t: float) -> complex:
    """``<i| exp(-iHt) |1>`` with sites numbered from 1."""
    if not 1 <= i <= eig.spec.n:
        raise DomainError(f"i: site must lie in [1, {eig.spec.n}], got {i}")
    u = eig.eigenvectors
    return complex(np.sum(u[:, i - 1] * u[:, 0] * np.exp(-1j * eig.frequencies * t)))


def site_amplitudes(eig: EigenSystem, t) -> np.ndarray:
    """Complex ``u_i(t)`` for all sites; shape ``(len(t), n)`` for array ``t``."""
    u = eig.eigenvectors
    phases = np.exp(-1j * np.multiply.outer(np.asarray(t, dtype=float), eig.frequencies))
    return phases @ (u[:, :1] * u)


def _uniform_pair(lam: float, m: int) -> tuple[float, float, float]:
    """``(eta_{m-1}, eta_m)`` rescaled, plus the natural log of the scale.

    ``eta_M = lam eta_{M-1} - eta_{M-2}``, ``eta_{-1} = 0``, ``eta_0 = 1``.
    """
    prev, cur, log_scale = 0.0, 1.0, 0.0
    for step in range(1, m + 1):
        prev, cur = cur, lam * cur - prev
        if step % _RESCALE_EVERY == 0:
            s = max(abs(prev), abs(cur))
            if s > 0.0:
                prev, cur = prev / s, cur / s
                log_scale += np.log(s)
    return prev, cur, log_scale


def char_poly_residual(spec: ChainSpec, lam: float) -> float:
    """Relative residual of ``det(lam - A)`` for a quasi-uniform chain.

    The determinant is assembled from the uniform-block polynomials by
    peeling off the boundary bonds, ``chi_N = (lam²-x²) xi_{N-2} - lam y² xi_{N-3}``
    and likewise for ``xi``.  The return value is ``chi_N`` divided by
    ``(1 + |lam²-x²| + |lam y²|)² max|eta|``, the magnitude of its building
    blocks, so it stays meaningful however large the polynomial grows.
    """
    x, y = spec.boundary
    n = spec.n
    if n < 5:
        raise DomainError(f"n: recursion needs n >= 5, got {n}")
    lam = float(lam)
    a = lam * lam - x * x
    b = lam * y * y
    # eta_{n-6}, eta_{n-5}, eta_{n-4} share one scale
    e5, e4, _ = _uniform_pair(lam, n - 4)
    e6 = lam * e5 - e4  # backward step; gives eta_{-1} = 0 when n = 5
    xi2 = a * e4 - b * e5
    xi3 = a * e5 - b * e6
    scale = (1.0 + abs(a) + abs(b)) ** 2 * max(abs(e4), abs(e5), abs(e6))
    return (a * xi2 - b * xi3) / scale
