"""Cross-checks of the analytic solution against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .amplitude import evaluate
from .chain import ChainSpec
from .dynamics import propagate
from .oracle import char_poly_residual, diagonalize, site_amplitudes
from .spectral import solve_modes

FREQ_TOL = 1e-10
DENSITY_TOL = 1e-9
AMPLITUDE_TOL = 1e-9
NORM_TOL = 1e-10
RESIDUAL_TOL = 1e-8
PERFECT_TOL = 1e-8


@dataclass(frozen=True)
class CheckResult:
    name: str
    worst: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.worst <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: worst={self.worst:.3e} tol={self.tolerance:.0e}"


def random_cases(count: int, n_max: int, seed: int = 20130) -> list[ChainSpec]:
    """Deterministic pseudo-random quasi-uniform chains with ``5 <= n <= n_max``."""
    rng = np.random.default_rng(seed)
    specs = []
    for _ in range(count):
        n = int(rng.integers(5, n_max + 1))
        x, y = rng.uniform(0.02, 1.0, size=2)
        specs.append(ChainSpec.quasi_uniform(n, float(x), float(y)))
    return specs


def compare(spec: ChainSpec, t_points: int = 100) -> dict[str, float]:
    """Worst deviations between the analytic path and the oracle for one chain."""
    modes = solve_modes(spec)
    eig = diagonalize(spec)
    # oracle is ordered by decreasing frequency, modes by increasing m: same order
    t = np.linspace(0.0, 2.0 * (spec.n + 1), t_points)
    oracle_u = np.abs(site_amplitudes(eig, t)[:, -1])
    return {
        "frequency": float(np.abs(modes.omega[::-1] - eig.frequencies).max()),
        "density": float(np.abs(modes.density[::-1] - eig.first_site_weights).max()),
        "amplitude": float(np.abs(evaluate(modes, t) - oracle_u).max()),
        "normalization": float(abs(modes.density.sum() - 1.0)),
    }


def run_checks(n_max: int = 200, count: int = 50, t_points: int = 100) -> list[CheckResult]:
    specs = random_cases(count, n_max)
    worst = {"frequency": 0.0, "density": 0.0, "amplitude": 0.0, "normalization": 0.0}
    for spec in specs:
        for key, value in compare(spec, t_points).items():
            worst[key] = max(worst[key], value)

    residual = 0.0
    for spec in specs:
        if spec.n <= 60:
            for lam in diagonalize(spec).eigenvalues:
                residual = max(residual, abs(char_poly_residual(spec, lam)))

    sum_rule = 0.0
    for spec in specs[:5]:
        field = propagate(spec, t_max=1.5 * spec.n, dt=1.0)
        sum_rule = max(sum_rule, float(np.abs((field.amplitudes**2).sum(axis=1) - 1.0).max()))

    n_pt = 251
    pst = propagate(ChainSpec.perfect_transfer(n_pt), t_max=n_pt + 1, dt=float(n_pt + 1))
    perfect = abs(1.0 - float(pst.amplitudes[-1, -1]))

    return [
        CheckResult("eigenfrequencies vs dense diagonalisation", worst["frequency"], FREQ_TOL),
        CheckResult("mode densities vs U_n1^2", worst["density"], DENSITY_TOL),
        CheckResult("|u(t)| vs oracle amplitude", worst["amplitude"], AMPLITUDE_TOL),
        CheckResult("mode-density normalisation", worst["normalization"], NORM_TOL),
        CheckResult("characteristic-polynomial residual (n <= 60)", residual, RESIDUAL_TOL),
        CheckResult("wavepacket sum rule", sum_rule, NORM_TOL),
        CheckResult(f"perfect transfer at t = n + 1 (n = {n_pt})", perfect, PERFECT_TOL),
    ]
