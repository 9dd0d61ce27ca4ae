"""Ballistic quantum-state transfer through quasi-uniform hopping chains.

Two tunable boundary bond pairs ``x`` (outermost) and ``y`` (next) on an
otherwise uniform chain.  The package solves the chain spectrum analytically,
evaluates the end-to-end transition amplitude, optimises the couplings, and
computes the infinite-chain limit; a dense-diagonalisation oracle checks it all.
"""

from .amplitude import AmplitudeResult, FidelityPair, evaluate, fidelities, find_arrival
from .asymptotic import (
    AsymptoticParams,
    maximize_u_infinity,
    scaling_constants,
    u_infinity,
)
from .chain import ChainSpec, DomainError, couplings
from .dynamics import WavepacketField, WavepacketFrame, front_trajectory, propagate
from .optimizer import FidelityMap, OptimumReport, fidelity_map, optimize
from .oracle import EigenSystem, amplitude_direct, char_poly_residual, diagonalize
from .spectral import (
    ModeSolution,
    bimodal_threshold,
    mode_density,
    phase_shift,
    phase_shift_derivative,
    solve_modes,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeResult",
    "AsymptoticParams",
    "ChainSpec",
    "DomainError",
    "EigenSystem",
    "FidelityMap",
    "FidelityPair",
    "ModeSolution",
    "OptimumReport",
    "WavepacketField",
    "WavepacketFrame",
    "amplitude_direct",
    "bimodal_threshold",
    "char_poly_residual",
    "couplings",
    "diagonalize",
    "evaluate",
    "fidelities",
    "fidelity_map",
    "find_arrival",
    "front_trajectory",
    "maximize_u_infinity",
    "mode_density",
    "optimize",
    "phase_shift",
    "phase_shift_derivative",
    "propagate",
    "scaling_constants",
    "solve_modes",
    "u_infinity",
]
