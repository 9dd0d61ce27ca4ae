"""Full wavepacket ``|u_i(t)|`` over every site, via dense diagonalisation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chain import ChainSpec, DomainError
from .oracle import diagonalize, site_amplitudes

MAX_DYNAMICS_N = 2000


@dataclass(frozen=True)
class WavepacketFrame:
    t: float
    amplitudes: np.ndarray


@dataclass(frozen=True)
class WavepacketField:
    """Frames at increasing times; ``amplitudes[k, i]`` is ``|u_{i+1}(times[k])|``."""

    spec: ChainSpec
    times: np.ndarray
    amplitudes: np.ndarray

    def __len__(self) -> int:
        return len(self.times)

    def __getitem__(self, k: int) -> WavepacketFrame:
        return WavepacketFrame(float(self.times[k]), self.amplitudes[k])

    @property
    def frames(self) -> list[WavepacketFrame]:
        return [self[k] for k in range(len(self))]


def propagate(
    spec: ChainSpec,
    t_max: float,
    dt: float = 1.0,
    max_n: int = MAX_DYNAMICS_N,
) -> WavepacketField:
    """Evolve a single excitation from site 1 and record ``|u_i(t)|`` on
    ``t = 0, dt, 2 dt, ... <= t_max``."""
    if not dt > 0.0:
        raise DomainError(f"dt: time step must be positive, got {dt!r}")
    if t_max < 0.0:
        raise DomainError(f"t_max: must be non-negative, got {t_max!r}")
    if spec.n > max_n:
        raise DomainError(
            f"n: full dynamics limited to n <= {max_n}, got {spec.n}; "
            "use the spectral end-to-end amplitude for longer chains"
        )
    eig = diagonalize(spec)
    times = dt * np.arange(int(np.floor(t_max / dt + 1e-9)) + 1)
    amps = np.empty((times.size, spec.n))
    for start in range(0, times.size, 256):
        block = times[start : start + 256]
        amps[start : start + block.size] = np.abs(site_amplitudes(eig, block))
    return WavepacketField(spec, times, amps)


def front_trajectory(field: WavepacketField) -> list[tuple[float, int]]:
    """Site (1-based) of the largest amplitude in each frame."""
    if len(field) == 0:
        raise DomainError("field: no frames")
    sites = np.argmax(field.amplitudes, axis=1) + 1
    return [(float(t), int(s)) for t, s in zip(field.times, sites)]


def front_speed(trajectory: list[tuple[float, int]], sites: tuple[int, int]) -> float:
    """Least-squares slope of front site against time, using frames whose
    front lies within ``sites`` (inclusive)."""
    t = np.array([p[0] for p in trajectory])
    s = np.array([p[1] for p in trajectory])
    keep = (s >= sites[0]) & (s <= sites[1])
    if keep.sum() < 2:
        raise DomainError(f"sites: fewer than two frames with the front inside {sites}")
    return float(np.polyfit(t[keep], s[keep], 1)[0])
