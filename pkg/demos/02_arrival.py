"""End-to-end amplitude and the arrival peak.

The amplitude |u(t)| is a sum over the N solved modes, so each time point
costs O(N).  Compare a uniform chain with tuned boundary couplings.
"""

import numpy as np

from bqst import ChainSpec, fidelities, find_arrival, solve_modes
from bqst.amplitude import evaluate

n = 251
for label, spec in [
    ("uniform", ChainSpec.uniform(n)),
    ("tuned", ChainSpec.quasi_uniform(n, 0.2760, 0.5982)),
]:
    modes = solve_modes(spec)
    res = find_arrival(modes)
    fid = fidelities(res.peak_amplitude)
    print(
        f"{label:8s} t* = {res.arrival_time:9.4f}  delay s = {res.delay:7.3f}  "
        f"|u| = {res.peak_amplitude:.6f}  F = {fid.average:.6f}  F_E = {fid.entanglement:.6f}"
    )

# a short look at the trace around the tuned arrival
modes = solve_modes(ChainSpec.quasi_uniform(n, 0.2760, 0.5982))
t = np.arange(255.0, 285.0, 3.0)
for ti, ui in zip(t, evaluate(modes, t)):
    print(f"  t = {ti:6.1f}  |u| = {ui:.4f}  " + "#" * int(40 * ui))
