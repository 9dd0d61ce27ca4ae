"""Optimal boundary couplings for a few chain lengths.

Each objective evaluation solves the spectrum and locates the arrival peak,
so the search stays cheap even for long chains.
"""

import time

from bqst import optimize

print(f"{'N':>6} {'x_opt':>8} {'y_opt':>8} {'u_opt':>9} {'F_opt':>9} {'delay':>7} {'evals':>6} {'sec':>5}")
for n in (51, 101, 251, 501):
    start = time.perf_counter()
    rep = optimize(n)
    print(
        f"{n:6d} {rep.x_opt:8.4f} {rep.y_opt:8.4f} {rep.u_opt:9.5f} {rep.f_opt:9.5f} "
        f"{rep.delay:7.2f} {rep.evaluations:6d} {time.perf_counter() - start:5.1f}"
    )

# restricted searches
for mode, kwargs in [("fixed_y", {"fix_y": 1.0}), ("constrained_Y", {})]:
    rep = optimize(101, mode, **kwargs)
    print(f"N = 101, {mode}: x = {rep.x_opt:.4f}, y = {rep.y_opt:.4f}, u = {rep.u_opt:.5f}")
