"""The infinite-chain limit.

With y on the threshold curve, the arrival amplitude of a long chain depends
only on the rescaled time tau and delay sigma.  Maximising it gives the
limiting fidelity and the power laws of the optimal couplings.
"""

from bqst import maximize_u_infinity, scaling_constants, u_infinity

for tau, sigma in [(0.05, 1.0), (0.15545, 3.1645), (0.4, 6.0)]:
    print(f"u_inf(tau={tau}, sigma={sigma}) = {u_infinity((tau, sigma)):.8f}")

opt = maximize_u_infinity()
c = scaling_constants(opt)
print(f"maximum u_inf = {opt.value:.7f} at tau = {c.tau:.5f}, sigma = {c.sigma:.4f} ({opt.evaluations} evaluations)")
print(f"limiting average fidelity = {c.fidelity:.6f}")
print(f"x_opt ~ {c.x_coeff:.4f} N^(-1/3), y_opt ~ {c.y_coeff:.4f} N^(-1/6), s ~ {c.delay_coeff:.4f} N^(1/3)")
for n in (1001, 100001):
    print(f"  N = {n}: x ~ {c.x_coeff * n ** (-1 / 3):.4f}, y ~ {c.y_coeff * n ** (-1 / 6):.4f}")
