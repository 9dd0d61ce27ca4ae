"""Cross-check the analytic path against brute force.

Random chains are diagonalised densely and compared with the secular-equation
solution: frequencies, first-site weights, |u(t)| traces, and the
characteristic-polynomial residual at every eigenvalue.
"""

from bqst.verify import run_checks

for check in run_checks(n_max=200, count=50):
    print(check.line())
