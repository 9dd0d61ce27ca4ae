import numpy as np
import pytest

from bqst.simplex import nelder_mead


def test_quadratic_bowl():
    res = nelder_mead(lambda p: (p[0] - 0.3) ** 2 + 2 * (p[1] + 0.7) ** 2, [0.0, 0.0], 0.1, xtol=1e-8)
    assert res.converged
    np.testing.assert_allclose(res.x, [0.3, -0.7], atol=1e-7)


def test_rosenbrock():
    rosen = lambda p: (1 - p[0]) ** 2 + 100 * (p[1] - p[0] ** 2) ** 2
    res = nelder_mead(rosen, [-1.2, 1.0], 0.1, xtol=1e-9, max_iter=5000)
    np.testing.assert_allclose(res.x, [1.0, 1.0], atol=1e-6)


def test_one_dimensional():
    res = nelder_mead(lambda p: np.cos(p[0]), [2.0], 0.5, xtol=1e-9)
    assert res.x[0] == pytest.approx(np.pi, abs=1e-8)


def test_deterministic_and_traced():
    f = lambda p: abs(p[0]) + abs(p[1])
    a = nelder_mead(f, [1.0, 1.0], 0.25, keep_trace=True)
    b = nelder_mead(f, [1.0, 1.0], 0.25, keep_trace=True)
    assert np.array_equal(a.x, b.x) and a.evaluations == b.evaluations
    best = [v for _, v in a.trace]
    assert all(later <= earlier for earlier, later in zip(best, best[1:]))


def test_iteration_cap_reports_not_converged():
    res = nelder_mead(lambda p: (p[0] - 5) ** 2, [0.0], 0.01, xtol=1e-12, max_iter=3)
    assert not res.converged
