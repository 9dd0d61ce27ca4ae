import numpy as np
import pytest

from bqst.chain import ChainSpec, DomainError, couplings, hopping_matrix


def test_quasi_uniform_without_bulk_bond():
    np.testing.assert_array_equal(couplings(ChainSpec.quasi_uniform(5, 0.5, 0.8)), [0.5, 0.8, 0.8, 0.5])


def test_quasi_uniform_single_bulk_bond():
    np.testing.assert_array_equal(couplings(ChainSpec.quasi_uniform(6, 0.5, 0.8)), [0.5, 0.8, 1.0, 0.8, 0.5])


def test_uniform_profile():
    np.testing.assert_array_equal(couplings(ChainSpec.uniform(6)), np.ones(5))


def test_perfect_transfer_n3():
    expected = np.pi * np.sqrt(2.0) / 4.0
    np.testing.assert_allclose(couplings(ChainSpec.perfect_transfer(3)), [expected, expected], rtol=0, atol=1e-15)
    assert abs(expected - 1.1107) < 1e-4


@pytest.mark.parametrize("n", range(2, 51))
def test_mirror_symmetry_all_profiles(n):
    specs = [ChainSpec.uniform(n), ChainSpec.perfect_transfer(n)]
    if n >= 5:
        specs.append(ChainSpec.quasi_uniform(n, 0.37, 0.81))
    for spec in specs:
        c = couplings(spec)
        assert c.shape == (n - 1,)
        np.testing.assert_array_equal(c, c[::-1])


@pytest.mark.parametrize("n", [2, 3, 10, 11, 250, 251])
def test_perfect_transfer_peak_at_middle(n):
    c = couplings(ChainSpec.perfect_transfer(n))
    assert c.max() <= np.pi / 2
    middle = (n - 1) // 2
    assert c[middle] == c.max()


def test_hopping_matrix_is_symmetric_tridiagonal():
    a = hopping_matrix(ChainSpec.quasi_uniform(7, 0.3, 0.6))
    np.testing.assert_array_equal(a, a.T)
    assert np.all(np.diag(a) == 0.0)
    assert np.count_nonzero(a) == 12


@pytest.mark.parametrize(
    "kwargs, field",
    [
        (dict(n=4, x=0.5, y=0.5), "n"),
        (dict(n=10, x=0.0, y=0.5), "x"),
        (dict(n=10, x=1.2, y=0.5), "x"),
        (dict(n=10, x=0.5, y=-0.1), "y"),
        (dict(n=10, x=0.5, y=float("nan")), "y"),
    ],
)
def test_invalid_quasi_uniform_names_field(kwargs, field):
    with pytest.raises(DomainError, match=rf"^{field}:"):
        ChainSpec.quasi_uniform(**kwargs)


def test_other_profiles_need_two_sites():
    ChainSpec.uniform(2)
    with pytest.raises(DomainError, match="^n:"):
        ChainSpec.perfect_transfer(1)


def test_unknown_profile():
    with pytest.raises(DomainError, match="^profile:"):
        ChainSpec(10, "random")


def test_boundary_of_profiles():
    assert ChainSpec.uniform(9).boundary == (1.0, 1.0)
    assert ChainSpec.quasi_uniform(9, 0.2, 0.4).boundary == (0.2, 0.4)
    with pytest.raises(DomainError):
        ChainSpec.perfect_transfer(9).boundary
