import numpy as np
import pytest
from mpmath import mpf
from numpy.testing import assert_allclose

from grovercorr import binary_entropy, eigh_small, shannon_entropy

from refvalues import ref_entropy_bits, ref_quadratic_eigs


def _random_symmetric(dim, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(dim, dim))
    return (a + a.T) / 2


class TestEighSmall:
    def test_identity(self):
        res = eigh_small(np.eye(4))
        assert_allclose(res.eigenvalues, np.ones(4), atol=1e-14)

    def test_diagonal(self):
        res = eigh_small(np.diag([3.0, 1.0]))
        assert_allclose(res.eigenvalues, [3.0, 1.0], atol=1e-14)

    def test_two_by_two_against_quadratic_formula(self):
        m = [[0.71822, 0.37463], [0.37463, 0.28095]]
        hi, lo = ref_quadratic_eigs(m)
        res = eigh_small(np.array(m))
        assert_allclose(res.eigenvalues, [float(hi), float(lo)], atol=1e-14)

    @pytest.mark.parametrize("dim", [2, 3, 5, 8, 16, 32, 33, 48, 64])
    def test_against_lapack(self, dim):
        a = _random_symmetric(dim, seed=dim)
        res = eigh_small(a)
        expected = np.linalg.eigvalsh(a)[::-1]
        assert_allclose(res.eigenvalues, expected, atol=1e-10)

    @pytest.mark.parametrize("dim", [2, 4, 7, 16, 40])
    def test_reconstruction_and_orthonormality(self, dim):
        a = _random_symmetric(dim, seed=100 + dim)
        w, v = eigh_small(a)
        assert float(np.max(np.abs(a - (v * w) @ v.T))) < 1e-10
        assert float(np.max(np.abs(v.T @ v - np.eye(dim)))) < 1e-10
        assert abs(float(np.sum(w)) - float(np.trace(a))) < 1e-10

    def test_deterministic_repeat(self):
        a = _random_symmetric(6, seed=7)
        first = eigh_small(a)
        second = eigh_small(a.copy())
        assert np.array_equal(first.eigenvalues, second.eigenvalues)
        assert np.array_equal(first.eigenvectors, second.eigenvectors)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            eigh_small(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_complex_rejected(self):
        with pytest.raises(ValueError):
            eigh_small(np.eye(2, dtype=complex))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            eigh_small(np.ones((2, 3)))

    def test_dimension_cap(self):
        with pytest.raises(ValueError):
            eigh_small(np.eye(4097))


class TestShannonEntropy:
    def test_pure(self):
        assert shannon_entropy([1.0, 0.0]) == 0.0

    def test_uniform_pair(self):
        assert shannon_entropy([0.5, 0.5]) == pytest.approx(1.0, abs=1e-15)

    def test_reference_value(self):
        p = [0.86158, 0.13842]
        expected = float(ref_entropy_bits(*(mpf(repr(x)) for x in p)))
        assert shannon_entropy(p) == pytest.approx(expected, abs=1e-12)

    def test_permutation_invariant(self):
        p = [0.1, 0.2, 0.3, 0.4]
        assert shannon_entropy(p) == pytest.approx(shannon_entropy(p[::-1]), abs=1e-15)

    def test_zero_only_for_point_mass(self):
        assert shannon_entropy([0.0, 1.0, 0.0]) == 0.0
        assert shannon_entropy([0.999, 0.001]) > 0.0

    def test_roundoff_negative_clamped(self):
        assert shannon_entropy([1.0, -1e-12, 1e-12]) == pytest.approx(0.0, abs=1e-10)

    def test_negative_beyond_tolerance_rejected(self):
        with pytest.raises(ValueError):
            shannon_entropy([1.001, -1e-3])

    def test_bad_normalization_rejected(self):
        with pytest.raises(ValueError):
            shannon_entropy([0.6, 0.6])


class TestBinaryEntropy:
    @pytest.mark.parametrize("x,expected", [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)])
    def test_exact_points(self, x, expected):
        assert binary_entropy(x) == pytest.approx(expected, abs=1e-15)

    def test_reference_value(self):
        expected = float(ref_entropy_bits(mpf("0.991145"), mpf("0.008855")))
        assert binary_entropy(0.991145) == pytest.approx(expected, abs=1e-12)

    def test_symmetry(self):
        for x in (0.1, 0.25, 0.7):
            assert binary_entropy(x) == pytest.approx(binary_entropy(1 - x), abs=1e-14)

    @pytest.mark.parametrize("bad", [-0.01, 1.01])
    def test_out_of_range(self, bad):
        with pytest.raises(ValueError):
            binary_entropy(bad)
