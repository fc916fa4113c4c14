"""Galerkin matrix structure, eigenvalue convergence, and the zeta oracle."""

import math

import numpy as np
import pytest

from nchozeta import (DomainError, InvalidParams, NchoParams, build_matrix,
                      lowest_eigenvalues, parity_blocks, truncate_spectrum,
                      zeta2_closed, zeta2_spectral)


class TestMatrix:
    def test_exactly_symmetric(self):
        M = build_matrix(NchoParams(2.0, 3.0), 32)
        assert np.array_equal(M, M.T)

    def test_parity_blocks_capture_everything(self):
        p = NchoParams(2.0, 3.0)
        n = 32
        M = build_matrix(p, n)
        even, odd = parity_blocks(p, n)
        # permuting modes to (even, odd) order block-diagonalizes M exactly
        idx_e = np.arange(0, n, 2)
        idx_o = np.arange(1, n, 2)
        perm = np.concatenate([idx_e, n + idx_e, idx_o, n + idx_o])
        P = M[np.ix_(perm, perm)]
        assert np.array_equal(P[:n, :n], even)
        assert np.array_equal(P[n:, n:], odd)
        assert not P[:n, n:].any()
        assert not P[n:, :n].any()

    def test_minimum_size(self):
        with pytest.raises(InvalidParams):
            build_matrix(NchoParams(2.0, 3.0), 3)


class TestEigenvalues:
    def test_decoupled_spectrum(self):
        # for alpha = beta the spectrum is sqrt(alpha^2 - 1) (n + 1/2),
        # each level twice
        vals = lowest_eigenvalues(NchoParams(math.sqrt(2.0), math.sqrt(2.0)),
                                  64, 6)
        np.testing.assert_allclose(vals, [0.5, 0.5, 1.5, 1.5, 2.5, 2.5],
                                   rtol=1e-10)

    def test_decoupled_general_alpha(self):
        alpha = 2.0
        scale = math.sqrt(alpha ** 2 - 1.0)
        vals = lowest_eigenvalues(NchoParams(alpha, alpha), 128, 40)
        expected = scale * (np.repeat(np.arange(20), 2) + 0.5)
        np.testing.assert_allclose(vals, expected, rtol=1e-10)

    def test_positivity_across_grid(self):
        for alpha, beta in [(2.0, 3.0), (1.5, 1.2), (10.0, 0.2), (1.01, 1.0)]:
            vals = lowest_eigenvalues(NchoParams(alpha, beta), 256, 256)
            assert np.all(vals > 0.0), (alpha, beta)

    def test_truncation_convergence_at_512(self):
        p = NchoParams(2.0, 3.0)
        small = lowest_eigenvalues(p, 512, 20)
        big = lowest_eigenvalues(p, 1024, 20)
        np.testing.assert_allclose(small, big, rtol=1e-8)

    def test_rayleigh_ritz_monotone(self):
        p = NchoParams(2.0, 3.0)
        coarse = lowest_eigenvalues(p, 256, 100)
        fine = lowest_eigenvalues(p, 512, 100)
        assert np.all(fine <= coarse + 1e-12)

    def test_stability_flags(self):
        vals, stable = lowest_eigenvalues(NchoParams(2.0, 3.0), 512, 20,
                                          return_stable=True)
        assert vals.shape == stable.shape == (20,)
        assert stable.all()

    def test_k_guard(self):
        with pytest.raises(DomainError):
            lowest_eigenvalues(NchoParams(2.0, 3.0), 64, 65)


class TestZetaSpectral:
    def test_decoupled_exact_target(self):
        p = NchoParams(math.sqrt(2.0), math.sqrt(2.0))
        res = zeta2_spectral(p, n_modes=512, k_keep=400)
        assert res.value == pytest.approx(math.pi ** 2, rel=1e-4)

    def test_matches_closed_form(self):
        p = NchoParams(2.0, 3.0)
        res = zeta2_spectral(p)
        closed = zeta2_closed(p).value
        assert res.value == pytest.approx(closed, rel=1e-4)
        # the reported error bound must cover the actual deviation
        assert abs(res.value - closed) < res.err_estimate

    def test_partial_sums_bounded_and_monotone(self):
        p = NchoParams(2.0, 3.0)
        closed = zeta2_closed(p).value
        partials = [zeta2_spectral(p, n_modes=256, k_keep=k,
                                   include_tail=False).value
                    for k in (10, 50, 150, 256)]
        assert all(x < y for x, y in zip(partials, partials[1:]))
        assert all(v < closed for v in partials)

    def test_tail_model_fields(self):
        trunc = truncate_spectrum(NchoParams(2.0, 3.0), 256, 200)
        assert trunc.basis_size == 256
        assert trunc.eigenvalues.shape == (200,)
        assert trunc.tail_slope > 0.0
        assert np.all(np.diff(trunc.eigenvalues) >= 0.0)

    def test_degenerate_pairs(self):
        vals = lowest_eigenvalues(NchoParams(3.0, 3.0), 256, 100)
        pairs = vals.reshape(-1, 2)
        np.testing.assert_allclose(pairs[:, 0], pairs[:, 1], rtol=1e-10)
