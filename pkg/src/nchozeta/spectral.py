"""Brute-force eigenvalue route: Hermite-basis Galerkin truncation.

The oscillator acts on two-component states; in the orthonormal Hermite
function basis {psi_0 .. psi_{n-1}} per component the harmonic part is
diagonal with entries alpha (n + 1/2) and beta (n + 1/2), and the coupling
x d/dx + 1/2 = (A^2 - (A+)^2)/2 (ladder algebra) is real skew-symmetric,
linking modes n and n-2 with entries +-sqrt(n(n-1))/2.  Combined with the
skew block factor [[0,-1],[1,0]] the full matrix is real symmetric, and
even/odd Hermite parities decouple into two independent blocks.

zeta_Q(2) is the sum of inverse squared eigenvalues; the truncated sum is
completed by fitting lambda_n ~ c n + d over the top quarter of the kept
window and integrating the fitted tail (midpoint-corrected).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EigensolveFailure, InvalidParams
from .ncho import NchoParams, ZetaResult

DEFAULT_BASIS = 512


@dataclass(frozen=True)
class SpectralTruncation:
    """Kept eigenvalues of one truncation plus the fitted linear tail model."""

    basis_size: int
    eigenvalues: np.ndarray
    tail_slope: float
    tail_intercept: float


def build_matrix(p: NchoParams, n_modes: int) -> np.ndarray:
    """Galerkin matrix of the oscillator, size 2*n_modes, exactly symmetric."""
    if n_modes < 4:
        raise InvalidParams(f"need n_modes >= 4, got {n_modes}")
    h = np.arange(n_modes) + 0.5
    T = np.zeros((n_modes, n_modes))
    n = np.arange(2, n_modes)
    half_sqrt = np.sqrt(n * (n - 1.0)) / 2.0
    T[n - 2, n] = half_sqrt
    T[n, n - 2] = -half_sqrt
    M = np.zeros((2 * n_modes, 2 * n_modes))
    M[:n_modes, :n_modes] = np.diag(p.alpha * h)
    M[n_modes:, n_modes:] = np.diag(p.beta * h)
    M[:n_modes, n_modes:] = -T
    M[n_modes:, :n_modes] = T
    return M


def parity_blocks(p: NchoParams, n_modes: int):
    """(even, odd) sub-matrices; the coupling only links n to n +- 2, so the
    permutation to (even, odd) mode order is exactly block-diagonal."""
    M = build_matrix(p, n_modes)
    blocks = []
    for parity in (0, 1):
        idx = np.arange(parity, n_modes, 2)
        sel = np.concatenate([idx, n_modes + idx])
        blocks.append(M[np.ix_(sel, sel)])
    return tuple(blocks)


def _eigvalsh(matrix: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as exc:
        raise EigensolveFailure(str(exc)) from exc


def _merged_eigenvalues(p: NchoParams, n_modes: int) -> np.ndarray:
    even, odd = parity_blocks(p, n_modes)
    return np.sort(np.concatenate([_eigvalsh(even), _eigvalsh(odd)]))


def lowest_eigenvalues(p: NchoParams, n_modes: int, k: int,
                       return_stable: bool = False,
                       stable_rtol: float = 1e-8):
    """Lowest k eigenvalues of the truncated problem, sorted ascending.

    Galerkin truncation corrupts the top of the spectrum, so k may not
    exceed n_modes (half of the 2*n_modes total).  With return_stable=True
    also solves at n_modes/2 and returns (values, mask) where mask flags
    eigenvalues that moved less than stable_rtol relative under the
    truncation change.
    """
    if k > n_modes:
        raise DomainError(
            f"only the lowest n_modes={n_modes} eigenvalues are trustworthy, "
            f"asked for k={k}"
        )
    vals = _merged_eigenvalues(p, n_modes)[:k]
    if not return_stable:
        return vals
    half = _merged_eigenvalues(p, n_modes // 2)[:k]
    stable = np.abs(vals - half) <= stable_rtol * np.abs(vals)
    return vals, stable


def _tail_sum(c: float, d: float, k: int) -> float:
    # sum_{n>k} (c n + d)^(-2) ~ integral from k+1/2 plus midpoint correction
    L = c * (k + 0.5) + d
    return 1.0 / (c * L) - c / (12.0 * L ** 3)


def truncate_spectrum(p: NchoParams, n_modes: int, k_keep: int) -> SpectralTruncation:
    """Kept spectrum plus the linear tail fit over its last quarter."""
    vals = lowest_eigenvalues(p, n_modes, k_keep)
    c, d = _tail_fit(vals)
    return SpectralTruncation(basis_size=n_modes, eigenvalues=vals,
                              tail_slope=float(c), tail_intercept=float(d))


def _tail_fit(vals: np.ndarray):
    ranks = np.arange(1, vals.size + 1, dtype=float)
    i0 = (3 * vals.size) // 4
    c, d = np.polyfit(ranks[i0:], vals[i0:], 1)
    return float(c), float(d)


def _tail_completed_sum(vals: np.ndarray) -> float:
    c, d = _tail_fit(vals)
    return float(np.sum(1.0 / vals ** 2)) + _tail_sum(c, d, vals.size)


def zeta2_spectral(p: NchoParams, n_modes: int = DEFAULT_BASIS,
                   k_keep: int | None = None,
                   include_tail: bool = True) -> ZetaResult:
    """sum lambda_n^(-2) over the kept window plus the fitted-tail completion.

    Eigenvalues up to index n_modes (half per parity block) are accurate,
    but the top of that window carries the largest truncation error and
    the tail fit is anchored there, so k_keep defaults to n_modes/2 for
    headroom.  The error estimate combines the fit-window sensitivity
    (tail from the last quarter vs the last half of the window), the
    propagated fit residual, and the next integral-correction order.
    include_tail=False gives the bare partial sum, a strict lower bound.
    """
    if k_keep is None:
        k_keep = n_modes // 2
    if k_keep > n_modes:
        raise DomainError(
            f"only the lowest n_modes={n_modes} eigenvalues are trustworthy, "
            f"asked to keep {k_keep}"
        )
    window = _merged_eigenvalues(p, n_modes)[:n_modes]
    vals = window[:k_keep]
    partial = float(np.sum(1.0 / vals ** 2))
    if not include_tail:
        return ZetaResult(value=partial, method="spectral",
                          terms_or_nodes=k_keep, err_estimate=np.inf)
    ranks = np.arange(1, k_keep + 1, dtype=float)
    c, d = _tail_fit(vals)
    tail = _tail_sum(c, d, k_keep)
    value = partial + tail

    # fit-window sensitivity: refit over the last half instead of quarter
    i_half = k_keep // 2
    c2, d2 = np.polyfit(ranks[i_half:], vals[i_half:], 1)
    sensitivity = abs(_tail_sum(float(c2), float(d2), k_keep) - tail)
    # window-extension probe: redo the whole estimate on the full
    # trustworthy window (the eigensolve already produced it)
    if k_keep < n_modes:
        sensitivity = max(sensitivity, abs(_tail_completed_sum(window) - value))

    i0 = (3 * k_keep) // 4
    resid = vals[i0:] - (c * ranks[i0:] + d)
    rms = float(np.sqrt(np.mean(resid ** 2)))
    L = c * (k_keep + 0.5) + d
    err = sensitivity + rms / (c * L * L) + c / (12.0 * L ** 3)
    return ZetaResult(value=value, method="spectral",
                      terms_or_nodes=k_keep, err_estimate=float(err))
