"""zeta_Q(2) of the non-commutative harmonic oscillator.

Four mutually independent analytic routes (closed hypergeometric form,
coefficient series, elliptic-integral and Euler-integral representations)
plus a brute-force Hermite-Galerkin eigenvalue oracle, built to agree to
~1e-10 relative among themselves and ~1e-4 against the eigenvalue sum.
"""

from ._backend import BACKEND, USING_NUMBA
from .errors import (BranchInconsistency, DomainError, EigensolveFailure,
                     InvalidParams, NchoZetaError, NoConvergence)
from .heun import (HeunSeries, J0, factored_residual, heun_coefficients,
                   heun_residual, transformed_ode_residual, w_closed,
                   w_coeff_oracle, w_series)
from .hypergeom import csqrt, elliptic_k, gauss_2f1, gauss_2f1_neg, hyper_3f2
from .ncho import (METHODS, DerivedParams, NchoParams, ZetaResult, derive,
                   g_closed, g_elliptic, g_euler, g_series, series_coeff, z1,
                   zeta2_closed, zeta2_elliptic, zeta2_euler, zeta2_series,
                   zprime)
from .quad import QuadResult, beta_weighted, periodic_trapezoid
from .spectral import (SpectralTruncation, build_matrix, lowest_eigenvalues,
                       parity_blocks, truncate_spectrum, zeta2_spectral)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "USING_NUMBA", "__version__",
    "NchoZetaError", "DomainError", "InvalidParams", "NoConvergence",
    "BranchInconsistency", "EigensolveFailure",
    "gauss_2f1", "gauss_2f1_neg", "hyper_3f2", "elliptic_k", "csqrt",
    "QuadResult", "periodic_trapezoid", "beta_weighted",
    "J0", "HeunSeries", "heun_coefficients", "w_coeff_oracle", "w_closed",
    "w_series", "heun_residual", "factored_residual", "transformed_ode_residual",
    "NchoParams", "DerivedParams", "ZetaResult", "METHODS", "derive",
    "series_coeff", "g_series", "g_closed", "g_euler", "g_elliptic",
    "z1", "zprime", "zeta2_series", "zeta2_closed", "zeta2_elliptic",
    "zeta2_euler",
    "SpectralTruncation", "build_matrix", "parity_blocks",
    "lowest_eigenvalues", "truncate_spectrum", "zeta2_spectral",
]
