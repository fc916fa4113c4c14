"""Gauss/generalized hypergeometric series and the complete elliptic integral.

Everything here is evaluated in binary64 with compensated accumulation so
that downstream cross-checks can resolve ~1e-13 relative agreement.  The
three series evaluators share one protocol (see _kernels): incremental
Pochhammer ratios, Neumaier summation, stop after three consecutive
sub-tolerance terms.
"""

import math

import numpy as np

from . import quad
from ._kernels import agm_mean, hyp2f1_terms, hyp3f2_terms
from .errors import DomainError, NoConvergence

#: transformed arguments beyond this are handled by the quadrature route
#: (only available for the (1/4, 3/4; 1) parameter family)
DEEP_ARGUMENT = 1.0 - 1e-3

_QUARTER_FAMILY = (0.25, 0.75, 1.0)


def _check_not_nonpositive_int(value: float, name: str) -> None:
    if value <= 0.0 and value == math.floor(value):
        raise DomainError(f"{name} must not be zero or a negative integer, got {value}")


def gauss_2f1(a: float, b: float, c: float, x: float,
              rel_tol: float = 1e-15, max_terms: int = 100_000,
              full_output: bool = False):
    """Gauss hypergeometric series 2F1(a, b; c; x) for |x| < 1.

    Sums sum_k (a)_k (b)_k / ((c)_k k!) x^k directly.  Use gauss_2f1_neg
    for arguments at or below -1.

    Raises DomainError for |x| >= 1 and NoConvergence when max_terms is
    exhausted first.  With full_output=True returns (value, n_terms).
    """
    _check_not_nonpositive_int(c, "c")
    if abs(x) >= 1.0:
        raise DomainError(f"gauss_2f1 needs |x| < 1, got x={x}")
    value, n, ok = hyp2f1_terms(a, b, c, x, rel_tol, max_terms)
    if not ok:
        raise NoConvergence(
            f"2F1({a},{b};{c};{x}) did not converge within {max_terms} terms"
        )
    return (value, n) if full_output else value


def gauss_2f1_neg(a: float, b: float, c: float, x: float,
                  rel_tol: float = 1e-15, max_terms: int = 100_000,
                  full_output: bool = False):
    """2F1(a, b; c; x) for x <= 0 of any magnitude, via the Pfaff map.

    Pfaff's transformation
        2F1(a, b; c; x) = (1-x)^(-a) 2F1(a, c-b; c; x/(x-1))
    sends x <= 0 to a transformed argument in [0, 1).  When that argument
    exceeds DEEP_ARGUMENT the transformed series degrades; for the
    (1/4, 3/4; 1) family the value is then taken from the equivalent
    full-period integral
        2F1(1/4, 3/4; 1; -a^2) = (1/2pi) int_0^2pi dtheta / sqrt(1 - i a cos theta)
    evaluated by the periodic trapezoid rule.  Other parameter sets in the
    deep regime raise NoConvergence if the series stalls.
    """
    _check_not_nonpositive_int(c, "c")
    if x > 0.0:
        raise DomainError(f"gauss_2f1_neg needs x <= 0, got x={x}")
    t = x / (x - 1.0)
    if t > DEEP_ARGUMENT and (a, b, c) == _QUARTER_FAMILY:
        am = math.sqrt(-x)
        res = quad.periodic_trapezoid(
            lambda th: 1.0 / np.sqrt(1.0 - 1j * am * np.cos(th)),
            tol=1e-14,
        )
        value = res.value.real
        return (value, res.nodes) if full_output else value
    series, n, ok = hyp2f1_terms(a, c - b, c, t, rel_tol, max_terms)
    if not ok:
        raise NoConvergence(
            f"Pfaff-transformed 2F1 stalled at argument {t} "
            f"(x={x}); only the (1/4, 3/4; 1) family has a deep-argument route"
        )
    value = (1.0 - x) ** (-a) * series
    return (value, n) if full_output else value


def hyper_3f2(a1: float, a2: float, a3: float, b1: float, b2: float, x: float,
              rel_tol: float = 1e-15, max_terms: int = 100_000,
              full_output: bool = False):
    """Generalized hypergeometric series 3F2(a1, a2, a3; b1, b2; x), |x| < 1."""
    _check_not_nonpositive_int(b1, "b1")
    _check_not_nonpositive_int(b2, "b2")
    if abs(x) >= 1.0:
        raise DomainError(f"hyper_3f2 needs |x| < 1, got x={x}")
    value, n, ok = hyp3f2_terms(a1, a2, a3, b1, b2, x, rel_tol, max_terms)
    if not ok:
        raise NoConvergence(
            f"3F2({a1},{a2},{a3};{b1},{b2};{x}) did not converge "
            f"within {max_terms} terms"
        )
    return (value, n) if full_output else value


def elliptic_k(k2: float) -> float:
    """Complete elliptic integral of the first kind, squared modulus k2 < 1.

        K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta)
             = (pi/2) 2F1(1/2, 1/2; 1; k^2)

    computed by the arithmetic-geometric mean K = pi / (2 agm(1, sqrt(1-k^2))),
    which converges quadratically and holds for negative k2 as well.
    """
    if k2 >= 1.0:
        raise DomainError(f"elliptic_k needs k2 < 1, got {k2}")
    mean, _ = agm_mean(1.0, math.sqrt(1.0 - k2))
    return math.pi / (2.0 * mean)


def csqrt(z: complex) -> complex:
    """Principal square root of a complex number.

    For re(z) > 0 the result has positive real part; the branch cut is the
    negative real axis.  Uses the cancellation-free two-case formula, so
    csqrt(z)**2 reproduces z to a couple of ulp componentwise.
    """
    z = complex(z)
    re, im = z.real, z.imag
    if re == 0.0 and im == 0.0:
        return complex(0.0, 0.0)
    t = math.sqrt(0.5 * (math.hypot(re, im) + abs(re)))
    if re >= 0.0:
        return complex(t, im / (2.0 * t))
    u = abs(im) / (2.0 * t)
    return complex(u, math.copysign(t, im))
