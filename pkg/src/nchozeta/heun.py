"""Generating function of the singly confluent Heun equation

    z(1-z)^2 w'' + (1-3z)(1-z) w' + (z - 3/4) w = 0,        w(0) = pi^2/2.

The unique power-series solution w(z) = sum_n J_n z^n is produced three
ways that must agree: the three-term coefficient recurrence read off the
equation, the Cauchy-product coefficients of the closed form
w(z) = J_0 (1-z)^(-1/2) 2F1(1/2, 1/2; 1; z), and direct evaluation of the
closed form via the Pfaff-transformed representation
w(z) = J_0 (1-z)^(-1) 2F1(1/2, 1/2; 1; z/(z-1)).  The residual operators
certify the recurrence against the differential equation itself.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import hyp2f1_many, hyp2f1_terms
from .errors import DomainError, NoConvergence

#: w(0) = 3 zeta(2) = pi^2 / 2
J0 = math.pi ** 2 / 2


@dataclass(frozen=True)
class HeunSeries:
    """Truncated coefficient sequence J_0 .. J_N of w(z)."""

    coeffs: np.ndarray
    n_terms: int


def heun_coefficients(N: int) -> HeunSeries:
    """Coefficients J_0 .. J_N from the recurrence

        (n+1)^2 J_{n+1} = (2n^2 + 2n + 3/4) J_n - n^2 J_{n-1},

    obtained by inserting sum J_n z^n into the differential equation;
    J_0 = pi^2/2 and the n = 0 step forces J_1 = (3/4) J_0.

    The forward recurrence loses about three digits by n = 500 in plain
    binary64 (mild cancellation each step), so it runs in extended
    precision internally and the result is rounded once at the end.
    """
    if N < 0:
        raise DomainError(f"need N >= 0, got {N}")
    r = np.empty(N + 1, dtype=np.longdouble)
    r[0] = 1.0
    if N >= 1:
        r[1] = 0.75
    for n in range(1, N):
        nn = np.longdouble(n)
        r[n + 1] = ((2.0 * nn * nn + 2.0 * nn + 0.75) * r[n]
                    - nn * nn * r[n - 1]) / ((nn + 1.0) * (nn + 1.0))
    coeffs = (np.longdouble(J0) * r).astype(np.float64)
    return HeunSeries(coeffs=coeffs, n_terms=N + 1)


def w_coeff_oracle(N: int) -> np.ndarray:
    """Independent coefficient ratios J_n / J_0 for n = 0 .. N.

    Expands the closed form (1-z)^(-1/2) 2F1(1/2, 1/2; 1; z) as the Cauchy
    product of the central-binomial series sum_m binom(2m, m) (z/4)^m with
    the squared-coefficient series sum_k (binom(2k, k)/4^k)^2 z^k.  Both
    factor sequences are positive, so the convolution is free of
    cancellation and serves as the accuracy oracle for heun_coefficients.
    """
    if N < 0:
        raise DomainError(f"need N >= 0, got {N}")
    b = np.empty(N + 1)
    b[0] = 1.0
    for m in range(N):
        b[m + 1] = b[m] * (2 * m + 1) / (2 * m + 2)
    return np.convolve(b, b * b)[: N + 1]


def w_closed(z, rel_tol: float = 1e-15, max_terms: int = 100_000):
    """Closed-form w(z) = J_0 (1-z)^(-1) 2F1(1/2, 1/2; 1; z/(z-1)) for z < 1/2.

    Accepts a scalar or ndarray.  For z <= 0 the transformed argument lies
    in [0, 1), which is what the integral representations evaluate; the
    argument approaches 1 for deeply negative z and the series stalls
    (NoConvergence) once z drops below about -1e3 at default max_terms.
    """
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr >= 0.5):
        raise DomainError("w_closed needs z < 1/2 everywhere")
    t = z_arr / (z_arr - 1.0)
    if z_arr.ndim == 0:
        value, _, ok = hyp2f1_terms(0.5, 0.5, 1.0, float(t), rel_tol, max_terms)
        if not ok:
            raise NoConvergence(f"w_closed series stalled at z={z}")
        return J0 / (1.0 - float(z_arr)) * value
    values, _, ok = hyp2f1_many(0.5, 0.5, 1.0, np.ascontiguousarray(t),
                                rel_tol, max_terms)
    if not ok:
        raise NoConvergence("w_closed series stalled somewhere on the array")
    return J0 / (1.0 - z_arr) * values


def w_series(series: HeunSeries, z: float) -> float:
    """Truncated partial sum sum_{n <= N} J_n z^n (cross-check inside |z| < 1)."""
    return float(np.polynomial.polynomial.polyval(z, series.coeffs))


def _polyval(z: float, coeffs: np.ndarray) -> float:
    if coeffs.size == 0:
        return 0.0
    return float(np.polynomial.polynomial.polyval(z, coeffs))


def heun_residual(series: HeunSeries, z: float) -> float:
    """Residual of the defining equation on the truncated series at z.

    Evaluates z(1-z)^2 w'' + (1-3z)(1-z) w' + (z - 3/4) w with termwise
    (exact) series derivatives.  Signed; for a good truncation inside the
    disc it is rounding-level relative to |w(z)|.
    """
    c = series.coeffs
    n = np.arange(c.size)
    w = _polyval(z, c)
    wp = _polyval(z, (c * n)[1:])
    wpp = _polyval(z, (c * n * (n - 1))[2:])
    return (z * (1.0 - z) ** 2 * wpp
            + (1.0 - 3.0 * z) * (1.0 - z) * wp
            + (z - 0.75) * w)


def factored_residual(series: HeunSeries, z: float) -> float:
    """Residual of the factored operator form 4(1-z) d/dz z d/dz (1-z) w + w.

    Built by explicit polynomial-coefficient algebra (multiply by (1-z),
    differentiate, multiply by z, ...), a route independent of
    heun_residual's termwise derivatives.  Expanding the factored operator
    with the Leibniz rule shows it equals exactly 4 times the defining
    operator, so factored_residual == 4 * heun_residual up to rounding.
    """
    c = series.coeffs
    v = np.concatenate([c, [0.0]]) - np.concatenate([[0.0], c])       # (1-z) w
    vp = (v * np.arange(v.size))[1:]                                  # d/dz
    zvp = np.concatenate([[0.0], vp])                                 # z *
    dzvp = (zvp * np.arange(zvp.size))[1:]                            # d/dz
    res = np.concatenate([dzvp, [0.0]]) - np.concatenate([[0.0], dzvp])  # (1-z) *
    res = 4.0 * res
    res[: c.size] += c                                                # + w
    return _polyval(z, res)


def transformed_ode_residual(t: float, step: float = 1e-5) -> float:
    """Central-difference residual of the variable-changed equation.

    With z = t/(t-1) and eta(t) = (1-z) w(z), the factored equation turns
    into the hypergeometric equation

        t(1-t) eta'' + (1-2t) eta' - eta/4 = 0,

    and the closed form collapses to eta(t) = J_0 2F1(1/2, 1/2; 1; t)
    (the Pfaff map is an involution here: z/(z-1) = t).  eta', eta'' are
    the standard central differences with the given step, but each stencil
    combination is evaluated termwise through the exact binomial identity

        (t+h)^k - 2 t^k + (t-h)^k = 2 sum_{j even >= 2} C(k,j) t^(k-j) h^j

    (odd j for the first difference).  All contributions are nonnegative
    for t >= 0, so the divided differences carry no subtractive
    cancellation and the residual reflects the h^2 stencil truncation
    error instead of a rounding-noise floor of order eps/h^2.
    """
    if not 0.0 <= t <= 0.5:
        raise DomainError(f"transformed_ode_residual expects t in [0, 1/2], got {t}")
    h = step
    # q_k = ((1/2)_k / k!)^2 via the central-binomial ratio recurrence;
    # 240 terms leave the k-tail below 1e-24 for every t <= 1/2 + h
    bk = 1.0
    eta = 0.0
    d1 = 0.0
    d2 = 0.0
    for k in range(241):
        qk = bk * bk
        eta += qk * t ** k
        s1 = 0.0
        s2 = 0.0
        for j in range(1, min(k, 10) + 1):
            term = math.comb(k, j) * t ** (k - j) * h ** j
            if j % 2:
                s1 += term
            else:
                s2 += term
        d1 += qk * 2.0 * s1
        d2 += qk * 2.0 * s2
        bk *= (2 * k + 1) / (2 * k + 2)
    eta *= J0
    eta_p = J0 * d1 / (2.0 * h)
    eta_pp = J0 * d2 / (h * h)
    return t * (1.0 - t) * eta_pp + (1.0 - 2.0 * t) * eta_p - 0.25 * eta
