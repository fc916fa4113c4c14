"""Non-commutative harmonic oscillator: parameters, g(a), and zeta_Q(2).

The oscillator couples two scaled harmonic oscillators through the skew
factor (x d/dx + 1/2); for alpha*beta > 1 it is positive self-adjoint with
discrete spectrum 0 < lambda_1 <= lambda_2 <= ... and spectral zeta
function zeta_Q(s) = sum_n lambda_n^(-s).  This module evaluates the
special value s = 2 through every available representation:

    closed    zeta_Q(2) = (pi^2/4) (1/alpha + 1/beta)^2 / (1 - 1/(alpha beta))
                          * (1 + r^2 g(a)),
              r = (1/alpha - 1/beta)/(1/alpha + 1/beta),
              g(a) = 2F1(1/4, 3/4; 1; -a^2)^2,  a = 1/sqrt(alpha beta - 1)
    series    Z_1(2) + sum_n Z'_n(2) with the Heun coefficients J_n
              (converges only for a < 1, i.e. alpha beta > 2)
    elliptic  g replaced by the squared full-period integral of
              1/sqrt(1 - i a cos theta)
    euler     g replaced by the beta-weighted integral of w(-a^2 u)

plus the brute-force eigenvalue route in nchozeta.spectral.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import heun, quad
from .errors import BranchInconsistency, DomainError, InvalidParams
from .hypergeom import gauss_2f1_neg

#: method tags in fixed report order
METHODS = ("closed", "series", "elliptic", "euler", "spectral")

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class NchoParams:
    """Scaling constants of the two oscillator components."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.beta > 0.0):
            raise InvalidParams(
                f"need alpha > 0 and beta > 0, got ({self.alpha}, {self.beta})"
            )
        if not self.alpha * self.beta > 1.0:
            raise InvalidParams(
                f"need alpha*beta > 1 for positivity, got "
                f"alpha*beta = {self.alpha * self.beta}"
            )


@dataclass(frozen=True)
class DerivedParams:
    """gamma = 1/sqrt(alpha beta) in (0,1); a = gamma/sqrt(1-gamma^2) > 0."""

    gamma: float
    a: float


@dataclass(frozen=True)
class ZetaResult:
    """A computed zeta_Q(2) value with its route and a-posteriori error."""

    value: float
    method: str
    terms_or_nodes: int
    err_estimate: float


def derive(p: NchoParams) -> DerivedParams:
    """Derived parameters; a = 1/sqrt(alpha beta - 1) equals gamma/sqrt(1-gamma^2)."""
    ab = p.alpha * p.beta
    if ab <= 1.0:
        raise InvalidParams(f"need alpha*beta > 1, got {ab}")
    return DerivedParams(gamma=1.0 / math.sqrt(ab), a=1.0 / math.sqrt(ab - 1.0))


def series_coeff(n: int) -> float:
    """c_n = (1/2) (2n-1)!!/(2n)!! = binom(2n, n) / (2 * 4^n).

    Computed by the stable ratio recurrence c_{n+1} = c_n (2n+1)/(2n+2)
    from c_0 = 1/2.  The value at n = 0 is fixed to 1/2 (not the literal
    binom(-1, 0) = 1) so that the double-factorial identity, the moment
    integral (1/2pi) int_0^1 u^n du/sqrt(u(1-u)) = c_n, and g(0) = 1 all
    hold simultaneously.
    """
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    c = 0.5
    for m in range(n):
        c *= (2 * m + 1) / (2 * m + 2)
    return c


def _series_coeffs(N: int) -> np.ndarray:
    c = np.empty(N + 1)
    c[0] = 0.5
    for m in range(N):
        c[m + 1] = c[m] * (2 * m + 1) / (2 * m + 2)
    return c


def g_series(a: float, N: int = 2000) -> float:
    """g(a) = 2 sum_n (-1)^n c_n a^(2n) J_n / J_0, converging for 0 <= a < 1.

    Stops early once a term drops below 1e-15 in magnitude.  For a >= 1
    the series diverges; use g_closed / g_elliptic / g_euler there.
    """
    if not 0.0 <= a < 1.0:
        raise DomainError(f"g_series needs 0 <= a < 1, got a={a}")
    ratios = heun_coefficients_ratios(N)
    a2 = a * a
    terms = []
    c = 0.5
    pw = 1.0
    for n in range(N + 1):
        term = 2.0 * (-1.0) ** n * c * pw * ratios[n]
        terms.append(term)
        if abs(term) < 1e-15:
            break
        c *= (2 * n + 1) / (2 * n + 2)
        pw *= a2
    return math.fsum(terms)


def heun_coefficients_ratios(N: int) -> np.ndarray:
    """J_n / J_0 for n = 0..N via the recurrence route."""
    return heun.heun_coefficients(N).coeffs / heun.J0


def g_closed(a: float, full_output: bool = False):
    """g(a) = 2F1(1/4, 3/4; 1; -a^2)^2 for a >= 0."""
    if a < 0.0:
        raise DomainError(f"g_closed needs a >= 0, got {a}")
    F, n = gauss_2f1_neg(0.25, 0.75, 1.0, -a * a, full_output=True)
    g = F * F
    return (g, n) if full_output else g


def g_euler(a: float, tol: float = quad.DEFAULT_TOL,
            n_max: int = quad.DEFAULT_N_MAX, full_output: bool = False):
    """g(a) = (1/pi) int_0^1 w(-a^2 u) / J_0 * du/sqrt(u(1-u)).

    The integrand is the generating function evaluated through its closed
    form, identical termwise to the defining series of g.
    """
    if a < 0.0:
        raise DomainError(f"g_euler needs a >= 0, got {a}")
    a2 = a * a

    def f(u):
        return heun.w_closed(-a2 * u) / heun.J0

    res = quad.beta_weighted(f, n_max=n_max, tol=tol)
    g = res.value.real / math.pi
    return (g, res) if full_output else g


def g_elliptic(a: float, tol: float = quad.DEFAULT_TOL,
               n_max: int = quad.DEFAULT_N_MAX, full_output: bool = False):
    """g(a) = (Re F)^2 with F = (1/2pi) int_0^2pi dtheta / sqrt(1 - i a cos theta).

    The full-period integral pairs theta with pi - theta, whose integrand
    values are complex conjugates, so F is real analytically and the sign
    of the imaginary unit is immaterial.  Both sign choices are evaluated
    and must agree in their real parts; BranchInconsistency otherwise.
    """
    if a < 0.0:
        raise DomainError(f"g_elliptic needs a >= 0, got {a}")
    minus = quad.periodic_trapezoid(
        lambda th: 1.0 / np.sqrt(1.0 - 1j * a * np.cos(th)), n_max=n_max, tol=tol
    )
    plus = quad.periodic_trapezoid(
        lambda th: 1.0 / np.sqrt(1.0 + 1j * a * np.cos(th)), n_max=n_max, tol=tol
    )
    bound = 10.0 * tol
    if abs(minus.value.imag) > bound or abs(plus.value.imag) > bound:
        raise BranchInconsistency(
            f"imaginary part {minus.value.imag:.3e} / {plus.value.imag:.3e} "
            f"exceeds {bound:.1e}"
        )
    if abs(minus.value.real - plus.value.real) > bound:
        raise BranchInconsistency(
            f"sign choices disagree: {minus.value.real!r} vs {plus.value.real!r}"
        )
    g = minus.value.real ** 2
    return (g, minus) if full_output else g


def _prefactor(p: NchoParams):
    ia, ib = 1.0 / p.alpha, 1.0 / p.beta
    pref = math.pi ** 2 / 4.0 * (ia + ib) ** 2 / (1.0 - ia * ib)
    ratio2 = ((ia - ib) / (ia + ib)) ** 2
    return pref, ratio2


def z1(p: NchoParams) -> float:
    """Z_1(2) = (1/alpha + 1/beta)^2 / (2 (1 - gamma^2)) * pi^2/2."""
    ia, ib = 1.0 / p.alpha, 1.0 / p.beta
    gamma2 = ia * ib
    return (ia + ib) ** 2 / (2.0 * (1.0 - gamma2)) * heun.J0


def zprime(p: NchoParams, n: int) -> float:
    """Z'_n(2) = (-1)^n (1/alpha - 1/beta)^2 / (1 - gamma^2) c_n a^(2n) J_n."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    ia, ib = 1.0 / p.alpha, 1.0 / p.beta
    d = derive(p)
    J_n = heun.heun_coefficients(n).coeffs[n]
    return ((-1.0) ** n * (ia - ib) ** 2 / (1.0 - d.gamma ** 2)
            * series_coeff(n) * d.a ** (2 * n) * J_n)


def zeta2_series(p: NchoParams, N: int = 2000) -> ZetaResult:
    """zeta_Q(2) = Z_1(2) + sum_{n<=N} Z'_n(2), with early termination.

    Requires a < 1 (alpha*beta > 2); err_estimate is the magnitude of the
    last included term.
    """
    d = derive(p)
    if d.a >= 1.0:
        raise DomainError(
            f"series route needs a < 1 (alpha*beta > 2), got a={d.a}"
        )
    ia, ib = 1.0 / p.alpha, 1.0 / p.beta
    pref_prime = (ia - ib) ** 2 / (1.0 - d.gamma ** 2)
    base = z1(p)
    coeffs = heun.heun_coefficients(N).coeffs
    a2 = d.a * d.a
    c = 0.5
    pw = 1.0
    terms = [base]
    last = 0.0
    included = 0
    for n in range(N + 1):
        last = float((-1.0) ** n * pref_prime * c * pw * coeffs[n])
        terms.append(last)
        included = n + 1
        if abs(last) < 1e-15 * base:
            break
        c *= (2 * n + 1) / (2 * n + 2)
        pw *= a2
    return ZetaResult(value=math.fsum(terms), method="series",
                      terms_or_nodes=included, err_estimate=abs(last))


def zeta2_closed(p: NchoParams) -> ZetaResult:
    """The closed hypergeometric form of zeta_Q(2) (default route)."""
    d = derive(p)
    pref, ratio2 = _prefactor(p)
    g, n = g_closed(d.a, full_output=True)
    value = pref * (1.0 + ratio2 * g)
    err = 4.0 * _EPS * abs(value) + 2e-15 * pref * ratio2 * g
    return ZetaResult(value=value, method="closed", terms_or_nodes=n,
                      err_estimate=err)


def zeta2_elliptic(p: NchoParams, tol: float = quad.DEFAULT_TOL,
                   n_max: int = quad.DEFAULT_N_MAX) -> ZetaResult:
    """zeta_Q(2) with g evaluated through the elliptic-integral representation."""
    d = derive(p)
    pref, ratio2 = _prefactor(p)
    g, res = g_elliptic(d.a, tol=tol, n_max=n_max, full_output=True)
    value = pref * (1.0 + ratio2 * g)
    err_g = 2.0 * math.sqrt(g) * res.err_estimate + abs(res.value.imag)
    err = pref * ratio2 * err_g + 4.0 * _EPS * abs(value)
    return ZetaResult(value=value, method="elliptic", terms_or_nodes=res.nodes,
                      err_estimate=err)


def zeta2_euler(p: NchoParams, tol: float = quad.DEFAULT_TOL,
                n_max: int = quad.DEFAULT_N_MAX) -> ZetaResult:
    """zeta_Q(2) with g evaluated through the beta-weighted integral of w."""
    d = derive(p)
    pref, ratio2 = _prefactor(p)
    g, res = g_euler(d.a, tol=tol, n_max=n_max, full_output=True)
    value = pref * (1.0 + ratio2 * g)
    err = pref * ratio2 * res.err_estimate / math.pi + 4.0 * _EPS * abs(value)
    return ZetaResult(value=value, method="euler", terms_or_nodes=res.nodes,
                      err_estimate=err)
