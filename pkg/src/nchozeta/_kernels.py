"""Hot numeric kernels, compiled with numba when the backend allows.

Every kernel is written as a plain float64 loop so the same body runs
either @njit-compiled or interpreted.  Vector variants get a dedicated
pure-numpy implementation (synchronous term iteration over the whole
array) when numba is off, since the interpreted scalar loop would be the
slow path exactly where arrays are large.

Series summation protocol: terms are produced by the Pochhammer ratio
recurrence (never gamma quotients), accumulated with Neumaier-compensated
addition, and iteration stops after three consecutive terms fall below
rel_tol * |partial sum| (three, so a vanishing term of an alternating
pattern cannot stop the sum early).
"""

import numpy as np

from ._backend import USING_NUMBA, jit_kernel


def _hyp2f1_terms(a, b, c, x, rel_tol, max_terms):
    s = 1.0
    comp = 0.0
    term = 1.0
    small = 0
    k = 0
    while k < max_terms:
        term = term * (a + k) * (b + k) / ((c + k) * (1.0 + k)) * x
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        k += 1
        if abs(term) < rel_tol * abs(s + comp):
            small += 1
            if small >= 3:
                return s + comp, k, True
        else:
            small = 0
    return s + comp, k, False


def _hyp3f2_terms(a1, a2, a3, b1, b2, x, rel_tol, max_terms):
    s = 1.0
    comp = 0.0
    term = 1.0
    small = 0
    k = 0
    while k < max_terms:
        term = term * (a1 + k) * (a2 + k) * (a3 + k) / (
            (b1 + k) * (b2 + k) * (1.0 + k)
        ) * x
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        k += 1
        if abs(term) < rel_tol * abs(s + comp):
            small += 1
            if small >= 3:
                return s + comp, k, True
        else:
            small = 0
    return s + comp, k, False


def _agm_mean(a0, b0):
    # Arithmetic-geometric mean; quadratic convergence, <=64 guards plenty.
    a = a0
    b = b0
    it = 0
    while it < 64:
        if abs(a - b) <= 2.0 * 2.220446049250313e-16 * abs(a):
            break
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        it += 1
    return 0.5 * (a + b), it


hyp2f1_terms = jit_kernel(_hyp2f1_terms)
hyp3f2_terms = jit_kernel(_hyp3f2_terms)
agm_mean = jit_kernel(_agm_mean)


if USING_NUMBA:

    @jit_kernel
    def hyp2f1_many(a, b, c, xs, rel_tol, max_terms):
        out = np.empty(xs.shape[0])
        worst = 0
        ok = True
        for i in range(xs.shape[0]):
            v, n, o = hyp2f1_terms(a, b, c, xs[i], rel_tol, max_terms)
            out[i] = v
            if n > worst:
                worst = n
            ok = ok and o
        return out, worst, ok

else:

    def hyp2f1_many(a, b, c, xs, rel_tol, max_terms):
        # Synchronous vectorized recurrence: one term index across the
        # whole array, Neumaier compensation elementwise.  Elements that
        # converged early keep absorbing (negligible) terms; that only
        # refines them.
        s = np.ones_like(xs)
        comp = np.zeros_like(xs)
        term = np.ones_like(xs)
        small = np.zeros(xs.shape, dtype=np.int64)
        for k in range(max_terms):
            term = term * ((a + k) * (b + k) / ((c + k) * (1.0 + k))) * xs
            t = s + term
            comp = comp + np.where(
                np.abs(s) >= np.abs(term), (s - t) + term, (term - t) + s
            )
            s = t
            small = np.where(
                np.abs(term) < rel_tol * np.abs(s + comp), small + 1, 0
            )
            if np.all(small >= 3):
                return s + comp, k + 1, True
        return s + comp, max_terms, False
