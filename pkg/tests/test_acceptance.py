"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (visible with pytest -s or in the -v
summary through the assert).  Tolerances are fixed here, not tuned at run
time.
"""

import csv
import json
import math
import os
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from nchozeta import (J0, NchoParams, elliptic_k, factored_residual,
                      g_closed, g_elliptic, g_series, gauss_2f1,
                      gauss_2f1_neg, heun_coefficients, heun_residual,
                      hyper_3f2, transformed_ode_residual, w_coeff_oracle,
                      w_series, zeta2_closed, zeta2_elliptic, zeta2_euler,
                      zeta2_series, zeta2_spectral)

SRC = str(Path(__file__).resolve().parent.parent / "src")


def _report(name: str, ok: bool, detail: str = "") -> bool:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {name}: {status}" + (f" ({detail})" if detail else ""))
    return ok


def test_criterion_1_decoupled_exact_case():
    worst_closed = 0.0
    worst_spectral = 0.0
    worst_time = 0.0
    for alpha in (math.sqrt(2.0), 2.0, 5.0):
        p = NchoParams(alpha, alpha)
        exact = math.pi ** 2 / (alpha ** 2 - 1.0)
        t0 = time.perf_counter()
        closed = zeta2_closed(p).value
        spectral = zeta2_spectral(p, n_modes=512, k_keep=400).value
        worst_time = max(worst_time, time.perf_counter() - t0)
        worst_closed = max(worst_closed, abs(closed - exact) / exact)
        worst_spectral = max(worst_spectral, abs(spectral - closed) / closed)
    ok = worst_closed < 1e-12 and worst_spectral < 1e-4 and worst_time < 10.0
    assert _report(
        "1 decoupled-exact",
        ok,
        f"closed {worst_closed:.2e}, spectral {worst_spectral:.2e}, "
        f"slowest point {worst_time:.2f}s",
    )


def test_criterion_2_four_way_grid():
    t0 = time.perf_counter()
    worst_analytic = 0.0
    worst_series = 0.0
    for ab in np.logspace(math.log10(1.01), 2.0, 20):
        for ratio in (1.0, 2.0, 5.0, 10.0, 50.0):
            alpha = math.sqrt(ab * ratio)
            beta = math.sqrt(ab / ratio)
            p = NchoParams(alpha, beta)
            values = [zeta2_closed(p).value, zeta2_elliptic(p).value,
                      zeta2_euler(p).value]
            spread = (max(values) - min(values)) / abs(values[0])
            worst_analytic = max(worst_analytic, spread)
            if ab > 2.0:
                rel = abs(zeta2_series(p).value - values[0]) / abs(values[0])
                worst_series = max(worst_series, rel)
    elapsed = time.perf_counter() - t0
    ok = worst_analytic < 1e-10 and worst_series < 1e-9 and elapsed < 60.0
    assert _report(
        "2 four-way-agreement",
        ok,
        f"analytic {worst_analytic:.2e}, series {worst_series:.2e}, "
        f"{elapsed:.1f}s",
    )


def test_criterion_3_spectral_oracle_headline():
    worst = 0.0
    partials_ok = True
    for alpha, beta in ((2.0, 3.0), (1.5, 1.2), (10.0, 0.2)):
        p = NchoParams(alpha, beta)
        closed = zeta2_closed(p).value
        spectral = zeta2_spectral(p).value
        worst = max(worst, abs(spectral - closed) / closed)
        for k in (10, 100, 512):
            partial = zeta2_spectral(p, k_keep=k, include_tail=False).value
            partials_ok = partials_ok and partial < closed
    ok = worst < 1e-4 and partials_ok
    assert _report(
        "3 spectral-headline", ok,
        f"worst rel {worst:.2e}, partial sums below closed: {partials_ok}",
    )


def test_criterion_4_heun_machinery():
    series = heun_coefficients(500)
    oracle = J0 * w_coeff_oracle(500)
    coeff_rel = float(np.max(np.abs(series.coeffs - oracle) / oracle))

    s400 = heun_coefficients(400)
    resid_ok = True
    factored_ok = True
    for z in (-0.4, -0.1, 0.2):
        scale = abs(w_series(s400, z))
        resid_ok = resid_ok and abs(heun_residual(s400, z)) < 1e-10 * scale
        diff = abs(factored_residual(s400, z) / 4.0 - heun_residual(s400, z))
        factored_ok = factored_ok and diff < 1e-10 * scale
    # the factor-4 operator identity, resolved where truncation dominates
    s12 = heun_coefficients(12)
    for z in (-0.45, 0.35):
        ratio = factored_residual(s12, z) / (4.0 * heun_residual(s12, z))
        factored_ok = factored_ok and abs(ratio - 1.0) < 1e-9

    lemma_worst = max(abs(transformed_ode_residual(float(t)))
                      for t in np.linspace(0.0, 0.5, 11))

    ok = (coeff_rel < 1e-13 and resid_ok and factored_ok
          and lemma_worst < 1e-9)
    assert _report(
        "4 heun-machinery", ok,
        f"coeff {coeff_rel:.2e}, residuals {resid_ok}, "
        f"factored {factored_ok}, transformed-ode {lemma_worst:.2e}",
    )


def test_criterion_5_identity_suites():
    rng = np.random.default_rng(1905)

    worst_pfaff = 0.0
    for _ in range(20):
        a, b = rng.uniform(0.05, 1.5, size=2)
        c = rng.uniform(0.3, 2.5)
        x = -rng.uniform(0.0, 50.0)
        lhs = gauss_2f1_neg(a, b, c, x)
        rhs = (1.0 - x) ** (-a) * gauss_2f1(a, c - b, c, x / (x - 1.0))
        worst_pfaff = max(worst_pfaff, abs(lhs - rhs) / abs(rhs))

    worst_clausen = 0.0
    for _ in range(20):
        a, b = rng.uniform(0.05, 1.0, size=2)
        x = rng.uniform(0.0, 0.9)
        lhs = hyper_3f2(2 * a, 2 * b, a + b, 2 * a + 2 * b, a + b + 0.5, x)
        rhs = gauss_2f1(a, b, a + b + 0.5, x) ** 2
        worst_clausen = max(worst_clausen, abs(lhs - rhs) / abs(rhs))

    worst_quad = 0.0
    for _ in range(20):
        a, b = rng.uniform(0.1, 1.0, size=2)
        x = rng.uniform(0.0, 0.9)
        lhs = gauss_2f1(a, b, 2 * a, x)
        rhs = (1 - x / 2) ** (-b) * gauss_2f1(
            b / 2, (b + 1) / 2, a + 0.5, (x / (2 - x)) ** 2)
        worst_quad = max(worst_quad, abs(lhs - rhs) / abs(rhs))

    worst_agm = 0.0
    for k2 in np.linspace(-5.0, 0.99, 121):
        if k2 >= 0.0:
            series = gauss_2f1(0.5, 0.5, 1.0, float(k2))
        else:
            series = gauss_2f1_neg(0.5, 0.5, 1.0, float(k2))
        rel = abs(elliptic_k(float(k2)) - math.pi / 2 * series) / elliptic_k(float(k2))
        worst_agm = max(worst_agm, rel)

    ok = (worst_pfaff < 1e-11 and worst_clausen < 1e-11
          and worst_quad < 1e-11 and worst_agm < 1e-13)
    assert _report(
        "5 identity-suites", ok,
        f"pfaff {worst_pfaff:.2e}, clausen {worst_clausen:.2e}, "
        f"quadratic {worst_quad:.2e}, agm {worst_agm:.2e}",
    )


def test_criterion_6_g_equality():
    rng = np.random.default_rng(1931)
    worst_series = 0.0
    for a in rng.uniform(0.0, 0.95, size=20):
        rel = abs(g_series(float(a)) - g_closed(float(a))) / g_closed(float(a))
        worst_series = max(worst_series, rel)
    worst_elliptic = 0.0
    for a in (0.1, 1.0, 3.0, 10.0, 100.0):
        rel = abs(g_elliptic(a) - g_closed(a)) / g_closed(a)
        worst_elliptic = max(worst_elliptic, rel)
    exact_at_zero = g_series(0.0) == 1.0 and g_closed(0.0) == 1.0
    ok = worst_series < 1e-12 and worst_elliptic < 1e-11 and exact_at_zero
    assert _report(
        "6 g-representations", ok,
        f"series {worst_series:.2e}, elliptic {worst_elliptic:.2e}, "
        f"g(0)==1 {exact_at_zero}",
    )


def test_criterion_7_cli_determinism(tmp_path):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")

    def run(args):
        return subprocess.run([sys.executable, "-m", "nchozeta", *args],
                              capture_output=True, text=True, env=env)

    base = ["--alpha", "2", "--beta", "3", "--method", "all",
            "--basis-size", "128"]
    deterministic = True
    for fmt in ("text", "json", "csv"):
        first = run([*base, "--format", fmt])
        second = run([*base, "--format", fmt])
        deterministic = (deterministic and first.returncode == 0
                         and first.stdout == second.stdout)

    js = json.loads(run([*base, "--format", "json"]).stdout)
    rows = [r for r in csv.reader(
        run([*base, "--format", "csv"]).stdout.splitlines())
        if r and not r[0].startswith("#")]
    csv_values = {r[2]: float(r[3]) for r in rows[1:]}
    json_values = {r["method"]: r["value"] for r in js["results"]}
    equal = csv_values == json_values

    ok = deterministic and equal
    assert _report(
        "7 cli-determinism", ok,
        f"byte-identical {deterministic}, json==csv {equal}",
    )
