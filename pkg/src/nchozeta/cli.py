"""Command-line interface: single-point evaluation, grid sweeps, comparisons.

Data records go to stdout and are byte-deterministic for a fixed
configuration; timing and failure diagnostics go to stderr.  Numbers are
serialized with repr (shortest round-trip), so JSON and CSV carry
identical value strings.

Exit codes: 0 ok, 2 invalid parameters, 3 convergence failure,
4 grid completed with failed rows.
"""

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field

from . import spectral
from .errors import BranchInconsistency, DomainError, InvalidParams, NoConvergence
from .ncho import (METHODS, NchoParams, derive, zeta2_closed, zeta2_elliptic,
                   zeta2_euler, zeta2_series)


@dataclass
class RunConfig:
    alpha: float
    beta: float
    methods: tuple = ("closed",)
    series_terms: int = 2000
    quad_tol: float = 1e-13
    basis_size: int = spectral.DEFAULT_BASIS
    output_format: str = "text"
    diagnostics: list = field(default_factory=list)


def _dispatch(method: str, p: NchoParams, cfg: RunConfig):
    if method == "closed":
        return zeta2_closed(p)
    if method == "series":
        return zeta2_series(p, N=cfg.series_terms)
    if method == "elliptic":
        return zeta2_elliptic(p, tol=cfg.quad_tol)
    if method == "euler":
        return zeta2_euler(p, tol=cfg.quad_tol)
    if method == "spectral":
        return spectral.zeta2_spectral(p, n_modes=cfg.basis_size)
    raise ValueError(f"unknown method {method!r}")


def _applicable(methods, p: NchoParams):
    """Expand 'all' to every applicable route, in fixed report order."""
    if "all" not in methods:
        return tuple(m for m in METHODS if m in methods)
    a = derive(p).a
    out = []
    for m in METHODS:
        if m == "series" and a >= 1.0:
            continue
        out.append(m)
    return tuple(out)


def run_point(cfg: RunConfig) -> dict:
    """Evaluate one (alpha, beta) point; returns the report dictionary.

    Report: {params, results: [{method, value, err, terms}], discrepancy,
    failures: [{method, error}]}.  Raises InvalidParams for bad parameters;
    per-method convergence failures are collected, not raised.
    """
    p = NchoParams(cfg.alpha, cfg.beta)
    results = []
    failures = []
    for method in _applicable(cfg.methods, p):
        t0 = time.perf_counter()
        try:
            res = _dispatch(method, p, cfg)
        except (NoConvergence, BranchInconsistency) as exc:
            failures.append({"method": method, "error": f"{type(exc).__name__}: {exc}"})
            continue
        finally:
            cfg.diagnostics.append(
                f"# elapsed {method} {time.perf_counter() - t0:.3f}s"
            )
        results.append({"method": res.method, "value": float(res.value),
                        "err": float(res.err_estimate),
                        "terms": int(res.terms_or_nodes)})
    report = {"params": {"alpha": cfg.alpha, "beta": cfg.beta},
              "results": results}
    if len(results) >= 2:
        worst = (0.0, ["", ""])
        for i in range(len(results)):
            for j in range(i + 1, len(results)):
                vi, vj = results[i]["value"], results[j]["value"]
                rel = abs(vi - vj) / max(abs(vi), abs(vj))
                if rel >= worst[0]:
                    worst = (rel, [results[i]["method"], results[j]["method"]])
        report["discrepancy"] = {"max_rel": worst[0], "pair": worst[1]}
    if failures:
        report["failures"] = failures
    return report


def _emit_point_text(report: dict, out):
    pr = report["params"]
    print(f"# alpha={pr['alpha']!r} beta={pr['beta']!r}", file=out)
    for r in report["results"]:
        print(f"{r['method']} {r['value']!r} {r['err']!r} {r['terms']}", file=out)
    if "discrepancy" in report:
        d = report["discrepancy"]
        print(f"# discrepancy max_rel={d['max_rel']!r} "
              f"pair={d['pair'][0]}/{d['pair'][1]}", file=out)


def _emit_grid_text(report: dict, out):
    pr = report["params"]
    for r in report["results"]:
        print(f"{pr['alpha']!r} {pr['beta']!r} {r['method']} "
              f"{r['value']!r} {r['err']!r} {r['terms']}", file=out)


_CSV_HEADER = "alpha,beta,method,value,err,terms"


def _emit_csv_rows(report: dict, out):
    pr = report["params"]
    for r in report["results"]:
        print(f"{pr['alpha']!r},{pr['beta']!r},{r['method']},"
              f"{r['value']!r},{r['err']!r},{r['terms']}", file=out)
    if "discrepancy" in report:
        d = report["discrepancy"]
        print(f"# discrepancy max_rel={d['max_rel']!r} "
              f"pair={d['pair'][0]}/{d['pair'][1]}", file=out)


def _emit(report: dict, fmt: str, out, grid: bool):
    if fmt == "json":
        print(json.dumps(report), file=out)
    elif fmt == "csv":
        _emit_csv_rows(report, out)
    elif grid:
        _emit_grid_text(report, out)
    else:
        _emit_point_text(report, out)


def _read_grid(path: str):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0][:2]] != ["alpha", "beta"]:
        raise DomainError(f"grid file {path} must start with header 'alpha,beta'")
    parsed = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        try:
            parsed.append((float(row[0]), float(row[1])))
        except (ValueError, IndexError) as exc:
            raise DomainError(f"{path}:{lineno}: bad grid row {row!r}") from exc
    return parsed


def run_grid(path: str, cfg: RunConfig, out=None, err=None) -> int:
    """Evaluate every grid row with cfg defaults; deterministic row order.

    Failed rows are reported on stderr (and as error objects in JSON mode);
    remaining rows still run.  Returns the exit code.
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    points = _read_grid(path)
    if cfg.output_format == "csv":
        print(_CSV_HEADER, file=out)
    any_failed = False
    any_convergence = False
    for alpha, beta in points:
        row_cfg = RunConfig(alpha=alpha, beta=beta, methods=cfg.methods,
                            series_terms=cfg.series_terms,
                            quad_tol=cfg.quad_tol, basis_size=cfg.basis_size,
                            output_format=cfg.output_format)
        try:
            report = run_point(row_cfg)
        except InvalidParams as exc:
            any_failed = True
            msg = f"InvalidParams: {exc}"
            if cfg.output_format == "json":
                print(json.dumps({"params": {"alpha": alpha, "beta": beta},
                                  "error": msg}), file=out)
            else:
                print(f"# error alpha={alpha!r} beta={beta!r} {msg}", file=out)
            print(f"# row alpha={alpha!r} beta={beta!r} failed: {msg}", file=err)
            continue
        for line in row_cfg.diagnostics:
            print(line, file=err)
        if report.get("failures"):
            any_failed = True
            any_convergence = True
            for f in report["failures"]:
                print(f"# row alpha={alpha!r} beta={beta!r} method "
                      f"{f['method']} failed: {f['error']}", file=err)
        _emit(report, cfg.output_format, out, grid=True)
    return 4 if any_failed else 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nchozeta",
        description="Evaluate the s=2 spectral zeta value of the "
                    "non-commutative harmonic oscillator.",
    )
    ap.add_argument("--alpha", type=float, help="first scaling constant")
    ap.add_argument("--beta", type=float, help="second scaling constant")
    ap.add_argument("--method", default="closed",
                    choices=list(METHODS) + ["all"],
                    help="evaluation route (default: closed)")
    ap.add_argument("--terms", type=int, default=2000,
                    help="series term budget (default: 2000)")
    ap.add_argument("--quad-tol", type=float, default=1e-13,
                    help="quadrature absolute tolerance (default: 1e-13)")
    ap.add_argument("--basis-size", type=int, default=spectral.DEFAULT_BASIS,
                    help="Hermite modes per component for the spectral "
                         "route (default: 512)")
    ap.add_argument("--format", default="text", choices=["text", "json", "csv"],
                    dest="output_format", help="output format (default: text)")
    ap.add_argument("--grid", metavar="FILE",
                    help="CSV grid file (header 'alpha,beta', one pair per row)")
    return ap


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(alpha=ns.alpha if ns.alpha is not None else 0.0,
                    beta=ns.beta if ns.beta is not None else 0.0,
                    methods=(ns.method,),
                    series_terms=ns.terms,
                    quad_tol=ns.quad_tol,
                    basis_size=ns.basis_size,
                    output_format=ns.output_format)
    try:
        if ns.grid:
            return run_grid(ns.grid, cfg)
        if ns.alpha is None or ns.beta is None:
            print("error: --alpha and --beta are required without --grid",
                  file=sys.stderr)
            return 2
        report = run_point(cfg)
    except (InvalidParams, DomainError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        if isinstance(exc, InvalidParams):
            print("note: parameters must satisfy alpha > 0, beta > 0 and "
                  "alpha*beta > 1", file=sys.stderr)
        return 2
    if cfg.output_format == "csv":
        print(_CSV_HEADER)
    _emit(report, cfg.output_format, sys.stdout, grid=False)
    for line in cfg.diagnostics:
        print(line, file=sys.stderr)
    if report.get("failures"):
        for f in report["failures"]:
            print(f"# method {f['method']} failed: {f['error']}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
