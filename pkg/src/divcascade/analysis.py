"""Numerical certification machinery.

Convexity certificates, finite-difference cross-checks, sup-ratio
estimation for the sharp inequality constants, and randomized
counterexample search.  Everything here is deterministic given the seed
and independent of the worker count: samples are drawn in one stream up
front, split into fixed-size chunks, and merged in chunk order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from . import catalog
from .catalog import Measure
from .ratfun import RatU
from .reporting import CheckResult, make_result

__all__ = [
    "default_grid", "sample_pairs", "fd_second_derivative",
    "certify_convexity", "estimate_sup_ratio", "counterexample_search",
    "scan_chain_terms", "CHUNK",
]

CHUNK = 131072


def default_grid() -> np.ndarray:
    """2001 log-spaced points on [1e-4, 1e4] plus 201 on [0.999, 1.001]."""
    coarse = np.logspace(-4.0, 4.0, 2001)
    band = np.linspace(0.999, 1.001, 201)
    return np.unique(np.concatenate([coarse, band]))


def sample_pairs(n: int, seed) -> tuple[np.ndarray, np.ndarray]:
    """Draw n positive pairs per the audit sampling policy.

    90% have a and b independently log-uniform in [1e-6, 1e6]; 10% sit in
    a near-diagonal band b = a(1 + delta), |delta| <= 1e-3, where
    cancellation would hide violations from a naive evaluator.
    """
    rng = np.random.default_rng(seed)
    n_near = n // 10
    n_main = n - n_near
    a_main = 10.0 ** rng.uniform(-6.0, 6.0, n_main)
    b_main = 10.0 ** rng.uniform(-6.0, 6.0, n_main)
    a_near = 10.0 ** rng.uniform(-6.0, 6.0, n_near)
    delta = rng.uniform(-1e-3, 1e-3, n_near)
    a = np.concatenate([a_main, a_near])
    b = np.concatenate([b_main, a_near * (1.0 + delta)])
    return a, b


def fd_second_derivative(f: Callable, x: float, h: float | None = None) -> float:
    """Central second difference (f(x+h) - 2 f(x) + f(x-h)) / h^2."""
    x = float(x)
    if h is None:
        h = max(1e-5 * x, 1e-7)
    if x - h <= 0.0:
        raise ValueError(f"step h={h} leaves the domain at x={x}")
    return (float(f(x + h)) - 2.0 * float(f(x)) + float(f(x - h))) / (h * h)


def _resolve(measure) -> Measure:
    if isinstance(measure, Measure):
        return measure
    return catalog.get(measure)


def _fd2_mp(measure: Measure, x: float, dps: int = 40) -> float:
    """Central second difference in dps-digit arithmetic, h = 1e-5 x.

    Plain float64 differences cannot certify steep generators: the noise
    floor eps*f/(h^2 f'') passes 1e-6 at the grid edges no matter how h
    is chosen.  Working at 40 digits leaves only the O((h/x)^2) = 1e-10
    truncation term.
    """
    import mpmath as mp

    with mp.workdps(dps):
        xv = mp.mpf(x)
        h = xv * mp.mpf("1e-5")
        out = (measure.eval_mp(xv + h, dps) - 2 * measure.eval_mp(xv, dps)
               + measure.eval_mp(xv - h, dps)) / (h * h)
        return float(out)


def certify_convexity(measure, grid: np.ndarray | None = None, *,
                      rel_tol: float = 1e-6, abs_tol: float = 1e-8,
                      dps: int = 40) -> CheckResult:
    """Certify that a divergence generator is convex and normalized.

    Checks f(1) = 0, f'(1) = 0, f''(x) > 0 on the grid away from x = 1
    (f'' may vanish only at 1), and that the analytic second derivative
    matches a high-precision central difference to within
    rel_tol * |f''| + abs_tol; the absolute floor is what makes the
    comparison meaningful where f'' itself vanishes to high order near
    x = 1.  Measures without an exact generator are certified by the
    positivity of the high-precision difference alone.
    """
    m = _resolve(measure)
    if m.kind != "divergence":
        raise ValueError(f"{m.id} is a {m.kind}; convexity certificates "
                         "apply to divergence generators")
    if grid is None:
        grid = default_grid()
    bad: list[dict] = []

    def flag(x, check, amount):
        bad.append({"x": float(x), "check": check, "violation": float(amount)})

    f1 = float(m(1.0))
    if abs(f1) > 1e-15:
        flag(1.0, "f(1)=0", abs(f1))
    if m.gen is not None and m.gen.deriv_u().m < 1:
        flag(1.0, "f'(1)=0", float(abs(m.gen.deriv_u().limit_at_1())))

    analytic = m.fpp(grid) if m.gen is not None else None
    fd = np.array([_fd2_mp(m, float(x), dps) for x in grid])
    ref = analytic if analytic is not None else fd

    at_one = np.abs(grid - 1.0) <= 1e-12
    neg = ~at_one & (ref <= 0.0)
    if np.any(neg):
        i = int(np.argmax(neg))
        flag(grid[i], "f''>0", -ref[i])
    if np.any(at_one) and float(np.min(ref[at_one])) < -1e-12:
        flag(1.0, "f''(1)>=0", -np.min(ref[at_one]))

    if analytic is not None:
        diff = np.abs(analytic - fd)
        excess = diff - (rel_tol * np.abs(analytic) + abs_tol)
        i = int(np.argmax(excess))
        if float(excess[i]) > 0.0:
            flag(grid[i], "analytic-vs-fd", diff[i])

    worst = max((r["violation"] for r in bad), default=0.0)
    verdict = "pass" if not bad else "fail"
    return CheckResult(id=f"convexity:{m.id}", kind="convexity",
                       samples=int(grid.size), max_violation=worst,
                       verdict=verdict, counterexamples=bad[:10], ref=m.ref)


def _ratio_ratu(num, den) -> RatU:
    mn = _resolve(num) if not isinstance(num, RatU) else None
    md = _resolve(den) if not isinstance(den, RatU) else None
    fn = num if isinstance(num, RatU) else mn.fpp
    fd_ = den if isinstance(den, RatU) else md.fpp
    if fn is None or fd_ is None:
        raise ValueError("sup-ratio estimation needs exact second derivatives")
    return fn / fd_


def estimate_sup_ratio(num, den, grid: np.ndarray | None = None):
    """Sup over the grid of f''_num / f''_den, plus the x -> 1 limit.

    The quotient is formed exactly at the rational-function level, so the
    shared (sqrt(x)-1)-power cancels and the grid evaluation is free of
    0/0 noise near the diagonal.  The limit is Richardson-extrapolated
    from x = 1 +- eps, eps in {1e-5, 1e-6}.

    Returns (sup value, argmax x, limit at 1).
    """
    ratio = _ratio_ratu(num, den)
    if grid is None:
        grid = default_grid()
    vals = ratio(grid)
    i = int(np.argmax(vals))
    a1 = 0.5 * (ratio(1.0 + 1e-5) + ratio(1.0 - 1e-5))
    a2 = 0.5 * (ratio(1.0 + 1e-6) + ratio(1.0 - 1e-6))
    limit = (100.0 * a2 - a1) / 99.0
    return float(vals[i]), float(grid[i]), float(limit)


def _term_arrays(terms, x: np.ndarray) -> list[np.ndarray]:
    return [float(c) * _resolve(mid)(x) for c, mid in terms]


def _scan_chunk(terms, x: np.ndarray, lo: int, hi: int, tol: float):
    xs = x[lo:hi]
    vals = _term_arrays(terms, xs)
    worst = np.full(xs.shape, -np.inf)
    worst_step = np.zeros(xs.shape, dtype=np.int64)
    for i in range(len(vals) - 1):
        lower, upper = vals[i], vals[i + 1]
        scale = np.maximum(np.maximum(np.abs(lower), np.abs(upper)), 1e-300)
        viol = (lower - upper) / scale
        upd = viol > worst
        worst_step[upd] = i
        worst[upd] = viol[upd]
    chunk_max = float(worst.max()) if xs.size else float("-inf")
    idx = np.nonzero(worst > tol)[0][:10]
    cands = [(int(lo + j), float(worst[j]), int(worst_step[j])) for j in idx]
    return chunk_max, cands


def scan_chain_terms(terms, a: np.ndarray, b: np.ndarray, tol: float,
                     workers: int = 1):
    """Check coef_0*m_0 <= coef_1*m_1 <= ... on every sampled pair.

    Evaluation is chunked; chunk results are merged in index order so the
    outcome does not depend on the worker count.  Returns
    (max violation, counterexamples): violations are relative to the
    larger of the two adjacent terms, counterexamples are capped at ten
    and ordered by global sample index.
    """
    n = int(a.size)
    x = a / b
    spans = [(lo, min(lo + CHUNK, n)) for lo in range(0, n, CHUNK)]
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda s: _scan_chunk(terms, x, s[0], s[1], tol), spans))
    else:
        parts = [_scan_chunk(terms, x, lo, hi, tol) for lo, hi in spans]

    max_violation = max((p[0] for p in parts), default=float("-inf"))
    records = []
    for _, cands in parts:
        for gidx, viol, step in cands:
            if len(records) >= 10:
                break
            records.append({
                "index": gidx, "a": float(a[gidx]), "b": float(b[gidx]),
                "step": step, "violation": viol,
            })
        if len(records) >= 10:
            break
    return max_violation, records


def counterexample_search(claim, samples: int = 100000, seed=0,
                          tol: float = 1e-12, workers: int = 1, *,
                          check_id: str | None = None,
                          kind: str = "chain", ref: str = "") -> CheckResult:
    """Randomized search for violations of an ordering or identity claim.

    ``claim`` is either a sequence of (coefficient, measure) terms whose
    scaled values must be nondecreasing, an object with such a ``terms``
    attribute, or a callable mapping sampled arrays (a, b) to a relative
    violation array.  The result records the worst violation seen and up
    to ten offending samples.
    """
    a, b = sample_pairs(samples, seed)
    terms = getattr(claim, "terms", None)
    if terms is None and not callable(claim):
        terms = list(claim)
    if terms is not None:
        max_violation, records = scan_chain_terms(terms, a, b, tol, workers)
        name = check_id or getattr(claim, "id", "chain")
        return make_result(name, kind, samples, max_violation, tol,
                           counterexamples=records,
                           ref=ref or getattr(claim, "ref", ""))
    viol = np.asarray(claim(a, b), dtype=float)
    max_violation = float(viol.max()) if viol.size else float("-inf")
    idx = np.nonzero(viol > tol)[0][:10]
    records = [{"index": int(j), "a": float(a[j]), "b": float(b[j]),
                "violation": float(viol[j])} for j in idx]
    return make_result(check_id or "identity", kind, samples, max_violation,
                       tol, counterexamples=records, ref=ref)
