"""Dimension estimators.

The order-jump dimension is found by bisecting over alpha: below it the
delta-ladder masses grow geometrically, above it they collapse to zero,
and exactly at it they settle on a positive value.  A grid box-counting
estimator is provided for comparison (counts are exact, via the
intersection oracle, with hierarchical pruning of empty boxes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from falpha.mass import mass

__all__ = ["DimensionReport", "gamma_dimension", "box_dimension",
           "similarity_order"]


def similarity_order(ratios):
    """The root s of sum(r_i^s) = 1: the exact dimension of a gap IFS
    attractor with separated pieces."""
    ratios = [float(r) for r in ratios]
    if not ratios or any(not 0.0 < r < 1.0 for r in ratios):
        raise ValueError("ratios must lie in (0, 1)")

    def total(s):
        return sum(r ** s for r in ratios)

    lo, hi = 0.0, 1.0
    if total(hi) >= 1.0:
        return 1.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if total(mid) > 1.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


@dataclass(frozen=True)
class DimensionReport:
    gamma_dim: float
    box_dim: float
    alpha_trace: tuple  # (alpha, verdict) pairs in probe order
    bracket: tuple      # final (alpha_lo, alpha_hi)


def _classify(est, zero_floor=1e-9):
    if est.verdict == "diverging":
        return "diverging"
    if est.verdict == "converged":
        return "zero" if est.value <= zero_floor else "positive"
    return "inconclusive"


def gamma_dimension(spec, a, b, tol=0.02, alpha_floor=1e-3, depth=8,
                    box_depth=12):
    """Bisection estimate of the order at which the mass jumps from
    infinite to zero; also reports the box-counting slope."""
    if not 0.0 < tol < 0.5:
        raise ValueError("tol must lie in (0, 0.5)")
    if not spec._isect(a, b):
        raise ValueError("F does not meet [a, b]")
    trace = []

    def probe(alpha):
        verdict = _classify(mass(spec, a, b, alpha, depth=depth))
        trace.append((alpha, verdict))
        return verdict

    lo = alpha_floor
    hi = 1.0
    dim = None
    top = probe(hi)
    if top in ("positive", "diverging", "inconclusive"):
        # mass survives (or has not collapsed) at the maximal order
        dim = hi
        lo = hi
    else:
        while hi - lo > tol:
            mid = (lo + hi) / 2.0
            verdict = probe(mid)
            if verdict == "diverging":
                lo = mid
            elif verdict == "zero":
                hi = mid
            else:
                # positive (or inconclusive) pins the jump at this order
                dim = mid
                lo = hi = mid
                break
        if dim is None:
            dim = (lo + hi) / 2.0
    box = box_dimension(spec, a, b, max_depth=box_depth)
    return DimensionReport(dim, box, tuple(trace), (lo, hi))


def box_counts(spec, a, b, max_depth=12):
    """N_k = number of base-3 grid boxes at depth k meeting F, for
    k = 0..max_depth; computed by pruned recursion."""
    counts = [0] * (max_depth + 1)

    def visit(lo, hi, d):
        if not spec._isect(lo, hi):
            return
        counts[d] += 1
        if d == max_depth:
            return
        third = (hi - lo) / 3.0
        visit(lo, lo + third, d + 1)
        visit(lo + third, lo + 2.0 * third, d + 1)
        visit(hi - third, hi, d + 1)

    visit(a, b, 0)
    return counts


def box_dimension(spec, a, b, max_depth=12, min_depth=3):
    """Least-squares slope of ln N versus ln(1/delta) over the base-3
    box ladder."""
    counts = box_counts(spec, a, b, max_depth)
    pts = [
        (k * math.log(3.0), math.log(counts[k]))
        for k in range(min_depth, max_depth + 1)
        if counts[k] > 0
    ]
    if len(pts) < 2:
        return 0.0
    n = len(pts)
    sx = sum(p[0] for p in pts)
    sy = sum(p[1] for p in pts)
    sxx = sum(p[0] * p[0] for p in pts)
    sxy = sum(p[0] * p[1] for p in pts)
    denom = n * sxx - sx * sx
    return (n * sxy - sx * sy) / denom
