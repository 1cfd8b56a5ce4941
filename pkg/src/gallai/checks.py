"""Concentration and regime checks over seeded G(n,p) batches.

Each check generates one graph per seed, collects a per-seed statistic,
and reports it against a theoretical reference. The reference bounds are
expectation-level, so individual seeds may violate them; the reports count
rather than hide that.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field

from .graph import generate_gnp, triangle_stats
from .numerics import LOG3_2


@dataclass(frozen=True)
class ConcentrationReport:
    statistic: str
    values: tuple[float, ...]
    mean: float
    variance: float
    reference: float
    tolerance: float
    pass_fraction: float
    warnings: tuple[str, ...] = ()
    extra: dict[str, tuple[float, ...]] = field(default_factory=dict)


def _summary(values: list[float]) -> tuple[float, float]:
    mean = statistics.fmean(values)
    variance = statistics.variance(values) if len(values) > 1 else 0.0
    return mean, variance


def _check_seeds(seeds) -> tuple[int, ...]:
    out = tuple(seeds)
    if not out:
        raise ValueError("seeds must be non-empty")
    return out


def lower_regime_check(n: int, c: float, seeds) -> ConcentrationReport:
    """Sparse-regime diagnostics at p = c * n^(-1/2).

    Per seed, verifies t <= 3T and t <= 12 p^2 n e (violations lower the
    pass fraction rather than abort), reports the empirical variance of t
    against the bound (n^4 p^5 + n^3 p^3)^2, and computes the per-seed
    exponent 1 - (t/e)(1 - log3 2) certified by the two-colour
    construction: count >= 3^(exponent * e).
    """
    seeds = _check_seeds(seeds)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = c / math.sqrt(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p = c/sqrt(n) = {p} outside [0, 1]")
    t_values: list[float] = []
    triangle_counts: list[float] = []
    exponents: list[float] = []
    ok = 0
    for seed in seeds:
        graph = generate_gnp(n, p, seed)
        stats = triangle_stats(graph)
        e = graph.edge_count
        t = stats.triangle_edge_count
        t_values.append(float(t))
        triangle_counts.append(float(stats.triangle_count))
        exponents.append(1.0 if e == 0 else 1.0 - (t / e) * (1.0 - LOG3_2))
        if t <= 3 * stats.triangle_count and t <= 12.0 * p * p * n * e:
            ok += 1
    mean, variance = _summary(t_values)
    return ConcentrationReport(
        statistic="triangle_edge_count",
        values=tuple(t_values),
        mean=mean,
        variance=variance,
        reference=(n**4 * p**5 + n**3 * p**3) ** 2,
        tolerance=0.0,
        pass_fraction=ok / len(seeds),
        extra={
            "lower_bound_exponent": tuple(exponents),
            "triangle_count": tuple(triangle_counts),
        },
    )


def triangle_tail_check(n: int, p: float, seeds, xi: float) -> ConcentrationReport:
    """Upper-tail frequency of the triangle count.

    pass_fraction is the fraction of seeds in the tail event
    T > (1 + xi) * C(n,3) p^3. Below the p > 1/n regime the exponential
    tail bound being probed is not in force; the check still runs but
    carries a warning.
    """
    seeds = _check_seeds(seeds)
    if xi <= 0:
        raise ValueError(f"xi must be positive, got {xi}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    expected = math.comb(n, 3) * p**3
    values = [float(triangle_stats(generate_gnp(n, p, seed)).triangle_count) for seed in seeds]
    tail = sum(1 for v in values if v > (1.0 + xi) * expected)
    warnings = ()
    if n > 0 and p <= 1.0 / n:
        warnings = (f"p = {p} is at or below 1/n = {1.0 / n}; tail bound regime does not apply",)
    mean, variance = _summary(values)
    return ConcentrationReport(
        statistic="triangle_count_tail",
        values=tuple(values),
        mean=mean,
        variance=variance,
        reference=expected,
        tolerance=xi,
        pass_fraction=tail / len(seeds),
        warnings=warnings,
    )


def edge_concentration_check(n: int, p: float, seeds, xi: float) -> ConcentrationReport:
    """Fraction of seeds with |e(G) - C(n,2)p| <= xi * C(n,2)p."""
    seeds = _check_seeds(seeds)
    if xi <= 0:
        raise ValueError(f"xi must be positive, got {xi}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    mu = math.comb(n, 2) * p
    values = [float(generate_gnp(n, p, seed).edge_count) for seed in seeds]
    ok = sum(1 for v in values if abs(v - mu) <= xi * mu)
    warnings = ()
    if mu < 10.0 / xi**2:
        warnings = (
            f"expected edge count {mu} is below 10/xi^2 = {10.0 / xi**2}; "
            "concentration at this tolerance is not expected",
        )
    mean, variance = _summary(values)
    return ConcentrationReport(
        statistic="edge_count",
        values=tuple(values),
        mean=mean,
        variance=variance,
        reference=mu,
        tolerance=xi,
        pass_fraction=ok / len(seeds),
        warnings=warnings,
    )
