"""Exact-integer logarithms and the binary entropy bound.

Counts in this package are exact integers that routinely exceed double
range (3^1000 and beyond), so their base-3 logarithms are taken with
mpmath at a working precision wide enough to represent the integer
exactly. The result is correctly rounded to a double; in particular
log3 of 3^k comes back as exactly float(k), which downstream ratio
conventions rely on.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

LOG3_2 = math.log(2.0) / math.log(3.0)
LOG2_3 = math.log2(3.0)


def _workprec(*values: int) -> int:
    return max(v.bit_length() for v in values) + 64


def log3_ratio(num: int, den: int = 1) -> float:
    """log base 3 of the exact rational num/den, rounded once to a double."""
    if num <= 0 or den <= 0:
        raise ValueError(f"log3 needs a positive rational, got {num}/{den}")
    g = math.gcd(num, den)
    num, den = num // g, den // g
    with mpmath.workprec(_workprec(num, den)):
        value = mpmath.log(num)
        if den != 1:
            value -= mpmath.log(den)
        return float(value / mpmath.log(3))


def log3_fraction(value: Fraction) -> float:
    return log3_ratio(value.numerator, value.denominator)


def log3_stderr_from_sums(samples: int, weight_sum: int, weight_sq_sum: int) -> float:
    """Delta-method standard error of log3(mean weight) from exact sums.

    Uses the sample variance; the integer Cauchy-Schwarz gap
    samples*sum(w^2) - sum(w)^2 is exactly zero when all weights are
    equal, so constant-weight runs (and single-trial runs) report 0.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if weight_sum <= 0:
        raise ValueError("stderr undefined for an all-zero weight sum")
    gap = samples * weight_sq_sum - weight_sum * weight_sum
    if gap <= 0 or samples == 1:
        return 0.0
    with mpmath.workprec(_workprec(gap, weight_sum)):
        se_mean_over_mean = mpmath.sqrt(gap) / (mpmath.sqrt(samples - 1) * weight_sum)
        return float(se_mean_over_mean / mpmath.log(3))


def binary_entropy(x: float) -> float:
    """H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy is defined on [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def entropy_binomial_bound_check(m: int, x) -> bool:
    """Exact check of C(m, xm) <= 2^(H(x) m).

    Clearing logarithms turns the bound into the integer inequality
    C(m,k) * k^k * (m-k)^(m-k) <= m^m with k = xm, which is what gets
    compared (0^0 = 1 at the endpoints). x may be a Fraction, an int, or
    a float; xm must land on an integer (floats within 1e-9 of one).
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if isinstance(x, (Fraction, int)):
        xm = Fraction(x) * m
        if xm.denominator != 1:
            raise ValueError(f"x*m must be integral, got {x} * {m}")
        k = xm.numerator
    else:
        raw = float(x) * m
        k = round(raw)
        if abs(raw - k) > 1e-9:
            raise ValueError(f"x*m must be integral, got {x} * {m} = {raw}")
    if not 0 <= k <= m:
        raise ValueError(f"x must lie in [0, 1], got xm = {k} for m = {m}")
    left = math.comb(m, k) * k**k * (m - k) ** (m - k)
    return left <= m**m
