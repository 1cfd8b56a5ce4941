import math

import pytest

from gallai import (
    edge_concentration_check,
    expected_triangle_count,
    lower_regime_check,
    triangle_tail_check,
)
from gallai.numerics import LOG3_2


def test_edge_concentration_p_one_is_certain():
    report = edge_concentration_check(10, 1.0, seeds=range(5), xi=0.5)
    assert report.pass_fraction == 1.0
    assert report.values == (45.0,) * 5
    assert report.mean == 45.0
    assert report.variance == 0.0
    assert report.reference == 45.0
    assert report.warnings == ()


def test_edge_concentration_p_zero_is_certain():
    report = edge_concentration_check(10, 0.0, seeds=range(5), xi=0.5)
    assert report.pass_fraction == 1.0
    assert report.values == (0.0,) * 5


def test_edge_concentration_warns_when_mean_is_small():
    report = edge_concentration_check(5, 0.1, seeds=range(3), xi=0.1)
    assert len(report.warnings) == 1
    assert "below 10/xi^2" in report.warnings[0]


def test_edge_concentration_statistic_fields():
    report = edge_concentration_check(30, 0.4, seeds=range(20), xi=0.2)
    assert report.statistic == "edge_count"
    assert report.tolerance == 0.2
    assert len(report.values) == 20
    assert 0.0 <= report.pass_fraction <= 1.0
    assert report.mean == pytest.approx(sum(report.values) / 20)


def test_triangle_tail_p_one_has_empty_tail():
    # T is exactly C(n,3), never strictly above (1+xi) E[T]
    report = triangle_tail_check(8, 1.0, seeds=range(4), xi=0.5)
    assert report.pass_fraction == 0.0
    assert report.values == (float(math.comb(8, 3)),) * 4
    assert report.reference == expected_triangle_count(8, 1.0)


def test_triangle_tail_warns_below_the_regime():
    report = triangle_tail_check(20, 0.05, seeds=range(3), xi=1.0)
    assert len(report.warnings) == 1
    assert "tail bound regime" in report.warnings[0]
    in_regime = triangle_tail_check(20, 0.2, seeds=range(3), xi=1.0)
    assert in_regime.warnings == ()


def test_triangle_tail_wide_tolerance_is_rare():
    report = triangle_tail_check(60, 0.1, seeds=range(50), xi=10.0)
    assert report.pass_fraction == 0.0


def test_triangle_tail_rejects_bad_xi():
    with pytest.raises(ValueError, match="xi must be positive"):
        triangle_tail_check(10, 0.5, seeds=range(3), xi=0.0)


def test_checks_reject_empty_seeds():
    with pytest.raises(ValueError, match="seeds must be non-empty"):
        edge_concentration_check(10, 0.5, seeds=(), xi=0.1)
    with pytest.raises(ValueError, match="seeds must be non-empty"):
        triangle_tail_check(10, 0.5, seeds=(), xi=0.1)
    with pytest.raises(ValueError, match="seeds must be non-empty"):
        lower_regime_check(10, 0.5, seeds=())


def test_lower_regime_sparse_seeds_pass_with_exponent_one():
    # p = 0.01: triangles are rare, so t = 0 and the certified exponent is 1
    report = lower_regime_check(100, 0.1, seeds=range(5))
    assert report.statistic == "triangle_edge_count"
    assert report.pass_fraction == 1.0
    exponents = report.extra["lower_bound_exponent"]
    assert all(x == 1.0 for s, x in zip(report.values, exponents) if s == 0.0)


def test_lower_regime_reference_and_exponent_formula():
    n, c = 60, 1.0
    p = c / math.sqrt(n)
    report = lower_regime_check(n, c, seeds=range(30))
    assert report.reference == (n**4 * p**5 + n**3 * p**3) ** 2
    # every triangle has only 3 edges, so t <= 3T holds for every graph
    assert report.pass_fraction == 1.0
    for t, exponent in zip(report.values, report.extra["lower_bound_exponent"]):
        assert 0.0 < exponent <= 1.0
        if t > 0:
            assert exponent < 1.0
    assert len(report.extra["triangle_count"]) == 30
    # empirical variance stays under the coarse theoretical envelope
    assert report.variance <= report.reference


def test_lower_regime_rejects_out_of_range_p():
    with pytest.raises(ValueError, match="outside"):
        lower_regime_check(4, 3.0, seeds=range(3))
    with pytest.raises(ValueError, match="n must be >= 1"):
        lower_regime_check(0, 0.5, seeds=range(3))


def test_lower_regime_exponent_consistency_with_log3_2():
    report = lower_regime_check(36, 2.0, seeds=range(10))
    # exponent = 1 - (t/e)(1 - log3 2) must never dip below log3 2
    for exponent in report.extra["lower_bound_exponent"]:
        assert exponent >= LOG3_2 - 1e-12
