"""Built-in invariant suite behind the `gallai verify` subcommand.

A fast battery of cross-checks runnable from an installed package with no
test dependencies. The pytest suite is the authoritative gate; this is
the field sanity check.
"""

from __future__ import annotations

import math
from itertools import combinations

from .counting import (
    construction_count,
    count_bruteforce,
    count_exact,
    gallai_weight,
    is_gallai,
)
from .estimate import estimate_knuth, estimate_naive, pool
from .graph import Graph, generate_gnp, parse_edge_list, format_edge_list, triangle_stats
from .numerics import entropy_binomial_bound_check
from .rng import GENERATOR_ID


def _naive_triangle_stats(graph: Graph) -> tuple[int, int]:
    count = 0
    tri_edges = set()
    for a, b, c in combinations(range(graph.n), 3):
        if graph.has_edge(a, b) and graph.has_edge(a, c) and graph.has_edge(b, c):
            count += 1
            tri_edges.update({(a, b), (a, c), (b, c)})
    return count, len(tri_edges)


def run_selfcheck(emit=print) -> bool:
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, ok, detail))

    graphs = [generate_gnp(n, p, seed) for n in (4, 5, 6, 7) for p in (0.3, 0.7) for seed in range(4)]

    ok = all(
        (triangle_stats(g).triangle_count, triangle_stats(g).triangle_edge_count)
        == _naive_triangle_stats(g)
        for g in graphs
    )
    check("triangle stats match the naive triple loop", ok, f"{len(graphs)} graphs")

    small = [generate_gnp(n, p, seed) for n in (3, 4, 5) for p in (0.4, 0.8) for seed in range(4)]
    ok = True
    for g in small:
        exact = count_exact(g)
        brute = count_bruteforce(g)
        if exact.capped or exact.count != brute:
            ok = False
        lower, upper = 2**g.edge_count, 3**g.edge_count
        if not (lower <= brute <= upper and construction_count(g) <= brute):
            ok = False
    check("exact counting matches enumeration and respects the bounds", ok, f"{len(small)} graphs")

    k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    check("K3 count is 21", count_exact(k3).count == 21)

    ok = all(gallai_weight(g) == construction_count(g) for g in graphs)
    check("edge weight product equals the construction count", ok)

    ok = True
    for bits in range(1024):
        pairs = list(combinations(range(5), 2))
        g = Graph.from_edges(5, [pairs[i] for i in range(10) if bits >> i & 1])
        if gallai_weight(g) > 2**10:
            ok = False
            break
    check("weight bound 2^C(n,2) over all 5-vertex graphs", ok, "1024 graphs")

    k4 = Graph.from_edges(4, [(a, b) for a, b in combinations(range(4), 2)])
    est = estimate_knuth(k4, 30_000, seed=7)
    exact = count_exact(k4).count
    mean = est.weight_sum / est.samples
    se_mean = est.log3_stderr * math.log(3.0) * mean
    ok = abs(mean - exact) <= 5 * se_mean
    check("tree-walk estimator lands near the exact K4 count", ok, f"mean {mean:.1f} vs {exact}")

    halves = [estimate_knuth(k4, 15_000, seed=7, trial_offset=o) for o in (0, 15_000)]
    check("pooled half runs equal the single run", pool(halves) == est)

    est_naive = estimate_naive(k3, 2_000, seed=3)
    naive_mean = est_naive.weight_sum / 2_000
    naive_se = est_naive.log3_stderr * math.log(3.0) * naive_mean
    ok = not est_naive.zero_hit and abs(naive_mean - 21) <= 5 * naive_se
    check("acceptance sampler lands near the exact K3 count", ok)

    ok = all(
        entropy_binomial_bound_check(m, k / m) for m in range(1, 41) for k in range(m + 1)
    )
    check("entropy bound on binomials up to m=40", ok)

    ok = all(parse_edge_list(format_edge_list(g)) == g for g in graphs)
    check("edge list round trip", ok)

    ok = all(is_gallai(g, c) for g in small[:4] for c in [tuple(1 for _ in g.edges)])
    one_colour_ok = ok
    rainbow = (1, 2, 3)
    check(
        "gallai predicate basics",
        one_colour_ok and not is_gallai(k3, rainbow),
    )

    coupled = all(
        set(generate_gnp(20, 0.2, s).edges) <= set(generate_gnp(20, 0.6, s).edges)
        for s in range(5)
    )
    check("subgraph coupling across p at a fixed seed", coupled)

    failed = [name for name, ok, _ in checks if not ok]
    for name, ok_, detail in checks:
        status = "PASS" if ok_ else "FAIL"
        suffix = f" ({detail})" if detail else ""
        emit(f"[{status}] {name}{suffix}")
    emit(f"generator: {GENERATOR_ID}")
    emit(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return not failed
