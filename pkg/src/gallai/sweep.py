"""Density sweeps around the p = c * n^(-1/2) threshold.

A sweep runs one cell per (n, c, seed), samples G(n, p) at p = c/sqrt(n),
counts or estimates its Gallai colourings, and emits one record per cell.
Records are sorted by (n, c, seed) and the CSV text is a pure function of
the config, so reruns are byte-identical.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .counting import (
    DEFAULT_NODE_CAP,
    construction_count,
    count_exact,
    triangle_components,
)
from .estimate import KNUTH, NAIVE, estimate_knuth, estimate_naive
from .graph import Graph, generate_gnp, triangle_stats
from .numerics import LOG2_3, log3_ratio

METHODS = ("auto", "exact", "naive", "knuth")

# auto tries the exact path only when it is sure to be cheap: no triangles,
# the whole graph within brute-force scale, or every triangle component
# small; the attempt itself is budgeted so a surprise blowup falls back to
# the estimator instead of burning the full node cap.
AUTO_EXACT_COMPONENT_EDGES = 24
AUTO_ATTEMPT_NODE_BUDGET = 2_000_000

_CSV_HEADER = "n,c,p,seed,e,T,t,method,log3_count,log3_stderr,ratio3,ratio2,construction_ratio3,capped,zero_hit"


@dataclass(frozen=True)
class SweepConfig:
    n_values: tuple[int, ...]
    c_values: tuple[float, ...]
    seeds: tuple[int, ...]
    method: str = "auto"
    samples: int = 10_000
    node_cap: int = DEFAULT_NODE_CAP


@dataclass(frozen=True)
class SweepRecord:
    n: int
    c: float
    p: float
    seed: int
    e: int
    T: int
    t: int
    method: str
    log3_count: float
    log3_stderr: float
    ratio3: float
    ratio2: float
    construction_ratio3: float
    capped: bool
    zero_hit: bool


def _derived_p(n: int, c: float) -> float:
    # n = 0 has no vertex pairs; p is defined as 0 there by convention
    return 0.0 if n == 0 else c / math.sqrt(n)


def _validate_config(cfg: SweepConfig) -> None:
    if not cfg.n_values:
        raise ValueError("n_values must be non-empty")
    if not cfg.c_values:
        raise ValueError("c_values must be non-empty")
    if not cfg.seeds:
        raise ValueError("seeds must be non-empty")
    for n in cfg.n_values:
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
    for c in cfg.c_values:
        if c <= 0:
            raise ValueError(f"c must be positive, got {c}")
    for seed in cfg.seeds:
        if seed < 0:
            raise ValueError(f"seeds must be non-negative, got {seed}")
    if cfg.method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {cfg.method!r}")
    if cfg.samples < 1:
        raise ValueError(f"samples must be >= 1, got {cfg.samples}")
    if cfg.node_cap < 1:
        raise ValueError(f"node_cap must be >= 1, got {cfg.node_cap}")
    for n in cfg.n_values:
        for c in cfg.c_values:
            p = _derived_p(n, c)
            if p > 1.0:
                raise ValueError(f"p = c/sqrt(n) = {p} > 1 for n={n}, c={c}")


def _auto_wants_exact(graph: Graph, t: int) -> bool:
    if t == 0 or graph.edge_count <= 18:
        return True
    components = triangle_components(graph)
    return max(len(comp) for comp in components) <= AUTO_EXACT_COMPONENT_EDGES


def _run_cell(n: int, c: float, p: float, seed: int, cfg: SweepConfig) -> SweepRecord:
    graph = generate_gnp(n, p, seed)
    stats = triangle_stats(graph)
    e = graph.edge_count
    t = stats.triangle_edge_count

    method = cfg.method
    if method == "auto":
        if _auto_wants_exact(graph, t):
            report = count_exact(graph, min(cfg.node_cap, AUTO_ATTEMPT_NODE_BUDGET))
            method = "exact" if not report.capped else KNUTH
        else:
            method = KNUTH
    elif method == "exact":
        report = count_exact(graph, cfg.node_cap)

    capped = False
    zero_hit = False
    if method == "exact":
        if report.capped:
            capped = True
            log3_count = log3_stderr = math.nan
        else:
            log3_count = log3_ratio(report.count)
            log3_stderr = 0.0
    else:
        estimator = estimate_naive if method == NAIVE else estimate_knuth
        est = estimator(graph, cfg.samples, seed)
        zero_hit = est.zero_hit
        log3_count = est.log3_estimate
        log3_stderr = est.log3_stderr

    if e == 0:
        ratio3 = ratio2 = construction_ratio3 = 1.0
        log3_count, log3_stderr = 0.0, 0.0
    else:
        ratio3 = log3_count / e
        ratio2 = log3_count * LOG2_3 / e
        construction_ratio3 = log3_ratio(construction_count(graph)) / e

    return SweepRecord(
        n=n,
        c=c,
        p=p,
        seed=seed,
        e=e,
        T=stats.triangle_count,
        t=t,
        method=method,
        log3_count=log3_count,
        log3_stderr=log3_stderr,
        ratio3=ratio3,
        ratio2=ratio2,
        construction_ratio3=construction_ratio3,
        capped=capped,
        zero_hit=zero_hit,
    )


def _worker_count() -> int:
    raw = os.environ.get("GALLAI_THREADS", "")
    if not raw.strip():
        return 1
    try:
        workers = int(raw)
    except ValueError as exc:
        raise ValueError(f"GALLAI_THREADS must be an integer, got {raw!r}") from exc
    return workers if workers > 1 else 1


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """All cells of the sweep, sorted by (n, c, seed).

    Cells are independent (each derives its own streams from its seed), so
    the optional thread pool controlled by GALLAI_THREADS cannot change
    the output, only the wall time.
    """
    _validate_config(cfg)
    cells = [
        (n, c, _derived_p(n, c), seed)
        for n in sorted(cfg.n_values)
        for c in sorted(cfg.c_values)
        for seed in sorted(cfg.seeds)
    ]
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda cell: _run_cell(*cell, cfg), cells))
    else:
        records = [_run_cell(*cell, cfg) for cell in cells]
    records.sort(key=lambda r: (r.n, r.c, r.seed))
    return records


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def emit_csv(records) -> str:
    """Bit-exact CSV text: pinned header, 12 significant digits, 0/1 flags."""
    lines = [_CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                (
                    str(r.n),
                    _fmt(r.c),
                    _fmt(r.p),
                    str(r.seed),
                    str(r.e),
                    str(r.T),
                    str(r.t),
                    r.method,
                    _fmt(r.log3_count),
                    _fmt(r.log3_stderr),
                    _fmt(r.ratio3),
                    _fmt(r.ratio2),
                    _fmt(r.construction_ratio3),
                    "1" if r.capped else "0",
                    "1" if r.zero_hit else "0",
                )
            )
        )
    return "\n".join(lines) + "\n"


_LIST_FIELDS = {"n_values", "c_values", "seeds"}
_SCALAR_FIELDS = {"method", "samples", "node_cap"}


def parse_sweep_config(text: str, source: str = "<string>") -> SweepConfig:
    """Flat key = value config. Unknown keys are errors, as are repeats.

    n_values, c_values and seeds take comma-separated lists and are
    required; method, samples and node_cap are optional scalars.
    """
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, payload = line.partition("=")
        key = key.strip()
        payload = payload.strip()
        if key not in _LIST_FIELDS and key not in _SCALAR_FIELDS:
            raise ValueError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ValueError(f"{source}:{lineno}: repeated key {key!r}")
        try:
            if key in ("n_values", "seeds"):
                values[key] = tuple(int(item.strip()) for item in payload.split(","))
            elif key == "c_values":
                values[key] = tuple(float(item.strip()) for item in payload.split(","))
            elif key in ("samples", "node_cap"):
                values[key] = int(payload)
            else:
                values[key] = payload
        except ValueError as exc:
            raise ValueError(f"{source}:{lineno}: bad value for {key}: {payload!r}") from exc
    missing = sorted(_LIST_FIELDS - values.keys())
    if missing:
        raise ValueError(f"{source}: missing required keys: {', '.join(missing)}")
    cfg = SweepConfig(**values)
    _validate_config(cfg)
    return cfg


def load_sweep_config(path) -> SweepConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sweep_config(fh.read(), source=str(path))
