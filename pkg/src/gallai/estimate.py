"""Randomized estimators for the Gallai colouring count.

Both estimators report through LogEstimate, which stores exact integer
sufficient statistics (sum, sum of squares, max of the trial weights).
Trial weights are always of the form 2^a * 3^b, so the sums are exact and
pooling partial runs is associative with no rounding: pooling ten 1000-trial
runs taken at consecutive trial offsets equals the one 10000-trial run
bit for bit.

Trial randomness: trial i consumes exactly one double per edge, at
positions [i*e, (i+1)*e) of the purpose-1 stream for the run's seed. The
layout never depends on batch sizes or on early trial death, which is what
makes offset-split runs replayable.

estimate_naive: colour every edge uniformly, accept iff Gallai; the trial
weight is 3^e on acceptance and 0 otherwise, so the mean weight is an
unbiased estimate of the count. Zero acceptances is a first-class outcome
(zero_hit) carrying only a one-sided bound.

estimate_knuth: walk the exact-count backtracking tree from the root, at
each edge choosing uniformly among the colours allowed by the triangles
closing there, and multiply the branch sizes. The product is the classic
unbiased tree-size estimate of the leaf count. When several triangles
close at one edge the allowed set can shrink to one or zero colours; an
empty set ends the trial with weight 0, which keeps the estimate unbiased.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .counting import _edge_triangles
from .graph import Graph
from .numerics import log3_ratio, log3_stderr_from_sums
from .rng import TRIAL_STREAM, uniform_block

NAIVE = "naive"
KNUTH = "knuth"

_POPCOUNT = np.array([0, 1, 1, 2, 1, 2, 2, 3], dtype=np.uint8)

# _SELECT[mask, rank] = colour of the rank-th set bit of mask, 0 when absent
_SELECT = np.zeros((8, 3), dtype=np.uint8)
for _mask in range(8):
    _bits = [c + 1 for c in range(3) if _mask >> c & 1]
    for _rank, _colour in enumerate(_bits):
        _SELECT[_mask, _rank] = _colour

# _FORBID_BIT[ca, cb] = bit of the colour completing a rainbow with ca, cb
# (0 when the pair is equal or involves the placeholder colour 0)
_FORBID_BIT = np.zeros((4, 4), dtype=np.uint8)
for _ca in (1, 2, 3):
    for _cb in (1, 2, 3):
        if _ca != _cb:
            _FORBID_BIT[_ca, _cb] = 1 << (5 - _ca - _cb)

_CHUNK_DOUBLES = 1 << 22


@dataclass(frozen=True)
class LogEstimate:
    """Estimate of log3(count) backed by exact integer weight sums."""

    method: str
    seed: int
    samples: int
    edge_count: int
    weight_sum: int
    weight_sq_sum: int
    max_weight: int

    @property
    def zero_hit(self) -> bool:
        return self.weight_sum == 0

    @property
    def log3_estimate(self) -> float:
        if self.zero_hit:
            return math.nan
        return log3_ratio(self.weight_sum, self.samples)

    @property
    def log3_stderr(self) -> float:
        if self.zero_hit:
            return math.nan
        return log3_stderr_from_sums(self.samples, self.weight_sum, self.weight_sq_sum)

    @property
    def log3_upper_bound(self) -> float | None:
        """One-sided bound for zero-hit runs: rule of three on the acceptance rate."""
        if not self.zero_hit:
            return None
        return self.edge_count + 1.0 - math.log(self.samples) / math.log(3.0)


def _validate(samples: int, trial_offset: int) -> None:
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if trial_offset < 0:
        raise ValueError(f"trial_offset must be >= 0, got {trial_offset}")


def _row_chunks(samples: int, e: int):
    rows = max(1, _CHUNK_DOUBLES // max(e, 1))
    done = 0
    while done < samples:
        take = min(rows, samples - done)
        yield done, take
        done += take


def estimate_naive(graph: Graph, samples: int, seed: int, trial_offset: int = 0) -> LogEstimate:
    _validate(samples, trial_offset)
    e = graph.edge_count
    triples = _edge_triangles(graph)
    accepts = 0
    for done, take in _row_chunks(samples, e):
        u = uniform_block(seed, TRIAL_STREAM, (trial_offset + done) * e, (take, e))
        colours = (u * 3.0).astype(np.uint8) + 1
        rainbow = np.zeros(take, dtype=bool)
        for i, j, k in triples:
            # colours in {1,2,3}: xor of a rainbow triple is 0, of any other 1..3
            rainbow |= (colours[:, i] ^ colours[:, j] ^ colours[:, k]) == 0
        accepts += int(np.count_nonzero(~rainbow))
    full = 3**e
    return LogEstimate(
        method=NAIVE,
        seed=seed,
        samples=samples,
        edge_count=e,
        weight_sum=accepts * full,
        weight_sq_sum=accepts * full * full,
        max_weight=full if accepts else 0,
    )


def _global_closers(graph: Graph) -> list[list[tuple[int, int]]]:
    closers: list[list[tuple[int, int]]] = [[] for _ in range(graph.edge_count)]
    for i, j, k in _edge_triangles(graph):
        closers[k].append((i, j))
    return closers


def estimate_knuth(graph: Graph, samples: int, seed: int, trial_offset: int = 0) -> LogEstimate:
    _validate(samples, trial_offset)
    e = graph.edge_count
    closers = _global_closers(graph)
    weight_sum = 0
    weight_sq_sum = 0
    max_weight = 0
    for done, take in _row_chunks(samples, e):
        u = uniform_block(seed, TRIAL_STREAM, (trial_offset + done) * e, (take, e))
        colour = np.zeros((take, e), dtype=np.uint8)
        twos = np.zeros(take, dtype=np.int16)
        threes = np.zeros(take, dtype=np.int16)
        alive = np.ones(take, dtype=bool)
        for m in range(e):
            mask = np.full(take, 0b111, dtype=np.uint8)
            for a, b in closers[m]:
                mask &= ~_FORBID_BIT[colour[:, a], colour[:, b]]
            sizes = _POPCOUNT[mask]
            alive &= sizes > 0
            twos += sizes == 2
            threes += sizes == 3
            ranks = (u[:, m] * sizes).astype(np.uint8)
            colour[:, m] = _SELECT[mask, ranks]
        key = twos.astype(np.int64) * (e + 1) + threes
        values, counts = np.unique(key[alive], return_counts=True)
        for k, cnt in zip(values.tolist(), counts.tolist()):
            a, b = divmod(k, e + 1)
            w = 2**a * 3**b
            weight_sum += cnt * w
            weight_sq_sum += cnt * w * w
            if w > max_weight:
                max_weight = w
    return LogEstimate(
        method=KNUTH,
        seed=seed,
        samples=samples,
        edge_count=e,
        weight_sum=weight_sum,
        weight_sq_sum=weight_sq_sum,
        max_weight=max_weight,
    )


def pool(estimates) -> LogEstimate:
    """Combine runs as if their trials were drawn in one run.

    Inputs must share the method and target the same graph (checked by
    edge count, which is all an estimate carries). Exact integer sums make
    the result independent of how the trials were partitioned.
    """
    parts = list(estimates)
    if not parts:
        raise ValueError("pool needs at least one estimate")
    method = parts[0].method
    e = parts[0].edge_count
    for est in parts:
        if est.method != method:
            raise ValueError(f"cannot pool methods {method!r} and {est.method!r}")
        if est.edge_count != e:
            raise ValueError(
                f"cannot pool estimates for different graphs (edge counts {e} and {est.edge_count})"
            )
    return LogEstimate(
        method=method,
        seed=parts[0].seed,
        samples=sum(p.samples for p in parts),
        edge_count=e,
        weight_sum=sum(p.weight_sum for p in parts),
        weight_sq_sum=sum(p.weight_sq_sum for p in parts),
        max_weight=max(p.max_weight for p in parts),
    )
