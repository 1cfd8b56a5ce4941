"""Deterministic random streams.

All randomness flows through numpy's PCG64 keyed by SeedSequence(seed,
spawn_key=(purpose,)). Purpose 0 feeds G(n,p) pair uniforms, purpose 1 feeds
estimator trials, so a graph and the trials run on it never share a stream
even when they share a seed.

PCG64 advances exactly one state step per generated double and fills
matrices in row-major order. Estimator trial i therefore occupies draw
positions [i*e, (i+1)*e) of the purpose-1 stream, and a run started at
trial_offset k replays positions k*e onward bit-for-bit. That layout is
what makes pooled partial runs identical to one long run.
"""

from __future__ import annotations

import numpy as np

# Recorded identity of the generator protocol; bump on any change that
# alters emitted numbers.
GENERATOR_ID = "pcg64-seedseq-v1 (stream 0: gnp pair uniforms, stream 1: estimator trials)"

GRAPH_STREAM = 0
TRIAL_STREAM = 1


def bit_generator(seed: int, purpose: int) -> np.random.PCG64:
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    return np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(purpose,)))


def uniform_block(seed: int, purpose: int, offset: int, shape) -> np.ndarray:
    """Doubles from the (seed, purpose) stream starting at draw position offset."""
    bg = bit_generator(seed, purpose)
    if offset:
        bg.advance(offset)
    return np.random.Generator(bg).random(shape)
