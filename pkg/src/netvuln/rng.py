"""Seeding discipline.

All randomness flows through numpy's PCG64 generator. Distinct purposes
(graph generation, attack planning, bundle shuffling, per-trial streams)
get independent child streams derived from the base seed via SeedSequence
spawn keys, so any one stream can be reproduced in isolation.

Spawn-key layout:
    (0,)                              graph generation
    (1, strategy_index, trial_index)  one attack trial; split further into
                                      (plan, execution) children
"""

from __future__ import annotations

import numpy as np

SeedLike = int | np.random.SeedSequence | np.random.Generator


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def generation_seed(base_seed: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(base_seed, spawn_key=(0,))


def trial_seeds(base_seed: int, strategy_index: int, trial_index: int):
    """(plan seed, execution seed) for one attack trial."""
    ss = np.random.SeedSequence(base_seed, spawn_key=(1, strategy_index, trial_index))
    return tuple(ss.spawn(2))
