"""Counter-based random streams keyed by (seed, suite, trial).

Streams use the Philox bit generator: the key mixes the user seed with a
hash of the suite name, and individual trials can be addressed directly
through the counter, so draws never depend on execution order and two
runs with the same configuration are bit-identical.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def _suite_tag(suite: str) -> int:
    return int.from_bytes(hashlib.sha256(suite.encode()).digest()[:8], "big")


def suite_generator(seed: int, suite: str) -> np.random.Generator:
    """One stream per (seed, suite); draws are consumed sequentially."""
    key = np.array([seed & _MASK64, _suite_tag(suite)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def trial_generator(seed: int, suite: str, trial: int) -> np.random.Generator:
    """A stream addressed to one trial; independent of all other trials."""
    key = np.array([seed & _MASK64, _suite_tag(suite)], dtype=np.uint64)
    counter = np.array([trial & _MASK64, 0, 0, 0], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key, counter=counter))
