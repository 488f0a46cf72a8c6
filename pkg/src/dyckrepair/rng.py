"""Seeded, splittable random streams.

Every randomized routine takes a master seed (an unsigned 64-bit int) and
derives independent child streams from it with
``numpy.random.SeedSequence(seed, spawn_key=keys)``, so any single
iteration, block restart or benchmark cell can be replayed in isolation:

* ``substream(seed, r)``        -- iteration ``r`` of a best-of loop
* ``substream(seed, a, r)``     -- restart ``r`` of block ``a`` (refined)
* ``substream(seed, cell, rep)``-- one benchmark cell
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1


def substream(seed: int, *keys: int) -> np.random.Generator:
    ss = np.random.SeedSequence(int(seed) & MASK64, spawn_key=tuple(int(k) for k in keys))
    return np.random.Generator(np.random.PCG64(ss))


def as_generator(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return substream(0 if rng is None else rng)


class CoinStream:
    """Fair coin flips drawn lazily from a generator in fixed-size chunks."""

    __slots__ = ("_rng", "_buf", "_pos", "_chunk", "used")

    def __init__(self, rng, chunk: int = 256):
        self._rng = as_generator(rng)
        self._chunk = chunk
        self._buf: list = []
        self._pos = 0
        self.used = 0

    def flip(self) -> int:
        if self._pos == len(self._buf):
            self._buf = self._rng.integers(0, 2, size=self._chunk, dtype=np.uint8).tolist()
            self._pos = 0
        bit = self._buf[self._pos]
        self._pos += 1
        self.used += 1
        return bit
