"""Random instance generators: planted parenthesis strings."""
from __future__ import annotations

import numpy as np

from .core import ParenString
from .errors import BadParams
from .rng import as_generator


def random_dyck_codes(n: int, s: int, rng) -> np.ndarray:
    """Uniform random well-formed string of length ``n`` (as codes).

    Shape: rotate a random sequence of ``n/2`` up-steps and ``n/2 + 1``
    down-steps to start right after its lowest prefix-sum minimum (cyclic
    lemma) and drop the final down-step.  Types: one uniform draw per pair.
    """
    rng = as_generator(rng)
    half = n // 2
    steps = np.concatenate([np.ones(half, dtype=np.int64), -np.ones(half + 1, dtype=np.int64)])
    rng.shuffle(steps)
    prefix = np.cumsum(steps)
    k = int(np.argmin(prefix))          # first minimum
    steps = np.roll(steps, -(k + 1))[:-1]
    opens = steps > 0
    codes = np.zeros(n, dtype=np.int64)
    codes[opens] = rng.integers(1, s + 1, size=half)
    # level of a step = the higher of its two endpoints; at a fixed level the
    # steps alternate open, close, open, close ... and each close pairs
    # with the open just before it
    depth = np.cumsum(steps)
    level = np.where(opens, depth, depth + 1)
    order = np.argsort(level, kind="stable")
    lv = level[order]
    starts = np.r_[True, lv[1:] != lv[:-1]]
    first = np.maximum.accumulate(np.where(starts, np.arange(n), 0))
    closing = (np.arange(n) - first) % 2 == 1
    at = np.nonzero(closing)[0]
    codes[order[at]] = -codes[order[at - 1]]
    return codes


def plant_edits(codes: np.ndarray, s: int, k: int, rng) -> np.ndarray:
    """Apply ``k`` random edits (delete / substitute / insert), uniform kinds and positions."""
    rng = as_generator(rng)
    out = list(codes.tolist())
    symbols = [t for t in range(1, s + 1)] + [-t for t in range(1, s + 1)]
    for _ in range(k):
        kind = int(rng.integers(0, 3)) if out else 2
        if kind == 0:
            del out[int(rng.integers(0, len(out)))]
        elif kind == 1:
            i = int(rng.integers(0, len(out)))
            choices = [c for c in symbols if c != out[i]]
            out[i] = choices[int(rng.integers(0, len(choices)))]
        else:
            i = int(rng.integers(0, len(out) + 1))
            out.insert(i, symbols[int(rng.integers(0, len(symbols)))])
    return np.asarray(out, dtype=np.int64)


def gen_instance(n: int, s: int, k: int, rng) -> tuple:
    """Well-formed string of length ``n`` over ``s`` types plus ``k`` planted edits.

    Returns ``(ParenString, k)``; the true distance is at most ``k``.
    """
    if n < 0 or n % 2 or s < 1 or k < 0:
        raise BadParams(f"need even n >= 0, s >= 1, k >= 0 (got n={n}, s={s}, k={k})")
    rng = as_generator(rng)
    codes = random_dyck_codes(n, s, rng)
    if k:
        codes = plant_edits(codes, s, k, rng)
    return ParenString(tuple(codes.tolist()), s), k
