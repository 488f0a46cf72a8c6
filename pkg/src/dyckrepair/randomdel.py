"""Random-deletion: a randomized stack scan that repairs by deleting.

Opens are pushed.  A close that matches the top is matched; a close that
meets an empty stack is deleted; on a mismatch a fair coin deletes either
the top (and the close is compared again) or the close.  Opens left on the
stack at the end are flushed.  The kept symbols always form a well-formed
string, so the number of deletions is an upper bound on the deletion-only
distance.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import Delete, EditScript, ParenString, RepairResult
from .rng import CoinStream, substream

# b = 1 / (1 - 0.194), rounded as in the analysis of the restarts
RESTART_BASE = 1.24


class EventKind(enum.IntEnum):
    MATCH = 0
    DELETE_OPEN = 1
    DELETE_CLOSE = 2
    FLUSH_OPEN = 3


@dataclass(frozen=True)
class RdEvent:
    time: int
    kind: EventKind
    open_index: int | None = None
    close_index: int | None = None
    against: int | None = None   # symbol compared with but not consumed


@dataclass(frozen=True)
class RdTrace:
    """Time-ordered record of one Random-deletion run.

    Arrays are aligned by event (time ``t`` is row ``t - 1``); ``0`` marks
    an absent index since positions are 1-based.
    """

    kinds: np.ndarray
    open_index: np.ndarray
    close_index: np.ndarray
    against: np.ndarray
    comparisons: int
    seed: object = None
    closes: int = 0
    info: dict = field(default_factory=dict, compare=False)

    @property
    def cost(self) -> int:
        return int(np.count_nonzero(self.kinds != EventKind.MATCH))

    def __len__(self):
        return len(self.kinds)

    @property
    def events(self) -> list:
        out = []
        for t, (k, o, c, a) in enumerate(zip(self.kinds.tolist(), self.open_index.tolist(),
                                             self.close_index.tolist(), self.against.tolist()),
                                         start=1):
            out.append(RdEvent(t, EventKind(k), o or None, c or None, a or None))
        return out

    def deleted_indices(self) -> np.ndarray:
        k = self.kinds
        dels = np.concatenate([
            self.open_index[(k == EventKind.DELETE_OPEN) | (k == EventKind.FLUSH_OPEN)],
            self.close_index[k == EventKind.DELETE_CLOSE],
        ])
        dels.sort()
        return dels

    def matched_pairs(self) -> list:
        m = self.kinds == EventKind.MATCH
        return list(zip(self.open_index[m].tolist(), self.close_index[m].tolist()))

    def to_repair(self, p: ParenString, extra_deletions: Sequence[int] = ()) -> RepairResult:
        dels = sorted(set(self.deleted_indices().tolist()) | set(extra_deletions))
        script = EditScript(tuple(Delete(i) for i in dels))
        gone = set(dels)
        kept = [c for i, c in enumerate(p.codes, start=1) if i not in gone]
        return RepairResult(len(dels), script, p.with_codes(kept),
                            info={"seed": self.seed})


def scan(codes: Sequence[int], indices: Sequence[int], coins: CoinStream):
    """Run the scan over ``codes`` (signed codes) labelled by ``indices``.

    Returns ``(kinds, opens, closes, against, comparisons)`` as lists.
    """
    kinds, opens, closes, against = [], [], [], []
    st_code, st_idx = [], []
    comparisons = 0
    flip = coins.flip
    for c, x in zip(codes, indices):
        if c > 0:
            st_code.append(c)
            st_idx.append(x)
            continue
        while True:
            if not st_code:
                kinds.append(2); opens.append(0); closes.append(x); against.append(0)
                break
            comparisons += 1
            if st_code[-1] == -c:
                st_code.pop()
                kinds.append(0); opens.append(st_idx.pop()); closes.append(x); against.append(0)
                break
            if flip():
                st_code.pop()
                kinds.append(1); opens.append(st_idx.pop()); closes.append(0); against.append(x)
                continue
            kinds.append(2); opens.append(0); closes.append(x); against.append(st_idx[-1])
            break
    while st_idx:
        kinds.append(3); opens.append(st_idx.pop()); closes.append(0); against.append(0)
    return kinds, opens, closes, against, comparisons


def run_codes(codes: Sequence[int], indices: Sequence[int], rng, seed=None) -> RdTrace:
    coins = CoinStream(rng)
    kinds, opens, closes, against, comparisons = scan(codes, indices, coins)
    return RdTrace(
        kinds=np.asarray(kinds, dtype=np.int8),
        open_index=np.asarray(opens, dtype=np.int64),
        close_index=np.asarray(closes, dtype=np.int64),
        against=np.asarray(against, dtype=np.int64),
        comparisons=comparisons,
        seed=seed,
        closes=sum(1 for c in codes if c < 0),
        info={"coins": coins.used},
    )


def run(p: ParenString, rng) -> RdTrace:
    """One Random-deletion pass over the whole of ``p``.

    ``rng`` is a :class:`numpy.random.Generator` or an integer seed.
    """
    seed = rng if isinstance(rng, int) else None
    if seed is not None:
        rng = substream(seed)
    return run_codes(p.codes, range(1, len(p) + 1), rng, seed=seed)


def default_iterations(n: int, override: int | None = None) -> int:
    """Restart count ``ceil(3 log_b n)`` with ``b = 1.24``."""
    if override is not None:
        if override < 1:
            raise ValueError("iterations must be >= 1")
        return int(override)
    if n < 2:
        return 1
    return math.ceil(3 * math.log(n) / math.log(RESTART_BASE))


def epsilon_iterations(n: int, epsilon: float) -> int:
    """``ceil(3 n^eps log_b n)`` iterations for the slower, sharper mode."""
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must be in (0, 1]")
    if n < 2:
        return 1
    return math.ceil(3 * n ** epsilon * math.log(n) / math.log(RESTART_BASE))


def best_of(p: ParenString, iterations: int | None = None, seed: int = 0) -> RdTrace:
    """Minimum-cost trace over independent runs.

    Run ``r`` uses ``substream(seed, r)``; ties keep the earliest run.
    """
    iterations = default_iterations(len(p), iterations)
    best = None
    idx = range(1, len(p) + 1)
    for r in range(iterations):
        trace = run_codes(p.codes, idx, substream(seed, r), seed=(seed, r))
        if best is None or trace.cost < best.cost:
            best = trace
            if best.cost == 0:
                break
    return best


def repair_random(p: ParenString, seed: int = 0, iterations: int | None = None) -> RepairResult:
    trace = best_of(p, iterations, seed)
    res = trace.to_repair(p)
    res.info.update(iterations=default_iterations(len(p), iterations))
    return res
