"""Block-wise refinement of Random-deletion.

The residual ``Y_1 X_1 ... Y_z X_z`` is processed one block at a time.  For
block ``a`` the scan is replayed from the stack left behind by block
``a - 1``: push ``Y_a``, then run the coin-flipping scan over ``X_a``.  This
is restarted with fresh coins and the restart with the fewest deletions is
kept.  Its coins are then discarded; only the opens it consumed (``Z``) are
used, and ``Z · X_a`` is repaired optimally by string edit distance.  Opens
never consumed by any block are deleted at the end.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Delete, EditScript, ParenString, RepairResult, apply_script
from .preprocess import BlockDecomposition, decompose
from .randomdel import EventKind, default_iterations, run_codes
from .rng import CoinStream, substream
from .stredit import match_runs


@dataclass(frozen=True)
class SegmentEstimate:
    """Outcome of the chosen restart for one block.

    ``z_min`` lists the consumed opens in text order; ``resume_state`` is
    ``(stack_height, cursor)`` right after the segment, where ``cursor`` is
    the last index of ``X_a``.
    """

    block_index: int
    z_min: tuple
    deletions: int
    resume_state: tuple
    restarts: int = 1


@dataclass
class _Stack:
    codes: list = field(default_factory=list)
    index: list = field(default_factory=list)


def _segment(codes, base: _Stack, height: int, ys, xs, coins: CoinStream):
    """One restart for one block on top of ``base[:height]`` (never mutated).

    Returns ``(deletions, consumed_opens_in_pop_order, new_height, pushed)``
    where ``pushed`` is what the restart left on its own overlay.
    """
    top_c = [codes[y - 1] for y in ys]
    top_i = list(ys)
    flip = coins.flip
    consumed = []
    dels = 0
    for x in xs:
        c = codes[x - 1]
        while True:
            if top_c:
                t = top_c[-1]
            elif height:
                t = base.codes[height - 1]
            else:
                dels += 1
                break
            if t == -c or flip():
                if top_c:
                    top_c.pop()
                    consumed.append(top_i.pop())
                else:
                    height -= 1
                    consumed.append(base.index[height])
                if t == -c:
                    break
                dels += 1
                continue
            dels += 1
            break
    return dels, consumed, height, (top_c, top_i)


def estimate_blocks(p: ParenString, dec: BlockDecomposition, seed: int = 0,
                    restarts: int | None = None) -> list:
    """Per-block restarts; returns one :class:`SegmentEstimate` per block.

    Restart ``r`` of block ``a`` (1-based) draws from ``substream(seed, a, r)``.
    Ties keep the later restart.
    """
    restarts = default_iterations(len(p), restarts)
    codes = p.codes
    stack = _Stack()
    out = []
    for a, (ys, xs) in enumerate(dec.blocks, start=1):
        best = None
        for r in range(restarts):
            res = _segment(codes, stack, len(stack.codes), ys, xs,
                           CoinStream(substream(seed, a, r)))
            if best is None or res[0] <= best[0]:
                best = res
        dels, consumed, height, (top_c, top_i) = best
        del stack.codes[height:], stack.index[height:]
        stack.codes.extend(top_c)
        stack.index.extend(top_i)
        out.append(SegmentEstimate(a, tuple(reversed(consumed)), dels,
                                   (height + len(top_c), xs[-1]), restarts))
    return out


def _consumed_from_trace(trace, dec: BlockDecomposition, n: int) -> list:
    """Opens consumed while each block's close-run was processed, in text order."""
    block_of = np.zeros(n + 1, dtype=np.int64)
    for a, (_, xs) in enumerate(dec.blocks, start=1):
        block_of[list(xs)] = a
    k = trace.kinds
    close = np.where(k == EventKind.MATCH, trace.close_index,
                     np.where(k == EventKind.DELETE_OPEN, trace.against, 0))
    owner = block_of[close]
    per_block = [[] for _ in dec.blocks]
    for a, o in zip(owner.tolist(), trace.open_index.tolist()):
        if a:
            per_block[a - 1].append(o)
    return [tuple(sorted(z)) for z in per_block]


def _assemble(p, dec, zs, stredit, want_script: bool):
    codes = p.codes
    cost = len(dec.forced_deletions)
    ops = [Delete(i) for i in dec.forced_deletions]
    used = set()
    for z, (_, xs) in zip(zs, dec.blocks):
        used.update(z)
        oc = [codes[i - 1] for i in z]
        cc = [codes[i - 1] for i in xs]
        if want_script:
            outcome = stredit(oc, cc, z, xs)
            cost += outcome.cost
            ops.extend(outcome.repairs.ops)
        else:
            cost += stredit(oc, cc, want_repairs=False)
    leftover = [y for ys, _ in dec.blocks for y in ys if y not in used]
    cost += len(leftover)
    ops.extend(Delete(i) for i in leftover)
    return cost, ops


def repair_refined(p: ParenString, seed: int = 0, iterations: int | None = None,
                   stredit=match_runs, whole_run_repeats: bool = False) -> RepairResult:
    """Repair ``p`` with per-block restarts and string edit distance per block.

    With ``whole_run_repeats`` the whole scan is repeated instead (run ``r``
    uses ``substream(seed, r)``) and the run giving the cheapest final repair
    is kept.
    """
    dec = decompose(p)
    iters = default_iterations(len(p), iterations)
    info = {"z": dec.z, "iterations": iters}
    if not dec.blocks:
        zs = []
    elif whole_run_repeats:
        residual = dec.residual
        rc = [p.codes[i - 1] for i in residual]
        best_cost, zs = None, None
        for r in range(iters):
            trace = run_codes(rc, residual, substream(seed, r))
            cand = _consumed_from_trace(trace, dec, len(p))
            c, _ = _assemble(p, dec, cand, stredit, want_script=False)
            if best_cost is None or c < best_cost:
                best_cost, zs = c, cand
                info["best_run"] = r
    else:
        est = estimate_blocks(p, dec, seed, iters)
        zs = [e.z_min for e in est]
        info["segment_deletions"] = [e.deletions for e in est]
    cost, ops = _assemble(p, dec, zs, stredit, want_script=True)
    script = EditScript(tuple(ops))
    return RepairResult(cost, script, apply_script(p, script), info=info)
