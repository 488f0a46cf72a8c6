"""Phased repair: one Random-deletion trace per iteration, cut into local windows.

Phase 1 works on the blocks of the decomposition.  For each block, the
window is the stretch of the trace from the first event that touches the
block's close-run until the block's opens or closes run out.  Everything
consumed in that window is repaired by string edit distance and removed.
Each block then has only opens left (type O), only closes left (type C), or
nothing.  Runs of O blocks and runs of C blocks are merged into the blocks
of the next phase, after deleting a leading close-run and a trailing
open-run.  Since each new block needs an O block and a later C block, the
block count at least halves, so there are at most ``ceil(log2 z) + 1``
phases.

Windows are always taken over the symbols that are still alive, so the
windows of all phases are disjoint.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Delete, EditScript, ParenString, RepairResult, apply_script
from .errors import WindowOverlap
from .preprocess import decompose
from .randomdel import EventKind, default_iterations, epsilon_iterations, run_codes
from .rng import substream
from .stredit import match_runs

TYPE_O, TYPE_C, EMPTY = "O", "C", "empty"


@dataclass(frozen=True)
class PhaseBlock:
    level: int
    Y: tuple      # surviving open indices, text order
    X: tuple      # surviving close indices, text order
    span: tuple = (0, 0)   # first and last phase-1 block covered (1-based)


@dataclass(frozen=True)
class LocalWindow:
    block: PhaseBlock
    event_range: tuple   # (first, last) event positions in the trace, 0-based inclusive
    L: frozenset         # indices consumed inside the window


@dataclass(frozen=True)
class PhaseOutcome:
    windows: tuple
    leftovers: tuple     # per block: (kind, remaining indices)
    pending: tuple       # event positions not covered by any window


def _consumed(kind, o, c):
    if kind == EventKind.MATCH:
        return (o, c)
    if kind == EventKind.DELETE_CLOSE:
        return (c,)
    return (o,)


def segment_phase(trace, pending, blocks) -> PhaseOutcome:
    """Cut the events ``pending`` (positions, time order) into windows for ``blocks``.

    Raises :class:`WindowOverlap` if a window would consume an index outside
    its own block or a block's window cannot be closed.
    """
    kinds = trace.kinds.tolist()
    opens = trace.open_index.tolist()
    closes = trace.close_index.tolist()
    against = trace.against.tolist()
    owner = {}
    for b, blk in enumerate(blocks):
        for y in blk.Y:
            owner[y] = b
        for x in blk.X:
            owner[x] = ~b              # negative: close side
    y_left = [len(b.Y) for b in blocks]
    x_left = [len(b.X) for b in blocks]
    taken = [[] for _ in blocks]
    bounds = [None] * len(blocks)
    active = None
    rest = []
    for e in pending:
        k = kinds[e]
        o, c, a = opens[e], closes[e], against[e]
        if active is None:
            if k == EventKind.MATCH or k == EventKind.DELETE_CLOSE:
                w = owner.get(c)
            elif k == EventKind.DELETE_OPEN:
                w = owner.get(a)
            else:
                w = None
            # closes left over after a block's window belong to a later phase
            if w is None or w >= 0 or bounds[~w] is not None:
                rest.append(e)
                continue
            active = ~w
            bounds[active] = [e, e]
        b = active
        for idx in _consumed(k, o, c):
            w = owner.get(idx)
            if w == b:
                y_left[b] -= 1
            elif w == ~b:
                x_left[b] -= 1
            else:
                raise WindowOverlap(f"event {e + 1} consumes index {idx} outside block {b + 1}")
            taken[b].append(idx)
        bounds[b][1] = e
        if y_left[b] == 0 or x_left[b] == 0:
            active = None
    if active is not None:
        raise WindowOverlap(f"window of block {active + 1} never closed")
    windows, leftovers = [], []
    for b, blk in enumerate(blocks):
        if bounds[b] is None:
            raise WindowOverlap(f"block {b + 1} has no window")
        L = frozenset(taken[b])
        windows.append(LocalWindow(blk, tuple(bounds[b]), L))
        ys = tuple(y for y in blk.Y if y not in L)
        xs = tuple(x for x in blk.X if x not in L)
        if ys:
            leftovers.append((TYPE_O, ys))
        elif xs:
            leftovers.append((TYPE_C, xs))
        else:
            leftovers.append((EMPTY, ()))
    return PhaseOutcome(tuple(windows), tuple(leftovers), tuple(rest))


def reblock(blocks, leftovers, level: int):
    """Next-phase blocks and the indices of the stripped close/open runs."""
    runs = []                       # [kind, indices, first span, last span]
    for blk, (kind, idx) in zip(blocks, leftovers):
        if kind == EMPTY:
            continue
        if runs and runs[-1][0] == kind:
            runs[-1][1].extend(idx)
            runs[-1][3] = blk.span[1]
        else:
            runs.append([kind, list(idx), blk.span[0], blk.span[1]])
    stripped = []
    while runs and runs[0][0] == TYPE_C:
        stripped.extend(runs.pop(0)[1])
    while runs and runs[-1][0] == TYPE_O:
        stripped.extend(runs.pop()[1])
    nxt = []
    for i in range(0, len(runs), 2):
        o, c = runs[i], runs[i + 1]
        nxt.append(PhaseBlock(level, tuple(o[1]), tuple(c[1]), (o[2], c[3])))
    return nxt, sorted(stripped)


def _run_phases(p: ParenString, dec, trace, stredit, want_script: bool):
    codes = p.codes
    blocks = [PhaseBlock(1, ys, xs, (a, a)) for a, (ys, xs) in enumerate(dec.blocks, start=1)]
    pending = range(len(trace))
    cost = len(dec.forced_deletions)
    ops = [Delete(i) for i in dec.forced_deletions] if want_script else None
    phases = windows = 0
    while blocks:
        phases += 1
        out = segment_phase(trace, pending, blocks)
        for w in out.windows:
            ys = [y for y in w.block.Y if y in w.L]
            xs = [x for x in w.block.X if x in w.L]
            oc = [codes[i - 1] for i in ys]
            cc = [codes[i - 1] for i in xs]
            if want_script:
                res = stredit(oc, cc, ys, xs)
                cost += res.cost
                ops.extend(res.repairs.ops)
            else:
                cost += stredit(oc, cc, want_repairs=False)
        windows += len(out.windows)
        blocks, stripped = reblock(blocks, out.leftovers, phases + 1)
        cost += len(stripped)
        if want_script:
            ops.extend(Delete(i) for i in stripped)
        pending = out.pending
    return cost, ops, phases, windows


def phase_bound(z: int) -> int:
    return 0 if z == 0 else math.ceil(math.log2(z)) + 1


def repair_phased(p: ParenString, seed: int = 0, iterations: int | None = None,
                  stredit=match_runs) -> RepairResult:
    """Best of ``iterations`` phased repairs; iteration ``r`` uses ``substream(seed, r)``.

    Only the winning iteration is rerun with scripts; ties keep the earliest.
    """
    return _repair(p, seed, default_iterations(len(p), iterations), stredit)


def epsilon_mode(p: ParenString, seed: int = 0, epsilon: float = 0.5,
                 stredit=match_runs) -> RepairResult:
    """Phased repair with ``ceil(3 n^eps ln n / ln 1.24)`` iterations."""
    return _repair(p, seed, epsilon_iterations(len(p), epsilon), stredit)


def _repair(p, seed, iterations, stredit):
    dec = decompose(p)
    info = {"z": dec.z, "iterations": iterations, "phases": 0, "max_phases": 0}
    if not dec.blocks:
        script = EditScript(tuple(Delete(i) for i in dec.forced_deletions))
        return RepairResult(len(script.ops), script, apply_script(p, script), info=info)
    residual = dec.residual
    rc = [p.codes[i - 1] for i in residual]
    best = None
    for r in range(iterations):
        trace = run_codes(rc, residual, substream(seed, r), seed=(seed, r))
        cost, _, phases, _ = _run_phases(p, dec, trace, stredit, want_script=False)
        info["max_phases"] = max(info["max_phases"], phases)
        if best is None or cost < best[0]:
            best = (cost, r, trace)
    cost, ops, phases, windows = _run_phases(p, dec, best[2], stredit, want_script=True)
    info.update(best_iteration=best[1], phases=phases, windows=windows)
    script = EditScript(tuple(ops))
    return RepairResult(cost, script, apply_script(p, script), info=info)
