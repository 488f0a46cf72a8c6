"""Transcripts of stack, queue, priority-queue and deque operations.

A transcript is valid when replaying it on an initially empty structure
never extracts something other than what the structure would return, and
leaves the structure empty.  Repair deletes operations.

* stack: insertions are opens, extractions closes, one type per key, so
  repair is exactly Dyck repair.
* priority queue: Random-deletion where the "stack top" is the element of
  least ``(priority, insertion order)``.
* queue: a priority queue whose priority is the insertion order.
* deque: Random-deletion on a real deque; an extraction is compared with the
  end it names.

File format, one op per line (blank lines and ``#`` comments ignored)::

    I key            E key            # stack, queue
    I key priority   E key            # pq
    IH key  IT key  EH key  ET key    # deque
"""
from __future__ import annotations

import enum
import heapq
import itertools
from collections import deque
from dataclasses import dataclass, field

from .core import Delete, ParenString, Substitute
from .errors import BadParams, MixedDecorations, NotFound, TranscriptSyntax
from .randomdel import best_of, default_iterations
from .rng import CoinStream, as_generator, substream


class Language(enum.Enum):
    STACK = "stack"
    QUEUE = "queue"
    PQ = "pq"
    DEQUE = "deque"


class OpKind(enum.Enum):
    INS = "I"
    EXT = "E"


class End(enum.Enum):
    HEAD = "H"
    TAIL = "T"


@dataclass(frozen=True)
class TranscriptOp:
    kind: OpKind
    key: str
    priority: int | None = None
    end: End | None = None

    @property
    def is_insert(self) -> bool:
        return self.kind is OpKind.INS


@dataclass(frozen=True)
class Transcript:
    ops: tuple
    language: Language

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        for i, op in enumerate(self.ops, start=1):
            want_prio = self.language is Language.PQ and op.is_insert
            if (op.priority is not None) != want_prio:
                raise MixedDecorations(f"op {i}: priority {'missing' if want_prio else 'not allowed'}")
            want_end = self.language is Language.DEQUE
            if (op.end is not None) != want_end:
                raise MixedDecorations(f"op {i}: end {'missing' if want_end else 'not allowed'}")

    def __len__(self):
        return len(self.ops)

    def without(self, deleted) -> "Transcript":
        gone = set(deleted)
        return Transcript(tuple(op for i, op in enumerate(self.ops, start=1) if i not in gone),
                          self.language)


@dataclass(frozen=True)
class TranscriptRepair:
    transcript: Transcript
    cost: int
    deleted: tuple            # 1-based op positions
    info: dict = field(default_factory=dict, compare=False)


# --- text format ----------------------------------------------------------------

def parse_transcript(text: str, language: Language | str) -> Transcript:
    lang = Language(language)
    ops = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        if lang is Language.DEQUE:
            if head not in ("IH", "IT", "EH", "ET") or len(parts) != 2:
                raise TranscriptSyntax(no, raw, "expected IH|IT|EH|ET <key>")
            ops.append(TranscriptOp(OpKind(head[0]), parts[1], end=End(head[1])))
        elif head == "I" and lang is Language.PQ:
            if len(parts) != 3:
                raise TranscriptSyntax(no, raw, "expected I <key> <priority>")
            try:
                prio = int(parts[2])
            except ValueError:
                raise TranscriptSyntax(no, raw, "priority is not an integer") from None
            ops.append(TranscriptOp(OpKind.INS, parts[1], priority=prio))
        elif head in ("I", "E") and len(parts) == 2:
            ops.append(TranscriptOp(OpKind(head), parts[1]))
        else:
            raise TranscriptSyntax(no, raw, "expected I <key> or E <key>")
    return Transcript(tuple(ops), lang)


def render_op(op: TranscriptOp) -> str:
    head = op.kind.value + (op.end.value if op.end is not None else "")
    if op.priority is not None:
        return f"{head} {op.key} {op.priority}"
    return f"{head} {op.key}"


def render_transcript(t: Transcript) -> str:
    return "".join(render_op(op) + "\n" for op in t.ops)


# --- validation -----------------------------------------------------------------

def validate(t: Transcript) -> bool:
    lang = t.language
    if lang is Language.STACK:
        st = []
        for op in t.ops:
            if op.is_insert:
                st.append(op.key)
            elif not st or st.pop() != op.key:
                return False
        return not st
    if lang is Language.QUEUE:
        q = deque()
        for op in t.ops:
            if op.is_insert:
                q.append(op.key)
            elif not q or q.popleft() != op.key:
                return False
        return not q
    if lang is Language.PQ:
        live = {}                 # priority -> list of keys
        for op in t.ops:
            if op.is_insert:
                live.setdefault(op.priority, []).append(op.key)
                continue
            if not live:
                return False
            low = min(live)
            keys = live[low]
            if op.key not in keys:
                return False
            keys.remove(op.key)
            if not keys:
                del live[low]
        return not live
    dq = deque()
    for op in t.ops:
        head = op.end is End.HEAD
        if op.is_insert:
            dq.appendleft(op.key) if head else dq.append(op.key)
        elif not dq or (dq.popleft() if head else dq.pop()) != op.key:
            return False
    return not dq


# --- stack <-> Dyck ---------------------------------------------------------------

def stack_to_dyck(t: Transcript):
    """``(ParenString, keys)``: key ``keys[j]`` becomes parenthesis type ``j``."""
    if t.language is not Language.STACK:
        raise BadParams(f"stack_to_dyck needs a stack transcript, got {t.language.value}")
    table: dict = {}
    codes = []
    for op in t.ops:
        if op.priority is not None or op.end is not None:
            raise MixedDecorations("stack ops carry no priority or end")
        tid = table.setdefault(op.key, len(table))
        codes.append(tid + 1 if op.is_insert else -(tid + 1))
    return ParenString(tuple(codes), max(1, len(table))), tuple(table)


def _deletions_from_script(p: ParenString, script) -> set:
    """Deletion-only version of an edit script.

    Every pair of the repaired string that involves a substituted symbol is
    deleted on both sides; all other pairs are original and still match.
    """
    deleted = {op.index for op in script.ops if isinstance(op, Delete)}
    subst = {op.index: op.symbol.code for op in script.ops if isinstance(op, Substitute)}
    stack = []
    for i, c in enumerate(p.codes, start=1):
        if i in deleted:
            continue
        c = subst.get(i, c)
        if c > 0:
            stack.append(i)
            continue
        j = stack.pop()
        if i in subst or j in subst:
            deleted.update((i, j))
    return deleted


def _repair_stack(t, seed, iterations, algo):
    p, _ = stack_to_dyck(t)
    if algo == "random":
        trace = best_of(p, iterations, seed)
        return set(trace.deleted_indices().tolist())
    if algo == "refined":
        from .refined import repair_refined
        res = repair_refined(p, seed=seed, iterations=iterations)
    elif algo == "phased":
        from .phased import repair_phased
        res = repair_phased(p, seed=seed, iterations=iterations)
    else:
        raise BadParams(f"unknown algorithm {algo!r}")
    return _deletions_from_script(p, res.script)


# --- randomized scans for the other disciplines ----------------------------------------

def _scan_priority(ops, coins: CoinStream, fifo: bool) -> set:
    heap = []          # (priority, insertion seq, key, op position)
    deleted = set()
    flip = coins.flip
    for pos, op in enumerate(ops, start=1):
        if op.is_insert:
            heapq.heappush(heap, (pos if fifo else op.priority, pos, op.key, pos))
            continue
        while True:
            if not heap:
                deleted.add(pos)
                break
            if heap[0][2] == op.key:
                heapq.heappop(heap)
                break
            if flip():
                deleted.add(heapq.heappop(heap)[3])
                continue
            deleted.add(pos)
            break
    deleted.update(item[3] for item in heap)
    return deleted


def _scan_deque(ops, coins: CoinStream) -> set:
    dq = deque()       # (key, op position)
    deleted = set()
    flip = coins.flip
    for pos, op in enumerate(ops, start=1):
        head = op.end is End.HEAD
        if op.is_insert:
            dq.appendleft((op.key, pos)) if head else dq.append((op.key, pos))
            continue
        while True:
            if not dq:
                deleted.add(pos)
                break
            key = dq[0][0] if head else dq[-1][0]
            if key == op.key:
                dq.popleft() if head else dq.pop()
                break
            if flip():
                deleted.add((dq.popleft() if head else dq.pop())[1])
                continue
            deleted.add(pos)
            break
    deleted.update(pos for _, pos in dq)
    return deleted


def repair(t: Transcript, seed: int = 0, algo: str = "random",
           iterations: int | None = None) -> TranscriptRepair:
    """Delete operations until ``t`` validates.

    ``algo`` may be ``refined`` or ``phased`` for stack transcripts only.
    Iteration ``r`` of the best-of loop uses ``substream(seed, r)``.
    """
    iters = default_iterations(len(t), iterations)
    lang = t.language
    if lang is Language.STACK:
        deleted = _repair_stack(t, seed, iterations, algo)
    else:
        if algo != "random":
            raise BadParams(f"{algo} repair is only available for stack transcripts")
        deleted = None
        for r in range(iters):
            coins = CoinStream(substream(seed, r))
            if lang is Language.DEQUE:
                cand = _scan_deque(t.ops, coins)
            else:
                cand = _scan_priority(t.ops, coins, fifo=lang is Language.QUEUE)
            if deleted is None or len(cand) < len(deleted):
                deleted = cand
                if not cand:
                    break
    gone = tuple(sorted(deleted))
    return TranscriptRepair(t.without(gone), len(gone), gone,
                            info={"algo": algo, "iterations": iters})


def brute_force_transcript_distance(t: Transcript, max_cost: int = 10) -> int:
    """Fewest op deletions that make ``t`` valid (subset search by size)."""
    n = len(t)
    for k in range(0, min(max_cost, n) + 1):
        for gone in itertools.combinations(range(1, n + 1), k):
            if validate(t.without(gone)):
                return k
    raise NotFound(f"no valid transcript within {max_cost} deletions")


def dyck_cost_of_stack(t: Transcript, seed: int = 0, iterations: int | None = None) -> int:
    """Cost of plain Random-deletion on the mapped string (for cross-checks)."""
    p, _ = stack_to_dyck(t)
    return best_of(p, iterations, seed).cost


# --- generators -------------------------------------------------------------------

_KEYS = "abcdefghijklmnopqrstuvwxyz"


def _random_op(lang: Language, rng, keys: int, max_priority: int) -> TranscriptOp:
    key = _KEYS[int(rng.integers(0, keys))]
    ins = bool(rng.integers(0, 2))
    kind = OpKind.INS if ins else OpKind.EXT
    if lang is Language.DEQUE:
        return TranscriptOp(kind, key, end=End.HEAD if rng.integers(0, 2) else End.TAIL)
    if lang is Language.PQ and ins:
        return TranscriptOp(kind, key, priority=int(rng.integers(0, max_priority + 1)))
    return TranscriptOp(kind, key)


def gen_transcript(language: Language | str, n: int, k: int, rng=None,
                   keys: int = 3, max_priority: int = 9) -> Transcript:
    """A valid transcript of ``n`` ops (``n`` even) with ``k`` random edits planted.

    Edits delete an op, insert a random op, or change an op's key.
    """
    lang = Language(language)
    if n < 0 or n % 2 or k < 0 or not 1 <= keys <= len(_KEYS):
        raise BadParams(f"need even n >= 0, k >= 0, 1 <= keys <= 26 (got n={n}, k={k}, keys={keys})")
    rng = as_generator(rng)
    ops = []
    live = []          # (priority, seq, key) for pq/queue; keys for stack; deque of keys
    dq = deque()
    ins_left = n // 2
    seq = 0
    for _ in range(n):
        size = len(dq) if lang is Language.DEQUE else len(live)
        if ins_left and (size == 0 or rng.integers(0, 2)):
            ins_left -= 1
            key = _KEYS[int(rng.integers(0, keys))]
            if lang is Language.DEQUE:
                end = End.HEAD if rng.integers(0, 2) else End.TAIL
                dq.appendleft(key) if end is End.HEAD else dq.append(key)
                ops.append(TranscriptOp(OpKind.INS, key, end=end))
            elif lang is Language.PQ:
                prio = int(rng.integers(0, max_priority + 1))
                heapq.heappush(live, (prio, seq, key))
                ops.append(TranscriptOp(OpKind.INS, key, priority=prio))
            elif lang is Language.QUEUE:
                heapq.heappush(live, (seq, seq, key))
                ops.append(TranscriptOp(OpKind.INS, key))
            else:
                live.append(key)
                ops.append(TranscriptOp(OpKind.INS, key))
            seq += 1
            continue
        if lang is Language.DEQUE:
            end = End.HEAD if rng.integers(0, 2) else End.TAIL
            key = dq.popleft() if end is End.HEAD else dq.pop()
            ops.append(TranscriptOp(OpKind.EXT, key, end=end))
        elif lang is Language.STACK:
            ops.append(TranscriptOp(OpKind.EXT, live.pop()))
        else:
            ops.append(TranscriptOp(OpKind.EXT, heapq.heappop(live)[2]))
    for _ in range(k):
        what = int(rng.integers(0, 3)) if ops else 1
        if what == 0:
            del ops[int(rng.integers(0, len(ops)))]
        elif what == 1:
            ops.insert(int(rng.integers(0, len(ops) + 1)), _random_op(lang, rng, keys, max_priority))
        else:
            i = int(rng.integers(0, len(ops)))
            old = ops[i]
            choices = [c for c in _KEYS[:keys] if c != old.key] or [old.key]
            ops[i] = TranscriptOp(old.kind, choices[int(rng.integers(0, len(choices)))],
                                  old.priority, old.end)
    return Transcript(tuple(ops), lang)

