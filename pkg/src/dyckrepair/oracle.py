"""Exact references for the Dyck(s) edit distance.

* :func:`dyck_edit_dp` -- the cubic interval DP over insertions, deletions
  and substitutions, with optional script recovery.
* :func:`dyck_deletion_dp` -- the same recurrence restricted to deletions.
* :func:`brute_force_distance` / :func:`distance_table` -- breadth-first
  search over edit operations, independent of the DP.
"""
from __future__ import annotations

import itertools
from collections import deque

import numpy as np

from .core import (Delete, EditScript, ParenString, ParenSymbol, RepairResult,
                   Substitute, apply_script, is_well_formed)
from .errors import NotFound, TooLarge

DEFAULT_CAP = 600
_INF = np.int32(1 << 28)


def pair_cost(a: int, b: int) -> int:
    """Symbols of the pair (a, b) that must change so ``a`` opens and ``b`` closes it."""
    if a > 0:
        if b < 0:
            return 0 if a == -b else 1
        return 1
    return 1 if b < 0 else 2


DELETION_ONLY, KEEP_POLARITY, FULL = "deletion", "keep_polarity", "full"


def pair_cost_in(mode: str, a: int, b: int) -> int:
    if mode == FULL:
        return pair_cost(a, b)
    if a > 0 and b < 0 and (a == -b or mode == KEEP_POLARITY):
        return 0 if a == -b else 1
    return int(_INF)


def _pair_costs(c: np.ndarray, length: int, mode: str) -> np.ndarray:
    a = c[: len(c) - length + 1]
    b = c[length - 1:]
    if mode == DELETION_ONLY:
        return np.where((a > 0) & (b == -a), 0, _INF).astype(np.int32)
    if mode == KEEP_POLARITY:
        cost = np.where((a > 0) & (b < 0), (b != -a).astype(np.int32), _INF)
        return cost.astype(np.int32)
    cost = (a < 0).astype(np.int32) + (b > 0)
    cost += (a > 0) & (b < 0) & (b != -a)
    return cost


def _fill(codes, mode: str) -> np.ndarray:
    """Table ``D[L, i]`` = distance of the substring of length L starting at i (0-based)."""
    n = len(codes)
    c = np.asarray(codes, dtype=np.int64)
    D = np.zeros((n + 1, n + 1), dtype=np.int32)
    if n == 0:
        return D
    D[1, :n] = 1
    for L in range(2, n + 1):
        m = n - L + 1
        starts = np.arange(m)
        pair = _pair_costs(c, L, mode) + D[L - 2, 1:m + 1]
        splits = np.arange(1, L)
        left = D[splits[None, :], starts[:, None]]
        right = D[L - splits[None, :], starts[:, None] + splits[None, :]]
        best_split = (left + right).min(axis=1)
        D[L, :m] = np.minimum(pair, best_split)
    return D


def _check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise TooLarge(n, cap)


def dyck_edit_dp(p: ParenString, want_script: bool = False,
                 cap: int | None = None, keep_polarity: bool = False) -> RepairResult:
    """Exact edit distance of ``p`` to Dyck(s).

    Insertions are never needed: each can be traded for deleting the
    symbol it would have paired with, so the DP only uses deletions and
    substitutions.  With ``keep_polarity`` a substitution may change a
    symbol's type but not turn an open into a close or back.
    """
    n = len(p)
    _check_cap(n, cap)
    mode = KEEP_POLARITY if keep_polarity else FULL
    D = _fill(p.codes, mode)
    cost = int(D[n, 0])
    if not want_script:
        return RepairResult(cost)
    script = EditScript(tuple(_traceback(p.codes, D, mode)))
    repaired = apply_script(p, script)
    return RepairResult(cost, script, repaired)


def dyck_deletion_dp(p: ParenString, cap: int | None = None) -> int:
    """Minimum number of deletions that make ``p`` well-formed."""
    _check_cap(len(p), cap)
    return int(_fill(p.codes, DELETION_ONLY)[len(p), 0])


def _pair_ops(codes, i: int, j: int):
    """Ops (1-based) that turn codes[i], codes[j] (0-based) into a matching pair."""
    a, b = codes[i], codes[j]
    if a > 0:
        if b == -a:
            return []
        # change the close side to the congruent of the open
        return [Substitute(j + 1, ParenSymbol.close(a - 1))]
    if b < 0:
        return [Substitute(i + 1, ParenSymbol.open(-b - 1))]
    return [Substitute(i + 1, ParenSymbol.open(-a - 1)),
            Substitute(j + 1, ParenSymbol.close(-a - 1))]


def _traceback(codes, D, mode: str = FULL):
    ops = []
    todo = [(0, len(codes))]
    while todo:
        i, L = todo.pop()
        if L == 0:
            continue
        if L == 1:
            ops.append(Delete(i + 1))
            continue
        target = D[L, i]
        if pair_cost_in(mode, codes[i], codes[i + L - 1]) + D[L - 2, i + 1] == target:
            ops.extend(_pair_ops(codes, i, i + L - 1))
            todo.append((i + 1, L - 2))
            continue
        for m in range(1, L):
            if D[m, i] + D[L - m, i + m] == target:
                todo.append((i, m))
                todo.append((i + m, L - m))
                break
        else:  # pragma: no cover - the table is consistent by construction
            raise AssertionError("DP traceback failed")
    return ops


# --- brute force --------------------------------------------------------------

def _alphabet(s: int):
    return [t + 1 for t in range(s)] + [-(t + 1) for t in range(s)]


def _neighbors(word: tuple, symbols, insertions: bool, keep_polarity: bool = False):
    n = len(word)
    for i in range(n):
        yield word[:i] + word[i + 1:]
        for c in symbols:
            if c != word[i] and not (keep_polarity and (c > 0) != (word[i] > 0)):
                yield word[:i] + (c,) + word[i + 1:]
    if insertions:
        for i in range(n + 1):
            for c in symbols:
                yield word[:i] + (c,) + word[i:]


def brute_force_distance(p: ParenString, max_cost: int = 6,
                         insertions: bool = False, keep_polarity: bool = False) -> int:
    """Breadth-first search over edit scripts in increasing cost.

    Edits are deletions and substitutions (plus insertions when
    ``insertions`` is set) over the alphabet of ``p``; ``keep_polarity``
    restricts substitutions to type changes.  Raises
    :class:`NotFound` if no well-formed string is within ``max_cost``.
    """
    start = tuple(p.codes)
    if is_well_formed(start):
        return 0
    symbols = _alphabet(p.alphabet_size)
    seen = {start}
    frontier = [start]
    for cost in range(1, max_cost + 1):
        nxt = []
        for word in frontier:
            for nb in _neighbors(word, symbols, insertions, keep_polarity):
                if nb in seen:
                    continue
                if is_well_formed(nb):
                    return cost
                seen.add(nb)
                nxt.append(nb)
        frontier = nxt
    raise NotFound(f"no well-formed string within {max_cost} edits")


def distance_table(alphabet_size: int, max_len: int) -> dict:
    """Distance to Dyck(s) of every string of length <= ``max_len``.

    Multi-source BFS outward from all well-formed strings, using the
    inverses of deletion (insertion) and substitution and never leaving
    lengths <= ``max_len``.  Equivalent to running the deletion+substitution
    search of :func:`brute_force_distance` from every string at once.
    """
    symbols = _alphabet(alphabet_size)
    dist: dict = {}
    queue = deque()
    for L in range(0, max_len + 1, 2):
        for word in itertools.product(symbols, repeat=L):
            if is_well_formed(word):
                dist[word] = 0
                queue.append(word)
    while queue:
        w = queue.popleft()
        d = dist[w] + 1
        n = len(w)
        for i in range(n):
            for c in symbols:
                if c != w[i]:
                    u = w[:i] + (c,) + w[i + 1:]
                    if u not in dist:
                        dist[u] = d
                        queue.append(u)
        if n < max_len:
            for i in range(n + 1):
                for c in symbols:
                    u = w[:i] + (c,) + w[i:]
                    if u not in dist:
                        dist[u] = d
                        queue.append(u)
    return dist
