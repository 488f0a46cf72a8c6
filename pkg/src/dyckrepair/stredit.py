"""String edit distance and the open-run / close-run adapter.

:func:`levenshtein` is the unit-cost DP, vectorised row by row with numpy
(the in-row insertion chain is resolved with a running minimum).  With a
``band`` it only fills cells with ``|i - j| <= band`` and doubles the band
until the result certifies itself (distance <= band).

:func:`match_runs` repairs an open-run ``R`` followed by a close-run ``T``:
``R·T`` is well-formed exactly when the types of ``R`` equal the types of
``T`` reversed, so its cost is the string edit distance between the two.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import Delete, EditScript, ParenSymbol, Substitute
from .errors import PolarityViolation

_BIG = 1 << 40

MATCH, SUB, DEL_A, DEL_B = "match", "sub", "del_a", "del_b"


@dataclass(frozen=True)
class Alignment:
    """Optimal alignment: ``(kind, i, j)`` steps, 0-based; ``None`` on a gap side."""

    cost: int
    steps: tuple


def _row_band(i: int, m: int, band: int | None):
    if band is None:
        return 0, m
    return max(0, i - band), min(m, i + band)


def _dp(a: np.ndarray, b: np.ndarray, band: int | None, keep: bool):
    """Fill the DP; returns (cost, rows) where rows[i] = (lo, values) if keep."""
    n, m = len(a), len(b)
    lo, hi = _row_band(0, m, band)
    prev = np.arange(lo, hi + 1, dtype=np.int64)
    prev_lo = lo
    rows = [(lo, prev)] if keep else None
    for i in range(1, n + 1):
        lo, hi = _row_band(i, m, band)
        width = hi - lo + 1
        # deletion of a[i-1]: D[i-1][j] + 1
        cand = np.full(width, _BIG, dtype=np.int64)
        s0, s1 = max(lo, prev_lo), min(hi, prev_lo + len(prev) - 1)
        if s0 <= s1:
            cand[s0 - lo:s1 - lo + 1] = prev[s0 - prev_lo:s1 - prev_lo + 1] + 1
        # match / substitute: D[i-1][j-1] + (a != b)
        j0, j1 = max(lo, 1, prev_lo + 1), min(hi, prev_lo + len(prev))
        if j0 <= j1:
            diag = prev[j0 - 1 - prev_lo:j1 - prev_lo] + (b[j0 - 1:j1] != a[i - 1])
            np.minimum(cand[j0 - lo:j1 - lo + 1], diag, out=cand[j0 - lo:j1 - lo + 1])
        if lo == 0:
            cand[0] = min(cand[0], i)
        # insertion chain: D[i][j] = min_k<=j cand[k] + (j - k)
        offs = np.arange(width, dtype=np.int64)
        cur = np.minimum.accumulate(cand - offs) + offs
        prev, prev_lo = cur, lo
        if keep:
            rows.append((lo, cur))
    if not (prev_lo <= m < prev_lo + len(prev)):
        return _BIG, rows
    return int(prev[m - prev_lo]), rows


def _cell(rows, i, j):
    lo, vals = rows[i]
    k = j - lo
    if 0 <= k < len(vals):
        return int(vals[k])
    return _BIG


def _traceback(a, b, rows):
    i, j = len(a), len(b)
    steps = []
    while i > 0 or j > 0:
        here = _cell(rows, i, j)
        if i > 0 and j > 0:
            same = a[i - 1] == b[j - 1]
            if _cell(rows, i - 1, j - 1) + (0 if same else 1) == here:
                steps.append((MATCH if same else SUB, i - 1, j - 1))
                i, j = i - 1, j - 1
                continue
        if i > 0 and _cell(rows, i - 1, j) + 1 == here:
            steps.append((DEL_A, i - 1, None))
            i -= 1
            continue
        steps.append((DEL_B, None, j - 1))
        j -= 1
    steps.reverse()
    return tuple(steps)


def _as_array(seq):
    if isinstance(seq, np.ndarray):
        return seq.astype(np.int64, copy=False)
    if isinstance(seq, str):
        return np.frombuffer(seq.encode("utf-32-le"), dtype=np.uint32).astype(np.int64)
    return np.asarray(list(seq), dtype=np.int64).reshape(-1)


def _run(a, b, band, keep):
    if band is None:
        return _dp(a, b, None, keep)
    band = max(int(band), abs(len(a) - len(b)), 1)
    while True:
        cost, rows = _dp(a, b, band, keep)
        if cost <= band or band >= max(len(a), len(b)):
            return cost, rows
        band *= 2


def levenshtein(a: Sequence, b: Sequence, band: int | None = None,
                alignment: bool = True):
    """Unit-cost edit distance between two sequences of hashable ints/chars.

    Returns an :class:`Alignment` (or just the cost if ``alignment`` is
    false).  ``band`` is the starting band of the doubling search; the
    answer is exact either way.
    """
    a_arr, b_arr = _as_array(a), _as_array(b)
    cost, rows = _run(a_arr, b_arr, band, keep=alignment)
    if not alignment:
        return cost
    return Alignment(cost, _traceback(a_arr, b_arr, rows))


def levenshtein_distance(a: Sequence, b: Sequence, band: int | None = None) -> int:
    return levenshtein(a, b, band=band, alignment=False)


# --- open-run / close-run adapter ---------------------------------------------

@dataclass(frozen=True)
class StrEditOutcome:
    cost: int
    repairs: EditScript


def _types(codes, want_open: bool, what: str):
    out = []
    for c in codes:
        if (c > 0) != want_open:
            raise PolarityViolation(f"{what} must be all-{'open' if want_open else 'close'}")
        out.append(abs(c))
    return out


def match_runs(open_codes: Sequence[int], close_codes: Sequence[int],
               open_index: Sequence[int] | None = None,
               close_index: Sequence[int] | None = None,
               want_repairs: bool = True,
               band: int | None = None) -> StrEditOutcome | int:
    """Repair an open-run followed by a close-run.

    ``open_codes`` / ``close_codes`` are symbol codes in text order and
    ``open_index`` / ``close_index`` their 1-based positions in the original
    string (defaults: positions within ``R·T``).  Substitutions change the
    close side; unaligned symbols are deleted.  With ``want_repairs=False``
    only the cost is returned.
    """
    r = _types(open_codes, True, "open-run")
    t = _types(close_codes, False, "close-run")
    t_rev = t[::-1]
    if not want_repairs:
        if not r or not t:
            return len(r) + len(t)
        return levenshtein(r, t_rev, band=band, alignment=False)
    if open_index is None:
        open_index = range(1, len(r) + 1)
    if close_index is None:
        close_index = range(len(r) + 1, len(r) + len(t) + 1)
    ali = levenshtein(r, t_rev, band=band)
    k = len(t)
    ops = []
    for kind, i, j in ali.steps:
        if kind == SUB:
            # j indexes the reversed close-run
            ops.append(Substitute(close_index[k - 1 - j], ParenSymbol.close(r[i] - 1)))
        elif kind == DEL_A:
            ops.append(Delete(open_index[i]))
        elif kind == DEL_B:
            ops.append(Delete(close_index[k - 1 - j]))
    return StrEditOutcome(ali.cost, EditScript(tuple(ops)))


StrEdit = Callable[..., "StrEditOutcome | int"]
