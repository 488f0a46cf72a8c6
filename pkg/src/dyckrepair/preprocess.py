"""Reductions that preserve the deletion-only distance.

Greedy cancellation of adjacent matching pairs, forced deletion of a
leading close-run and a trailing open-run, and the split of what is left
into blocks ``Y_1 X_1 ... Y_z X_z`` (open-run, close-run).

These reductions are exact for the *deletion-only* distance.  They are not
exact for the full edit distance: ``"))(("`` needs 2 substitutions but 4
forced deletions here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import ParenString


@dataclass(frozen=True)
class BlockDecomposition:
    """Residual of ``p`` as alternating open-runs and close-runs.

    All indices are 1-based positions in the original string.
    """

    blocks: tuple          # ((Y_1, X_1), ..., (Y_z, X_z)), each a tuple of indices
    forced_deletions: tuple
    matched_pairs: tuple   # (open_index, close_index)
    n: int = 0

    @property
    def z(self) -> int:
        return len(self.blocks)

    @property
    def residual(self) -> tuple:
        out = []
        for ys, xs in self.blocks:
            out.extend(ys)
            out.extend(xs)
        return tuple(out)


def greedy_match(p: ParenString):
    """Cancel adjacent matching pairs until none is left.

    One left-to-right pass: a close cancels against the top of the stack only
    if the top is its congruent open; otherwise the close is pushed and acts
    as a barrier, so a pair can never be matched across an unmatched symbol.

    Returns ``(matched_pairs, residual)`` with 1-based indices; ``residual``
    is in text order and contains no adjacent matching pair.
    """
    codes = p.codes
    stack: list[int] = []      # indices (1-based) of unresolved symbols
    pairs = []
    for i, c in enumerate(codes, start=1):
        if c < 0 and stack and codes[stack[-1] - 1] == -c:
            pairs.append((stack.pop(), i))
        else:
            stack.append(i)
    return pairs, stack


def split_runs(codes, indices):
    """Split a sequence of indices into (open-run, close-run) blocks.

    ``indices`` must start with an open and end with a close (or be empty).
    ``codes`` is indexed by ``index - 1``.
    """
    blocks = []
    ys: list[int] = []
    xs: list[int] = []
    for i in indices:
        if codes[i - 1] > 0:
            if xs:
                blocks.append((tuple(ys), tuple(xs)))
                ys, xs = [], []
            ys.append(i)
        else:
            xs.append(i)
    if ys or xs:
        blocks.append((tuple(ys), tuple(xs)))
    return blocks


def strip_unmatchable(codes, indices):
    """Split off a leading close-run and a trailing open-run.

    Returns ``(core, stripped)``.
    """
    lo, hi = 0, len(indices)
    while lo < hi and codes[indices[lo] - 1] < 0:
        lo += 1
    while hi > lo and codes[indices[hi - 1] - 1] > 0:
        hi -= 1
    return list(indices[lo:hi]), list(indices[:lo]) + list(indices[hi:])


def decompose(p: ParenString) -> BlockDecomposition:
    pairs, residual = greedy_match(p)
    core, forced = strip_unmatchable(p.codes, residual)
    return BlockDecomposition(
        blocks=tuple(split_runs(p.codes, core)),
        forced_deletions=tuple(sorted(forced)),
        matched_pairs=tuple(sorted(pairs)),
        n=len(p),
    )
