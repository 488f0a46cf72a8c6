import random

import numpy as np
import pytest

from dyckrepair.core import apply_script, is_well_formed, parse_compact
from dyckrepair.errors import WindowOverlap
from dyckrepair.generate import gen_instance
from dyckrepair.oracle import dyck_edit_dp
from dyckrepair.phased import (EMPTY, TYPE_C, TYPE_O, PhaseBlock, epsilon_mode,
                               phase_bound, reblock, repair_phased, segment_phase)
from dyckrepair.preprocess import decompose
from dyckrepair.randomdel import RdTrace, run_codes
from dyckrepair.rng import substream

from helpers import random_string


def make_trace(events):
    """events: (kind, open, close, against) rows, 0 for absent."""
    k, o, c, a = zip(*events)
    return RdTrace(np.array(k, np.int8), np.array(o), np.array(c), np.array(a), 0)


@pytest.mark.parametrize("z,bound", [(0, 0), (1, 1), (2, 2), (3, 3), (4, 3), (5, 4), (1024, 11)])
def test_phase_bound(z, bound):
    assert phase_bound(z) == bound


@pytest.mark.parametrize("text,cost", [("(]", 2), ("([])", 0), ("))((", 4), ("(](]", 4)])
def test_examples(text, cost):
    assert repair_phased(parse_compact(text)).cost == cost


def test_segment_one_block_matched_and_leftover():
    # "(([" then "])": block Y=(1,2,3), X=(4,5)
    blk = PhaseBlock(1, (1, 2, 3), (4, 5), (1, 1))
    tr = make_trace([(0, 3, 4, 0), (0, 2, 5, 0), (3, 1, 0, 0)])
    out = segment_phase(tr, range(3), [blk])
    (w,) = out.windows
    assert w.event_range == (0, 1) and w.L == {2, 3, 4, 5}
    assert out.leftovers == ((TYPE_O, (1,)),)
    assert out.pending == (2,)


def test_segment_close_leftover_and_pending_events():
    blk = PhaseBlock(1, (1,), (2, 3), (1, 1))
    # the open is deleted against close 2, close 2 matches nothing, close 3 comes later
    tr = make_trace([(1, 1, 0, 2), (2, 0, 2, 0), (2, 0, 3, 0)])
    out = segment_phase(tr, range(3), [blk])
    assert out.windows[0].L == {1}
    assert out.leftovers == ((TYPE_C, (2, 3)),)
    assert out.pending == (1, 2)


def test_segment_rejects_foreign_consumption():
    a = PhaseBlock(1, (1,), (2,), (1, 1))
    b = PhaseBlock(1, (3,), (4,), (2, 2))
    tr = make_trace([(0, 3, 2, 0)])
    with pytest.raises(WindowOverlap):
        segment_phase(tr, range(1), [a, b])


def test_segment_requires_a_window_per_block():
    a = PhaseBlock(1, (1,), (2,), (1, 1))
    tr = make_trace([(3, 1, 0, 0)])
    with pytest.raises(WindowOverlap):
        segment_phase(tr, range(1), [a])


def test_reblock_strips_and_merges():
    blocks = [PhaseBlock(1, (), (), (a, a)) for a in range(1, 6)]
    leftovers = [(TYPE_C, (2,)), (TYPE_O, (5,)), (EMPTY, ()), (TYPE_C, (9,)), (TYPE_O, (11,))]
    nxt, stripped = reblock(blocks, leftovers, 2)
    assert stripped == [2, 11]
    assert nxt == [PhaseBlock(2, (5,), (9,), (2, 4))]


def test_reblock_merges_runs_of_one_kind():
    blocks = [PhaseBlock(1, (), (), (a, a)) for a in range(1, 5)]
    leftovers = [(TYPE_O, (1,)), (TYPE_O, (3,)), (TYPE_C, (6,)), (TYPE_C, (8,))]
    nxt, stripped = reblock(blocks, leftovers, 2)
    assert stripped == [] and nxt == [PhaseBlock(2, (1, 3), (6, 8), (1, 4))]


def test_fuzz_valid_output_and_phase_bound():
    rng = random.Random(31)
    for _ in range(800):
        p = random_string(rng, 20)
        res = repair_phased(p, seed=rng.randrange(1000), iterations=2)
        assert is_well_formed(res.repaired)
        assert apply_script(p, res.script) == res.repaired
        assert res.cost == len(res.script.ops) >= dyck_edit_dp(p).cost
        assert res.info["max_phases"] <= phase_bound(res.info["z"])


def test_every_index_is_accounted_for_once():
    p, _ = gen_instance(300, 2, 15, substream(4))
    dec = decompose(p)
    rc = [p.codes[i - 1] for i in dec.residual]
    tr = run_codes(rc, dec.residual, substream(8))
    blocks = [PhaseBlock(1, ys, xs, (a, a)) for a, (ys, xs) in enumerate(dec.blocks, 1)]
    pending = range(len(tr))
    seen = list(dec.forced_deletions) + [i for pr in dec.matched_pairs for i in pr]
    level = 1
    while blocks:
        out = segment_phase(tr, pending, blocks)
        seen += [i for w in out.windows for i in w.L]
        level += 1
        blocks, stripped = reblock(blocks, out.leftovers, level)
        seen += stripped
        pending = out.pending
    assert sorted(seen) == list(range(1, len(p) + 1))


def test_epsilon_mode_uses_more_iterations():
    p, _ = gen_instance(100, 2, 6, substream(2))
    a = repair_phased(p, seed=1)
    b = epsilon_mode(p, seed=1, epsilon=0.5)
    assert b.info["iterations"] > a.info["iterations"]
    assert b.cost <= a.cost
    assert is_well_formed(b.repaired)


def test_deterministic():
    p, _ = gen_instance(300, 3, 15, substream(2))
    assert repair_phased(p, seed=5).script == repair_phased(p, seed=5).script
