import random

import pytest

from dyckrepair.core import apply_script, is_well_formed, parse_compact
from dyckrepair.generate import gen_instance
from dyckrepair.oracle import dyck_edit_dp
from dyckrepair.preprocess import decompose
from dyckrepair.refined import estimate_blocks, repair_refined
from dyckrepair.rng import substream

from helpers import random_string


@pytest.mark.parametrize("text,cost,whole", [
    ("(]", 2, 1),
    ("(((]]]", 6, 3),
    ("([])", 0, 0),
    ("))((", 4, 4),
])
def test_examples(text, cost, whole):
    p = parse_compact(text)
    assert repair_refined(p).cost == cost
    assert repair_refined(p, whole_run_repeats=True).cost == whole


def test_fuzz_output_is_valid():
    rng = random.Random(12)
    for _ in range(600):
        p = random_string(rng, 18)
        for whole in (False, True):
            res = repair_refined(p, seed=rng.randrange(1000), iterations=2,
                                 whole_run_repeats=whole)
            assert is_well_formed(res.repaired)
            assert apply_script(p, res.script) == res.repaired
            assert res.cost == len(res.script.ops) >= dyck_edit_dp(p).cost


def test_estimates_cover_each_block():
    p, _ = gen_instance(400, 2, 12, substream(1))
    dec = decompose(p)
    est = estimate_blocks(p, dec, seed=3, restarts=4)
    assert [e.block_index for e in est] == list(range(1, len(dec.blocks) + 1))
    used = [y for e in est for y in e.z_min]
    assert len(used) == len(set(used))
    for e, (ys, xs) in zip(est, dec.blocks):
        assert e.resume_state[1] == xs[-1]
        assert list(e.z_min) == sorted(e.z_min)
        assert all(p.codes[y - 1] > 0 for y in e.z_min)
        assert e.restarts == 4


def test_deterministic_per_seed():
    p, _ = gen_instance(300, 3, 15, substream(2))
    assert repair_refined(p, seed=5).script == repair_refined(p, seed=5).script


def test_info():
    p = parse_compact("(](]")
    info = repair_refined(p, iterations=3).info
    assert info["z"] == 2 and info["iterations"] == 3 and len(info["segment_deletions"]) == 2
