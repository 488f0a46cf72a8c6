import random

import numpy as np
import pytest

from dyckrepair.core import ParenString, is_well_formed, parse_compact
from dyckrepair.generate import gen_instance
from dyckrepair.oracle import dyck_deletion_dp
from dyckrepair.randomdel import (EventKind, best_of, default_iterations,
                                  epsilon_iterations, repair_random, run)
from dyckrepair.rng import substream

from helpers import random_string


def test_single_match():
    tr = run(parse_compact("()"), 0)
    assert tr.cost == 0 and tr.matched_pairs() == [(1, 2)]


def test_unclosed_opens_are_flushed():
    tr = run(parse_compact("(("), 0)
    assert [e.kind for e in tr.events] == [EventKind.FLUSH_OPEN] * 2
    assert tr.cost == 2


@pytest.mark.parametrize("seed", range(20))
def test_mismatch_costs_two_for_any_coin(seed):
    assert run(parse_compact("(]"), seed).cost == 2


def test_iteration_counts():
    assert default_iterations(2) == 10
    assert default_iterations(1024) == 97
    assert default_iterations(1024, 1) == 1
    assert default_iterations(1) == 1
    assert epsilon_iterations(4, 1) == 78
    with pytest.raises(ValueError):
        default_iterations(10, 0)
    with pytest.raises(ValueError):
        epsilon_iterations(10, 0)


def test_every_index_is_consumed_once():
    rng = random.Random(1)
    for _ in range(400):
        p = random_string(rng, 30)
        tr = run(p, rng.randrange(1 << 30))
        seen = []
        for e in tr.events:
            seen += [i for i in (e.open_index, e.close_index) if i is not None]
        assert sorted(seen) == list(range(1, len(p) + 1))


def test_cost_bounds_and_output():
    rng = random.Random(2)
    for _ in range(300):
        p = random_string(rng, 16)
        res = repair_random(p, seed=rng.randrange(1000), iterations=3)
        assert is_well_formed(res.repaired)
        assert res.cost >= dyck_deletion_dp(p)
        assert res.cost == len(res.script.ops)


def test_best_of_never_worse_than_first_run():
    p, _ = gen_instance(200, 2, 8, substream(3))
    first = run(p, substream(11, 0)).cost
    assert best_of(p, 5, seed=11).cost <= first


def test_comparisons_per_close_are_bounded_on_average():
    total_cmp = total_close = 0
    for r in range(20):
        p, _ = gen_instance(2000, 3, 200, substream(5, r))
        tr = run(p, substream(6, r))
        total_cmp += tr.comparisons
        total_close += tr.closes
    assert total_cmp / total_close <= 3


def test_deterministic():
    p, _ = gen_instance(300, 3, 20, substream(9))
    a = repair_random(p, seed=4)
    b = repair_random(p, seed=4)
    assert a.cost == b.cost and a.script == b.script


def test_well_formed_input_costs_nothing():
    p = ParenString((1, 2, -2, -1, 3, -3), 3)
    assert repair_random(p).cost == 0


def test_deleted_indices_are_sorted_and_typed():
    tr = run(parse_compact("))(("), 0)
    assert tr.deleted_indices().tolist() == [1, 2, 3, 4]
    assert np.all(np.diff(tr.deleted_indices()) > 0)
