import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyckrepair.core import ParenString, apply_script, is_well_formed, parse_compact
from dyckrepair.errors import PolarityViolation
from dyckrepair.oracle import dyck_edit_dp
from dyckrepair.stredit import levenshtein, levenshtein_distance, match_runs


def reference(a, b):
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


@pytest.mark.parametrize("a,b,d", [("abc", "abc", 0), ("abc", "", 3), ("kitten", "sitting", 3),
                                   ("", "", 0), ("flaw", "lawn", 2)])
def test_examples(a, b, d):
    assert levenshtein_distance(a, b) == d
    assert levenshtein(a, b).cost == d


words = st.text(alphabet="abc", max_size=25)


@given(words, words, st.sampled_from([None, 1, 2, 5]))
def test_agrees_with_reference_and_band(a, b, band):
    assert levenshtein_distance(a, b, band=band) == reference(a, b)


@given(words, words)
def test_symmetry(a, b):
    assert levenshtein_distance(a, b) == levenshtein_distance(b, a)


@given(words, words)
def test_alignment_replays(a, b):
    ali = levenshtein(a, b)
    out = []
    cost = 0
    for kind, i, j in ali.steps:
        if kind in ("match", "sub"):
            out.append(b[j])
            cost += kind == "sub"
        elif kind == "del_b":
            out.append(b[j])
            cost += 1
        else:
            cost += 1
    assert "".join(out) == b and cost == ali.cost


class TestMatchRuns:
    def test_examples(self):
        assert match_runs([1, 2], [-2, -1]).cost == 0
        assert match_runs([1], []).cost == 1
        assert match_runs([1, 1], [-2, -2]).cost == 2

    def test_mixed_polarity(self):
        with pytest.raises(PolarityViolation):
            match_runs([1, -1], [-1])
        with pytest.raises(PolarityViolation):
            match_runs([1], [1])

    def test_cost_only_mode(self):
        assert match_runs([1, 2, 1], [-2, -2], want_repairs=False) == 2

    def test_equals_exact_distance_when_polarity_is_kept(self):
        rng = random.Random(4)
        for _ in range(500):
            s = rng.randint(1, 3)
            r = [rng.randint(1, s) for _ in range(rng.randint(0, 5))]
            t = [-rng.randint(1, s) for _ in range(rng.randint(0, 5))]
            p = ParenString(tuple(r + t), s)
            out = match_runs(r, t)
            assert out.cost == dyck_edit_dp(p, keep_polarity=True).cost == len(out.repairs.ops)
            assert dyck_edit_dp(p).cost <= out.cost
            fixed = apply_script(p, out.repairs)
            assert is_well_formed(fixed)

    def test_flipping_polarity_can_beat_string_edit_distance(self):
        # "]]" -> "[]" is one substitution; as runs it needs two deletions
        assert match_runs([], [-2, -2]).cost == 2
        assert dyck_edit_dp(parse_compact("]]")).cost == 1

    def test_substitution_changes_the_close_side(self):
        out = match_runs([1], [-2])
        (op,) = out.repairs.ops
        assert op.index == 2 and op.symbol == parse_compact(")").symbols[0]
