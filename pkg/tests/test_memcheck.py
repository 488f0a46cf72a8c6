import random

import pytest

from dyckrepair.core import render_compact
from dyckrepair.errors import BadParams, MixedDecorations, NotFound, TranscriptSyntax
from dyckrepair.memcheck import (End, Language, OpKind, Transcript, TranscriptOp,
                                 brute_force_transcript_distance, dyck_cost_of_stack,
                                 gen_transcript, parse_transcript, render_transcript,
                                 repair, stack_to_dyck, validate)
from dyckrepair.rng import substream


def t(text, lang):
    return parse_transcript(text, lang)


@pytest.mark.parametrize("text,lang,ok", [
    ("I a\nI b\nE b\nE a\n", "stack", True),
    ("I a\nI b\nE b\n", "queue", False),
    ("I a\nI b\nE a\nE b\n", "queue", True),
    ("I a 5\nI b 2\nE b\nE a\n", "pq", True),
    ("I a 5\nI b 2\nE a\nE b\n", "pq", False),
    ("IH a\nIT b\nET b\nEH a\n", "deque", True),
    ("IH a\nIH b\nEH a\nEH b\n", "deque", False),
    ("", "stack", True),
    ("I a\n", "queue", False),
])
def test_validate(text, lang, ok):
    assert validate(t(text, lang)) is ok


def test_stack_to_dyck():
    p, keys = stack_to_dyck(t("I a\nI b\nE a\nE b\n", "stack"))
    assert render_compact(p) == "([)]" and keys == ("a", "b")
    p, _ = stack_to_dyck(t("I a\nE a\n", "stack"))
    assert render_compact(p) == "()" and p.alphabet_size == 1
    p, _ = stack_to_dyck(t("", "stack"))
    assert len(p) == 0


@pytest.mark.parametrize("text,lang,cost", [
    ("I a\nI b\nE b\nE a\n", "queue", 2),
    ("I a 1\nI b 2\nE b\nE a\n", "pq", 2),
    ("I a\nE b\n", "stack", 2),
    ("E a\n", "stack", 1),
    ("I a\nI b\nE a\nE b\n", "queue", 0),
])
def test_brute_force_examples(text, lang, cost):
    assert brute_force_transcript_distance(t(text, lang)) == cost


def test_brute_force_budget():
    with pytest.raises(NotFound):
        brute_force_transcript_distance(t("E a\nE a\nE a\n", "stack"), max_cost=2)


def test_repair_examples():
    res = repair(t("I a\nI b\nE b\nE a\n", "queue"))
    assert res.cost == 2 and validate(res.transcript)
    assert len(res.deleted) == 2
    assert repair(t("I a 1\nI b 2\nE b\nE a\n", "pq")).cost == 2
    for lang in ("stack", "queue", "deque"):
        for algo in ("random",):
            valid = gen_transcript(lang, 12, 0, substream(1))
            assert repair(valid, algo=algo).cost == 0


def test_round_trip():
    for lang in Language:
        tr = gen_transcript(lang, 20, 3, substream(5))
        assert parse_transcript(render_transcript(tr), lang) == tr


def test_generator_is_valid_without_edits():
    for lang in Language:
        for r in range(20):
            assert validate(gen_transcript(lang, 16, 0, substream(6, r)))


def test_syntax_errors():
    with pytest.raises(TranscriptSyntax):
        parse_transcript("I a 3\n", "stack")
    with pytest.raises(TranscriptSyntax):
        parse_transcript("I a x\n", "pq")
    with pytest.raises(TranscriptSyntax):
        parse_transcript("IX a\n", "deque")
    with pytest.raises(ValueError):
        parse_transcript("I a\n", "heap")


def test_mixed_decorations():
    with pytest.raises(MixedDecorations):
        Transcript((TranscriptOp(OpKind.INS, "a", priority=3),), Language.STACK)
    with pytest.raises(MixedDecorations):
        Transcript((TranscriptOp(OpKind.INS, "a", end=End.HEAD),), Language.QUEUE)
    with pytest.raises(MixedDecorations):
        Transcript((TranscriptOp(OpKind.INS, "a"),), Language.PQ)


def test_refined_needs_a_stack():
    with pytest.raises(BadParams):
        repair(t("I a\nE a\n", "queue"), algo="phased")


def test_fuzz_repairs_validate_and_respect_the_oracle():
    rng = random.Random(9)
    for _ in range(300):
        lang = rng.choice(list(Language))
        tr = gen_transcript(lang, 2 * rng.randint(0, 4), rng.randint(0, 3),
                            substream(rng.randrange(1 << 30)))
        algos = ["random", "refined", "phased"] if lang is Language.STACK else ["random"]
        for algo in algos:
            res = repair(tr, seed=rng.randrange(100), algo=algo, iterations=2)
            assert validate(res.transcript)
            if len(tr) <= 10:
                assert res.cost >= brute_force_transcript_distance(tr)


def test_stack_cost_equals_dyck_cost():
    for r in range(100):
        tr = gen_transcript("stack", 30, 4, substream(7, r))
        assert repair(tr, seed=r).cost == dyck_cost_of_stack(tr, seed=r)
