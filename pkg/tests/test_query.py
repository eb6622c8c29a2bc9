import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_corpus
from topdict import harness
from topdict.baseline import count, fp_locate, report
from topdict.counters import OpCounters
from topdict.dictionary import ENGINES, Dictionary
from topdict.query import prefers_msigma
from topdict.trie import build_trie, oracle_count, oracle_longest_prefix


@pytest.fixture(scope="module")
def abac():
    return Dictionary.build(["ab", "ac"])


@pytest.mark.parametrize("engine", ENGINES)
def test_small_examples(abac, engine):
    r = abac.search("ac", engine)
    assert (r.matched_len, r.is_prefix) == (2, True)
    r = abac.search("ab", engine)
    assert (r.matched_len, r.is_prefix) == (2, True)
    r = abac.search("ad", engine)
    assert (r.matched_len, r.is_prefix) == (1, False)
    assert abac.count("a", engine) == 2
    assert abac.report("a", engine) == [tuple(b"ab"), tuple(b"ac")]
    assert abac.count("ab", engine) == 1
    assert abac.report("ab", engine) == [tuple(b"ab")]
    assert abac.count("b", engine) == 0
    assert abac.report("b", engine) == []
    assert abac.count("", engine) == 2


@pytest.mark.parametrize("engine", ENGINES)
def test_unary(engine):
    d = Dictionary.build([(0,) * 1024], sigma=2)
    for k in (0, 1, 2, 3, 255, 256, 257, 511, 1000, 1023, 1024):
        r = d.search((0,) * k, engine)
        assert (r.matched_len, r.is_prefix) == (k, True)
        assert d.count((0,) * k, engine) == 1
    r = d.search((0,) * 1025, engine)
    assert (r.matched_len, r.is_prefix) == (1024, False)
    r = d.search((0,) * 600 + (1,), engine)
    assert r.matched_len == 600 and not r.is_prefix


@pytest.mark.parametrize("engine", ENGINES)
def test_parity_members(engine):
    strings = harness.gen_parity(4, 8)
    d = Dictionary.build(strings, sigma=4)
    r = random.Random(0)
    for p in r.sample(strings, 200):
        res = d.search(p, engine)
        assert (res.matched_len, res.is_prefix) == (8, True)
        assert d.report(p, engine) == [p]


@pytest.mark.parametrize("engine", ENGINES)
def test_empty_dictionary(engine):
    d = Dictionary.build([])
    assert d.search((), engine).is_prefix
    r = d.search((1,), engine)
    assert (r.matched_len, r.is_prefix) == (0, False)
    assert d.count((), engine) == 0


def test_only_empty_string():
    d = Dictionary.build([()])
    assert d.count(()) == 1 and d.report(()) == [()]
    assert d.count((0,)) == 0


def test_dispatch_rule():
    assert prefers_msigma(4, 2, 2**20)
    assert not prefers_msigma(100, 256, 10**4)
    d = Dictionary.build(harness.gen_random(2**12, 2, 64, seed=1), sigma=2)
    assert d.pick_engine(4) == "msigma"
    assert d.pick_engine(40) == "logn"


def test_engines_agree_with_oracle():
    for seed in range(120):
        r = random.Random(seed)
        strings, sig = random_corpus(r)
        trie = build_trie(strings, sig)
        d = Dictionary.build(strings, sigma=sig)
        srt = sorted(set(strings))
        for p in harness.make_patterns(strings, sig, 40, seed=seed, max_len=12):
            o = oracle_longest_prefix(trie, p)
            hits = [s for s in srt if s[:len(p)] == p]
            for engine in ENGINES:
                res, fin = d.locate(p, engine)
                assert (res.matched_len, res.is_prefix) == (o.matched_len, o.is_prefix)
                assert count(d.dag, fin) == oracle_count(trie, p) == len(hits)
                assert [p + s for s in report(d.dag, fin)] == hits


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), max_size=8), max_size=25),
       st.lists(st.integers(0, 3), max_size=9))
def test_auto_equals_both(strings, pattern):
    d = Dictionary.build([tuple(s) for s in strings], sigma=4)
    p = tuple(pattern)
    a = d.search(p, "auto")
    assert a == d.search(p, d.pick_engine(len(p)))
    assert (a.matched_len, a.is_prefix) == (d.search(p, "logn").matched_len, d.search(p, "logn").is_prefix)
    m = d.search(p, "msigma")
    assert (a.matched_len, a.is_prefix) == (m.matched_len, m.is_prefix)


def test_fingerprint_counts_and_visit_hook():
    d = Dictionary.build(harness.gen_random(500, 4, 10, seed=3), sigma=4)
    seen = []
    oc = OpCounters(visit=lambda x, i: seen.append((x, i)))
    res, _ = fp_locate(d.dag, d.ctx, (1, 2, 3), oc)
    assert oc.clusters_visited == len(seen) > 0
    assert oc.char_comparisons >= res.matched_len


def test_vertical_steps_are_recorded():
    d = Dictionary.build([(0,) * 300], sigma=2)
    oc = OpCounters(vertical_steps=[])
    d.search((0,) * 200, "logn", oc)
    assert oc.vertical_steps
    assert sum(s[0] for s in oc.vertical_steps) <= 200
    oc.reset()
    assert oc.char_comparisons == 0 and oc.vertical_steps == []


def test_unknown_engine(abac):
    with pytest.raises(ValueError):
        abac.search("a", "bogus")
