import math
import random

import pytest
from hypothesis import given, strategies as st

from topdict.counters import OpCounters
from topdict.grammar import GAP_SYMBOL, GappedGrammar, GrammarError, GrammarIndex


def random_grammar(r, rules, max_size, sigma=3):
    children, gaps, symbol, size = [], [], [], []
    for _ in range(r.randint(1, 4)):
        children.append([])
        gaps.append([])
        symbol.append(r.randint(1, sigma))
        size.append(1)
    while len(children) < rules:
        k = r.randint(1, 4)
        kids = [r.randrange(len(children)) for _ in range(k)]
        gp = [r.choice([0, 0, 1, r.randint(0, 50)]) for _ in range(k - 1)]
        sz = sum(size[c] for c in kids) + sum(gp)
        if sz > max_size:
            kids = [r.randrange(len(children))]
            gp = []
            sz = size[kids[0]]
        children.append(kids)
        gaps.append(gp)
        symbol.append(0)
        size.append(sz)
    # shuffle ids so the topological order is not the id order
    perm = list(range(len(children)))
    r.shuffle(perm)
    inv = {old: new for new, old in enumerate(perm)}
    return GappedGrammar(
        [[inv[c] for c in children[o]] for o in perm],
        [gaps[o] for o in perm],
        [symbol[o] for o in perm],
    )


def test_two_ones_with_gap():
    g = GappedGrammar([[], [], [0, 1]], [[], [], [2]], [1, 1, 0])
    assert g.expand(2) == [1, 0, 0, 1]
    gi = GrammarIndex(g)
    assert gi.access(2, 1) == 0
    assert gi.access(2, 3) == 1
    assert [gi.access(2, i) for i in range(4)] == [1, GAP_SYMBOL, GAP_SYMBOL, 1]


def test_terminal():
    gi = GrammarIndex(GappedGrammar([[]], [[]], [7]))
    assert gi.access(0, 0) == 7
    with pytest.raises(IndexError):
        gi.access(0, 1)


def test_errors():
    with pytest.raises(GrammarError):
        GappedGrammar([[1], [0]], [[], []], [0, 0])
    with pytest.raises(GrammarError):
        GappedGrammar([[], [0, 0]], [[], [-1]], [1, 0])
    with pytest.raises(GrammarError):
        GappedGrammar([[], [0, 0]], [[], []], [1, 0])


def test_left_chain_is_one_heavy_path():
    children, gaps, symbol = [[]], [[]], [1]
    for j in range(20):
        # previous rule on the left, a single terminal on the right
        children.append([len(children) - 1, 0])
        gaps.append([0])
        symbol.append(0)
    gi = GrammarIndex(GappedGrammar(children, gaps, symbol))
    assert all(gi.heavy[x] == x - 1 for x in range(2, 21))
    assert gi.term[20] == 0
    assert [gi.access(20, i) for i in range(21)] == [1] * 21


@given(st.integers(0, 10**6))
def test_access_matches_expansion(seed):
    r = random.Random(seed)
    g = random_grammar(r, r.randint(1, 60), 3000)
    gi = GrammarIndex(g)
    x = r.randrange(len(g))
    s = g.expand(x)
    assert len(s) == g.size[x]
    for i in r.sample(range(len(s)), min(len(s), 30)):
        assert gi.access(x, i) == s[i]


def test_comparisons_logarithmic():
    r = random.Random(2)
    worst = 0.0
    for _ in range(30):
        g = random_grammar(r, 300, 10**5)
        gi = GrammarIndex(g)
        for _ in range(50):
            x = r.randrange(len(g))
            i = r.randrange(g.size[x])
            oc = OpCounters()
            gi.access(x, i, oc)
            worst = max(worst, oc.char_comparisons / (1 + math.log2(g.size[x])))
    assert worst <= 8


def test_trace_ends_at_answer():
    g = GappedGrammar([[], [], [0, 1], [2, 0, 2]], [[], [], [3], [0, 1]], [1, 2, 0, 0])
    gi = GrammarIndex(g)
    s = g.expand(3)
    for i, ch in enumerate(s):
        trace = []
        assert gi.access(3, i, trace=trace) == ch
        top, z, slot = trace[-1]
        if slot is None:
            assert g.symbol[z] == ch and not g.children[z]
        else:
            assert slot == -1 and ch == GAP_SYMBOL
