import itertools

import pytest

from topdict import harness
from topdict.trie import InputError


def test_parity_small():
    assert harness.gen_parity(2, 2) == [(0, 0), (1, 1)]
    assert harness.gen_parity(2, 1) == [(1,)]


def test_parity_matches_enumeration():
    for sigma, m in ((3, 3), (4, 3), (2, 7)):
        want = [s for s in itertools.product(range(sigma), repeat=m) if sum(c + 1 for c in s) % 2 == 0]
        got = harness.gen_parity(sigma, m)
        assert got == want
        assert len(got) >= sigma ** (m - 1) * (sigma // 2)


def test_parity_limits():
    with pytest.raises(InputError):
        harness.gen_parity(4, 11)
    with pytest.raises(InputError):
        harness.gen_parity(1, 3)


def test_padded_parity():
    assert harness.padded_parity_level(2, 4, 64) == 3
    strings = harness.gen_padded_parity(2, 4, 64)
    assert all(s[3:] == (0,) for s in strings)
    assert sum(map(len, strings)) <= 64
    assert sorted(s[:3] for s in strings) == harness.gen_parity(2, 3)
    with pytest.raises(InputError):
        harness.gen_padded_parity(2, 4, 7)


def test_unary_random_repetitive():
    assert harness.gen_unary(8) == [(0,) * 8]
    s = harness.gen_random(1000, 4, 17, seed=2)
    assert len(s) == 17 and sum(map(len, s)) == 1000
    assert harness.gen_random(1000, 4, 17, seed=2) == s
    rep = harness.gen_repetitive(5000, 7, seed=1)
    assert sum(map(len, rep)) == 5000
    assert harness.gen_repetitive(5000, 7, seed=1) == rep


def test_repetitive_compresses():
    from topdict.dictionary import Dictionary
    sizes = [Dictionary.build(harness.gen_repetitive(n, 11, seed=0), sigma=4).dag.n_td
             for n in (2**10, 2**13, 2**16)]
    # 64 times more text, far less than 64 times more nodes
    assert sizes[2] < 8 * sizes[0]


def test_make_patterns_mix():
    strings = harness.gen_random(400, 3, 20, seed=0)
    pats = harness.make_patterns(strings, 3, 90, seed=1, prefix_cap=5)
    assert len(pats) == 90
    pool = set(strings)
    prefixes = [p for j, p in enumerate(pats) if j % 3 == 1]
    assert all(any(s[:len(p)] == p for s in pool) for p in prefixes)
    assert all(len(p) <= 5 for j, p in enumerate(pats) if j % 3)


def test_measure_rows():
    from topdict.dictionary import Dictionary
    d = Dictionary.build(["ab", "ac"])
    rows = harness.measure(d, [b"a", b"x"], engines=("logn", "msigma"))
    assert [(r["pattern_len"], r["engine"]) for r in rows] == [(1, "logn"), (1, "msigma")] * 2
    assert all(r["nanoseconds"] == 0 for r in rows)
