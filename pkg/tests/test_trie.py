import random

import pytest
from hypothesis import given, strategies as st

from topdict.trie import (
    InputError, build_trie, oracle_count, oracle_longest_prefix, oracle_report,
    read_corpus, trie_dag_size, write_corpus,
)


def test_two_strings_share_first_edge():
    t = build_trie(["ab", "ac"])
    assert t.n_nodes == 4
    assert t.child_labels[0] == [ord("a")]
    a = t.child_ids[0][0]
    assert t.child_labels[a] == [ord("b"), ord("c")]
    assert [t.terminal[v] for v in range(4)] == [0, 0, 1, 1]


def test_single_string():
    t = build_trie(["a"])
    assert t.n_nodes == 2 and t.n_edges == 1
    assert t.terminal[1] == 1


def test_empty_string_marks_root():
    t = build_trie([(), (1,)])
    assert t.terminal[0] == 1
    assert oracle_count(t, ()) == 2


def test_symbol_out_of_range():
    with pytest.raises(InputError):
        build_trie([(0, 5)], sigma=3)
    with pytest.raises(InputError):
        build_trie([(1, -2)])


def test_node_count_matches_prefix_set():
    r = random.Random(1)
    strings = [tuple(r.randrange(3) for _ in range(r.randint(0, 9))) for _ in range(100)]
    prefixes = {s[:k] for s in strings for k in range(1, len(s) + 1)}
    assert build_trie(strings).n_nodes == 1 + len(prefixes)


def test_preorder_ids_and_sorted_children():
    r = random.Random(2)
    strings = [tuple(r.randrange(4) for _ in range(r.randint(1, 6))) for _ in range(50)]
    t = build_trie(strings)
    for v in range(t.n_nodes):
        assert t.child_labels[v] == sorted(t.child_labels[v])
        for w in t.child_ids[v]:
            assert w > v and t.parent[w] == v
    assert sorted(set(strings)) == t.strings()


def test_longest_prefix_examples():
    t = build_trie(["ab", "ac"])
    assert oracle_longest_prefix(t, "ac").matched_len == 2
    r = oracle_longest_prefix(t, "ad")
    assert (r.matched_len, r.is_prefix) == (1, False)
    assert oracle_count(t, "a") == 2
    assert oracle_count(t, "b") == 0
    assert oracle_report(t, "a") == [(ord("b"),), (ord("c"),)]


@given(st.lists(st.lists(st.integers(0, 3), max_size=6), max_size=20),
       st.lists(st.integers(0, 4), max_size=7))
def test_oracles_agree_with_scan(strings, pattern):
    strings = [tuple(s) for s in strings]
    t = build_trie(strings, sigma=5)
    p = tuple(pattern)
    best = max((k for s in strings for k in range(len(p) + 1) if s[:k] == p[:k]), default=0)
    r = oracle_longest_prefix(t, p)
    assert r.matched_len == best
    assert r.is_prefix == (best == len(p))
    hits = sorted({s for s in strings if s[:len(p)] == p})
    assert oracle_count(t, p) == len(hits)
    assert [p + s for s in oracle_report(t, p)] == hits


def test_trie_dag_size_of_path_is_linear():
    for n in (1, 7, 100):
        assert trie_dag_size(build_trie([(0,) * n])) == n + 1


def test_corpus_roundtrip(tmp_path):
    f = tmp_path / "c.txt"
    strings = [b"abc", b"", b"x\x00y"]
    write_corpus(f, strings)
    assert read_corpus(f) == [tuple(s) for s in strings]
    with pytest.raises(InputError):
        write_corpus(f, [(10,)])
