"""Plain trie over a set of symbol strings.

The trie is the uncompressed ground truth: every compressed engine in the
package is checked against the walks implemented here.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class InputError(ValueError):
    """Raised for malformed corpora or symbols outside the alphabet."""


Symbols = tuple  # tuple[int, ...]


def to_symbols(s) -> tuple:
    """Normalise bytes, str or an int sequence to a tuple of symbol codes."""
    if isinstance(s, tuple):
        return s
    if isinstance(s, (bytes, bytearray, memoryview)):
        return tuple(bytes(s))
    if isinstance(s, str):
        return tuple(ord(ch) for ch in s)
    return tuple(int(x) for x in s)


@dataclass(frozen=True)
class LocusResult:
    matched_len: int
    is_prefix: bool
    locus: int | None = None


@dataclass
class Trie:
    """Edge-labelled trie with nodes numbered in preorder.

    Children of a node are kept in two parallel lists sorted by label.
    """

    child_labels: list = field(default_factory=list)
    child_ids: list = field(default_factory=list)
    parent: list = field(default_factory=list)
    parent_label: list = field(default_factory=list)
    depth: list = field(default_factory=list)
    terminal: bytearray = field(default_factory=bytearray)
    subtree_terminals: list = field(default_factory=list)
    sigma: int = 1
    total_len: int = 0
    num_strings: int = 0

    root = 0

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    @property
    def n_edges(self) -> int:
        return len(self.parent) - 1

    def child(self, v: int, label: int) -> int:
        labels = self.child_labels[v]
        k = bisect_left(labels, label)
        if k < len(labels) and labels[k] == label:
            return self.child_ids[v][k]
        return -1

    def path_labels(self, v: int) -> tuple:
        out = []
        while v != 0:
            out.append(self.parent_label[v])
            v = self.parent[v]
        return tuple(reversed(out))

    def strings(self) -> list:
        """All stored strings in lexicographic order."""
        return [self.path_labels(v) for v in range(self.n_nodes) if self.terminal[v]]


def build_trie(strings: Iterable, sigma: int | None = None) -> Trie:
    words = sorted({to_symbols(s) for s in strings})
    top = 0
    total = 0
    for w in words:
        for x in w:
            if x < 0:
                raise InputError(f"negative symbol {x}")
            if x > top:
                top = x
    if sigma is None:
        sigma = top + 1 if words and any(words) else 1
    elif sigma < 1:
        raise InputError("alphabet size must be at least 1")
    elif words and any(words) and top >= sigma:
        raise InputError(f"symbol {top} outside alphabet of size {sigma}")

    t = Trie(sigma=sigma, num_strings=len(words))
    t.child_labels.append([])
    t.child_ids.append([])
    t.parent.append(-1)
    t.parent_label.append(-1)
    t.depth.append(0)
    t.terminal.append(0)

    # Sorted insertion yields preorder ids and label-sorted children for free.
    path = [0]
    prev: tuple = ()
    for w in words:
        total += len(w)
        lcp = 0
        limit = min(len(prev), len(w))
        while lcp < limit and prev[lcp] == w[lcp]:
            lcp += 1
        del path[lcp + 1:]
        for k in range(lcp, len(w)):
            u = path[-1]
            v = len(t.parent)
            t.child_labels.append([])
            t.child_ids.append([])
            t.parent.append(u)
            t.parent_label.append(w[k])
            t.depth.append(k + 1)
            t.terminal.append(0)
            t.child_labels[u].append(w[k])
            t.child_ids[u].append(v)
            path.append(v)
        t.terminal[path[len(w)]] = 1
        prev = w
    t.total_len = total

    sub = list(t.terminal)
    for v in range(len(t.parent) - 1, 0, -1):
        sub[t.parent[v]] += sub[v]
    t.subtree_terminals = sub
    return t


def oracle_longest_prefix(trie: Trie, pattern) -> LocusResult:
    p = to_symbols(pattern)
    v = 0
    i = 0
    while i < len(p):
        w = trie.child(v, p[i])
        if w < 0:
            break
        v = w
        i += 1
    return LocusResult(i, i == len(p), v)


def oracle_count(trie: Trie, pattern) -> int:
    r = oracle_longest_prefix(trie, pattern)
    if not r.is_prefix:
        return 0
    return trie.subtree_terminals[r.locus]


def oracle_report(trie: Trie, pattern) -> list:
    """Suffixes below the locus of ``pattern``, lexicographically ordered."""
    r = oracle_longest_prefix(trie, pattern)
    if not r.is_prefix:
        return []
    out = []
    stack = [(r.locus, ())]
    while stack:
        v, suffix = stack.pop()
        if trie.terminal[v]:
            out.append(suffix)
        labels = trie.child_labels[v]
        ids = trie.child_ids[v]
        for k in range(len(ids) - 1, -1, -1):
            stack.append((ids[k], suffix + (labels[k],)))
    return out


def trie_dag_size(trie: Trie) -> int:
    """Node count of the minimal DAG sharing identical complete subtrees."""
    ids: dict = {}
    canon = [0] * trie.n_nodes
    for v in range(trie.n_nodes - 1, -1, -1):
        sig = (trie.terminal[v],) + tuple(
            (lab, canon[c]) for lab, c in zip(trie.child_labels[v], trie.child_ids[v])
        )
        canon[v] = ids.setdefault(sig, len(ids))
    return len(ids)


def read_corpus(path) -> list:
    """One string per line; symbols are raw bytes and LF separates strings."""
    with open(path, "rb") as fh:
        data = fh.read()
    if not data:
        return []
    if data.endswith(b"\n"):
        data = data[:-1]
    return [tuple(line) for line in data.split(b"\n")]


def write_corpus(path, strings: Sequence) -> None:
    lines = []
    for s in strings:
        s = to_symbols(s)
        if any(x > 255 for x in s) or 10 in s:
            raise InputError("corpus text format holds byte symbols other than LF only")
        lines.append(bytes(s))
    with open(path, "wb") as fh:
        fh.write(b"".join(line + b"\n" for line in lines))
