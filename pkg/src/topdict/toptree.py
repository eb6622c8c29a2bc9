"""Greedy round-based top tree construction over a trie.

Each round pairs adjacent sibling clusters (horizontal merges), then pairs
consecutive clusters along unary chains from the top down (vertical merges).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .trie import Trie

LEAF, VERT_A, VERT_B, HORZ_C, HORZ_D, HORZ_E = range(6)
KIND_NAMES = ("Leaf", "VerticalA", "VerticalB", "HorizC", "HorizD", "HorizE")


def is_vertical(kind: int) -> bool:
    return kind == VERT_A or kind == VERT_B


def is_horizontal(kind: int) -> bool:
    return kind >= HORZ_C


class ConstructionError(RuntimeError):
    pass


@dataclass
class TopTree:
    kind: list = field(default_factory=list)
    left: list = field(default_factory=list)
    right: list = field(default_factory=list)
    top: list = field(default_factory=list)
    bottom: list = field(default_factory=list)
    label: list = field(default_factory=list)
    spine_len: list = field(default_factory=list)
    first_label: list = field(default_factory=list)
    rightmost_label: list = field(default_factory=list)
    size: list = field(default_factory=list)
    terminal_count: list = field(default_factory=list)
    joint_terminal: list = field(default_factory=list)
    height_of: list = field(default_factory=list)
    root: int = -1
    rounds: list = field(default_factory=list)  # (clusters before, clusters after)
    root_terminal: int = 0

    def __len__(self) -> int:
        return len(self.kind)

    @property
    def height(self) -> int:
        return self.height_of[self.root] if self.root >= 0 else 0

    def _new(self, kind, left, right, top, bottom, label):
        c = len(self.kind)
        self.kind.append(kind)
        self.left.append(left)
        self.right.append(right)
        self.top.append(top)
        self.bottom.append(bottom)
        self.label.append(label)
        return c


def _leaf_augment(tt: TopTree, c: int, has_bottom: bool) -> None:
    lab = tt.label[c]
    tt.spine_len.append(1 if has_bottom else 0)
    tt.first_label.append(lab if has_bottom else -1)
    tt.rightmost_label.append(lab)
    tt.size.append(1)
    tt.terminal_count.append(0 if has_bottom else 1)
    tt.joint_terminal.append(0)
    tt.height_of.append(0)


def _merge(tt: TopTree, kind: int, a: int, b: int, jflag: int = 0) -> int:
    if is_vertical(kind):
        bottom = tt.bottom[b]
        sl = tt.spine_len[a] + (tt.spine_len[b] if kind == VERT_A else 0)
        first = tt.first_label[a]
        rightmost = tt.rightmost_label[a]
        tc = tt.terminal_count[a] + tt.terminal_count[b] + jflag
    else:
        if kind == HORZ_C:
            bottom, sl, first = tt.bottom[a], tt.spine_len[a], tt.first_label[a]
        elif kind == HORZ_D:
            bottom, sl, first = tt.bottom[b], tt.spine_len[b], tt.first_label[b]
        else:
            bottom, sl, first = -1, 0, -1
        rightmost = tt.rightmost_label[b]
        tc = tt.terminal_count[a] + tt.terminal_count[b]
    c = tt._new(kind, a, b, tt.top[a], bottom, -1)
    tt.spine_len.append(sl)
    tt.first_label.append(first)
    tt.rightmost_label.append(rightmost)
    tt.size.append(tt.size[a] + tt.size[b])
    tt.terminal_count.append(tc)
    tt.joint_terminal.append(jflag)
    tt.height_of.append(1 + max(tt.height_of[a], tt.height_of[b]))
    return c


def build_top_tree(trie: Trie) -> TopTree:
    tt = TopTree(root_terminal=trie.terminal[0])
    n = trie.n_nodes
    if n <= 1:
        return tt
    kids: dict = {}
    for v in range(1, n):
        u = trie.parent[v]
        has_bottom = bool(trie.child_ids[v])
        c = tt._new(LEAF, -1, -1, u, v if has_bottom else -1, trie.parent_label[v])
        _leaf_augment(tt, c, has_bottom)
    for u in range(n):
        ids = trie.child_ids[u]
        if ids:
            kids[u] = [v - 1 for v in ids]

    live = n - 1
    bottom = tt.bottom
    terminal = trie.terminal
    while live > 1:
        before = live
        # horizontal step
        for u, lst in kids.items():
            if len(lst) < 2:
                continue
            out = []
            j = 0
            k = len(lst)
            while j < k:
                if j + 1 < k:
                    a, b = lst[j], lst[j + 1]
                    ba, bb = bottom[a] >= 0, bottom[b] >= 0
                    if not (ba and bb):
                        kind = HORZ_C if ba else (HORZ_D if bb else HORZ_E)
                        out.append(_merge(tt, kind, a, b))
                        live -= 1
                        j += 2
                        continue
                out.append(lst[j])
                j += 1
            kids[u] = out
        # vertical step, top-down along the contracted tree
        order = []
        stack = [0]
        while stack:
            u = stack.pop()
            lst = kids.get(u)
            if not lst:
                continue
            for c in lst:
                order.append(c)
            for c in reversed(lst):
                if bottom[c] >= 0:
                    stack.append(bottom[c])
        used = set()
        replace = {}
        for c in order:
            if c in used:
                continue
            b = bottom[c]
            if b < 0:
                continue
            below = kids[b]
            if len(below) != 1 or below[0] in used:
                continue
            d = below[0]
            kind = VERT_A if bottom[d] >= 0 else VERT_B
            e = _merge(tt, kind, c, d, terminal[b])
            used.add(c)
            used.add(d)
            replace[c] = e
            del kids[b]
            live -= 1
        if replace:
            for u, lst in kids.items():
                kids[u] = [replace.get(c, c) for c in lst]
        tt.rounds.append((before, live))
        if before - live < before / 8:
            raise ConstructionError(
                f"round reduced clusters only from {before} to {live}"
            )
    (tt.root,) = kids[0]
    return tt


def children(tt, c: int) -> tuple:
    if tt.kind[c] == LEAF:
        return ()
    return (tt.left[c], tt.right[c])


def spine_of(tt, c: int) -> tuple:
    """Spine label string of cluster ``c`` by full decompression.

    Works on both top trees and top DAGs. Vertical type (b) clusters report
    the spine of their upper child.
    """
    if tt.kind[c] == LEAF:
        if tt.first_label[c] < 0:
            raise ValueError("cluster has no bottom boundary")
        return (tt.label[c],)
    if tt.kind[c] == HORZ_E:
        raise ValueError("cluster has no bottom boundary")
    out = []
    stack = [c]
    while stack:
        x = stack.pop()
        k = tt.kind[x]
        if k == LEAF:
            out.append(tt.label[x])
        elif k == VERT_A:
            stack.append(tt.right[x])
            stack.append(tt.left[x])
        elif k == VERT_B or k == HORZ_C:
            stack.append(tt.left[x])
        elif k == HORZ_D:
            stack.append(tt.right[x])
        else:
            raise ValueError("spine passes through a cluster without bottom boundary")
    return tuple(out)
