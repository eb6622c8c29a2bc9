"""Deterministic prefix search engines over the top DAG.

``logn_locate`` runs in ``O(m + log n)``: horizontal steps compare against the
rightmost label of the left child, vertical steps extract the spine character
by character with the stack walker and resume below the exit cluster.

``msigma_search`` runs in ``O(m log sigma)``: horizontal steps use the
horizontal access structure to jump straight to the cluster continuing with
the next character, vertical steps use the path-extraction spine cursor.
"""
from __future__ import annotations

import math

from .baseline import Finish, finish_at_bottom, push_chain
from .counters import OpCounters
from .horizontal import HorizontalIndex
from .topdag import TopDag
from .toptree import LEAF, VERT_A, is_horizontal, is_vertical
from .trie import LocusResult, to_symbols
from .vertical import VerticalIndex


def _empty(dag: TopDag, m: int):
    fin = Finish(-1, dag.root_terminal, None) if m == 0 else None
    return LocusResult(0, m == 0, -1), fin


def _walk_to_hentry(dag: TopDag, x: int, chain, oc: OpCounters):
    """Follow upper children down to the first horizontal or leaf cluster."""
    kind, left, right, jt = dag.kind, dag.left, dag.right, dag.joint_terminal
    while is_vertical(kind[x]):
        oc.clusters_visited += 1
        chain = push_chain(dag, chain, right[x], jt[x])
        x = left[x]
    return x, chain


def logn_locate(dag: TopDag, vi: VerticalIndex, pattern, counters: OpCounters | None = None):
    """Return ``(LocusResult, Finish or None)``."""
    p = to_symbols(pattern)
    m = len(p)
    oc = counters if counters is not None else OpCounters()
    if dag.root < 0:
        return _empty(dag, m)
    kind, left, right = dag.kind, dag.left, dag.right
    jt = dag.joint_terminal
    visit = oc.visit
    steps = oc.vertical_steps

    def step(chain, y):
        return push_chain(dag, chain, right[y], jt[y])

    x = dag.root
    i = 0
    chain = None
    tflag = dag.root_terminal
    while True:
        oc.clusters_visited += 1
        if visit is not None:
            visit(x, i)
        if i == m:
            return LocusResult(m, True, x), Finish(x, tflag, chain)
        k = kind[x]
        if k == LEAF:
            oc.char_comparisons += 1
            if p[i] != dag.label[x]:
                return LocusResult(i, False, x), None
            i += 1
            if i < m:
                return LocusResult(i, False, x), None
            if dag.has_bottom[x]:
                return LocusResult(m, True, x), finish_at_bottom(chain)
            return LocusResult(m, True, x), Finish(-1, 1, None)
        if is_horizontal(k):
            oc.char_comparisons += 1
            y = left[x] if p[i] <= dag.rightmost_label[left[x]] else right[x]
            if not dag.has_bottom[y]:
                chain = None
            x = y
            continue
        # vertical: test the first spine character before extracting more
        oc.char_comparisons += 1
        if p[i] != dag.first_label[x]:
            x, chain = _walk_to_hentry(dag, x, chain, oc)
            continue
        c = x
        cur = vi.open_stack(c, oc, chain, step)
        cur.next_char()
        l = 1
        while True:
            ch = cur.next_char()
            if ch is None or i + l == m:
                break
            oc.char_comparisons += 1
            if ch != p[i + l]:
                break
            l += 1
        if ch is None:
            if kind[c] == VERT_A:
                if i + l == m:
                    return LocusResult(m, True, c), finish_at_bottom(chain)
                return LocusResult(i + l, False, c), None
            e, chain_e = c, chain
        else:
            e, chain_e = cur.vexit, cur.vexit_payload
        if steps is not None:
            steps.append((l, dag.height_of[c], dag.height_of[e]))
        b = right[e]
        tflag = jt[e]
        chain = chain_e
        i += l
        if i == m:
            # pattern ends inside the spine, at the top of b
            return LocusResult(m, True, b), Finish(b, tflag, chain)
        if ch is None:
            # whole spine matched: nothing is known yet about b's first edge
            x = b
        else:
            x, chain = _walk_to_hentry(dag, b, chain, oc)


def logn_search(dag, vi, pattern, counters=None) -> LocusResult:
    return logn_locate(dag, vi, pattern, counters)[0]


def msigma_search(dag: TopDag, vi: VerticalIndex, hi: HorizontalIndex, pattern,
                  counters: OpCounters | None = None) -> LocusResult:
    p = to_symbols(pattern)
    m = len(p)
    oc = counters if counters is not None else OpCounters()
    if dag.root < 0:
        return _empty(dag, m)[0]
    kind, right = dag.kind, dag.right
    hentry = vi.hentry
    visit = oc.visit
    x = dag.root
    i = 0
    while True:
        oc.clusters_visited += 1
        if visit is not None:
            visit(x, i)
        if i == m:
            return LocusResult(m, True, x)
        k = kind[x]
        if k == LEAF:
            oc.char_comparisons += 1
            if p[i] != dag.label[x]:
                return LocusResult(i, False, x)
            i += 1
            return LocusResult(i, i == m, x)
        if is_horizontal(k):
            hit = hi.hexit(x, p[i], oc)
            if hit is None:
                return LocusResult(i, False, x)
            x = hit[1]
            continue
        oc.spine_extractions += 1
        cur = vi.open(x, oc)
        l = 0
        while True:
            ch = cur.next_char()
            if ch is None or i + l == m:
                break
            oc.char_comparisons += 1
            if ch != p[i + l]:
                break
            l += 1
        if ch is None:
            if kind[x] == VERT_A:
                return LocusResult(i + l, i + l == m, x)
            i += l
            x = right[x]
            continue
        if i + l == m:
            return LocusResult(m, True, x)
        if l == 0:
            x = hentry[x]
            continue
        i += l
        x = hentry[right[cur.vexit]]


def prefers_msigma(m: int, sigma: int, n: int) -> bool:
    lg_s = math.ceil(math.log2(sigma)) if sigma > 1 else 0
    lg_n = math.ceil(math.log2(n)) if n > 1 else 0
    return m * (1 + lg_s) < m + lg_n
