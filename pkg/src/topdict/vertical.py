"""Vertical forest over the top DAG and spine extraction.

The vertical node of a cluster with a bottom boundary is found by stepping
through horizontal clusters into the child holding the first spine edge. A
vertical cluster's vertical children are the vertical nodes of its two
children (type a) or of its upper child only (type b). The leaves below a
node, left to right, are the spine edges top-down.

Two extractors walk this forest left to right:

* :class:`StackSpineCursor` keeps an explicit depth-first stack and costs
  ``O(l + height(C) - height(exit))`` for ``l`` characters.
* :class:`SpineCursor` replaces each leftmost descent by a path extraction
  stream over the forest of first vertical children, costing ``O(l)``.

After the ``l``-th character, ``vexit`` is the lowest common ancestor of
leaves ``l-1`` and ``l`` (the cluster itself for ``l = 1``).
"""
from __future__ import annotations

from .pathextract import PathExtractIndex
from .topdag import TopDag
from .toptree import HORZ_C, HORZ_D, LEAF, VERT_A, is_vertical


class VerticalIndex:
    def __init__(self, dag: TopDag):
        self.dag = dag
        n = len(dag)
        kind, left, right, hb = dag.kind, dag.left, dag.right, dag.has_bottom
        vnode = [-1] * n
        hentry = [-1] * n
        for x in range(n):
            k = kind[x]
            if is_vertical(k):
                vnode[x] = x
                hentry[x] = hentry[left[x]]
            else:
                hentry[x] = x
                if k == LEAF:
                    vnode[x] = x if hb[x] else -1
                elif hb[x]:
                    vnode[x] = vnode[left[x]] if k == HORZ_C else vnode[right[x]]
        self.vnode = vnode
        self.hentry = hentry
        # forest of first vertical children; its roots are spine leaves
        first = [-1] * n
        for x in range(n):
            if is_vertical(kind[x]):
                first[x] = vnode[left[x]]
        self.first_child = first
        self.paths = PathExtractIndex(first)

    def vchildren(self, x: int) -> tuple:
        dag = self.dag
        k = dag.kind[x]
        if k == LEAF:
            return ()
        if k == VERT_A:
            return (self.vnode[dag.left[x]], self.vnode[dag.right[x]])
        return (self.vnode[dag.left[x]],)

    def spine_leaves(self, c: int) -> list:
        """Reference unfolding of the leaves below ``c``."""
        out = []
        stack = [c]
        while stack:
            y = stack.pop()
            kids = self.vchildren(y)
            if not kids:
                out.append(y)
            stack.extend(reversed(kids))
        return out

    def vexit_oracle(self, c: int, l: int) -> int:
        """Lowest common ancestor of leaves ``l-1`` and ``l`` by direct descent."""
        if l <= 1:
            return c
        k = l - 1  # boundary after this many leaves
        y = c
        sl = self.dag.spine_len
        while True:
            kids = self.vchildren(y)
            if len(kids) == 2:
                nl = sl[self.dag.left[y]]
                if k == nl:
                    return y
                if k < nl:
                    y = kids[0]
                else:
                    y = kids[1]
                    k -= nl
            elif kids:
                y = kids[0]
            else:
                raise ValueError("leaf count out of range")

    def open(self, c: int, counters=None) -> "SpineCursor":
        return SpineCursor(self, c, counters)

    def open_stack(self, c: int, counters=None, payload=None, step=None) -> "StackSpineCursor":
        return StackSpineCursor(self, c, counters, payload, step)


class SpineCursor:
    """Left-to-right leaf walk using path extraction on first-child paths."""

    def __init__(self, vi: VerticalIndex, c: int, counters=None):
        if vi.vnode[c] != c and not is_vertical(vi.dag.kind[c]):
            raise ValueError(f"cluster {c} has no spine")
        self.vi = vi
        self.counters = counters
        self.count = 0
        self.vexit = c
        self.work = 0
        self._streams = [vi.paths.extract(c)]

    def next_char(self):
        """Next spine symbol, or ``None`` once the spine is exhausted."""
        vi = self.vi
        kind = vi.dag.kind
        streams = self._streams
        while streams:
            self.work += 1
            y = next(streams[-1], None)
            if y is None:
                streams.pop()
                continue
            k = kind[y]
            if k == LEAF:
                self.count += 1
                if self.counters is not None:
                    self.counters.spine_chars += 1
                return vi.dag.label[y]
            if k == VERT_A:
                # left subtree finished; the next leaf is the first one on the right
                self.vexit = y
                streams.append(vi.paths.extract(vi.vnode[vi.dag.right[y]]))
        return None


class StackSpineCursor:
    """Depth-first leaf walk with an explicit stack.

    ``payload`` travels with the walk: entering the upper child of a vertical
    cluster ``y`` replaces it with ``step(payload, y)``, entering the lower
    child keeps ``y``'s payload. ``vexit_payload`` is the payload held at
    ``vexit``.
    """

    def __init__(self, vi: VerticalIndex, c: int, counters=None, payload=None, step=None):
        if vi.vnode[c] != c and not is_vertical(vi.dag.kind[c]):
            raise ValueError(f"cluster {c} has no spine")
        self.vi = vi
        self.counters = counters
        self.step = step
        self.count = 0
        self.vexit = c
        self.vexit_payload = payload
        self.work = 0
        self._stack = [(c, payload, -1)]

    def _descend(self, x: int) -> int:
        """Walk from a cluster with a bottom boundary to its vertical node."""
        dag = self.vi.dag
        kind, left, right = dag.kind, dag.left, dag.right
        steps = 0
        while kind[x] >= HORZ_C:
            steps += 1
            x = left[x] if kind[x] == HORZ_C else right[x]
        if steps:
            self.work += steps
            if self.counters is not None:
                self.counters.clusters_visited += steps
        return x

    def next_char(self):
        dag = self.vi.dag
        kind, left, right = dag.kind, dag.left, dag.right
        stack = self._stack
        step = self.step
        oc = self.counters
        descend = self._descend
        work = 0
        while stack:
            work += 1
            y, pl, lca = stack.pop()
            if lca >= 0:
                self.vexit = lca
                self.vexit_payload = pl
            k = kind[y]
            if k == LEAF:
                self.work += work
                self.count += 1
                if oc is not None:
                    oc.clusters_visited += work
                    oc.spine_chars += 1
                return dag.label[y]
            upper_pl = step(pl, y) if step is not None else pl
            if k == VERT_A:
                r = right[y]
                stack.append((descend(r) if kind[r] >= HORZ_C else r, pl, y))
            a = left[y]
            stack.append((descend(a) if kind[a] >= HORZ_C else a, upper_pl, -1))
        self.work += work
        if oc is not None:
            oc.clusters_visited += work
        return None


def lcp_spine(vi: VerticalIndex, c: int, s, counters=None, fast: bool = True):
    """Longest common prefix of ``spine(c)`` and ``s``.

    Returns ``(l, vexit)`` where ``vexit`` is ``vexit(c, l + 1)`` after a
    mismatch or ``None`` when the spine was exhausted.
    """
    cur = SpineCursor(vi, c, counters) if fast else StackSpineCursor(vi, c, counters)
    l = 0
    while True:
        ch = cur.next_char()
        if ch is None:
            return l, None
        if l == len(s):
            return l, cur.vexit
        if counters is not None:
            counters.char_comparisons += 1
        if ch != s[l]:
            return l, cur.vexit
        l += 1
