"""Horizontal forest over the top DAG and the horizontal access operation.

The horizontal node for a child cluster is the child itself when it is
horizontal or a leaf, and its horizontal entry otherwise. The leaves below a
horizontal cluster are the edges leaving its top boundary, left to right.

Each horizontal node is also a rule of a gapped grammar over characteristic
vectors: a leaf expands to ``1`` and an internal node to
``S(left) 0^g S(right)`` with ``g = min(right) - max(left) - 1``, so
``S(C)[a - min(C)] == 1`` exactly when label ``a`` leaves the top boundary
inside ``C``.

``hexit(C, a)`` is the highest node under ``C`` from which the ``a`` leaf is
reached through spine children only. It is found on the random access path
by scanning heavy path segments bottom-up; inside a segment a weighted level
ancestor query on the forest of spine-edge components returns the lowest
non-spine edge.
"""
from __future__ import annotations

from .grammar import GappedGrammar, GrammarIndex
from .topdag import TopDag
from .toptree import HORZ_C, LEAF, is_horizontal, is_vertical
from .vertical import VerticalIndex
from .wla import WlaIndex


class HorizontalIndex:
    def __init__(self, dag: TopDag, vi: VerticalIndex):
        self.dag = dag
        n = len(dag)
        kind, left, right, hb = dag.kind, dag.left, dag.right, dag.has_bottom
        hid = [-1] * n
        nodes = []
        for x in range(n):
            if kind[x] == LEAF or is_horizontal(kind[x]):
                hid[x] = len(nodes)
                nodes.append(x)
        self.hid = hid
        self.nodes = nodes
        m = len(nodes)
        children = [[] for _ in range(m)]
        gaps = [[] for _ in range(m)]
        symbol = [0] * m
        minlab = [0] * m
        maxlab = [0] * m
        via = [None] * m
        spine_slot = [-1] * m
        for h, x in enumerate(nodes):
            if kind[x] == LEAF:
                symbol[h] = 1
                minlab[h] = maxlab[h] = dag.label[x]
                continue
            kids = []
            for a in (left[x], right[x]):
                kids.append(hid[vi.hentry[a]] if is_vertical(kind[a]) else hid[a])
            children[h] = kids
            via[h] = (left[x], right[x])
            minlab[h] = minlab[kids[0]]
            maxlab[h] = maxlab[kids[1]]
            gaps[h] = [minlab[kids[1]] - maxlab[kids[0]] - 1]
            if hb[x]:
                spine_slot[h] = 0 if kind[x] == HORZ_C else 1
        self.minlab = minlab
        self.maxlab = maxlab
        self.via = via
        self.spine_slot = spine_slot
        self.grammar = GappedGrammar(children, gaps, symbol)
        self.access_index = GrammarIndex(self.grammar)

        # ventry: descend spine children of horizontal clusters
        ventry = [-1] * n
        for x in range(n):
            k = kind[x]
            if k == LEAF or is_vertical(k):
                ventry[x] = x
            elif hb[x]:
                ventry[x] = ventry[left[x]] if k == HORZ_C else ventry[right[x]]
        self.ventry = ventry

        # components of heavy edges into spine children, as a weighted forest
        gi = self.access_index
        size = self.grammar.size
        comp = [-1] * m
        for h in self.grammar.order:
            c = gi.heavy[h]
            if c >= 0 and gi.heavy_slot[h] == spine_slot[h]:
                comp[h] = comp[c]
            else:
                comp[h] = h
        self.comp = comp
        roots = [h for h in range(m) if comp[h] == h]
        cid = {r: j for j, r in enumerate(roots)}
        cpar = []
        cw = []
        for r in roots:
            c = gi.heavy[r]
            if c < 0:
                cpar.append(-1)
                cw.append(0)
            else:
                p = comp[c]
                cpar.append(cid[p])
                cw.append(size[r] - size[p])
        self.comp_roots = roots
        self.comp_id = cid
        self.comp_forest = WlaIndex(cpar, cw)

    def marked(self, h: int, slot: int) -> bool:
        return slot != self.spine_slot[h]

    def hchildren(self, h: int) -> list:
        return self.grammar.children[h]

    def leaf_labels(self, x: int) -> list:
        """Labels of the leaves below DAG node ``x`` (reference unfolding)."""
        out = []
        stack = [self.hid[x]]
        g = self.grammar
        while stack:
            h = stack.pop()
            if not g.children[h]:
                out.append(self.minlab[h])
            else:
                stack.extend(reversed(g.children[h]))
        return out

    def hexit(self, c: int, a: int, counters=None):
        """``(exit cluster, continuation cluster)`` for label ``a`` below DAG node ``c``.

        The continuation is the highest vertical or leaf cluster whose first
        spine edge is the ``a`` edge; ``None`` when there is no such edge.
        """
        h = self.hid[c]
        if h < 0:
            raise ValueError(f"cluster {c} is not horizontal")
        if counters is not None:
            counters.horizontal_accesses += 1
            counters.char_comparisons += 2
        if a < self.minlab[h] or a > self.maxlab[h]:
            return None
        gi = self.access_index
        trace: list = []
        if gi.access(h, a - self.minlab[h], counters, trace) != 1:
            return None
        size = self.grammar.size
        comp = self.comp
        e = trace[-1][1]
        edge = None
        for j in range(len(trace) - 1, -1, -1):
            x, z, _ = trace[j]
            if comp[x] == comp[z]:
                e = x
            else:
                k = self.comp_forest.query(self.comp_id[comp[x]], size[z], counters)
                r = self.comp_roots[k]
                e = gi.heavy[r]
                edge = (r, gi.heavy_slot[r])
                break
            if j == 0:
                break
            _, p, slot = trace[j - 1]
            if self.marked(p, slot):
                edge = (p, slot)
                break
            e = p
        ex = self.nodes[e]
        if edge is None:
            return ex, self.ventry[c]
        p, slot = edge
        a_child = self.via[p][slot]
        if is_vertical(self.dag.kind[a_child]):
            return ex, a_child
        return ex, self.ventry[ex]

    # -- reference versions used by tests -----------------------------------

    def hexit_oracle(self, c: int, a: int):
        """Same answer computed by unfolding the horizontal tree below ``c``."""
        g = self.grammar
        path = []  # (node, slot taken)
        h = self.hid[c]
        while True:
            kids = g.children[h]
            if not kids:
                if self.minlab[h] != a:
                    return None
                break
            for j, k in enumerate(kids):
                if a in self._labels(k):
                    path.append((h, j))
                    h = k
                    break
            else:
                return None
        e = h
        edge = None
        for p, slot in reversed(path):
            if self.marked(p, slot):
                edge = (p, slot)
                break
            e = p
        ex = self.nodes[e]
        dag = self.dag
        # continuation: first vertical or leaf on the top tree path whose
        # first spine edge is the a edge
        x = c
        while True:
            k = dag.kind[x]
            if k == LEAF:
                cont = x
                break
            if is_vertical(k):
                if dag.first_label[x] == a:
                    cont = x
                    break
                x = dag.left[x]
                continue
            x = dag.left[x] if a <= dag.rightmost_label[dag.left[x]] else dag.right[x]
        return ex, cont

    def _labels(self, h: int) -> set:
        out = set()
        stack = [h]
        g = self.grammar
        while stack:
            y = stack.pop()
            if not g.children[y]:
                out.add(self.minlab[y])
            else:
                stack.extend(g.children[y])
        return out
