"""Gapped grammars and logarithmic-time random access.

A rule ``X -> C1 g1 C2 ... g(k-1) Ck`` expands to
``S(C1) 0^g1 S(C2) ... S(Ck)``; terminal rules emit a single symbol. Access
follows heavy paths (child with the longest expansion, leftmost on ties).
Leaving a heavy path is located with one weighted level ancestor query on the
forest of heavy children, weighted by the length to the left (or right) of
the heavy child.
"""
from __future__ import annotations

from .wla import ContractedWla

GAP_SYMBOL = 0


class GrammarError(ValueError):
    pass


class GappedGrammar:
    def __init__(self, children: list, gaps: list, symbol: list):
        n = len(children)
        if len(gaps) != n or len(symbol) != n:
            raise GrammarError("children, gaps and symbol must have equal length")
        for x in range(n):
            kids = children[x]
            if kids and len(gaps[x]) != len(kids) - 1:
                raise GrammarError(f"rule {x} needs {len(kids) - 1} gaps")
            if any(g < 0 for g in gaps[x]):
                raise GrammarError(f"rule {x} has a negative gap")
            for c in kids:
                if not 0 <= c < n:
                    raise GrammarError(f"rule {x} refers to unknown rule {c}")
        self.children = children
        self.gaps = gaps
        self.symbol = symbol
        self.order = self._topo_order()
        size = [0] * n
        for x in self.order:
            kids = children[x]
            size[x] = sum(size[c] for c in kids) + sum(gaps[x]) if kids else 1
        self.size = size

    def __len__(self) -> int:
        return len(self.children)

    def _topo_order(self) -> list:
        """Children before parents; raises on cycles."""
        n = len(self.children)
        state = [0] * n  # 0 new, 1 open, 2 done
        order = []
        for s in range(n):
            if state[s]:
                continue
            stack = [(s, 0)]
            state[s] = 1
            while stack:
                x, j = stack[-1]
                kids = self.children[x]
                if j < len(kids):
                    stack[-1] = (x, j + 1)
                    c = kids[j]
                    if state[c] == 1:
                        raise GrammarError("grammar contains a cycle")
                    if state[c] == 0:
                        state[c] = 1
                        stack.append((c, 0))
                else:
                    state[x] = 2
                    order.append(x)
                    stack.pop()
        return order

    def expand(self, x: int) -> list:
        out = []
        stack = [x]
        while stack:
            y = stack.pop()
            if isinstance(y, tuple):
                out.extend([GAP_SYMBOL] * y[0])
                continue
            kids = self.children[y]
            if not kids:
                out.append(self.symbol[y])
                continue
            gaps = self.gaps[y]
            for j in range(len(kids) - 1, -1, -1):
                stack.append(kids[j])
                if j:
                    stack.append((gaps[j - 1],))
        return out


class GrammarIndex:
    """Random access structure over a :class:`GappedGrammar`."""

    def __init__(self, g: GappedGrammar):
        self.g = g
        n = len(g)
        size = g.size
        heavy = [-1] * n
        heavy_slot = [-1] * n
        starts = [None] * n
        wl = [0] * n
        wr = [0] * n
        for x in range(n):
            kids = g.children[x]
            if not kids:
                continue
            st = []
            pos = 0
            for j, c in enumerate(kids):
                st.append(pos)
                pos += size[c]
                if j < len(kids) - 1:
                    pos += g.gaps[x][j]
            starts[x] = st
            hj = 0
            for j in range(1, len(kids)):
                if size[kids[j]] > size[kids[hj]]:
                    hj = j
            h = kids[hj]
            heavy[x] = h
            heavy_slot[x] = hj
            wl[x] = st[hj]
            wr[x] = size[x] - st[hj] - size[h]
        term = [-1] * n
        for x in g.order:
            term[x] = x if heavy[x] < 0 else term[heavy[x]]
        self.heavy = heavy
        self.heavy_slot = heavy_slot
        self.starts = starts
        self.term = term
        self.left_forest = ContractedWla(heavy, wl)
        self.right_forest = ContractedWla(heavy, wr)
        self.dl = self.left_forest.d
        self.dr = self.right_forest.d

    @property
    def stored_size(self) -> int:
        return sum(len(k) for k in self.g.children) + len(self.g.children)

    def access(self, x: int, i: int, counters=None, trace: list | None = None) -> int:
        """``S(x)[i]``; gap positions give the gap symbol.

        When ``trace`` is a list it receives one ``(top, exit, slot)`` triple
        per heavy path segment: ``slot`` is the child index taken at ``exit``,
        ``-1`` for a gap and ``None`` when the segment ends at a terminal.
        """
        g = self.g
        if not 0 <= i < g.size[x]:
            raise IndexError(f"position {i} outside [0, {g.size[x]})")
        dl = self.dl
        while True:
            if counters is not None:
                counters.heavy_hops += 1
            off = dl[x] - i
            if off == 0:
                t = self.term[x]
                if trace is not None:
                    trace.append((x, t, None))
                return g.symbol[t]
            before = counters.wla_work if counters is not None else 0
            if off > 0:
                z = self.left_forest.query(x, off, counters)
            else:
                z = self.right_forest.query(x, -off, counters)
            if counters is not None:
                counters.char_comparisons += 1 + counters.wla_work - before
            i -= dl[x] - dl[z]
            kids = g.children[z]
            st = self.starts[z]
            slot = -1
            for j in range(len(kids)):
                if counters is not None:
                    counters.char_comparisons += 1
                if i < st[j]:
                    break
                if i < st[j] + g.size[kids[j]]:
                    slot = j
                    break
            if trace is not None:
                trace.append((x, z, slot))
            if slot < 0:
                return GAP_SYMBOL
            i -= st[slot]
            x = kids[slot]
