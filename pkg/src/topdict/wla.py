"""Weighted level ancestor queries in linear space.

Given a forest with positive integer edge weights and depths ``d`` (roots at
depth 0), ``query(u, x)`` returns the ancestor ``v`` of ``u`` with
``d(v) >= x > d(parent(v))``. Query work is proportional to
``1 + log(d(u) / (d(v) - d(parent(v))))``.

Nodes are first grouped into slices by ``floor(log2 d)``. Inside a slice a
recursive halving scheme stores at most one record per node: a node that
becomes a leaf of the lower half at some level keeps pointers to its highest
lower-half ancestor (``check``), to a leaf of the upper half below that
ancestor's parent (``top``) and to a leaf of the trimmed lower half below its
own parent (``bottom``). All pointers refer to original nodes, so queries
only compare absolute depths.
"""
from __future__ import annotations


class WlaError(ValueError):
    pass


class WlaIndex:
    def __init__(self, parent: list, weight: list):
        n = len(parent)
        self.parent = parent
        kids = [[] for _ in range(n)]
        roots = []
        for v, u in enumerate(parent):
            if u < 0:
                roots.append(v)
            else:
                w = weight[v]
                if not isinstance(w, int) or w < 1:
                    raise WlaError(f"edge weight of node {v} must be a positive integer, got {w!r}")
                kids[u].append(v)
        d = [0] * n
        order = []
        stack = list(reversed(roots))
        while stack:
            v = stack.pop()
            order.append(v)
            for c in reversed(kids[v]):
                d[c] = d[v] + weight[c]
                stack.append(c)
        if len(order) != n:
            raise WlaError("parent array contains a cycle")
        self.d = d
        self.slice_of = [(x.bit_length() - 1) if x > 0 else -1 for x in d]
        # query(u): leftmost deepest slice leaf below u; next(u): highest slice ancestor
        self.qleaf = [-1] * n
        self.next = [-1] * n
        self.check = [-1] * n
        self.top = [-1] * n
        self.bottom = [-1] * n
        self.links_stored = 0
        self._build_slices(order, kids)

    # -- construction -------------------------------------------------------

    def _build_slices(self, order, kids):
        parent, d, sl = self.parent, self.d, self.slice_of
        best = [0] * len(parent)  # depth of the deepest same-slice leaf below
        for v in reversed(order):
            if sl[v] < 0:
                continue
            q, bd = v, d[v]
            for c in kids[v]:
                if sl[c] == sl[v] and best[c] > bd:
                    q, bd = self.qleaf[c], best[c]
            self.qleaf[v] = q
            best[v] = bd
            self.links_stored += 1
        # group each slice's trees by the node they hang from
        groups: dict = {}
        for v in order:
            if sl[v] < 0:
                continue
            p = parent[v]
            if sl[p] == sl[v]:
                self.next[v] = self.next[p]
            else:
                self.next[v] = v
                groups.setdefault((p, sl[v]), []).append(v)
            self.links_stored += 1
        for (p, s), heads in groups.items():
            nodes = [p]
            stack = list(reversed(heads))
            while stack:
                v = stack.pop()
                nodes.append(v)
                for c in reversed(kids[v]):
                    if sl[c] == s:
                        stack.append(c)
            self._build_recursive(nodes, kids)

    def _build_recursive(self, nodes, kids):
        """``nodes`` is a preorder list whose first entry is the subtree root."""
        parent, d = self.parent, self.d
        work = [nodes]
        while work:
            nodes = work.pop()
            rho = nodes[0]
            base = d[rho]
            span = max(d[v] for v in nodes) - base
            if len(nodes) <= 2 or span <= 1:
                continue
            k = (span - 1).bit_length()  # span <= 2**k
            half = base + (1 << (k - 1))
            nchild = {}
            for v in nodes[1:]:
                p = parent[v]
                nchild[p] = nchild.get(p, 0) + 1
            upper = [v for v in nodes if d[v] <= half]
            lower = [v for v in nodes if d[v] > half]
            # leaf of upper part below each upper node (leftmost choice)
            uleaf = {}
            for v in reversed(upper):
                if v not in uleaf:
                    uleaf[v] = v
                if v != rho:
                    uleaf[parent[v]] = uleaf[v]
            chk = {}
            for v in lower:
                p = parent[v]
                chk[v] = v if d[p] <= half else chk[p]
            is_leaf = {v: nchild.get(v, 0) == 0 for v in lower}
            trimmed = [v for v in lower if not is_leaf[v]]
            tleaf = {}
            for v in reversed(trimmed):
                if v not in tleaf:
                    tleaf[v] = v
                c = chk[v]
                if v != c:
                    tleaf[parent[v]] = tleaf[v]
            for v in lower:
                if not is_leaf[v]:
                    continue
                c = chk[v]
                self.check[v] = c
                self.top[v] = uleaf[parent[c]]
                p = parent[v]
                self.bottom[v] = tleaf[p] if v != c else -1
                self.links_stored += 3
            work.append(upper)
            by_head: dict = {}
            for v in trimmed:
                by_head.setdefault(chk[v], []).append(v)
            for head, part in by_head.items():
                work.append(part)

    # -- queries ------------------------------------------------------------

    def query(self, u: int, x: int, counters=None) -> int:
        d, parent = self.d, self.parent
        if not 0 <= u < len(parent) or parent[u] < 0:
            raise WlaError("query node must be a non-root node")
        if not 1 <= x <= d[u]:
            raise WlaError(f"level {x} outside [1, {d[u]}]")
        work = 0
        while True:
            work += 1
            u = self.qleaf[u]
            nx = self.next[u]
            pn = parent[nx]
            if x <= d[pn]:
                u = pn
                continue
            if x <= d[nx]:
                v = nx
            else:
                v, w = self._inside(u, x)
                work += w
            break
        if counters is not None:
            counters.wla_queries += 1
            counters.wla_work += work
        return v

    def _inside(self, u: int, x: int):
        """Answer within one slice tree; ``u`` is a leaf there."""
        d, parent = self.d, self.parent
        work = 0
        while True:
            work += 1
            if x > d[parent[u]]:
                return u, work
            c = self.check[u]
            if c < 0:
                # base case: every node hangs directly below the subtree root
                return u, work
            if x <= d[parent[c]]:
                u = self.top[u]
                continue
            if x <= d[c]:
                return c, work
            u = self.bottom[u]


class ContractedWla:
    """Weighted level ancestors on a forest whose weights may be zero.

    Zero-weight edges are contracted; each group of nodes joined by them is
    represented by its member closest to the root, which is the node a query
    must return for any level that lands in the group.
    """

    def __init__(self, parent: list, weight: list):
        n = len(parent)
        for v in range(n):
            if parent[v] >= 0 and (not isinstance(weight[v], int) or weight[v] < 0):
                raise WlaError(f"edge weight of node {v} must be a non-negative integer")
        rep = [-1] * n
        for v in range(n):
            # resolve the representative by walking up, then compress the walk
            path = []
            u = v
            while rep[u] < 0 and parent[u] >= 0 and weight[u] == 0:
                path.append(u)
                u = parent[u]
            r = rep[u] if rep[u] >= 0 else u
            for w in path:
                rep[w] = r
            rep[u] = r
        gid = {}
        reps = []
        for v in range(n):
            if rep[v] == v:
                gid[v] = len(reps)
                reps.append(v)
        gpar = []
        gw = []
        for r in reps:
            p = parent[r]
            gpar.append(gid[rep[p]] if p >= 0 else -1)
            gw.append(weight[r] if p >= 0 else 0)
        self.rep = rep
        self.group = [gid[rep[v]] for v in range(n)]
        self.reps = reps
        self.index = WlaIndex(gpar, gw)
        self.d = [self.index.d[g] for g in self.group]

    def query(self, u: int, x: int, counters=None) -> int:
        if not 1 <= x <= self.d[u]:
            raise WlaError(f"level {x} outside [1, {self.d[u]}]")
        return self.reps[self.index.query(self.group[u], x, counters)]
