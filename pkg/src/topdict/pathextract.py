"""Root-to-node path extraction in constant time per reported node.

Nodes with depth <= height form the top part of each tree; every leaf of
the top part keeps its root path as an explicit list. A node below the top
part is served from a list through its nearest top-part ancestor while the
gap is filled by walking parent pointers onto a stack.
"""
from __future__ import annotations


class PathExtractIndex:
    def __init__(self, parent: list):
        n = len(parent)
        self.parent = parent
        kids = [[] for _ in range(n)]
        roots = []
        for v, u in enumerate(parent):
            if u < 0:
                roots.append(v)
            else:
                kids[u].append(v)
        depth = [0] * n
        order = []
        stack = list(reversed(roots))
        while stack:
            v = stack.pop()
            order.append(v)
            for w in reversed(kids[v]):
                depth[w] = depth[v] + 1
                stack.append(w)
        height = [0] * n
        for v in reversed(order):
            u = parent[v]
            if u >= 0 and height[v] + 1 > height[u]:
                height[u] = height[v] + 1
        in_top = [depth[v] <= height[v] for v in range(n)]

        self.depth = depth
        self.height = height
        self.in_top = in_top
        self.lists: dict = {}  # top-part leaf -> root path
        self.link = [-1] * n  # top node -> top leaf below; bottom node -> nearest top ancestor
        for v in order:
            if in_top[v]:
                if not any(in_top[w] for w in kids[v]):
                    path = []
                    u = v
                    while u >= 0:
                        path.append(u)
                        u = parent[u]
                    path.reverse()
                    self.lists[v] = path
            else:
                u = parent[v]
                self.link[v] = u if in_top[u] else self.link[u]
        for v in reversed(order):
            if in_top[v]:
                if v in self.lists:
                    self.link[v] = v
                else:
                    # leftmost child inside the top part
                    for w in kids[v]:
                        if in_top[w]:
                            self.link[v] = self.link[w]
                            break

    @property
    def stored_size(self) -> int:
        return sum(len(p) for p in self.lists.values())

    def extract(self, v: int) -> "PathStream":
        if not 0 <= v < len(self.parent):
            raise IndexError(f"unknown node {v}")
        return PathStream(self, v)


class PathStream:
    """Lazy top-down stream of the root-to-``v`` path."""

    __slots__ = ("_list", "_pos", "_target", "_walk", "_anchor", "_stack", "_parent", "work")

    def __init__(self, index: PathExtractIndex, v: int):
        self.work = 0
        self._pos = 0
        self._stack = []
        self._parent = index.parent
        if index.in_top[v]:
            self._list = index.lists[index.link[v]]
            self._target = v
            self._walk = -1
            self._anchor = -1
        else:
            u = index.link[v]
            self._list = index.lists[index.link[u]]
            self._target = u
            self._walk = v
            self._anchor = u

    def __iter__(self):
        return self

    def __next__(self) -> int:
        self.work += 1
        lst = self._list
        if lst is not None:
            node = lst[self._pos]
            self._pos += 1
            w = self._walk
            if w != self._anchor:
                # one parent step per listed node keeps the stack ahead
                self._stack.append(w)
                self._walk = self._parent[w]
            if node == self._target:
                self._list = None
                assert self._walk == self._anchor, "bottom gap longer than top path"
            return node
        if self._stack:
            return self._stack.pop()
        raise StopIteration
