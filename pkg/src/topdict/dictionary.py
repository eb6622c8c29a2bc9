"""The queryable dictionary: top DAG plus derived search structures.

File layout (all integers unsigned LEB128; ids and labels that may be -1
are stored plus one)::

    b"TDIX" version n sigma n_T num_strings n_top_tree seed p c root+1
    root_terminal n_TD
    n_TD node records:
        kind left+1 right+1 label+1 has_bottom spine_len first_label+1
        rightmost_label+1 size terminal_count joint_terminal height fp

Vertical, horizontal, path extraction and level ancestor structures are
rebuilt on load.
"""
from __future__ import annotations

import io
from dataclasses import dataclass

from . import baseline
from .counters import OpCounters
from .fingerprint import FingerprintContext
from .horizontal import HorizontalIndex
from .query import logn_locate, msigma_search, prefers_msigma
from .topdag import TopDag, _spine_fp, compress
from .toptree import HORZ_C, HORZ_D, LEAF, VERT_A, build_top_tree, is_vertical
from .trie import build_trie, to_symbols
from .vertical import VerticalIndex

MAGIC = b"TDIX"
FORMAT_VERSION = 1
ENGINES = ("fingerprint", "logn", "msigma", "auto")


class FormatError(ValueError):
    pass


@dataclass
class Stats:
    n: int
    sigma: int
    n_trie: int
    num_strings: int
    n_top_tree: int
    n_td: int
    height: int


class Dictionary:
    def __init__(self, dag: TopDag, ctx: FingerprintContext, n: int, sigma: int,
                 n_trie: int, num_strings: int, n_top_tree: int = 0):
        self.dag = dag
        self.ctx = ctx
        self.n = n
        self.sigma = sigma
        self.n_trie = n_trie
        self.num_strings = num_strings
        self.n_top_tree = n_top_tree
        self.vi = VerticalIndex(dag)
        self.hi = HorizontalIndex(dag, self.vi)

    @classmethod
    def build(cls, strings, sigma: int | None = None, seed: int = 0) -> "Dictionary":
        trie = build_trie(strings, sigma)
        tt = build_top_tree(trie)
        ctx = FingerprintContext(seed)
        dag = compress(tt, ctx)
        return cls(dag, ctx, trie.total_len, trie.sigma, trie.n_nodes, trie.num_strings, len(tt))

    def stats(self) -> Stats:
        return Stats(self.n, self.sigma, self.n_trie, self.num_strings,
                     self.n_top_tree, self.dag.n_td, self.dag.height)

    # -- queries ------------------------------------------------------------

    def pick_engine(self, m: int) -> str:
        return "msigma" if prefers_msigma(m, self.sigma, self.n) else "logn"

    def search(self, pattern, engine: str = "auto", counters: OpCounters | None = None):
        p = to_symbols(pattern)
        if engine == "auto":
            engine = self.pick_engine(len(p))
        if engine == "fingerprint":
            return baseline.fp_locate(self.dag, self.ctx, p, counters)[0]
        if engine == "logn":
            return logn_locate(self.dag, self.vi, p, counters)[0]
        if engine == "msigma":
            return msigma_search(self.dag, self.vi, self.hi, p, counters)
        raise ValueError(f"unknown engine {engine!r}")

    def locate(self, pattern, engine: str = "auto", counters: OpCounters | None = None):
        """``(LocusResult, Finish or None)``; the finish drives count and report.

        The horizontal-access engine does not track the clusters hanging below
        the locus, so its finish comes from a second, uncounted logn run.
        """
        p = to_symbols(pattern)
        if engine == "auto":
            engine = self.pick_engine(len(p))
        if engine == "fingerprint":
            return baseline.fp_locate(self.dag, self.ctx, p, counters)
        if engine == "logn":
            return logn_locate(self.dag, self.vi, p, counters)
        res = self.search(p, engine, counters)
        if not res.is_prefix:
            return res, None
        return res, logn_locate(self.dag, self.vi, p)[1]

    def count(self, pattern, engine: str = "auto", counters=None) -> int:
        return baseline.count(self.dag, self.locate(pattern, engine, counters)[1])

    def report(self, pattern, engine: str = "auto", counters=None) -> list:
        p = to_symbols(pattern)
        suffixes = baseline.report(self.dag, self.locate(p, engine, counters)[1])
        return [p + s for s in suffixes]

    # -- persistence --------------------------------------------------------

    def to_bytes(self) -> bytes:
        out = io.BytesIO()
        out.write(MAGIC)
        d = self.dag
        head = [FORMAT_VERSION, self.n, self.sigma, self.n_trie, self.num_strings,
                self.n_top_tree, self.ctx.seed, self.ctx.p, self.ctx.c, d.root + 1, d.root_terminal, len(d)]
        for v in head:
            _put(out, v)
        for x in range(len(d)):
            for v in (d.kind[x], d.left[x] + 1, d.right[x] + 1, d.label[x] + 1,
                      int(d.has_bottom[x]), d.spine_len[x], d.first_label[x] + 1,
                      d.rightmost_label[x] + 1, d.size[x], d.terminal_count[x],
                      d.joint_terminal[x], d.height_of[x], d.fp[x]):
                _put(out, v)
        return out.getvalue()

    @classmethod
    def from_bytes(cls, data: bytes) -> "Dictionary":
        if data[:4] != MAGIC:
            raise FormatError("not a dictionary file (bad magic)")
        r = _Reader(data, 4)
        version = r.get()
        if version != FORMAT_VERSION:
            raise FormatError(f"unsupported format version {version}")
        n, sigma, n_trie, num_strings, n_tt, seed, p, c, root, root_terminal, n_td = (r.get() for _ in range(11))
        ctx = FingerprintContext(seed, p, c)
        d = TopDag(root=root - 1, root_terminal=root_terminal)
        minlab: list = []
        for x in range(n_td):
            vals = [r.get() for _ in range(13)]
            if vals[0] > 5:
                raise FormatError(f"node {x} has unknown kind {vals[0]}")
            d.kind.append(vals[0])
            d.left.append(vals[1] - 1)
            d.right.append(vals[2] - 1)
            d.label.append(vals[3] - 1)
            d.has_bottom.append(bool(vals[4]))
            d.spine_len.append(vals[5])
            d.first_label.append(vals[6] - 1)
            d.rightmost_label.append(vals[7] - 1)
            d.size.append(vals[8])
            d.terminal_count.append(vals[9])
            d.joint_terminal.append(vals[10])
            d.height_of.append(vals[11])
            d.fp.append(vals[12])
            for ch in (d.left[x], d.right[x]):
                if ch >= x:
                    raise FormatError(f"node {x} refers forward to {ch}")
            _check_node(d, x, minlab)
            if _spine_fp(d, ctx, x) != d.fp[x]:
                raise FormatError(f"node {x} has an inconsistent fingerprint")
        if r.pos != len(data):
            raise FormatError("trailing bytes after node table")
        if not -1 <= d.root < n_td or (n_td and d.root < 0):
            raise FormatError("root id out of range")
        if root_terminal > 1 or (d.root >= 0 and d.has_bottom[d.root]):
            raise FormatError("root cluster is malformed")
        return cls(d, ctx, n, sigma, n_trie, num_strings, n_tt)

    def save(self, path) -> None:
        with open(path, "wb") as f:
            f.write(self.to_bytes())

    @classmethod
    def load(cls, path) -> "Dictionary":
        with open(path, "rb") as f:
            return cls.from_bytes(f.read())


def _check_node(d: TopDag, x: int, minlab: list) -> None:
    """Recompute the derived fields of node ``x`` from its children."""
    k, a, b = d.kind[x], d.left[x], d.right[x]
    hb = d.has_bottom[x]
    if k == LEAF:
        lab = d.label[x]
        want = (-1, -1, lab, 1 if hb else 0, lab if hb else -1, lab, 1, 0 if hb else 1, 0, 0)
        ok = lab >= 0
        minlab.append(lab)
    else:
        ok = a >= 0 and b >= 0 and d.label[x] == -1 and d.joint_terminal[x] <= 1
        if not ok:
            raise FormatError(f"node {x} is malformed")
        jt = d.joint_terminal[x]
        if is_vertical(k):
            ok = d.has_bottom[a] and d.has_bottom[b] == (k == VERT_A) and hb == d.has_bottom[b]
            sl = d.spine_len[a] + (d.spine_len[b] if k == VERT_A else 0)
            first, right_lab = d.first_label[a], d.rightmost_label[a]
            tc = d.terminal_count[a] + d.terminal_count[b] + jt
        else:
            ok = jt == 0 and d.rightmost_label[a] < minlab[b]
            if k == HORZ_C:
                ok = ok and d.has_bottom[a] and not d.has_bottom[b] and hb
                sl, first = d.spine_len[a], d.first_label[a]
            elif k == HORZ_D:
                ok = ok and d.has_bottom[b] and not d.has_bottom[a] and hb
                sl, first = d.spine_len[b], d.first_label[b]
            else:
                ok = ok and not (d.has_bottom[a] or d.has_bottom[b] or hb)
                sl, first = 0, -1
            right_lab = d.rightmost_label[b]
            tc = d.terminal_count[a] + d.terminal_count[b]
        want = (a, b, -1, sl, first, right_lab, d.size[a] + d.size[b], tc, jt,
                1 + max(d.height_of[a], d.height_of[b]))
        minlab.append(minlab[a])
    got = (a, b, d.label[x], d.spine_len[x], d.first_label[x], d.rightmost_label[x],
           d.size[x], d.terminal_count[x], d.joint_terminal[x], d.height_of[x])
    if not ok or got != want:
        raise FormatError(f"node {x} is inconsistent with its children")


def _put(out, v: int) -> None:
    if v < 0:
        raise ValueError("negative value in varint field")
    while True:
        b = v & 0x7F
        v >>= 7
        if v:
            out.write(bytes((b | 0x80,)))
        else:
            out.write(bytes((b,)))
            return


class _Reader:
    def __init__(self, data: bytes, pos: int):
        self.data = data
        self.pos = pos

    def get(self) -> int:
        v = 0
        shift = 0
        data = self.data
        while True:
            if self.pos >= len(data):
                raise FormatError("truncated file")
            b = data[self.pos]
            self.pos += 1
            v |= (b & 0x7F) << shift
            if b < 0x80:
                return v
            shift += 7
