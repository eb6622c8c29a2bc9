"""Monte-Carlo prefix search on the top DAG using spine fingerprints.

Also home of the counting and reporting machinery shared by every engine.
A search ends in a :class:`Finish` describing the locus: a cluster whose top
boundary is the locus and which holds every outgoing edge of it, plus the
chain of clusters hanging below that cluster's bottom boundary.
"""
from __future__ import annotations

from typing import NamedTuple, Optional

from .counters import OpCounters
from .fingerprint import FingerprintContext
from .topdag import TopDag
from .toptree import LEAF, VERT_A, VERT_B, is_horizontal
from .trie import LocusResult, to_symbols


class Finish(NamedTuple):
    cluster: int  # -1 when the locus has no outgoing edges
    top_terminal: int
    chain: Optional[tuple]  # (cluster, joint terminal, terminals below, next) cells


def push_chain(dag: TopDag, chain, cluster: int, jflag: int):
    below = chain[2] if chain is not None else 0
    return (cluster, jflag, jflag + dag.terminal_count[cluster] + below, chain)


def finish_at_bottom(chain) -> Finish:
    """Locus is the bottom boundary of the current cluster."""
    y, jflag, _, rest = chain
    return Finish(y, jflag, rest)


def count(dag: TopDag, fin: Optional[Finish]) -> int:
    if fin is None:
        return 0
    if fin.cluster < 0:
        return fin.top_terminal
    below = fin.chain[2] if fin.chain is not None else 0
    return fin.top_terminal + dag.terminal_count[fin.cluster] + below


def report(dag: TopDag, fin: Optional[Finish]) -> list:
    """Suffixes of the stored strings below the locus, in lexicographic order."""
    if fin is None:
        return []
    flags = [fin.top_terminal]
    if fin.cluster < 0:
        return [()] if fin.top_terminal else []
    kids: list = [[]]
    kind, left, right = dag.kind, dag.left, dag.right
    label, has_bottom, jt = dag.label, dag.has_bottom, dag.joint_terminal

    def unfold(x: int, t: int) -> int:
        """Append the trie edges of cluster ``x`` hanging from vertex ``t``.

        Returns the vertex made for the bottom boundary, or -1.
        """
        res: list = []
        todo = [(0, x, t)]
        while todo:
            op, x, t = todo.pop()
            if op == 1:
                # upper child of a vertical cluster done; lower one hangs off its bottom
                b = res.pop()
                flags[b] = jt[x]
                todo.append((0, right[x], b))
            elif op == 2:
                bb = res.pop()
                ba = res.pop()
                res.append(ba if ba >= 0 else bb)
            else:
                k = kind[x]
                if k == LEAF:
                    v = len(flags)
                    hb = has_bottom[x]
                    flags.append(0 if hb else 1)
                    kids.append([])
                    kids[t].append((label[x], v))
                    res.append(v if hb else -1)
                elif k == VERT_A or k == VERT_B:
                    todo.append((1, x, t))
                    todo.append((0, left[x], t))
                else:
                    todo.append((2, x, t))
                    todo.append((0, right[x], t))
                    todo.append((0, left[x], t))
        return res[0]

    b = unfold(fin.cluster, 0)
    chain = fin.chain
    while b >= 0 and chain is not None:
        y, jflag, _, chain = chain
        flags[b] = jflag
        b = unfold(y, b)

    # preorder walk with a shared label path; depth tells how much to keep
    out = []
    path: list = []
    stack = [(0, 0, -1)]
    while stack:
        v, depth, lab = stack.pop()
        del path[depth:]
        if lab >= 0:
            path.append(lab)
        if flags[v]:
            out.append(tuple(path))
        d = len(path)
        for lab2, w in reversed(kids[v]):
            stack.append((w, d, lab2))
    return out


def fp_locate(dag: TopDag, ctx: FingerprintContext, pattern, counters: OpCounters | None = None):
    """Run the fingerprint search; return ``(LocusResult, Finish or None)``."""
    p = to_symbols(pattern)
    m = len(p)
    oc = counters if counters is not None else OpCounters()
    visit = oc.visit
    if dag.root < 0:
        fin = Finish(-1, dag.root_terminal, None) if m == 0 else None
        return LocusResult(0, m == 0, -1), fin
    pre = ctx.prefix_values(p)
    mod = ctx.p
    kind, left, right = dag.kind, dag.left, dag.right
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
        a, b = left[x], right[x]
        if is_horizontal(k):
            oc.char_comparisons += 1
            y = a if p[i] <= dag.rightmost_label[a] else b
            if not dag.has_bottom[y]:
                chain = None
            x = y
            continue
        s = dag.spine_len[a]
        if s <= m - i:
            oc.char_comparisons += 1
            if (pre[i + s] - pre[i]) % mod == dag.fp[a] * ctx.power(i) % mod:
                i += s
                tflag = dag.joint_terminal[x]
                x = b
                continue
        chain = push_chain(dag, chain, b, dag.joint_terminal[x])
        x = a


def fp_search(dag: TopDag, ctx: FingerprintContext, pattern, counters: OpCounters | None = None) -> LocusResult:
    return fp_locate(dag, ctx, pattern, counters)[0]
