"""Top DAG: the top tree with identical subtrees stored once."""
from __future__ import annotations

from dataclasses import dataclass, field

from .fingerprint import FingerprintContext
from .toptree import HORZ_C, HORZ_D, LEAF, VERT_A, VERT_B, TopTree, is_vertical


class ConsistencyError(RuntimeError):
    pass


AUG_FIELDS = (
    "spine_len",
    "first_label",
    "rightmost_label",
    "size",
    "terminal_count",
    "joint_terminal",
    "height_of",
)


@dataclass
class TopDag:
    kind: list = field(default_factory=list)
    left: list = field(default_factory=list)
    right: list = field(default_factory=list)
    label: list = field(default_factory=list)
    has_bottom: list = field(default_factory=list)
    spine_len: list = field(default_factory=list)
    first_label: list = field(default_factory=list)
    rightmost_label: list = field(default_factory=list)
    size: list = field(default_factory=list)
    terminal_count: list = field(default_factory=list)
    joint_terminal: list = field(default_factory=list)
    height_of: list = field(default_factory=list)
    fp: list = field(default_factory=list)
    root: int = -1
    root_terminal: int = 0

    def __len__(self) -> int:
        return len(self.kind)

    @property
    def n_td(self) -> int:
        return len(self.kind)

    @property
    def height(self) -> int:
        return self.height_of[self.root] if self.root >= 0 else 0

    def signature(self, x: int) -> tuple:
        k = self.kind[x]
        if k == LEAF:
            return (LEAF, self.label[x], self.has_bottom[x])
        if is_vertical(k):
            return (k, self.joint_terminal[x], self.left[x], self.right[x])
        return (k, self.left[x], self.right[x])


def _spine_fp(dag: TopDag, ctx: FingerprintContext, x: int) -> int:
    k = dag.kind[x]
    if k == LEAF:
        return (dag.label[x] + 1) * ctx.c % ctx.p if dag.has_bottom[x] else 0
    a, b = dag.left[x], dag.right[x]
    if k == VERT_A:
        return (dag.fp[a] + ctx.power(dag.spine_len[a]) * dag.fp[b]) % ctx.p
    if k == VERT_B or k == HORZ_C:
        return dag.fp[a]
    if k == HORZ_D:
        return dag.fp[b]
    return 0


def compress(tt: TopTree, ctx: FingerprintContext, share: bool = True) -> TopDag:
    """Hash-cons the clusters of ``tt`` bottom-up.

    With ``share=False`` every cluster keeps its own node, which gives a DAG
    whose node ids equal top tree cluster ids (used for debugging walks).
    """
    dag = TopDag(root_terminal=tt.root_terminal)
    if tt.root < 0:
        return dag
    ids: dict = {}
    to_dag = [0] * len(tt)
    for c in range(len(tt)):
        k = tt.kind[c]
        if k == LEAF:
            a = b = -1
            sig = (LEAF, tt.label[c], tt.bottom[c] >= 0)
        else:
            a, b = to_dag[tt.left[c]], to_dag[tt.right[c]]
            if is_vertical(k):
                sig = (k, tt.joint_terminal[c], a, b)
            else:
                sig = (k, a, b)
        if share:
            x = ids.get(sig)
            if x is not None:
                for name in AUG_FIELDS:
                    if getattr(tt, name)[c] != getattr(dag, name)[x]:
                        raise ConsistencyError(
                            f"shared cluster {c} disagrees on {name}"
                        )
                to_dag[c] = x
                continue
        x = len(dag.kind)
        if share:
            ids[sig] = x
        to_dag[c] = x
        dag.kind.append(k)
        dag.left.append(a)
        dag.right.append(b)
        dag.label.append(tt.label[c])
        dag.has_bottom.append(tt.bottom[c] >= 0)
        for name in AUG_FIELDS:
            getattr(dag, name).append(getattr(tt, name)[c])
        dag.fp.append(_spine_fp(dag, ctx, x))
    dag.root = to_dag[tt.root]
    return dag


def unfold_check(dag: TopDag, tt: TopTree) -> bool:
    """True iff unfolding ``dag`` from its root reproduces ``tt`` exactly."""
    if (dag.root < 0) != (tt.root < 0):
        return False
    if tt.root < 0:
        return True
    n = len(dag)
    stack = [(tt.root, dag.root)]
    while stack:
        c, x = stack.pop()
        if not 0 <= x < n:
            return False
        k = tt.kind[c]
        if dag.kind[x] != k or dag.has_bottom[x] != (tt.bottom[c] >= 0):
            return False
        if k == LEAF:
            if dag.label[x] != tt.label[c]:
                return False
            continue
        if is_vertical(k) and dag.joint_terminal[x] != tt.joint_terminal[c]:
            return False
        stack.append((tt.left[c], dag.left[x]))
        stack.append((tt.right[c], dag.right[x]))
    return True


def unfold(dag: TopDag) -> TopTree:
    """Expand the DAG back into a top tree (boundary node ids are not recovered)."""
    tt = TopTree(root_terminal=dag.root_terminal)
    if dag.root < 0:
        return tt
    stack = [(dag.root, False)]
    # post-order expansion; every occurrence gets a fresh cluster
    out_ids = []
    while stack:
        x, done = stack.pop()
        if done:
            k = dag.kind[x]
            if k == LEAF:
                c = tt._new(LEAF, -1, -1, -1, 0 if dag.has_bottom[x] else -1, dag.label[x])
            else:
                b = out_ids.pop()
                a = out_ids.pop()
                c = tt._new(k, a, b, -1, 0 if dag.has_bottom[x] else -1, -1)
            for name in AUG_FIELDS:
                getattr(tt, name).append(getattr(dag, name)[x])
            out_ids.append(c)
            continue
        stack.append((x, True))
        if dag.kind[x] != LEAF:
            stack.append((dag.right[x], False))
            stack.append((dag.left[x], False))
    tt.root = out_ids.pop()
    return tt
