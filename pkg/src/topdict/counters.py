from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional


@dataclass
class OpCounters:
    """Per-query operation counts.

    ``char_comparisons`` counts every test that inspects pattern-derived data
    against stored data: one unit per ``P[i] <= c`` style test, per equality
    test and per fingerprint comparison.
    """

    char_comparisons: int = 0
    clusters_visited: int = 0
    wla_queries: int = 0
    wla_work: int = 0
    spine_chars: int = 0
    heavy_hops: int = 0
    horizontal_accesses: int = 0
    spine_extractions: int = 0
    # debug hook called as visit(cluster, matched_len)
    visit: Optional[Callable] = field(default=None, repr=False, compare=False)
    # when a list, vertical steps append (chars, height(C), height(exit entry))
    vertical_steps: Optional[list] = field(default=None, repr=False, compare=False)

    COUNT_FIELDS = (
        "char_comparisons",
        "clusters_visited",
        "wla_queries",
        "wla_work",
        "spine_chars",
        "heavy_hops",
        "horizontal_accesses",
        "spine_extractions",
    )

    def reset(self) -> None:
        for name in self.COUNT_FIELDS:
            setattr(self, name, 0)
        if self.vertical_steps is not None:
            self.vertical_steps.clear()

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.COUNT_FIELDS}
