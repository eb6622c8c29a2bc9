"""Corpus generators, pattern batteries and measurement helpers.

Generators use symbols ``1..sigma`` mapped to codes ``0..sigma-1``; the pad
symbol of the padded parity family is code 0.
"""
from __future__ import annotations

import itertools
import math
import random
import time

from .counters import OpCounters
from .trie import InputError

MAX_ENUMERATION = 10**6


def gen_parity(sigma: int, m: int) -> list:
    """All length-``m`` strings whose symbol values (1..sigma) sum to an even number."""
    if sigma < 2 or m < 1:
        raise InputError("need sigma >= 2 and m >= 1")
    if sigma**m > MAX_ENUMERATION:
        raise InputError(f"sigma**m = {sigma**m} exceeds the enumeration limit")
    out = []
    for s in itertools.product(range(sigma), repeat=m):
        # code c stands for symbol c + 1
        if (sum(s) + m) % 2 == 0:
            out.append(s)
    return out


def padded_parity_level(sigma: int, m: int, n: int) -> int:
    """Largest ``l < m`` with ``n >= m * sigma**l``; at least one pad symbol remains."""
    l = 0
    while l < m - 1 and n >= m * sigma ** (l + 1):
        l += 1
    return l


def gen_padded_parity(sigma: int, m: int, n: int) -> list:
    l = padded_parity_level(sigma, m, n)
    if l < 1:
        raise InputError("n must be at least m * sigma")
    pad = (0,) * (m - l)
    return [s + pad for s in gen_parity(sigma, l)]


def gen_random(n: int, sigma: int, k: int, seed: int = 0) -> list:
    """``k`` random strings with total length ``n`` (split at random points)."""
    if k < 1 or n < 0 or sigma < 1:
        raise InputError("need k >= 1, n >= 0, sigma >= 1")
    rng = random.Random(seed)
    cuts = sorted(rng.randint(0, n) for _ in range(k - 1))
    bounds = [0] + cuts + [n]
    return [tuple(rng.randrange(sigma) for _ in range(bounds[j + 1] - bounds[j]))
            for j in range(k)]


def gen_unary(n: int) -> list:
    return [(0,) * n]


def gen_repetitive(n: int, period: int, seed: int = 0, sigma: int = 4,
                   min_len: int = 8, max_len: int = 64) -> list:
    """Consecutive pieces of a periodic text of length ``n``."""
    if period < 1:
        raise InputError("period must be positive")
    rng = random.Random(seed)
    base = [rng.randrange(sigma) for _ in range(period)]
    out = []
    pos = 0
    while pos < n:
        ln = min(rng.randint(min_len, max_len), n - pos)
        out.append(tuple(base[(pos + j) % period] for j in range(ln)))
        pos += ln
    return out


def make_patterns(strings, sigma: int, count: int, seed: int = 0, max_len: int = 24,
                  prefix_cap: int | None = None) -> list:
    """Mix of random strings, true prefixes and one-symbol perturbations of prefixes.

    ``prefix_cap`` bounds the length of the prefixes taken from the corpus.
    """
    rng = random.Random(seed)
    pool = sorted(set(strings))
    out = []
    for j in range(count):
        kind = j % 3
        if kind and pool:
            s = list(rng.choice(pool))
            top = len(s) if prefix_cap is None else min(len(s), prefix_cap)
            s = s[: rng.randint(0, top)]
            if kind == 2 and s:
                s[rng.randrange(len(s))] = rng.randrange(sigma + 1)
        else:
            s = [rng.randrange(max(sigma, 1)) for _ in range(rng.randint(0, max_len))]
        out.append(tuple(s))
    return out


def log2(x: float) -> float:
    return math.log2(x) if x > 1 else 0.0


def measure(dictionary, patterns, engines=("fingerprint", "logn", "msigma", "auto"), timing=False):
    """One row per (pattern, engine) with counters and optional wall time."""
    rows = []
    for p in patterns:
        for eng in engines:
            oc = OpCounters()
            t0 = time.perf_counter_ns() if timing else 0
            res = dictionary.search(p, eng, oc)
            dt = time.perf_counter_ns() - t0 if timing else 0
            rows.append({
                "pattern_len": len(p),
                "engine": eng,
                "matched_len": res.matched_len,
                "is_prefix": res.is_prefix,
                "comparisons": oc.char_comparisons,
                "clusters_visited": oc.clusters_visited,
                "nanoseconds": dt,
                **{k: v for k, v in oc.as_dict().items() if k not in ("char_comparisons", "clusters_visited")},
            })
    return rows
