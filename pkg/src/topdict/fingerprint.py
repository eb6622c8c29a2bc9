"""Karp-Rabin fingerprints modulo the Mersenne prime 2**61 - 1."""
from __future__ import annotations

import random
import threading
from dataclasses import dataclass

MERSENNE_61 = (1 << 61) - 1


class FingerprintError(ValueError):
    pass


@dataclass(frozen=True)
class Fp:
    value: int
    len: int


class FingerprintContext:
    """Fingerprint parameters plus an append-only cache of base powers.

    Symbol code ``x`` contributes ``(x + 1) * c**i`` so that the zero symbol is
    not invisible to the hash.
    """

    def __init__(self, seed: int = 0, p: int = MERSENNE_61, c: int | None = None):
        self.seed = seed
        self.p = p
        if c is None:
            c = random.Random(seed).randrange(2, p - 1)
        if not 2 <= c <= p - 2:
            raise FingerprintError("base must lie in [2, p-2]")
        self.c = c
        self._powers = [1, c]
        self._lock = threading.Lock()

    def power(self, k: int) -> int:
        pw = self._powers
        if k < len(pw):
            return pw[k]
        with self._lock:
            pw = self._powers
            if k >= len(pw):
                grown = list(pw)
                c, p = self.c, self.p
                x = grown[-1]
                while len(grown) <= k:
                    x = x * c % p
                    grown.append(x)
                # publish the longer list in one assignment
                self._powers = grown
                pw = grown
        return pw[k]

    def prefix_values(self, s) -> list:
        """Fingerprint values of all prefixes of ``s`` (``out[k]`` covers ``s[:k]``)."""
        self.power(len(s))
        pw = self._powers
        p = self.p
        out = [0] * (len(s) + 1)
        acc = 0
        for i, x in enumerate(s):
            acc = (acc + (x + 1) * pw[i + 1]) % p
            out[i + 1] = acc
        return out


def fp_of(ctx: FingerprintContext, s) -> Fp:
    return Fp(ctx.prefix_values(s)[-1], len(s))


def fp_compose(ctx: FingerprintContext, prefix: Fp, suffix: Fp) -> Fp:
    v = (prefix.value + ctx.power(prefix.len) * suffix.value) % ctx.p
    return Fp(v, prefix.len + suffix.len)


def fp_subtract_prefix(ctx: FingerprintContext, whole: Fp, prefix: Fp) -> Fp:
    """Given phi(yz) and phi(y), return phi(z)."""
    if prefix.len > whole.len:
        raise FingerprintError("prefix longer than the whole string")
    p = ctx.p
    inv = pow(ctx.power(prefix.len), -1, p)
    return Fp((whole.value - prefix.value) * inv % p, whole.len - prefix.len)


def fp_subtract_suffix(ctx: FingerprintContext, whole: Fp, suffix: Fp) -> Fp:
    """Given phi(yz) and phi(z), return phi(y)."""
    if suffix.len > whole.len:
        raise FingerprintError("suffix longer than the whole string")
    k = whole.len - suffix.len
    return Fp((whole.value - ctx.power(k) * suffix.value) % ctx.p, k)
