"""Small corpus builders shared by the tests."""
import random

from topdict.fingerprint import FingerprintContext
from topdict.topdag import compress
from topdict.toptree import build_top_tree
from topdict.trie import build_trie


def dag_for(strings, sigma=None, seed=0):
    trie = build_trie(strings, sigma)
    tt = build_top_tree(trie)
    return trie, tt, compress(tt, FingerprintContext(seed))


def random_corpus(r: random.Random):
    """Small corpora from four shapes: random, unary, periodic, parity-like."""
    sig = r.choice([2, 3, 4, 26, 256])
    shape = r.randrange(4)
    if shape == 0:
        strings = [tuple(r.randrange(sig) for _ in range(r.randint(0, 14))) for _ in range(r.randint(0, 60))]
    elif shape == 1:
        strings = [(0,) * r.randint(0, 80) for _ in range(r.randint(1, 3))]
    elif shape == 2:
        base = [r.randrange(sig) for _ in range(r.randint(1, 5))]
        strings = [tuple((base * 50)[o:o + r.randint(0, 30)]) for o in range(r.randint(1, 20))]
    else:
        strings = [tuple(r.randrange(sig) for _ in range(6)) for _ in range(100)]
        strings = [s for s in strings if sum(s) % 2 == 0]
    return strings, sig
