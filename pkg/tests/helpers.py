"""Brute-force references used across the test suite.

Kept deliberately naive: enumeration over index subsets, plain lists.
"""

from itertools import combinations

import numpy as np

from lcsapprox.seqcore import Sequence


def seq(text):
    """'a b a' or 'aba' -> Sequence of ids a=0, b=1, ...; digits map to themselves."""
    toks = text.split() if " " in text else list(text)
    return Sequence.fresh(int(t) if t.isdigit() else ord(t) - ord("a") for t in toks)


def brute_monotone(keys, increasing=True):
    """Lexicographically smallest index tuple of a longest strictly monotone
    subsequence, by enumeration."""
    for k in range(len(keys), 0, -1):
        for idx in combinations(range(len(keys)), k):
            vals = [keys[i] for i in idx]
            if increasing and all(a < b for a, b in zip(vals, vals[1:])):
                return idx
            if not increasing and all(a > b for a, b in zip(vals, vals[1:])):
                return idx
    return ()


def brute_chain_len(s, rank):
    """Longest strictly increasing run via value chains: the longest subset of
    ranked symbols, taken in rank order, that embeds in ``s``."""
    ranked = sorted(rank, key=rank.get)
    symbols = [c for c in s if c in rank]
    for k in range(len(ranked), 0, -1):
        for chain in combinations(ranked, k):
            it = iter(symbols)
            if all(c in it for c in chain):
                return k
    return 0


def brute_lcs(a, b):
    a, b = list(a), list(b)
    for k in range(min(len(a), len(b)), 0, -1):
        for idx in combinations(range(len(a)), k):
            it = iter(b)
            if all(a[i] in it for i in idx):
                return k
    return 0


class NaiveOcc:
    """Reference model: a plain array with element deletion."""

    def __init__(self, symbols, origin):
        self.sym = np.asarray(symbols, dtype=np.int64)
        self.org = np.asarray(origin, dtype=np.int64)

    def __len__(self):
        return len(self.sym)

    def occ(self, c):
        return np.flatnonzero(self.sym == c).tolist()

    def delete(self, i):
        if not 0 <= i < len(self.sym):
            raise IndexError(i)
        self.sym = np.delete(self.sym, i)
        self.org = np.delete(self.org, i)

    def materialize(self):
        return tuple(self.sym.tolist()), tuple(self.org.tolist())


def check_witness(w, x, y):
    """Assertion-style witness check independent of oracle.validate_witness."""
    assert len(w.symbols) == len(w.idx_x) == len(w.idx_y)
    xo = dict(zip(x.origin, x.symbols))
    yo = dict(zip(y.origin, y.symbols))
    assert list(w.idx_x) == sorted(set(w.idx_x))
    assert list(w.idx_y) == sorted(set(w.idx_y))
    for c, i, j in zip(w.symbols, w.idx_x, w.idx_y):
        assert xo[i] == c and yo[j] == c
