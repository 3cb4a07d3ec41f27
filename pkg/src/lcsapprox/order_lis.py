"""Total orders induced by repetition-free sequences, and exact LIS/LDS.

A repetition-free sequence ``pi`` orders its own symbols by position.  The
longest increasing (decreasing) subsequence of any sequence with respect to
that order is computed with patience sorting.  Symbols the order does not rank
are dropped before the computation.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence as Seq

from .errors import RepeatedSymbol
from .seqcore import EMPTY, Sequence

INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True)
class TotalOrder:
    rank: dict  # SymbolId -> position in the defining sequence

    def __len__(self):
        return len(self.rank)

    def __contains__(self, symbol):
        return symbol in self.rank

    def reversed(self) -> TotalOrder:
        top = len(self.rank) - 1
        return TotalOrder({c: top - r for c, r in self.rank.items()})


@dataclass(frozen=True)
class MonotoneWitness:
    elements: Sequence
    direction: str

    def __len__(self):
        return len(self.elements)

    @property
    def symbols(self):
        return self.elements.symbols

    @property
    def origin(self):
        return self.elements.origin


def order_from(pi: Sequence) -> TotalOrder:
    rank = {}
    for i, c in enumerate(pi.symbols):
        if c in rank:
            raise RepeatedSymbol(f"symbol {c} repeats at positions {rank[c]} and {i}")
        rank[c] = i
    return TotalOrder(rank)


def longest_increasing_positions(keys: Seq) -> list[int]:
    """Indices of the lexicographically smallest strictly increasing
    subsequence of maximum length.

    One right-to-left patience pass yields, for each index, the length of the
    longest increasing run starting there; a greedy left-to-right sweep then
    picks the earliest index that can still complete a maximum-length chain.
    """
    m = len(keys)
    if m == 0:
        return []
    start_len = [0] * m
    tails: list = []  # tails[k]: largest negated key ending a chain of length k+1
    for i in range(m - 1, -1, -1):
        k = -keys[i]
        p = bisect_left(tails, k)
        if p == len(tails):
            tails.append(k)
        else:
            tails[p] = k
        start_len[i] = p + 1
    need = len(tails)
    out = []
    last = None
    for i in range(m):
        if start_len[i] == need and (last is None or keys[i] > last):
            out.append(i)
            last = keys[i]
            need -= 1
            if need == 0:
                break
    return out


def _monotone(s: Sequence, rank: dict, sign: int, direction: str) -> MonotoneWitness:
    keys, where = [], []
    get = rank.get
    for i, c in enumerate(s.symbols):
        r = get(c)
        if r is not None:
            keys.append(sign * r)
            where.append(i)
    picked = longest_increasing_positions(keys)
    if not picked:
        return MonotoneWitness(EMPTY, direction)
    sym, org = s.symbols, s.origin
    idx = [where[p] for p in picked]
    return MonotoneWitness(
        Sequence(tuple(sym[i] for i in idx), tuple(org[i] for i in idx)), direction
    )


def lis(s: Sequence, order: TotalOrder) -> MonotoneWitness:
    """Exactly longest strictly increasing subsequence of ``s`` under ``order``.

    Elements whose symbol is not ranked by ``order`` are ignored.  Among all
    longest witnesses the one with lexicographically smallest origins is
    returned.
    """
    return _monotone(s, order.rank, 1, INCREASING)


def lds(s: Sequence, order: TotalOrder) -> MonotoneWitness:
    """Exactly longest strictly decreasing subsequence of ``s`` under ``order``."""
    return _monotone(s, order.rank, -1, DECREASING)


def is_monotone_witness(w: MonotoneWitness, s: Sequence, order: TotalOrder) -> bool:
    """Independent check: ``w`` is a subsequence of ``s`` (by origin) and its
    ranks are strictly monotone in the stated direction."""
    where = dict(zip(s.origin, s.symbols))
    prev_o = prev_r = None
    for c, o in w.elements.pairs():
        if where.get(o) != c or c not in order.rank:
            return False
        r = order.rank[c]
        if prev_o is not None:
            if o <= prev_o:
                return False
            if w.direction == INCREASING and not r > prev_r:
                return False
            if w.direction == DECREASING and not r < prev_r:
                return False
        prev_o, prev_r = o, r
    return True
