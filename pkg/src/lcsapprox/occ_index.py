"""Deletable occurrence index over a sequence.

Supports listing the current positions of a symbol and deleting the element
at a current position.  Current positions are ranks among the elements still
alive, so every deletion implicitly shifts the positions after it.

Layout: a Fenwick tree over alive bits answers rank and select queries in
O(log n); each symbol keeps an ascending list of its local positions, from
which dead entries are dropped lazily the next time the symbol is queried.
Symbols frequent enough that ``count * log n >= n`` are ranked by one prefix
sum over the alive bits instead, which is no slower asymptotically.
"""

from __future__ import annotations

import numpy as np

from .errors import OutOfRange
from .seqcore import EMPTY, Sequence


class OccIndex:
    def __init__(self, s: Sequence):
        n = len(s)
        self._seq = s
        self._n = n
        self._len = n
        self._alive = bytearray(b"\x01") * n
        # all bits set: node i covers (i - lowbit(i), i]
        self._tree = [i & -i for i in range(n + 1)]
        top = 1
        while top * 2 <= n:
            top *= 2
        self._top = top if n else 0
        by_symbol: dict = {}
        for p, c in enumerate(s.symbols):
            lst = by_symbol.get(c)
            if lst is None:
                by_symbol[c] = [p]
            else:
                lst.append(p)
        self._by_symbol = by_symbol
        self._dead = dict.fromkeys(by_symbol, 0)
        # instrumentation: Fenwick nodes visited so far
        self.touched = 0

    @classmethod
    def init(cls, s: Sequence) -> OccIndex:
        return cls(s)

    def __len__(self) -> int:
        return self._len

    def _rank(self, p: int) -> int:
        """Number of alive elements among local positions ``0..p``."""
        tree = self._tree
        i = p + 1
        total = 0
        steps = 0
        while i:
            total += tree[i]
            i &= i - 1
            steps += 1
        self.touched += steps
        return total

    def _select(self, k: int) -> int:
        """Local position of the alive element with current rank ``k``."""
        tree, n = self._tree, self._n
        pos = 0
        rem = k + 1
        half = self._top
        steps = 0
        while half:
            nxt = pos + half
            if nxt <= n and tree[nxt] < rem:
                pos = nxt
                rem -= tree[nxt]
            half >>= 1
            steps += 1
        self.touched += steps
        return pos  # 1-based pos + 1 is the answer; pos is its 0-based index

    def _compact(self, symbol) -> list:
        lst = self._by_symbol.get(symbol)
        if lst is None:
            return []
        if self._dead[symbol]:
            alive = self._alive
            lst = [p for p in lst if alive[p]]
            self._by_symbol[symbol] = lst
            self._dead[symbol] = 0
        return lst

    def occ(self, symbol) -> list[int]:
        """Ascending current positions of ``symbol``."""
        lst = self._compact(symbol)
        if len(lst) * self._top.bit_length() >= self._n and lst:
            self.touched += self._n
            ranks = np.cumsum(np.frombuffer(self._alive, dtype=np.uint8))
            return (ranks[lst] - 1).tolist()
        return [self._rank(p) - 1 for p in lst]

    def count(self, symbol) -> int:
        lst = self._by_symbol.get(symbol)
        if lst is None:
            return 0
        return len(lst) - self._dead[symbol]

    def delete(self, i: int) -> None:
        """Delete the element at current position ``i``."""
        if not 0 <= i < self._len:
            raise OutOfRange(f"position {i} outside [0, {self._len})")
        p = self._select(i)
        self._alive[p] = 0
        self._dead[self._seq.symbols[p]] += 1
        self._len -= 1
        tree, n = self._tree, self._n
        j = p + 1
        steps = 0
        while j <= n:
            tree[j] -= 1
            j += j & -j
            steps += 1
        self.touched += steps

    def materialize(self) -> Sequence:
        """Alive elements in order, carrying the origins of the indexed sequence."""
        if self._len == 0:
            return EMPTY
        if self._len == self._n:
            return self._seq
        alive = self._alive
        sym, org = self._seq.symbols, self._seq.origin
        idx = [p for p in range(self._n) if alive[p]]
        return Sequence(tuple(sym[p] for p in idx), tuple(org[p] for p in idx))
