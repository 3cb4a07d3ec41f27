"""Interned symbol sequences with position provenance.

Every :class:`Sequence` remembers, for each element, the index it had in the
original input.  Projections and exclusions keep those indices, so anything
derived from a sequence can be reported as positions in the input it came from.
"""

from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

SymbolId = int
SymbolSet = frozenset  # frozenset[SymbolId]
FrequencyTable = Counter  # Counter[SymbolId]


@dataclass(frozen=True)
class Sequence:
    symbols: tuple[int, ...]
    origin: tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) != len(self.origin):
            raise ValueError(
                f"symbols and origin differ in length ({len(self.symbols)} != {len(self.origin)})"
            )
        o = self.origin
        if o and (o[0] < 0 or not all(map(operator.lt, o, o[1:]))):
            raise ValueError("origin must be nonnegative and strictly increasing")

    @classmethod
    def fresh(cls, symbols: Iterable[int]) -> Sequence:
        """Sequence whose origins are simply 0..len-1."""
        symbols = tuple(symbols)
        return cls(symbols, tuple(range(len(symbols))))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Iterate over ``(symbol, origin)`` pairs."""
        return zip(self.symbols, self.origin)

    def alphabet(self) -> frozenset:
        return frozenset(self.symbols)

    def reversed_symbols(self) -> tuple[int, ...]:
        return self.symbols[::-1]


EMPTY = Sequence((), ())


def intern(tokens_x: Iterable[Hashable], tokens_y: Iterable[Hashable]):
    """Map tokens of both inputs into one dense id space.

    Ids are assigned in first-seen order, scanning ``tokens_x`` then
    ``tokens_y``.  Returns ``(x, y, vocabulary)`` where ``vocabulary[id]`` is
    the token.
    """
    table: dict = {}
    vocabulary: list = []

    def encode(tokens):
        out = []
        for tok in tokens:
            sid = table.get(tok)
            if sid is None:
                sid = table[tok] = len(vocabulary)
                vocabulary.append(tok)
            out.append(sid)
        return Sequence.fresh(out)

    x = encode(tokens_x)
    y = encode(tokens_y)
    return x, y, vocabulary


def frequencies(s: Sequence) -> Counter:
    return Counter(s.symbols)


def _filter(s: Sequence, pred) -> Sequence:
    kept = [(c, o) for c, o in zip(s.symbols, s.origin) if pred(c)]
    if not kept:
        return EMPTY
    symbols, origin = zip(*kept)
    return Sequence(symbols, origin)


def project(s: Sequence, keep: Iterable[int]) -> Sequence:
    """Subsequence of ``s`` made of the elements whose symbol is in ``keep``."""
    keep = keep if isinstance(keep, (set, frozenset)) else frozenset(keep)
    if not keep:
        return EMPTY
    return _filter(s, keep.__contains__)


def exclude(s: Sequence, drop: Iterable[int]) -> Sequence:
    """Subsequence of ``s`` made of the elements whose symbol is not in ``drop``."""
    drop = drop if isinstance(drop, (set, frozenset)) else frozenset(drop)
    if not drop:
        return s
    return _filter(s, lambda c: c not in drop)


def repetition_free_first(s: Sequence) -> Sequence:
    """Keep the first occurrence of every distinct symbol."""
    seen = set()
    symbols, origin = [], []
    for c, o in zip(s.symbols, s.origin):
        if c not in seen:
            seen.add(c)
            symbols.append(c)
            origin.append(o)
    return Sequence(tuple(symbols), tuple(origin))


def is_repetition_free(s: Sequence) -> bool:
    return len(set(s.symbols)) == len(s.symbols)


def sigma_band(freq: Counter, lo: int, hi: int) -> frozenset:
    """Symbols whose occurrence count lies in ``[lo, hi]``."""
    if lo > hi:
        raise ValueError(f"empty band: lo={lo} > hi={hi}")
    return frozenset(c for c, k in freq.items() if lo <= k <= hi)
