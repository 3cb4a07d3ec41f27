"""Exact LCS ground truth and witness validation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .approx import EMPTY_WITNESS, CommonSubsequenceWitness
from .errors import BudgetExceeded, TooLarge
from .seqcore import Sequence

DEFAULT_BUDGET = 10**8
BRUTEFORCE_LIMIT = 20
# below this many cells the pure-Python loop beats numpy row setup
_SMALL = 4096


@dataclass(frozen=True)
class OracleResult:
    length: int
    witness: CommonSubsequenceWitness


def _match_rows(a, b):
    """Per distinct symbol of ``a``, a boolean mask over ``b``."""
    b_arr = np.asarray(b, dtype=np.int64)
    return {c: b_arr == c for c in set(a)}


def _last_row(a, b) -> np.ndarray:
    """Final DP row ``L[len(a)][0..len(b)]`` in linear space."""
    m = len(b)
    row = np.zeros(m + 1, dtype=np.int64)
    if not a or not m:
        return row
    masks = _match_rows(a, b)
    for c in a:
        diag = row[:-1] + masks[c]
        cand = np.maximum(row[1:], diag)
        np.maximum.accumulate(cand, out=row[1:])
    return row


def _length_small(a, b) -> int:
    prev = [0] * (len(b) + 1)
    for c in a:
        cur = [0]
        left = 0
        for j, d in enumerate(b):
            if c == d:
                left = prev[j] + 1
            else:
                up = prev[j + 1]
                if up > left:
                    left = up
            cur.append(left)
        prev = cur
    return prev[-1]


def lcs_length(x: Sequence, y: Sequence) -> int:
    """Exact LCS length in O(|x||y|) time and O(|y|) space."""
    a, b = x.symbols, y.symbols
    if len(a) < len(b):
        a, b = b, a
    if len(a) * len(b) <= _SMALL:
        return _length_small(a, b)
    return int(_last_row(a, b)[-1])


def _table_traceback(a, b):
    n, m = len(a), len(b)
    dtype = np.uint16 if min(n, m) < 2**16 else np.uint32
    table = np.zeros((n + 1, m + 1), dtype=dtype)
    masks = _match_rows(a, b)
    for i, c in enumerate(a, 1):
        prev = table[i - 1]
        cand = np.maximum(prev[1:], prev[:-1] + masks[c].astype(dtype))
        np.maximum.accumulate(cand, out=table[i, 1:])
    pairs = []
    i, j = n, m
    while i and j:
        if a[i - 1] == b[j - 1] and table[i, j] == table[i - 1, j - 1] + 1:
            pairs.append((i - 1, j - 1))
            i -= 1
            j -= 1
        elif table[i - 1, j] >= table[i, j - 1]:
            i -= 1
        else:
            j -= 1
    pairs.reverse()
    return pairs


def _hirschberg(a, b, off_a, off_b, out):
    n, m = len(a), len(b)
    if not n or not m:
        return
    if n == 1:
        c = a[0]
        for j, d in enumerate(b):
            if d == c:
                out.append((off_a, off_b + j))
                return
        return
    if n * m <= _SMALL:
        out.extend((i + off_a, j + off_b) for i, j in _table_traceback(a, b))
        return
    mid = n // 2
    left = _last_row(a[:mid], b)
    right = _last_row(a[mid:][::-1], b[::-1])[::-1]
    k = int(np.argmax(left + right))
    _hirschberg(a[:mid], b[:k], off_a, off_b, out)
    _hirschberg(a[mid:], b[k:], off_a + mid, off_b + k, out)


def lcs_exact(x: Sequence, y: Sequence, budget: int = DEFAULT_BUDGET, method: str = "table") -> OracleResult:
    """Exact LCS with a witness.

    ``method="table"`` fills the full DP table and refuses inputs with more
    than ``budget`` cells.  ``method="hirschberg"`` traces back in linear
    space by divide and conquer and ignores the budget.
    """
    a, b = x.symbols, y.symbols
    if method == "table":
        if len(a) * len(b) > budget:
            raise BudgetExceeded(f"{len(a)}*{len(b)} cells exceed budget {budget}")
        pairs = _table_traceback(a, b) if a and b else []
    elif method == "hirschberg":
        pairs = []
        _hirschberg(a, b, 0, 0, pairs)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not pairs:
        return OracleResult(0, EMPTY_WITNESS)
    w = CommonSubsequenceWitness(
        tuple(a[i] for i, _ in pairs),
        tuple(x.origin[i] for i, _ in pairs),
        tuple(y.origin[j] for _, j in pairs),
    )
    return OracleResult(len(w), w)


@lru_cache(maxsize=4096)
def _distinct_subsequences(s: tuple) -> tuple:
    """Distinct subsequences of ``s`` grouped by length, longest first."""
    subs = {()}
    for c in s:
        subs |= {t + (c,) for t in subs}
    by_len: dict = {}
    for t in subs:
        by_len.setdefault(len(t), []).append(t)
    return tuple(by_len[k] for k in sorted(by_len, reverse=True))


def _embeds(sub, s) -> bool:
    it = iter(s)
    return all(c in it for c in sub)


def lcs_bruteforce(x: Sequence, y: Sequence) -> int:
    """LCS length by enumerating subsequences of the shorter input."""
    a, b = tuple(x.symbols), tuple(y.symbols)
    if len(a) > len(b):
        a, b = b, a
    if len(a) > BRUTEFORCE_LIMIT:
        raise TooLarge(f"shorter input has {len(a)} > {BRUTEFORCE_LIMIT} elements")
    for group in _distinct_subsequences(a):
        for t in group:
            if _embeds(t, b):
                return len(t)
    return 0


def validate_witness(w: CommonSubsequenceWitness, x: Sequence, y: Sequence) -> bool:
    """True iff ``w`` is a common subsequence of ``x`` and ``y``.

    Indices refer to the origins of ``x`` and ``y`` (plain positions for
    freshly interned inputs).
    """
    if not len(w.symbols) == len(w.idx_x) == len(w.idx_y):
        return False
    for s, idx in ((x, w.idx_x), (y, w.idx_y)):
        at = dict(zip(s.origin, s.symbols))
        prev = -1
        for c, i in zip(w.symbols, idx):
            if i <= prev or at.get(i) != c:
                return False
            prev = i
    return True
