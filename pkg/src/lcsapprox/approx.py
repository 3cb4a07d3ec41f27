"""Deterministic LCS approximation by greedy LDS peeling.

:func:`approx_lcs_v1` collects three kinds of candidates and keeps the
longest:

1. the best single-symbol match,
2. an LIS of ``y`` under the order given by the first occurrences in ``x``,
3. for every round of peeling: take an approximate LDS ``p`` of what is left
   of ``x`` (under the order from step 2), harvest an LIS of ``y`` under the
   order of ``p``, then delete all symbols of ``p`` from ``x``.

It returns a common subsequence of length at least ``LCS / (4 n^(4/5))``.
:func:`better_approx_lcs` reruns it on ``x`` restricted to symbols occurring at
least ``f`` times, for ``f = 1, 2, 4, ..., 2^floor(log2 n)``, which improves the
asymptotic ratio to ``O(n^(3/4) log n)``.  Here ``n = |x| + |y|``.

All candidates carry index witnesses into the original ``x`` and ``y``.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field

from . import alds
from .order_lis import lis, longest_increasing_positions, order_from
from .seqcore import (
    Sequence,
    frequencies,
    project,
    repetition_free_first,
    sigma_band,
)

log = logging.getLogger(__name__)

V1 = "v1"
BETTER = "better"


@dataclass(frozen=True)
class CommonSubsequenceWitness:
    symbols: tuple = ()
    idx_x: tuple = ()
    idx_y: tuple = ()

    def __post_init__(self):
        if not len(self.symbols) == len(self.idx_x) == len(self.idx_y):
            raise ValueError("witness fields differ in length")

    def __len__(self):
        return len(self.symbols)

    def to_dict(self, vocabulary=None) -> dict:
        symbols = list(self.symbols)
        if vocabulary is not None:
            symbols = [vocabulary[c] for c in symbols]
        return {"symbols": symbols, "idx_x": list(self.idx_x), "idx_y": list(self.idx_y)}


EMPTY_WITNESS = CommonSubsequenceWitness()


@dataclass(frozen=True)
class ApproxReport:
    output: CommonSubsequenceWitness
    algorithm: str
    n: int
    best_match_len: int = 0
    lis_pi_len: int = 0
    peel_lengths: tuple = ()
    alds_lengths: tuple = ()
    deleted_per_iteration: tuple = ()
    # better only: f -> report of the inner run on the band-restricted x
    passes: dict = field(default_factory=dict)

    @property
    def output_len(self) -> int:
        return len(self.output)

    @property
    def iterations(self):
        if self.algorithm == BETTER:
            return {f: r.iterations for f, r in self.passes.items()}
        return len(self.peel_lengths)

    def candidate_lengths(self) -> dict:
        if self.algorithm == BETTER:
            return {
                "best_match": self.best_match_len,
                "lis_pi": self.lis_pi_len,
                "per_f": {f: r.output_len for f, r in self.passes.items()},
            }
        return {
            "best_match": self.best_match_len,
            "lis_pi": self.lis_pi_len,
            "peel": list(self.peel_lengths),
        }

    def max_candidate(self) -> int:
        c = self.candidate_lengths()
        rest = c["per_f"].values() if "per_f" in c else c["peel"]
        return max([c["best_match"], c["lis_pi"], *rest])

    def trace(self) -> dict:
        """JSON-friendly iteration trace."""
        if self.algorithm == BETTER:
            return {str(f): r.trace() for f, r in self.passes.items()}
        return {
            "n": self.n,
            "best_match": self.best_match_len,
            "lis_pi": self.lis_pi_len,
            "peel": list(self.peel_lengths),
            "alds": list(self.alds_lengths),
            "deleted": list(self.deleted_per_iteration),
        }


def match_count(x: Sequence, y: Sequence, symbol) -> int:
    return min(x.symbols.count(symbol), y.symbols.count(symbol))


def best_match(x: Sequence, y: Sequence, fx: Counter | None = None, fy: Counter | None = None):
    """Longest common subsequence made of a single repeated symbol.

    Ties go to the smallest symbol id.  Uses the first occurrences in both
    inputs.
    """
    fx = frequencies(x) if fx is None else fx
    fy = frequencies(y) if fy is None else fy
    best, best_k = None, 0
    for c, kx in fx.items():
        k = min(kx, fy.get(c, 0))
        if k > best_k or (k == best_k and k and c < best):
            best, best_k = c, k
    if not best_k:
        return EMPTY_WITNESS

    def first(s):
        return tuple(o for c, o in s.pairs() if c == best)[:best_k]

    return CommonSubsequenceWitness((best,) * best_k, first(x), first(y))


def symbol_positions(y: Sequence) -> dict:
    """Map each symbol to the ascending list of its indices in ``y``."""
    pos: dict = {}
    for i, c in enumerate(y.symbols):
        lst = pos.get(c)
        if lst is None:
            pos[c] = [i]
        else:
            lst.append(i)
    return pos


def lis_candidate(y: Sequence, pi: Sequence, y_positions: dict | None = None):
    """Common subsequence from an LIS of ``y`` under the order of ``pi``.

    ``pi`` must be repetition-free and a subsequence of ``x``, with origins in
    ``x``.  Because the result increases in ``pi``'s order, the matching
    ``pi`` origins increase as well.

    With ``y_positions`` (from :func:`symbol_positions`) only the occurrences
    of ``pi``'s symbols in ``y`` are visited.
    """
    order = order_from(pi)
    if y_positions is None:
        w = lis(y, order).elements
        sym, idx_y = w.symbols, w.origin
    else:
        rank = order.rank
        where = sorted(i for c in pi.symbols for i in y_positions.get(c, ()))
        ysym = y.symbols
        picked = longest_increasing_positions([rank[ysym[i]] for i in where])
        sym = tuple(ysym[where[p]] for p in picked)
        idx_y = tuple(y.origin[where[p]] for p in picked)
    if not sym:
        return EMPTY_WITNESS
    x_origin = dict(zip(pi.symbols, pi.origin))
    return CommonSubsequenceWitness(tuple(sym), tuple(x_origin[c] for c in sym), tuple(idx_y))


def _empty_report(algorithm, n):
    return ApproxReport(EMPTY_WITNESS, algorithm, n)


def _v1(x: Sequence, y: Sequence, variant: str, y_positions: dict, fy: Counter) -> ApproxReport:
    n = len(x) + len(y)
    if not x or not y:
        return _empty_report(V1, n)

    # part 1
    out = best_match(x, y, fy=fy)
    bm_len = len(out)

    # part 2
    pi = repetition_free_first(x)
    cand = lis_candidate(y, pi, y_positions)
    lis_len = len(cand)
    if lis_len > len(out):
        out = cand

    # part 3: the order stays the one from RF of the initial x
    state = alds.PeelState(x, order_from(pi), variant)
    peel, alds_lens, deleted = [], [], []
    while len(state.live):
        w = state.current_alds()
        cand = lis_candidate(y, w.elements, y_positions)
        peel.append(len(cand))
        alds_lens.append(len(w))
        if len(cand) > len(out):
            out = cand
        deleted.append(state.remove_symbols(frozenset(w.symbols)))
        log.debug("peel round %d: |alds|=%d candidate=%d deleted=%d",
                  len(peel), alds_lens[-1], peel[-1], deleted[-1])

    return ApproxReport(
        out, V1, n,
        best_match_len=bm_len,
        lis_pi_len=lis_len,
        peel_lengths=tuple(peel),
        alds_lengths=tuple(alds_lens),
        deleted_per_iteration=tuple(deleted),
    )


def approx_lcs_v1(x: Sequence, y: Sequence, variant: str = alds.EXACT) -> ApproxReport:
    return _v1(x, y, variant, symbol_positions(y), frequencies(y))


def frequency_levels(n: int) -> list[int]:
    """``[1, 2, 4, ..., 2^floor(log2 n)]``; empty for ``n < 1``."""
    if n < 1:
        return []
    return [1 << i for i in range(n.bit_length())]


def better_approx_lcs(x: Sequence, y: Sequence, variant: str = alds.EXACT) -> ApproxReport:
    n = len(x) + len(y)
    if not x or not y:
        return _empty_report(BETTER, n)
    fx = frequencies(x)
    fy = frequencies(y)
    y_positions = symbol_positions(y)
    passes = {}
    best = None
    for f in frequency_levels(n):
        band = sigma_band(fx, f, n)
        # an empty band contributes an empty candidate through the same path
        r = _v1(project(x, band), y, variant, y_positions, fy)
        passes[f] = r
        if best is None or r.output_len > len(best):
            best = r.output
        log.debug("f=%d: |band|=%d output=%d", f, len(band), r.output_len)
    full = passes[1]
    return ApproxReport(
        best, BETTER, n,
        best_match_len=full.best_match_len,
        lis_pi_len=full.lis_pi_len,
        passes=passes,
    )


def run(x: Sequence, y: Sequence, algorithm: str = BETTER, variant: str = alds.EXACT) -> ApproxReport:
    if algorithm == V1:
        return approx_lcs_v1(x, y, variant)
    if algorithm == BETTER:
        return better_approx_lcs(x, y, variant)
    raise ValueError(f"unknown algorithm {algorithm!r}")


# -- bounds and post-hoc inspection -------------------------------------------

def bound_4n45(n: int) -> float:
    return 4.0 * n ** 0.8


def bound_n34log(n: int) -> float:
    return n ** 0.75 * math.log2(n) if n > 1 else 0.0


def iteration_profile(report: ApproxReport, lcs_len: int) -> dict | None:
    """Flag peel rounds whose candidate falls below the analysis threshold.

    For the plain algorithm ``lcs_len = n^(4/5 + t)`` and a round is bad when
    its candidate is shorter than ``n^t / 4``; for the band sweep the exponent
    is ``3/4`` and the divisor 200.  Returns ``None`` when ``t <= 0`` (the
    single-symbol candidate already suffices there).
    """
    n = report.n
    if n < 2 or lcs_len < 1:
        return None
    if report.algorithm == V1:
        base, divisor, rounds = 0.8, 4.0, {1: report.peel_lengths}
    else:
        base, divisor = 0.75, 200.0
        rounds = {f: r.peel_lengths for f, r in report.passes.items()}
    t = math.log(lcs_len, n) - base
    if t <= 0:
        return None
    threshold = n ** t / divisor
    bad = {f: [ell < threshold for ell in ls] for f, ls in rounds.items()}
    return {
        "t": t,
        "threshold": threshold,
        "bad": bad,
        "some_round_not_bad": any(not b for bs in bad.values() for b in bs),
    }
