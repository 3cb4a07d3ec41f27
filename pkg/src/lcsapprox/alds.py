"""Approximate longest decreasing subsequence of a shrinking sequence.

:class:`PeelState` holds a live copy of ``x`` that only loses whole symbols,
and hands out a strictly decreasing subsequence of it whose length is at least
half (rounded up) of the exact LDS under a fixed order.

Two strategies meet that contract:

``exact``
    recompute the exact LDS of the live sequence on every request.
``triggered``
    keep the last exact witness, drop deleted symbols from it, and recompute
    only once it has shrunk below half of its length at computation time.
    Deletions never lengthen the LDS, so the pruned witness stays within the
    factor of two in between.
"""

from __future__ import annotations

import logging

from .errors import EmptySequence, UncoveredSymbol
from .occ_index import OccIndex
from .order_lis import DECREASING, MonotoneWitness, TotalOrder, lds
from .seqcore import Sequence

EXACT = "exact"
TRIGGERED = "triggered"
VARIANTS = (EXACT, TRIGGERED)

log = logging.getLogger(__name__)


class PeelState:
    def __init__(self, x: Sequence, order: TotalOrder, variant: str = EXACT):
        if variant not in VARIANTS:
            raise ValueError(f"unknown ALDS variant {variant!r}; expected one of {VARIANTS}")
        rank = order.rank
        for c in set(x.symbols):
            if c not in rank:
                raise UncoveredSymbol(f"symbol {c} has no rank in the order")
        self.live = OccIndex(x)
        self.order = order
        self.variant = variant
        self.cached: MonotoneWitness | None = None
        self.cached_len_at_recompute = 0
        self.recomputes = 0

    def __len__(self):
        return len(self.live)

    def current_alds(self) -> MonotoneWitness:
        if not len(self.live):
            raise EmptySequence("live sequence is empty")
        if self.variant == EXACT or self.cached is None:
            w = lds(self.live.materialize(), self.order)
            self.cached = w
            self.cached_len_at_recompute = len(w)
            self.recomputes += 1
        return self.cached

    def remove_symbols(self, drop) -> int:
        """Delete every occurrence of every symbol in ``drop``; return the count."""
        live = self.live
        deleted = 0
        for c in drop:
            positions = live.occ(c)
            # back to front so earlier positions do not shift
            for r in reversed(positions):
                live.delete(r)
            deleted += len(positions)
        if deleted and self.cached is not None:
            if self.variant == EXACT:
                self.cached = None
            else:
                self._prune(drop)
        return deleted

    def _prune(self, drop):
        drop = drop if isinstance(drop, (set, frozenset)) else frozenset(drop)
        el = self.cached.elements
        kept = [(c, o) for c, o in el.pairs() if c not in drop]
        if 2 * len(kept) < self.cached_len_at_recompute:
            log.debug("ALDS cache invalidated: %d of %d left", len(kept), self.cached_len_at_recompute)
            self.cached = None
            return
        if len(kept) != len(el):
            sym = tuple(c for c, _ in kept)
            org = tuple(o for _, o in kept)
            self.cached = MonotoneWitness(Sequence(sym, org), DECREASING)


def new(x: Sequence, order: TotalOrder, variant: str = EXACT) -> PeelState:
    return PeelState(x, order, variant)
