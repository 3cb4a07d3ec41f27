"""Deterministic near-linear-time LCS approximation by greedy LDS peeling."""

from .alds import EXACT, TRIGGERED, PeelState
from .approx import (
    ApproxReport,
    CommonSubsequenceWitness,
    approx_lcs_v1,
    best_match,
    better_approx_lcs,
    lis_candidate,
    match_count,
)
from .occ_index import OccIndex
from .oracle import lcs_bruteforce, lcs_exact, lcs_length, validate_witness
from .order_lis import TotalOrder, lds, lis, order_from
from .seqcore import (
    Sequence,
    exclude,
    frequencies,
    intern,
    project,
    repetition_free_first,
    sigma_band,
)

__version__ = "0.1.0"
