"""Seeded instance generation.

The generator is SplitMix64 so that corpora can be reproduced bit for bit in
any language::

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    return z ^ (z >> 31)

A bounded draw in ``[0, k)`` is ``(next() * k) >> 64``.  A uniformly random
``m``-subset of ``range(n)`` is drawn by selection sampling (Knuth's
Algorithm S): walk ``i = 0..n-1`` and take ``i`` iff
``below(n - i) < m - taken``.  A shuffle is Fisher-Yates from the back,
swapping ``a[i]`` with ``a[below(i + 1)]``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

MASK64 = (1 << 64) - 1

UNIFORM = "uniform"
PLANTED = "planted"
ADVERSARIAL_DECREASING = "adversarial_decreasing"
BLOCK_REPEAT = "block_repeat"
KINDS = (UNIFORM, PLANTED, ADVERSARIAL_DECREASING, BLOCK_REPEAT)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        return (self.next() * k) >> 64

    def symbols(self, count: int, alphabet: int) -> list[int]:
        return [self.below(alphabet) for _ in range(count)]

    def subset(self, n: int, m: int) -> list[int]:
        out = []
        for i in range(n):
            if self.below(n - i) < m - len(out):
                out.append(i)
        return out

    def shuffle(self, a: list) -> list:
        for i in range(len(a) - 1, 0, -1):
            j = self.below(i + 1)
            a[i], a[j] = a[j], a[i]
        return a


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    n_x: int
    n_y: int
    alphabet: int
    seed: int = 0
    planted_len: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.n_x < 0 or self.n_y < 0:
            raise ValueError("lengths must be nonnegative")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.kind in (UNIFORM, PLANTED, BLOCK_REPEAT) and self.alphabet < 1:
            raise ValueError("alphabet must be at least 1")
        if self.kind == PLANTED:
            if self.planted_len is None:
                raise ValueError("planted instances need planted_len")
            if not 0 <= self.planted_len <= min(self.n_x, self.n_y):
                raise ValueError("planted_len must lie in [0, min(n_x, n_y)]")

    def to_dict(self) -> dict:
        return asdict(self)


def _embed(rng: SplitMix64, length: int, planted: list, alphabet: int) -> list[int]:
    seq = rng.symbols(length, alphabet)
    for p, c in zip(rng.subset(length, len(planted)), planted):
        seq[p] = c
    return seq


def generate(spec: InstanceSpec) -> tuple[list[int], list[int]]:
    """Build the ``(x, y)`` pair described by ``spec``; deterministic in ``spec``."""
    rng = SplitMix64(spec.seed)
    if spec.kind == UNIFORM:
        x = rng.symbols(spec.n_x, spec.alphabet)
        y = rng.symbols(spec.n_y, spec.alphabet)
    elif spec.kind == PLANTED:
        common = rng.symbols(spec.planted_len, spec.alphabet)
        x = _embed(rng, spec.n_x, common, spec.alphabet)
        y = _embed(rng, spec.n_y, common, spec.alphabet)
    elif spec.kind == ADVERSARIAL_DECREASING:
        # RF(x) = x, so y has LIS 1 under that order: only peeling finds matches
        x = list(range(spec.n_x))
        y = x[::-1]
    else:
        # x: symbols 0..k-1 in runs of equal length; y: the same runs, shuffled
        k = min(spec.alphabet, max(spec.n_x, 1))
        run = max(1, spec.n_x // k)
        x = [c for c in range(k) for _ in range(run)][: spec.n_x]
        x += [k - 1] * (spec.n_x - len(x))
        order = rng.shuffle(list(range(k)))
        run_y = max(1, spec.n_y // k)
        y = [c for c in order for _ in range(run_y)][: spec.n_y]
        y += [order[-1]] * (spec.n_y - len(y))
    return x, y
