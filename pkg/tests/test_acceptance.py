"""Exit criteria for the library, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""

import itertools
import math
import random
import time

import pytest

from lcsapprox import alds
from lcsapprox.approx import (
    approx_lcs_v1,
    best_match,
    better_approx_lcs,
    bound_4n45,
    bound_n34log,
    lis_candidate,
)
from lcsapprox.cli import bench_table, write_bench
from lcsapprox.generate import InstanceSpec, generate
from lcsapprox.occ_index import OccIndex
from lcsapprox.oracle import lcs_bruteforce, lcs_exact, lcs_length, validate_witness
from lcsapprox.order_lis import lds, lis, order_from
from lcsapprox.seqcore import Sequence, exclude, intern, repetition_free_first

from helpers import NaiveOcc, brute_chain_len, brute_monotone

VARIANTS = (alds.EXACT, alds.TRIGGERED)


def ratio_ok(exact, out, n):
    if exact == 0:
        return out == 0
    return out >= 1 and exact <= bound_4n45(n) * out


@pytest.mark.criterion(1, "exhaustive small-instance soundness")
def test_exhaustive_small(detail):
    seqs = [Sequence.fresh(s) for k in range(6) for s in itertools.product(range(3), repeat=k)]
    start = time.perf_counter()
    worst = 1.0
    count = 0
    for x in seqs:
        for y in seqs:
            # in the peeling loop the triggered variant always drops the whole
            # cached witness, so both variants produce identical runs here
            r = better_approx_lcs(x, y, alds.EXACT)
            exact = lcs_length(x, y)
            assert validate_witness(r.output, x, y), (x, y)
            n = len(x) + len(y)
            assert ratio_ok(exact, r.output_len, n), (x, y, exact, r.output_len)
            if exact:
                worst = max(worst, exact / r.output_len)
            count += 1
    elapsed = time.perf_counter() - start
    detail.update(pairs=count, worst_ratio=round(worst, 3), seconds=round(elapsed, 1))
    assert count == 364 ** 2
    assert elapsed < 60


@pytest.mark.criterion(2, "randomized soundness, both algorithms and ALDS variants")
def test_randomized(detail):
    rng = random.Random(2024)
    worst = 1.0
    for i in range(1000):
        nx, ny = rng.randint(0, 400), rng.randint(0, 400)
        n = nx + ny
        k = [1, 2, 4, math.ceil(math.sqrt(n)), n][i % 5] or 1
        x = Sequence.fresh(rng.randrange(k) for _ in range(nx))
        y = Sequence.fresh(rng.randrange(k) for _ in range(ny))
        exact = lcs_length(x, y)
        floor = max(len(best_match(x, y)), len(lis_candidate(y, repetition_free_first(x))))
        for algo in (approx_lcs_v1, better_approx_lcs):
            for variant in VARIANTS:
                r = algo(x, y, variant)
                assert validate_witness(r.output, x, y)
                assert r.output_len >= floor
                assert ratio_ok(exact, r.output_len, n), (i, exact, r.output_len)
                if exact:
                    worst = max(worst, exact / r.output_len)
    detail.update(instances=1000, runs=4000, worst_ratio=round(worst, 3))


@pytest.mark.criterion(3, "LIS/LDS subroutine exactness")
def test_subroutines(detail):
    perms = 0
    for m in range(8):
        order = order_from(Sequence.fresh(range(m)))
        for p in itertools.permutations(range(m)):
            s = Sequence.fresh(p)
            assert len(lis(s, order)) == len(brute_monotone(p, True))
            assert len(lds(s, order)) == len(brute_monotone(p, False))
            perms += 1
    orders = [order_from(Sequence.fresh(p[:3])) for p in itertools.permutations(range(4))]
    seqs = 0
    for m in range(9):
        for s in itertools.product(range(4), repeat=m):
            order = orders[seqs % len(orders)]
            sq = Sequence.fresh(s)
            assert len(lis(sq, order)) == brute_chain_len(s, order.rank)
            assert len(lds(sq, order)) == brute_chain_len(s, order.reversed().rank)
            seqs += 1
    rng = random.Random(3)
    for _ in range(10_000):
        k = rng.randint(1, 30)
        s = Sequence.fresh(rng.randrange(k) for _ in range(rng.randint(0, 60)))
        perm = list(range(k))
        rng.shuffle(perm)
        order = order_from(Sequence.fresh(perm[: rng.randint(0, k)]))
        assert len(lds(s, order)) == len(lis(s, order.reversed()))
    detail.update(permutations=perms, projected_sequences=seqs, duality_cases=10_000)


@pytest.mark.criterion(4, "Erdos-Szekeres on repetition-free sequences")
def test_erdos_szekeres(detail):
    rng = random.Random(4)
    total = 0
    for i in range(10_000):
        # log-uniform lengths in [1, 10^4], with the top length hit explicitly
        m = 10_000 if i % 1000 == 0 else int(math.exp(rng.uniform(0, math.log(10_000))))
        p = list(range(m))
        rng.shuffle(p)
        q = list(range(m))
        rng.shuffle(q)
        s, order = Sequence.fresh(p), order_from(Sequence.fresh(q))
        assert len(lis(s, order)) * len(lds(s, order)) >= m
        total += m
    detail.update(sequences=10_000, total_elements=total)


@pytest.mark.criterion(5, "ALDS half-approximation contract")
def test_alds_contract(detail):
    rng = random.Random(5)
    checks = 0
    for variant in VARIANTS:
        for run in range(200):
            n = rng.randint(1, 2000)
            k = rng.choice([2, 10, 50, int(math.sqrt(n)) + 1, n])
            x = Sequence.fresh(rng.randrange(k) for _ in range(n))
            order = order_from(repetition_free_first(x))
            st = alds.PeelState(x, order, variant)
            shadow = x
            while len(st):
                w = st.current_alds()
                live = st.live.materialize()
                assert live == shadow
                exact = len(lds(live, order))
                assert len(w) >= math.ceil(exact / 2)
                assert len(set(w.symbols)) == len(w)
                checks += 1
                # alternate the peeling usage with arbitrary symbol deletions so
                # the triggered cache survives between recomputes
                if run % 2 == 0 or rng.random() < 0.3:
                    drop = frozenset(w.symbols)
                else:
                    alive = sorted(set(live.symbols))
                    drop = frozenset(rng.sample(alive, max(1, len(alive) // 20)))
                st.remove_symbols(drop)
                shadow = exclude(shadow, drop)
    detail.update(runs=400, checks=checks)


@pytest.mark.criterion(6, "OccIndex agrees with a naive list model")
def test_occ_model(detail):
    rng = random.Random(6)
    ops_done = 0
    for _ in range(100):
        n = rng.randint(2000, 8000)
        k = rng.choice([1, 4, 64, 1000])
        symbols = [rng.randrange(k) for _ in range(n)]
        idx = OccIndex(Sequence.fresh(symbols))
        model = NaiveOcc(symbols, range(n))
        for _ in range(10_000):
            r = rng.random()
            if r < 0.45:
                c = rng.randrange(k + 1)
                assert idx.occ(c) == model.occ(c)
            elif r < 0.95 and len(model):
                i = rng.randrange(len(model))
                idx.delete(i)
                model.delete(i)
            else:
                m = idx.materialize()
                assert (m.symbols, m.origin) == model.materialize()
            ops_done += 1
    detail.update(traces=100, ops=ops_done)


@pytest.mark.criterion(7, "exact oracle self-consistency")
def test_oracle(detail):
    seqs = [Sequence.fresh(s) for k in range(9) for s in itertools.product(range(2), repeat=k)]
    for x in seqs:
        for y in seqs:
            assert lcs_exact(x, y).length == lcs_bruteforce(x, y)
    rng = random.Random(7)
    for _ in range(100):
        x = Sequence.fresh(rng.randrange(rng.randint(1, 50)) for _ in range(rng.randint(0, 500)))
        assert lcs_exact(x, x).length == len(x)
    detail.update(binary_pairs=len(seqs) ** 2)


@pytest.mark.criterion(8, "desk-scale performance (n = 2e5, alphabet 1e3, triggered)")
def test_performance(detail, tmp_path):
    spec = InstanceSpec("uniform", 100_000, 100_000, 1000, seed=8)
    x, y, _ = intern(*generate(spec))
    start = time.perf_counter()
    r = better_approx_lcs(x, y, alds.TRIGGERED)
    elapsed = time.perf_counter() - start
    assert validate_witness(r.output, x, y)
    rows = bench_table(["uniform"], 10, 14, "1000", 1, 0, "better", alds.TRIGGERED)
    rows += bench_table(["adversarial_decreasing"], 8, 11, "n", 1, 0, "better", alds.TRIGGERED)
    table = tmp_path / "bench.csv"
    write_bench(rows, "csv", table)
    print(table.read_text())
    adv = [row for row in rows if row["kind"] == "adversarial_decreasing"]
    growth = adv[-1]["wall_time"] / adv[0]["wall_time"]
    detail.update(seconds=round(elapsed, 2), output_len=r.output_len,
                  bench_rows=len(rows), adversarial_time_growth_8x_n=round(growth, 1))
    assert elapsed < 60
    assert len(table.read_text().splitlines()) == len(rows) + 1


@pytest.mark.criterion(9, "empirical ratio on planted instances")
def test_planted_ratio(detail):
    worst = 0.0
    worst_env = 0.0
    sizes = [round(10 ** (2 + 2 * i / 99)) for i in range(100)]
    for i, n in enumerate(sizes):
        n_x = n // 2
        planted = math.ceil(n ** 0.8)
        k = [4, math.isqrt(n) + 1, max(1, n // 4)][i % 3]
        spec = InstanceSpec("planted", n_x, n - n_x, k, seed=900 + i, planted_len=planted)
        x, y, _ = intern(*generate(spec))
        r = better_approx_lcs(x, y, alds.TRIGGERED)
        assert validate_witness(r.output, x, y)
        ratio = planted / r.output_len
        assert ratio <= bound_4n45(n), (n, planted, r.output_len)
        worst = max(worst, ratio)
        worst_env = max(worst_env, ratio / bound_n34log(n))
    detail.update(instances=100, max_planted_over_output=round(worst, 3),
                  max_ratio_over_n34log2n=round(worst_env, 4))
