"""Acceptance suite: one test per acceptance criterion, each enforcing
its exact tolerance and runtime budget and printing a pass/fail line
(run pytest with -rA or -s to see them)."""

import random
import time
from contextlib import contextmanager

import pytest

from ngramhash.gf2poly import Modulus, from_monomial_str, is_irreducible
from ngramhash.indeptest import (
    PAIRWISE,
    UNIFORM,
    FamilySpec,
    check_karp_rabin_matrix,
    check_recursive_collapse,
    check_threewise,
    check_trailing_zero,
    enumerate_counts,
    k_wise,
)
from ngramhash.cli import run_bench
from ngramhash.rolling import (
    CYCLIC,
    GENERAL,
    KARP_RABIN,
    THREE_WISE,
    TRUNCATED_CYCLIC,
    HasherConfig,
)
from ngramhash.verify import default_modulus, suite_rolling_equivalence

AA, AB, BA, BB = (0, 0), (0, 1), (1, 0), (1, 1)


@contextmanager
def criterion(name, budget_s):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL")
        raise
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {name}: PASS ({elapsed:.2f}s, budget {budget_s}s)")
    assert elapsed < budget_s, f"{name} exceeded its {budget_s}s budget"


def test_c1_general_pairwise_independence():
    with criterion("1 general pairwise", 1 + 10):
        for L, poly, budget in ((2, 0b111, 1), (3, 0b1011, 10)):
            start = time.monotonic()
            cfg = HasherConfig(GENERAL, n=2, L=L, p=Modulus.irreducible(poly))
            spec = FamilySpec(cfg, 2)
            rep = enumerate_counts(spec, prop=PAIRWISE)
            target = spec.family_size // (1 << (2 * L))
            assert rep.verdict
            assert len(rep.gram_tuples) == 6
            assert all(c == target for c in rep.counts.values())
            assert time.monotonic() - start < budget


def test_c2_cyclic_non_uniformity():
    with criterion("2 cyclic non-uniform", 1):
        cfg = HasherConfig(CYCLIC, n=2, L=3)
        rep = enumerate_counts(FamilySpec(cfg, 1), prop=UNIFORM)
        assert not rep.verdict
        assert rep.counts[((AA,), (0,))] == 2
        assert rep.family_size == 8


def test_c3_truncated_cyclic_pairwise():
    with criterion("3 truncated-cyclic pairwise", 1 + 30):
        start = time.monotonic()
        for off in range(3):
            cfg = HasherConfig(TRUNCATED_CYCLIC, n=2, L=3, drop_offset=off)
            rep = enumerate_counts(FamilySpec(cfg, 2), prop=PAIRWISE)
            assert rep.verdict
            assert all(c == 4 for c in rep.counts.values())
        assert time.monotonic() - start < 1
        for off in range(4):
            cfg = HasherConfig(TRUNCATED_CYCLIC, n=2, L=4, drop_offset=off)
            rep = enumerate_counts(FamilySpec(cfg, 2), prop=PAIRWISE)
            assert rep.verdict
            target = rep.family_size // (1 << (2 * rep.output_width))
            assert all(c == target for c in rep.counts.values())


def test_c4_karp_rabin_matrix():
    with criterion("4 karp-rabin matrix", 10):
        matrix = check_karp_rabin_matrix(L=3, n_values=(2, 3), B_values=(2, 3))
        assert not matrix[(3, 2)]["uniform"]
        assert matrix[(2, 2)]["uniform"]
        assert matrix[(3, 3)]["uniform"]
        for key in ((3, 2), (2, 2), (3, 3)):
            assert not matrix[key]["pairwise"]


def test_c5_three_wise_family():
    with criterion("5 three-wise", 5):
        res = check_threewise(L=2, n=2, alphabet_size=2)
        assert res["three_wise"]
        assert not res["four_wise"]
        assert res["xor_zero"]
        cfg = HasherConfig(THREE_WISE, n=2, L=2)
        spec = FamilySpec(cfg, 2)
        assert spec.family_size == 256
        rep = enumerate_counts(spec, prop=k_wise(3))
        assert all(c == 4 for c in rep.counts.values())
        quad = enumerate_counts(spec, gram_tuples=[(AA, AB, BA, BB)], prop=k_wise(4))
        assert quad.counts.get(((AA, AB, BA, BB), (0, 0, 0, 1)), 0) == 0


def test_c6_recursive_trailing_zero_collapse():
    with criterion("6 recursive collapse", 5):
        L = 3
        for scheme, kwargs in (
            (CYCLIC, {}),
            (GENERAL, {"p": default_modulus(L)}),
            (KARP_RABIN, {}),
        ):
            cfg = HasherConfig(scheme, n=2, L=L, **kwargs)
            spec = FamilySpec(cfg, 2)
            holds, premises = check_recursive_collapse(spec)
            assert holds and premises > 0
            rep3 = check_trailing_zero(spec, [(AA, AB, BB)], [(L, L, L)])
            rep2 = check_trailing_zero(spec, [(AA, AB)], [(L, L)])
            assert not rep3.verdict
            count3 = rep3.counts.get(((AA, AB, BB), (L, L, L)), 0)
            count2 = rep2.counts.get(((AA, AB), (L, L)), 0)
            assert count3 == count2
        # the pairwise-independent scheme meets the 2-wise target exactly
        cfg = HasherConfig(GENERAL, n=2, L=L, p=default_modulus(L))
        spec = FamilySpec(cfg, 2)
        jvecs = [(j1, j2) for j1 in range(L + 1) for j2 in range(L + 1)]
        rep = check_trailing_zero(spec, [(AA, AB)] * len(jvecs), jvecs)
        assert rep.verdict


def test_c7_rolling_equivalence():
    with criterion("7 rolling equivalence", 60):
        ok, checks = suite_rolling_equivalence(instances=10_000)
        assert ok, checks


def test_c8_irreducibility_fixtures():
    with criterion("8 irreducibility", 5):
        published = [
            "x^10+x^3+1",
            "x^15+x+1",
            "x^20+x^3+1",
            "x^25+x^3+1",
            "x^30+x^6+x^4+x+1",
            "x^19+x^5+x^2+x+1",
        ]
        for poly in published:
            assert is_irreducible(from_monomial_str(poly)), poly
        for L in range(2, 21):
            assert not is_irreducible((1 << L) | 1), L


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(20090601)
    return bytes(rng.choices(range(32, 127), k=1_000_000))


def _interleaved_bench(corpus, jobs, reps):
    """Best-of-reps ns/gram per job, with reps round-robined across the
    jobs so a burst of machine contention cannot skew a single job."""
    from ngramhash.rolling import bench_checksum, make_tables
    from ngramhash.cli import build_config

    setups = {}
    for job in jobs:
        scheme, n = job
        cfg = build_config(scheme, n, 19, seed=0)
        tables = make_tables(cfg)
        bench_checksum(cfg, tables, corpus)  # warm-up
        setups[job] = (cfg, tables)
    best = dict.fromkeys(jobs)
    for _ in range(reps):
        for job, (cfg, tables) in setups.items():
            start = time.process_time_ns()
            count, _ = bench_checksum(cfg, tables, corpus)
            elapsed = time.process_time_ns() - start
            if best[job] is None or elapsed < best[job]:
                best[job] = elapsed
    return {
        job: best[job] / (len(corpus) - job[1] + 1) for job in jobs
    }


def test_c9_benchmark_shape(corpus):
    with criterion("9 benchmark shape", 120):
        ns = (1, 2, 5, 10, 25)
        run_bench(corpus[:100_000], CYCLIC, 5, 19, reps=1)  # process warm-up
        per_gram = _interleaved_bench(
            corpus, [(THREE_WISE, n) for n in ns], reps=2
        )
        per_gram.update(
            _interleaved_bench(
                corpus,
                [(s, n) for s in (CYCLIC, KARP_RABIN) for n in ns],
                reps=6,
            )
        )
        general25 = run_bench(corpus, GENERAL, 25, 19, reps=2).ns_per_gram

        # (a) the table-lookup scheme pays for n
        tw = [per_gram[(THREE_WISE, n)] for n in ns]
        assert all(a < b for a, b in zip(tw, tw[1:])), tw
        # (b) the O(1)-per-symbol schemes are oblivious to n
        for scheme in (CYCLIC, KARP_RABIN):
            vals = [per_gram[(scheme, n)] for n in ns]
            spread = (max(vals) - min(vals)) / min(vals)
            assert spread < 0.20, (scheme, vals)
        # (c) rotation beats reduce-by-irreducible at large n
        assert per_gram[(CYCLIC, 25)] <= general25
        # (d) n table lookups cost at least twice one rotation update
        assert per_gram[(THREE_WISE, 5)] >= 2 * per_gram[(CYCLIC, 5)]
