"""Named verification suites: each certifies one family of claims by
exhaustive enumeration or randomized cross-checking.

Every suite returns (ok, checks) where checks is a list of
(label, passed) pairs.  A suite passes when every check does; checks
for negative claims are phrased so that True means the claim held
(e.g. "uniformity fails" is True when enumeration refuted uniformity).
"""

from __future__ import annotations

import random
from functools import lru_cache

from .gf2poly import Modulus, from_monomial_str, is_irreducible
from .indeptest import (
    PAIRWISE,
    UNIFORM,
    FamilySpec,
    check_karp_rabin_matrix,
    check_recursive_collapse,
    check_threewise,
    check_trailing_zero,
    enumerate_counts,
    g_transform,
)
from .rolling import (
    CYCLIC,
    GENERAL,
    KARP_RABIN,
    RAM_GENERAL,
    SCHEMES,
    TRUNCATED_CYCLIC,
    HasherConfig,
    hash_full,
    make_tables,
    stream_hashes,
)

#: published irreducible polynomials by degree, used as default moduli
KNOWN_IRREDUCIBLE = {
    deg: from_monomial_str(s)
    for deg, s in {
        10: "x^10+x^3+1",
        15: "x^15+x+1",
        19: "x^19+x^5+x^2+x+1",
        20: "x^20+x^3+1",
        25: "x^25+x^3+1",
        30: "x^30+x^6+x^4+x+1",
    }.items()
}


@lru_cache(maxsize=None)
def default_modulus(L):
    """An irreducible degree-L modulus: a published one if we have it,
    else the smallest irreducible polynomial of degree L."""
    poly = KNOWN_IRREDUCIBLE.get(L)
    if poly is None:
        for c in range(1, 1 << L, 2):
            if is_irreducible((1 << L) | c):
                poly = (1 << L) | c
                break
    return Modulus.irreducible(poly)


def suite_general_pairwise():
    checks = []
    for L, poly in ((2, 0b111), (3, 0b1011)):
        cfg = HasherConfig(GENERAL, n=2, L=L, p=Modulus.irreducible(poly))
        rep = enumerate_counts(FamilySpec(cfg, 2), prop=PAIRWISE)
        checks.append((f"general L={L} n=2 pairwise independent", rep.verdict))
    return all(v for _, v in checks), checks


def suite_cyclic_nonuniform():
    cfg = HasherConfig(CYCLIC, n=2, L=3)
    spec = FamilySpec(cfg, 1)
    rep = enumerate_counts(spec, prop=UNIFORM)
    zero_count = rep.counts.get((((0, 0),), (0,)), 0)
    checks = [
        ("cyclic L=3 n=2 uniformity refuted", not rep.verdict),
        ("h(aa)=0 for exactly 2 of 8 tables", zero_count == 2),
    ]
    return all(v for _, v in checks), checks


def suite_truncated_cyclic_pairwise():
    checks = []
    for L in (3, 4):
        for off in range(L):
            cfg = HasherConfig(TRUNCATED_CYCLIC, n=2, L=L, drop_offset=off)
            rep = enumerate_counts(FamilySpec(cfg, 2), prop=PAIRWISE)
            checks.append(
                (f"truncated-cyclic L={L} drop_offset={off} pairwise", rep.verdict)
            )
    return all(v for _, v in checks), checks


def suite_karp_rabin_matrix():
    matrix = check_karp_rabin_matrix(L=3, n_values=(2, 3), B_values=(2, 3))
    checks = []
    for (B, n) in ((3, 2), (2, 2), (3, 3)):
        cell = matrix[(B, n)]
        want = cell["predicted_uniform"]
        checks.append(
            (
                f"karp-rabin B={B} n={n} uniform {'holds' if want else 'refuted'}",
                cell["uniform"] == want,
            )
        )
        checks.append(
            (f"karp-rabin B={B} n={n} pairwise refuted", not cell["pairwise"])
        )
    return all(v for _, v in checks), checks


def suite_threewise():
    res = check_threewise(L=2, n=2, alphabet_size=2)
    checks = [
        ("three-wise L=2 n=2 3-wise independent", res["three_wise"]),
        ("three-wise L=2 n=2 4-wise refuted", not res["four_wise"]),
        ("four-gram XOR dependency holds for all members", res["xor_zero"]),
    ]
    return all(v for _, v in checks), checks


def suite_trailing_zero():
    checks = []
    L, n = 3, 2
    aa, ab, bb = (0, 0), (0, 1), (1, 1)
    for scheme in (CYCLIC, GENERAL, KARP_RABIN):
        p = default_modulus(L) if scheme == GENERAL else None
        cfg = HasherConfig(scheme, n=n, L=L, p=p)
        spec = FamilySpec(cfg, 2)

        holds, premises = check_recursive_collapse(spec)
        checks.append((f"{scheme} zero-hash collapse on a^n b b", holds))
        checks.append((f"{scheme} collapse premise realized", premises > 0))

        rep3 = check_trailing_zero(spec, [(aa, ab, bb)], [(L, L, L)])
        rep2 = check_trailing_zero(spec, [(aa, ab)], [(L, L)])
        count3 = rep3.counts.get(((aa, ab, bb), (L, L, L)), 0)
        count2 = rep2.counts.get(((aa, ab), (L, L)), 0)
        checks.append((f"{scheme} 3-wise trailing-zero refuted", not rep3.verdict))
        checks.append(
            (f"{scheme} 3-wise joint count collapses to 2-wise", count3 == count2)
        )

    # the pairwise-independent scheme meets every 2-wise target exactly
    cfg = HasherConfig(GENERAL, n=n, L=L, p=default_modulus(L))
    spec = FamilySpec(cfg, 2)
    jointly = [(aa, ab)] * ((L + 1) ** 2)
    jvecs = [(j1, j2) for j1 in range(L + 1) for j2 in range(L + 1)]
    rep = check_trailing_zero(spec, jointly, jvecs)
    checks.append(("general 2-wise trailing-zero exact at all j", rep.verdict))

    # lowest-set-bit composition: trailing zeros stay independent while
    # the value distribution becomes skewed
    cfg1 = HasherConfig(CYCLIC, n=1, L=L)
    spec1 = FamilySpec(cfg1, 2)
    a, b = (0,), (1,)
    rep_tz = check_trailing_zero(
        spec1, [(a, b)] * (L + 1) ** 2,
        [(j1, j2) for j1 in range(L + 1) for j2 in range(L + 1)],
        transform=g_transform,
    )
    rep_u = enumerate_counts(
        spec1, gram_tuples=[(a,)], prop=UNIFORM, transform=g_transform
    )
    low = rep_u.counts.get(((a,), (1,)), 0)
    high = rep_u.counts.get(((a,), (1 << (L - 1),)), 0)
    checks.append(("g-composed family 2-wise trailing-zero exact", rep_tz.verdict))
    checks.append(("g-composed family uniformity refuted", not rep_u.verdict))
    checks.append(
        (f"count(g=1) = {1 << (L - 1)} * count(g=2^{L - 1})", low == (1 << (L - 1)) * high)
    )
    return all(v for _, v in checks), checks


def _random_config(rng):
    scheme = rng.choice(SCHEMES)
    n = rng.randint(1, 8)
    L = rng.randint(max(n, 1), 16)
    seed = rng.getrandbits(64)
    kwargs = {}
    if scheme in (GENERAL, RAM_GENERAL):
        kwargs["p"] = default_modulus(L)
    if scheme == RAM_GENERAL:
        divisors = [k for k in range(1, n + 1) if n % k == 0]
        kwargs["k_split"] = rng.choice(divisors)
    if scheme == KARP_RABIN:
        kwargs["B"] = rng.randint(2, 64)
    if scheme == TRUNCATED_CYCLIC:
        kwargs["drop_offset"] = rng.randrange(L)
    return HasherConfig(scheme, n=n, L=L, seed=seed, **kwargs)


def _windows_match(cfg, tables, data):
    got = list(stream_hashes(cfg, tables, data))
    want = [
        hash_full(cfg, tables, data[i : i + cfg.n])
        for i in range(len(data) - cfg.n + 1)
    ]
    return got == want


def suite_rolling_equivalence(instances=10_000, seed=20240819):
    """Randomized check that every emitted rolling hash equals the
    from-scratch hash of its window, and that the table-buffered
    variant reproduces the plain O(n)-per-symbol one exactly."""
    rng = random.Random(seed)
    mismatches = 0
    ram_mismatches = 0
    per_scheme = dict.fromkeys(SCHEMES, 0)
    for _ in range(instances):
        cfg = _random_config(rng)
        per_scheme[cfg.scheme] += 1
        tables = make_tables(cfg, alphabet_size=256)
        data = rng.randbytes(rng.randint(0, 256))
        if not _windows_match(cfg, tables, data):
            mismatches += 1
        if cfg.scheme == GENERAL:
            base = list(stream_hashes(cfg, tables, data))
            for K in (1, 2):
                if cfg.n % K:
                    continue
                ram_cfg = HasherConfig(
                    RAM_GENERAL, n=cfg.n, L=cfg.L, seed=cfg.seed, p=cfg.p, k_split=K
                )
                if list(stream_hashes(ram_cfg, tables, data)) != base:
                    ram_mismatches += 1
    checks = [
        (f"rolling = from-scratch on {instances} random instances", mismatches == 0),
        ("general = ram-general for K in {1,2}", ram_mismatches == 0),
        ("every scheme exercised", all(c > 0 for c in per_scheme.values())),
    ]
    return all(v for _, v in checks), checks


SUITES = {
    "general-pairwise": suite_general_pairwise,
    "cyclic-nonuniform": suite_cyclic_nonuniform,
    "truncated-cyclic-pairwise": suite_truncated_cyclic_pairwise,
    "karp-rabin-matrix": suite_karp_rabin_matrix,
    "threewise": suite_threewise,
    "trailing-zero": suite_trailing_zero,
    "rolling-equivalence": suite_rolling_equivalence,
}


def run_suite(name, **kwargs):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
