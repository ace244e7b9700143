"""Streaming n-gram hash families.

Six schemes behind one interface:

* ``three-wise``      -- XOR of n per-position symbol hashes (non-recursive).
* ``karp-rabin``      -- randomized integer-division hashing mod 2^L.
* ``general``         -- polynomial hashing in GF(2)[x]/p(x), p irreducible;
                         the outgoing symbol is re-shifted n times per char.
* ``ram-general``     -- same hash, with the n-fold shift replaced by
                         precomputed lookup tables (optionally split K ways).
* ``cyclic``          -- polynomial hashing mod x^L+1; shifts are rotations.
* ``truncated-cyclic``-- cyclic with n-1 consecutive (mod L) bits dropped
                         from each output, leaving L-n+1 bits.

Every scheme exposes the same contract: feed symbols one at a time with
``eat``; once the window holds n symbols, each call returns one hash
value, always equal to ``hash_full`` of the current window.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from . import gf2poly
from .charhash import CharHashTable, new_table
from .gf2poly import MAX_WIDTH, Modulus, mul_mod, shift_mod

THREE_WISE = "three-wise"
KARP_RABIN = "karp-rabin"
GENERAL = "general"
RAM_GENERAL = "ram-general"
CYCLIC = "cyclic"
TRUNCATED_CYCLIC = "truncated-cyclic"

SCHEMES = (THREE_WISE, KARP_RABIN, GENERAL, RAM_GENERAL, CYCLIC, TRUNCATED_CYCLIC)

DEFAULT_B = 37


@dataclass(frozen=True)
class HasherConfig:
    """Family selector plus the parameters the chosen scheme needs."""

    scheme: str
    n: int
    L: int
    seed: int = 0
    B: int = DEFAULT_B  # karp-rabin only
    p: Modulus | None = None  # general / ram-general only
    k_split: int = 1  # ram-general only
    drop_offset: int | None = None  # truncated-cyclic only

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 1 <= self.L <= MAX_WIDTH:
            raise ValueError(f"L must be in [1, {MAX_WIDTH}]")
        if self.scheme in (GENERAL, RAM_GENERAL):
            if self.p is None:
                raise ValueError(f"{self.scheme} requires a modulus polynomial")
            if self.p.kind != "irreducible":
                raise ValueError(f"{self.scheme} requires an irreducible modulus")
            if self.p.L != self.L:
                raise ValueError("modulus degree must equal L")
            if self.L < self.n:
                raise ValueError(f"{self.scheme} requires L >= n")
        if self.scheme == RAM_GENERAL:
            if self.k_split < 1 or self.n % self.k_split != 0:
                raise ValueError("k_split must be a positive divisor of n")
        if self.scheme in (CYCLIC, TRUNCATED_CYCLIC) and self.L < self.n:
            raise ValueError(f"{self.scheme} requires L >= n")
        if self.scheme == TRUNCATED_CYCLIC:
            off = self.drop_offset
            if off is None:
                # drop the top n-1 bits by default (nothing to drop at n=1)
                default = self.L - self.n + 1 if self.n > 1 else 0
                object.__setattr__(self, "drop_offset", default)
            elif not 0 <= off < self.L:
                raise ValueError("drop_offset must be in [0, L)")

    @property
    def output_width(self):
        """Bits per emitted hash: L, except L-n+1 for truncated-cyclic."""
        if self.scheme == TRUNCATED_CYCLIC:
            return self.L - self.n + 1
        return self.L

    @property
    def num_tables(self):
        """Symbol tables the scheme draws: n for three-wise, else one."""
        return self.n if self.scheme == THREE_WISE else 1

    def to_text(self):
        lines = [
            f"scheme={self.scheme}",
            f"n={self.n}",
            f"L={self.L}",
            f"seed={self.seed}",
        ]
        if self.scheme == KARP_RABIN:
            lines.append(f"B={self.B}")
        if self.scheme in (GENERAL, RAM_GENERAL):
            lines.append(f"p={gf2poly.to_hex(self.p.poly)}")
        if self.scheme == RAM_GENERAL:
            lines.append(f"k_split={self.k_split}")
        if self.scheme == TRUNCATED_CYCLIC:
            lines.append(f"drop_offset={self.drop_offset}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        kv = {}
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            key, _, value = line.partition("=")
            kv[key.strip()] = value.strip()
        kwargs = {
            "scheme": kv["scheme"],
            "n": int(kv["n"]),
            "L": int(kv["L"]),
            "seed": int(kv.get("seed", 0)),
        }
        if "B" in kv:
            kwargs["B"] = int(kv["B"])
        if "p" in kv:
            kwargs["p"] = Modulus.irreducible(gf2poly.from_hex(kv["p"]))
        if "k_split" in kv:
            kwargs["k_split"] = int(kv["k_split"])
        if "drop_offset" in kv:
            kwargs["drop_offset"] = int(kv["drop_offset"])
        return cls(**kwargs)


def make_tables(cfg: HasherConfig, alphabet_size=256):
    """Seeded symbol tables for cfg: a tuple of n tables for three-wise,
    a single table otherwise."""
    rng = random.Random(cfg.seed)
    tables = tuple(
        new_table(cfg.L, alphabet_size, rng.getrandbits(64))
        for _ in range(cfg.num_tables)
    )
    return tables if cfg.scheme == THREE_WISE else tables[0]


def _check_tables(cfg, tables):
    if cfg.scheme == THREE_WISE:
        if isinstance(tables, CharHashTable) or len(tables) != cfg.n:
            raise ValueError("three-wise needs one table per window position")
        return tuple(tables)
    if not isinstance(tables, CharHashTable):
        raise ValueError(f"{cfg.scheme} takes a single symbol table")
    return tables


def truncate_window(v, drop_offset, n, L):
    """Drop the n-1 bits at positions drop_offset..drop_offset+n-2 (mod L)
    from an L-bit value; survivors are repacked starting just past the
    dropped window, in increasing position order."""
    if not 0 <= drop_offset < L:
        raise ValueError("drop_offset must be in [0, L)")
    if n == 1:
        return v
    width = L - n + 1
    out = 0
    for i in range(width):
        pos = (drop_offset + n - 1 + i) % L
        out |= ((v >> pos) & 1) << i
    return out


def hash_full(cfg: HasherConfig, tables, gram):
    """Non-streaming reference hash of one complete n-gram."""
    tables = _check_tables(cfg, tables)
    if len(gram) != cfg.n:
        raise ValueError(f"expected an n-gram of {cfg.n} symbols, got {len(gram)}")
    if cfg.scheme == THREE_WISE:
        acc = 0
        for t, c in zip(tables, gram):
            acc ^= t.lookup(c)
        return acc
    if cfg.scheme == KARP_RABIN:
        mask = (1 << cfg.L) - 1
        acc = 0
        for c in gram:
            acc = (acc * cfg.B + tables.lookup(c)) & mask
        return acc
    if cfg.scheme in (GENERAL, RAM_GENERAL):
        acc = 0
        for c in gram:
            acc = shift_mod(acc, cfg.p) ^ tables.lookup(c)
        return acc
    # cyclic / truncated-cyclic
    L = cfg.L
    mask = (1 << L) - 1
    acc = 0
    for c in gram:
        acc = (((acc << 1) | (acc >> (L - 1))) & mask) ^ tables.lookup(c)
    if cfg.scheme == TRUNCATED_CYCLIC:
        acc = truncate_window(acc, cfg.drop_offset, cfg.n, L)
    return acc


def build_shift_tables(p: Modulus, n, K, max_entries=1 << 22):
    """Lookup tables turning the n-fold shift into K lookups.

    The top n bits of an L-bit value are cut into K slices of n/K bits;
    table j maps each slice value (placed at its true bit positions) to
    its product with x^n mod p.  The low L-n bits shift left by n with
    no reduction, so x^n * v costs one plain shift plus K lookups.
    """
    if K < 1 or n % K != 0:
        raise ValueError("K must be a positive divisor of n")
    if n > p.L:
        raise ValueError("requires n <= degree(p)")
    m = n // K
    if K * (1 << m) > max_entries:
        raise ValueError(
            f"shift tables need {K * (1 << m)} entries, over the cap {max_entries}"
        )
    xn = 1
    for _ in range(n):
        xn = shift_mod(xn, p)
    tables = []
    for j in range(K):
        base = p.L - n + j * m
        tables.append(
            [mul_mod(v << base, xn, p) for v in range(1 << m)]
        )
    return tables


class RollingHasher:
    """FIFO bookkeeping shared by every scheme.

    Subclasses implement the per-character update (``_absorb``), the
    value to emit once the window is full (``_emit``), and what to do
    with the expiring symbol (``_expire``).
    """

    def __init__(self, cfg: HasherConfig, tables):
        self.cfg = cfg
        self.tables = _check_tables(cfg, tables)
        self.fifo = deque()
        self.reset()

    def reset(self):
        self.fifo.clear()
        self._reset_state()

    @property
    def window(self):
        """The up-to-n symbols currently buffered."""
        return tuple(self.fifo)

    def eat(self, c):
        """Absorb one symbol; return a hash once the window is full."""
        self._absorb(c)
        self.fifo.append(c)
        if len(self.fifo) == self.cfg.n:
            value = self._emit()
            self._expire(self.fifo.popleft())
            return value
        return None

    def _reset_state(self):
        pass

    def _absorb(self, c):
        raise NotImplementedError

    def _emit(self):
        raise NotImplementedError

    def _expire(self, y):
        pass


class ThreeWise(RollingHasher):
    """XOR of position-wise independent symbol hashes (not recursive)."""

    def _absorb(self, c):
        self.tables[0].lookup(c)  # validate symbol eagerly

    def _emit(self):
        acc = 0
        for t, c in zip(self.tables, self.fifo):
            acc ^= t.values[c]
        return acc


class KarpRabin(RollingHasher):
    """Randomized Karp-Rabin: x <- B*x - B^n*z + h1(c) mod 2^L."""

    def _reset_state(self):
        self.mask = (1 << self.cfg.L) - 1
        self.Bn = pow(self.cfg.B, self.cfg.n, 1 << self.cfg.L)
        self.x = 0
        self.z = 0

    def _absorb(self, c):
        self.x = (self.cfg.B * self.x - self.Bn * self.z + self.tables.lookup(c)) & self.mask

    def _emit(self):
        return self.x

    def _expire(self, y):
        self.z = self.tables.values[y]


class General(RollingHasher):
    """Polynomial hashing mod an irreducible p(x); O(n) work per symbol
    because the outgoing hash is re-shifted n times, as a baseline for
    the RAM-buffered variant."""

    def _reset_state(self):
        self.x = 0
        self.z = 0

    def _shift_z(self):
        z = self.z
        p = self.cfg.p
        for _ in range(self.cfg.n):
            z = shift_mod(z, p)
        return z

    def _absorb(self, c):
        self.z = self._shift_z()
        self.x = shift_mod(self.x, self.cfg.p) ^ self.z ^ self.tables.lookup(c)

    def _emit(self):
        return self.x

    def _expire(self, y):
        self.z = self.tables.values[y]


class RamBufferedGeneral(General):
    """General with the n-fold shift served from precomputed tables."""

    def _reset_state(self):
        super()._reset_state()
        cfg = self.cfg
        self.shift_tables = build_shift_tables(cfg.p, cfg.n, cfg.k_split)
        self.m = cfg.n // cfg.k_split
        self.low_mask = (1 << (cfg.L - cfg.n)) - 1
        self.slice_mask = (1 << self.m) - 1

    def _shift_z(self):
        cfg = self.cfg
        out = (self.z & self.low_mask) << cfg.n
        base = cfg.L - cfg.n
        for j, table in enumerate(self.shift_tables):
            out ^= table[(self.z >> (base + j * self.m)) & self.slice_mask]
        return out


class Cyclic(RollingHasher):
    """Polynomial hashing mod x^L+1: every shift is a bit rotation."""

    def _reset_state(self):
        L = self.cfg.L
        self.mask = (1 << L) - 1
        self.rot_n = self.cfg.n % L
        self.x = 0
        self.z = 0

    def _rot(self, v, k):
        L = self.cfg.L
        return ((v << k) | (v >> (L - k))) & self.mask if k else v

    def _absorb(self, c):
        self.z = self._rot(self.z, self.rot_n)
        self.x = self._rot(self.x, 1) ^ self.z ^ self.tables.lookup(c)

    def _emit(self):
        return self.x

    def _expire(self, y):
        self.z = self.tables.values[y]


class TruncatedCyclic(Cyclic):
    """Cyclic with n-1 consecutive bits removed from every output;
    no longer formally recursive, but pairwise independent."""

    def _reset_state(self):
        super()._reset_state()
        cfg = self.cfg
        # the surviving bits are consecutive mod L: rotate, then mask
        self._start = (cfg.drop_offset + cfg.n - 1) % cfg.L if cfg.n > 1 else 0
        self._out_mask = (1 << cfg.output_width) - 1

    def _emit(self):
        L = self.cfg.L
        s = self._start
        x = self.x
        return ((x >> s) | (x << (L - s))) & self._out_mask if s else x & self._out_mask


_HASHERS = {
    THREE_WISE: ThreeWise,
    KARP_RABIN: KarpRabin,
    GENERAL: General,
    RAM_GENERAL: RamBufferedGeneral,
    CYCLIC: Cyclic,
    TRUNCATED_CYCLIC: TruncatedCyclic,
}


def make_hasher(cfg: HasherConfig, tables):
    """Streaming hasher for cfg over the given symbol tables."""
    return _HASHERS[cfg.scheme](cfg, tables)


def stream_hashes(cfg: HasherConfig, tables, data):
    """Hash every complete n-gram of data, in stream order."""
    hasher = make_hasher(cfg, tables)
    for c in data:
        value = hasher.eat(c)
        if value is not None:
            yield value


def bench_checksum(cfg: HasherConfig, tables, data):
    """Tight per-scheme loop over a byte string, for benchmarking.

    Returns (count, xor-of-hashes).  Equivalent to folding
    ``stream_hashes`` but with the update rules inlined so per-scheme
    costs dominate, not interpreter plumbing.
    """
    tables = _check_tables(cfg, tables)
    n, L = cfg.n, cfg.L
    nm1 = n - 1
    size = len(data)
    count = max(size - nm1, 0)
    cs = 0
    prefill = data[: min(nm1, size)]
    incoming = data[nm1:]  # paired below with the expiring symbol

    if cfg.scheme == THREE_WISE:
        tv = [t.values for t in tables]
        for i in range(nm1, size):
            acc = 0
            j0 = i - nm1
            for t in tv:
                acc ^= t[data[j0]]
                j0 += 1
            cs ^= acc
        return count, cs

    h = tables.values
    if cfg.scheme == KARP_RABIN:
        mask = (1 << L) - 1
        B = cfg.B
        Bn = pow(B, n, 1 << L)
        # B^n * h1(y) per expiring symbol, reduced so every operand
        # stays under 2^L regardless of n
        bnh = [(Bn * v) & mask for v in h]
        x = z = 0
        for c in prefill:
            x = (B * x + h[c]) & mask
        for cin, cout in zip(incoming, data):
            x = (B * x - z + h[cin]) & mask
            cs ^= x
            z = bnh[cout]
        return count, cs

    if cfg.scheme in (GENERAL, RAM_GENERAL):
        P = cfg.p.poly
        x = 0
        for c in prefill:
            x <<= 1
            if x >> L:
                x ^= P
            x ^= h[c]
        z = 0
        if cfg.scheme == GENERAL:
            # outgoing hash is re-shifted n times, as the O(nL) baseline
            for cin, cout in zip(incoming, data):
                x <<= 1
                if x >> L:
                    x ^= P
                x ^= z ^ h[cin]
                cs ^= x
                z = h[cout]
                for _ in range(n):
                    z <<= 1
                    if z >> L:
                        z ^= P
        else:
            shift_tables = build_shift_tables(cfg.p, n, cfg.k_split)
            m = n // cfg.k_split
            low_mask = (1 << (L - n)) - 1
            base = L - n
            slice_mask = (1 << m) - 1
            for cin, cout in zip(incoming, data):
                x <<= 1
                if x >> L:
                    x ^= P
                x ^= z ^ h[cin]
                cs ^= x
                z = h[cout]
                zz = (z & low_mask) << n
                sh = base
                for table in shift_tables:
                    zz ^= table[(z >> sh) & slice_mask]
                    sh += m
                z = zz
        return count, cs

    # cyclic / truncated-cyclic
    mask = (1 << L) - 1
    Lm1 = L - 1
    r = n % L
    hrot = [(((v << r) | (v >> (L - r))) & mask) if r else v for v in h]
    truncated = cfg.scheme == TRUNCATED_CYCLIC
    if truncated:
        # survivors form a contiguous (mod L) run: rotate then mask
        s = (cfg.drop_offset + nm1) % L if n > 1 else 0
        Ls = L - s if s else 0
        wmask = (1 << (L - nm1)) - 1
        x = z = 0
        for c in prefill:
            x = (((x << 1) | (x >> Lm1)) & mask) ^ h[c]
        for cin, cout in zip(incoming, data):
            x = (((x << 1) | (x >> Lm1)) & mask) ^ z ^ h[cin]
            cs ^= ((x >> s) | (x << Ls)) & wmask
            z = hrot[cout]
        return count, cs
    x = z = 0
    for c in prefill:
        x = (((x << 1) | (x >> Lm1)) & mask) ^ h[c]
    for cin, cout in zip(incoming, data):
        x = (((x << 1) | (x >> Lm1)) & mask) ^ z ^ h[cin]
        cs ^= x
        z = hrot[cout]
    return count, cs
