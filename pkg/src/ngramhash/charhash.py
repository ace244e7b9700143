"""Per-symbol hash tables: the inner hash mapping symbols to L-bit words.

A table is a frozen array of L-bit values indexed by symbol code.
Production tables are filled by a seeded Mersenne Twister (Python's
``random.Random``), so (seed, L, alphabet_size) reproduces the table
bit-for-bit.  Exhaustive verification uses ``explicit_table`` to pin
every entry.
"""

from __future__ import annotations

import random

from .gf2poly import MAX_WIDTH


class CharHashTable:
    """Immutable map from symbol codes [0, alphabet_size) to L-bit values."""

    __slots__ = ("values", "L", "alphabet_size", "seed")

    def __init__(self, values, L, seed=None):
        if not 1 <= L <= MAX_WIDTH:
            raise ValueError(f"L must be in [1, {MAX_WIDTH}], got {L}")
        values = tuple(values)
        if not values:
            raise ValueError("alphabet must have at least one symbol")
        for v in values:
            if not 0 <= v < (1 << L):
                raise ValueError(f"table entry {v} does not fit in {L} bits")
        self.values = values
        self.L = L
        self.alphabet_size = len(values)
        self.seed = seed

    def lookup(self, c):
        """Hash value of symbol c; out-of-alphabet symbols are an error."""
        if not 0 <= c < self.alphabet_size:
            raise ValueError(
                f"symbol {c} outside alphabet [0, {self.alphabet_size})"
            )
        return self.values[c]

    def __getitem__(self, c):
        return self.lookup(c)

    def __eq__(self, other):
        return (
            isinstance(other, CharHashTable)
            and self.values == other.values
            and self.L == other.L
        )

    def __hash__(self):
        return hash((self.values, self.L))

    def dump(self):
        """Text form: header 'L alphabet_size seed', one hex word per line."""
        seed = self.seed if self.seed is not None else "-"
        lines = [f"{self.L} {self.alphabet_size} {seed}"]
        lines.extend(format(v, "x") for v in self.values)
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text):
        lines = text.strip().splitlines()
        L_str, size_str, seed_str = lines[0].split()
        L, size = int(L_str), int(size_str)
        values = [int(line, 16) for line in lines[1 : 1 + size]]
        if len(values) != size:
            raise ValueError("table dump truncated")
        seed = None if seed_str == "-" else int(seed_str)
        return cls(values, L, seed=seed)


def new_table(L, alphabet_size, seed):
    """Seeded table with entries drawn uniformly from [0, 2^L)."""
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be >= 1")
    if not 1 <= L <= MAX_WIDTH:
        raise ValueError(f"L must be in [1, {MAX_WIDTH}], got {L}")
    rng = random.Random(seed)
    values = [rng.getrandbits(L) for _ in range(alphabet_size)]
    return CharHashTable(values, L, seed=seed)


def explicit_table(values, L):
    """Table with exactly the given entries; used to enumerate families."""
    return CharHashTable(values, L)
