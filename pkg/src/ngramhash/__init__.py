"""Recursive and non-recursive n-gram hash families over GF(2) and
integer rings, with an exhaustive independence verifier and a
benchmark harness."""

from .charhash import CharHashTable, explicit_table, new_table
from .gf2poly import Modulus
from .rolling import (
    CYCLIC,
    GENERAL,
    KARP_RABIN,
    RAM_GENERAL,
    SCHEMES,
    THREE_WISE,
    TRUNCATED_CYCLIC,
    HasherConfig,
    hash_full,
    make_hasher,
    make_tables,
    stream_hashes,
    truncate_window,
)

__all__ = [
    "CharHashTable",
    "HasherConfig",
    "Modulus",
    "SCHEMES",
    "THREE_WISE",
    "KARP_RABIN",
    "GENERAL",
    "RAM_GENERAL",
    "CYCLIC",
    "TRUNCATED_CYCLIC",
    "explicit_table",
    "new_table",
    "hash_full",
    "make_hasher",
    "make_tables",
    "stream_hashes",
    "truncate_window",
]

__version__ = "0.1.0"
