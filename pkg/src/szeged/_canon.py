"""Bit-level canonical labeling machinery.

A labeled graph on n vertices is a 0/1 vector over the C(n,2) vertex pairs in
column order (0,1), (0,2), (1,2), (0,3), ... — the same order graph6 uses.
The canonical form of a graph is the lexicographically smallest such vector
over all vertex relabelings.  Everything here works on numpy uint8 bit rows so
whole batches of graphs can be swept through all n! permutations at once.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

# Permutation sweeps beyond this vertex count are done in chunks instead of
# one cached table.
MAX_TABLE_N = 8
PERM_CHUNK = 40320


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    """Position of pair {i, j} (i < j) in column order."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs (i, j), i < j, in column order."""
    return tuple((i, j) for j in range(n) for i in range(j))


def _code_width(n: int) -> int:
    # Bits are packed big-endian into a single unsigned word.
    return 32 if num_pairs(n) <= 32 else 64


@lru_cache(maxsize=None)
def _pair_component_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = pair_list(n)
    first = np.array([p[0] for p in pairs], dtype=np.int64)
    second = np.array([p[1] for p in pairs], dtype=np.int64)
    return first, second


@lru_cache(maxsize=None)
def _pair_index_matrix(n: int) -> np.ndarray:
    mat = np.zeros((n, n), dtype=np.int64)
    for i, j in pair_list(n):
        mat[i, j] = mat[j, i] = pair_index(i, j)
    return mat


def _source_table(perms: np.ndarray, n: int) -> np.ndarray:
    """For each permutation row, the source bit index feeding each target bit."""
    first, second = _pair_component_arrays(n)
    idx = _pair_index_matrix(n)
    return idx[perms[:, first], perms[:, second]]


@lru_cache(maxsize=None)
def _full_source_table(n: int) -> np.ndarray:
    if n > MAX_TABLE_N:
        raise ValueError(f"no cached permutation table for n={n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    return _source_table(perms, n)


def _perm_chunks(n: int):
    """Yield source tables for all n! permutations, in chunks."""
    if n <= MAX_TABLE_N:
        yield _full_source_table(n)
        return
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, PERM_CHUNK))
        if not block:
            return
        yield _source_table(np.array(block, dtype=np.int64), n)


def pack_codes(bits: np.ndarray, n: int) -> np.ndarray:
    """Pack bit rows (..., C(n,2)) into big-endian integer codes."""
    width = _code_width(n)
    m = num_pairs(n)
    padded = np.zeros(bits.shape[:-1] + (width,), dtype=np.uint8)
    padded[..., :m] = bits
    packed = np.packbits(padded, axis=-1)
    dtype = ">u4" if width == 32 else ">u8"
    codes = packed.reshape(padded.shape[:-1] + (width // 8,)).view(dtype)
    return codes.reshape(bits.shape[:-1]).astype(np.uint64)


def unpack_code(code: int, n: int) -> np.ndarray:
    """Inverse of pack_codes for a single code."""
    width = _code_width(n)
    m = num_pairs(n)
    raw = int(code).to_bytes(width // 8, "big")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8))[:m].copy()


def min_codes(bits: np.ndarray, n: int, batch_limit: int = 2**24) -> np.ndarray:
    """Canonical (minimal) code of each bit row under all vertex relabelings.

    bits has shape (B, C(n,2)); the returned array has shape (B,).  Work is
    chunked so that no intermediate exceeds roughly batch_limit bytes.
    """
    bits = np.atleast_2d(np.asarray(bits, dtype=np.uint8))
    b, m = bits.shape
    if m != num_pairs(n):
        raise ValueError("bit row length does not match n")
    if m == 0:
        return np.zeros(b, dtype=np.uint64)
    best = np.full(b, np.iinfo(np.uint64).max, dtype=np.uint64)
    for src in _perm_chunks(n):
        rows_per_pass = max(1, batch_limit // (src.shape[0] * m))
        for start in range(0, b, rows_per_pass):
            stop = min(b, start + rows_per_pass)
            permuted = bits[start:stop, src]  # (rows, perms, m)
            codes = pack_codes(permuted, n).min(axis=1)
            np.minimum(best[start:stop], codes, out=best[start:stop])
    return best


def graph6_bytes_from_bits(n: int, bits: np.ndarray) -> bytes:
    """graph6 encoding of a labeled graph given as a column-order bit row."""
    if not 0 <= n <= 62:
        raise ValueError("graph6 output supported for 0 <= n <= 62 only")
    out = [n + 63]
    row = np.asarray(bits, dtype=np.uint8)
    for start in range(0, len(row), 6):
        chunk = row[start:start + 6]
        value = 0
        for k in range(6):
            value = (value << 1) | (int(chunk[k]) if k < len(chunk) else 0)
        out.append(value + 63)
    return bytes(out)


def bits_from_graph6_bytes(data: bytes) -> tuple[int, np.ndarray]:
    """Decode a graph6 byte string to (n, column-order bit row).

    Raises ValueError on bad length, out-of-range bytes, or nonzero padding.
    """
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ValueError("empty graph6 string")
    n = data[0] - 63
    if not 0 <= n <= 62:
        raise ValueError("unsupported graph6 vertex count byte")
    m = num_pairs(n)
    body = data[1:]
    if len(body) != (m + 5) // 6:
        raise ValueError("graph6 body has wrong length")
    bits = np.zeros(m, dtype=np.uint8)
    pos = 0
    for byte in body:
        value = byte - 63
        if not 0 <= value < 64:
            raise ValueError("graph6 byte out of range")
        for k in range(5, -1, -1):
            bit = (value >> k) & 1
            if pos < m:
                bits[pos] = bit
            elif bit:
                raise ValueError("nonzero graph6 padding bits")
            pos += 1
    return n, bits
