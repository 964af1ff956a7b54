"""Independent brute-force reference implementations for the tests.

Nothing here imports the package under test.  Distances come from simple-path
enumeration, cycles from explicit subset search, connectivity from union-find,
and isomorphism dedup from a full permutation sweep over a row-major bit
encoding (the package uses column-major), so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def pairs_rowmajor(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def dist_path_enum(n, edges, s, t):
    """Length of a shortest s-t path by enumerating all simple paths."""
    if s == t:
        return 0
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = [None]

    def walk(v, seen, length):
        if best[0] is not None and length >= best[0]:
            return
        for w in adj[v]:
            if w == t:
                if best[0] is None or length + 1 < best[0]:
                    best[0] = length + 1
            elif w not in seen:
                seen.add(w)
                walk(w, seen, length + 1)
                seen.remove(w)

    walk(s, {s}, 0)
    return best[0]


def all_dists(n, edges):
    return {(u, v): dist_path_enum(n, edges, u, v)
            for u in range(n) for v in range(n)}


def wiener_oracle(n, edges):
    d = all_dists(n, edges)
    return sum(d[u, v] for u, v in pairs_rowmajor(n))


def szeged_oracle(n, edges):
    d = all_dists(n, edges)
    total = 0
    for u, v in edges:
        nu = sum(1 for w in range(n) if d[w, u] < d[w, v])
        nv = sum(1 for w in range(n) if d[w, v] < d[w, u])
        total += nu * nv
    return total


def revised_szeged_x4_oracle(n, edges):
    d = all_dists(n, edges)
    total = 0
    for u, v in edges:
        nu = sum(1 for w in range(n) if d[w, u] < d[w, v])
        nv = sum(1 for w in range(n) if d[w, v] < d[w, u])
        n0 = n - nu - nv
        total += (2 * nu + n0) * (2 * nv + n0)
    return total


def _subset_has_cycle(edge_set, subset):
    """Is there a cycle visiting exactly the vertices of subset?"""
    first, *rest = subset
    for perm in itertools.permutations(rest):
        ring = (first,) + perm
        if all((min(a, b), max(a, b)) in edge_set
               for a, b in zip(ring, ring[1:] + ring[:1])):
            return True
    return False


def girth_cycle_search(n, edges, parity=None):
    """Shortest cycle length by trying every vertex subset, smallest first.

    parity "odd" restricts to odd lengths; returns None if there is none.
    """
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    for k in range(3, n + 1):
        if parity == "odd" and k % 2 == 0:
            continue
        for subset in itertools.combinations(range(n), k):
            if _subset_has_cycle(edge_set, subset):
                return k
    return None


def all_cycles(n, edges):
    """Every simple cycle, as a frozenset of edges."""
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    found = set()
    for k in range(3, n + 1):
        for subset in itertools.combinations(range(n), k):
            first, *rest = subset
            for perm in itertools.permutations(rest):
                ring = (first,) + perm
                cyc = [(min(a, b), max(a, b))
                       for a, b in zip(ring, ring[1:] + ring[:1])]
                if all(e in edge_set for e in cyc):
                    found.add(frozenset(cyc))
    return found


def blocks_oracle(n, edges):
    """Blocks as vertex frozensets, from edge equivalence by shared cycles."""
    cycles = all_cycles(n, edges)
    norm = [(min(u, v), max(u, v)) for u, v in edges]
    parent = {e: e for e in norm}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for cyc in cycles:
        cyc = sorted(cyc)
        for e in cyc[1:]:
            parent[find(e)] = find(cyc[0])
    groups = {}
    for e in norm:
        groups.setdefault(find(e), set()).update(e)
    blocks = [frozenset(g) for g in groups.values()]
    covered = set().union(*blocks) if blocks else set()
    blocks.extend(frozenset([v]) for v in range(n) if v not in covered)
    return sorted(blocks, key=sorted)


def connected_uf(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


def bipartite_2color(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = {}
    for start in range(n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _perm_code(n, bits, perm, index_of):
    out = 0
    for k, (i, j) in enumerate(pairs_rowmajor(n)):
        a, b = perm[i], perm[j]
        if bits >> index_of[min(a, b), max(a, b)] & 1:
            out |= 1 << k
    return out


@lru_cache(maxsize=None)
def graph_classes(n):
    """One edge-tuple per isomorphism class of graphs on n vertices.

    Sweeps all 2^C(n,2) labeled graphs and keeps the ones whose row-major
    code is minimal over every vertex permutation.  Pure Python through
    n = 5; a vectorized sweep handles n = 6.
    """
    pairs = pairs_rowmajor(n)
    m = len(pairs)
    index_of = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    if n <= 5:
        reps = []
        for bits in range(1 << m):
            if all(_perm_code(n, bits, p, index_of) >= bits for p in perms):
                reps.append(tuple(p for p in pairs if bits >> index_of[p] & 1))
        return tuple(reps)
    if n != 6:
        raise ValueError("brute-force class sweep supported up to n = 6")
    # Source-bit table: target slot k of permuted graph reads source slot
    # src[p][k].
    src = np.array([[index_of[min(p[i], p[j]), max(p[i], p[j])]
                     for (i, j) in pairs] for p in perms], dtype=np.int64)
    weights = (1 << np.arange(m, dtype=np.int64))
    codes = np.arange(1 << m, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(np.int8)
    best = codes.copy()
    chunk = 2048
    for lo in range(0, 1 << m, chunk):
        block = bits[lo:lo + chunk]          # (c, m)
        permuted = block[:, src]             # (c, perms, m)
        vals = permuted @ weights            # (c, perms)
        best[lo:lo + chunk] = vals.min(axis=1)
    keep = np.flatnonzero(best == codes)
    out = []
    for code in keep.tolist():
        out.append(tuple(p for p in pairs if code >> index_of[p] & 1))
    return tuple(out)


def count_classes(n, pred):
    """Number of isomorphism classes on n vertices satisfying pred."""
    return sum(1 for edges in graph_classes(n) if pred(n, edges))


def random_connected_graph(rng, max_n=10, min_n=2):
    """Random spanning tree plus random extra edges; always connected."""
    n = rng.randint(min_n, max_n)
    edges = {(rng.randint(0, i - 1), i) for i in range(1, n)}
    extra = rng.random()
    for i, j in pairs_rowmajor(n):
        if (i, j) not in edges and rng.random() < extra * 0.5:
            edges.add((i, j))
    return n, sorted(edges)
