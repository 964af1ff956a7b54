"""Equality families, closed-form bounds, and structural achiever tests.

The bound here for a graph on n vertices:
  gap_sz >= 2n - 5        (connected nonbipartite, girth >= 5, n >= 5)
  gap_sz >= 4n - 8        (connected bipartite, m >= n, n >= 4)
  gap_rsz_x4 >= n^2+4n-6  (connected nonbipartite, n >= 4)
with equality exactly on cycle-plus-tree families built below.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphError, HypothesisViolated, InvalidTreeSpec
from .graphs import Graph, build_graph, girth, is_bipartite, is_connected


@dataclass(frozen=True)
class TreeSpec:
    """Rooted tree on vertices 0..size-1 encoded by a parent array.

    parent[i] < i is the parent of vertex i for i >= 1; parent[0] is 0 by
    convention and carries no edge.  size 1 is the bare root.
    """

    size: int
    parent: tuple[int, ...]

    def __post_init__(self):
        if self.size < 1:
            raise InvalidTreeSpec(f"tree size must be >= 1, got {self.size}")
        if len(self.parent) != self.size:
            raise InvalidTreeSpec("parent array length must equal size")
        if self.size >= 1 and self.parent[0] != 0:
            raise InvalidTreeSpec("parent[0] must be 0 (root convention)")
        for i in range(1, self.size):
            if not 0 <= self.parent[i] < i:
                raise InvalidTreeSpec(
                    f"parent[{i}] = {self.parent[i]} not in [0, {i})")

    @classmethod
    def trivial(cls) -> "TreeSpec":
        return cls(1, (0,))

    @classmethod
    def path(cls, size: int) -> "TreeSpec":
        return cls(size, tuple(max(i - 1, 0) for i in range(size)))

    @classmethod
    def star(cls, size: int) -> "TreeSpec":
        return cls(size, (0,) * size)

    @classmethod
    def random(cls, size: int, rng: random.Random) -> "TreeSpec":
        """Uniform draw over parent arrays: parent[i] ~ [0, i-1]."""
        if size < 1:
            raise InvalidTreeSpec(f"tree size must be >= 1, got {size}")
        return cls(size, (0,) + tuple(rng.randint(0, i - 1)
                                      for i in range(1, size)))


def cycle_with_tree(g_len: int, t: TreeSpec) -> Graph:
    """Cycle on vertices 0..g_len-1 with t grafted at cycle vertex 0.

    Tree vertex i > 0 becomes graph vertex g_len - 1 + i, so
    n = g_len + t.size - 1.
    """
    if g_len < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {g_len}")
    edges = [(i, (i + 1) % g_len) for i in range(g_len)]
    for i in range(1, t.size):
        p = t.parent[i]
        edges.append((0 if p == 0 else g_len - 1 + p, g_len - 1 + i))
    return build_graph(g_len + t.size - 1, edges)


def c5_two_trees(t1: TreeSpec, t2: TreeSpec) -> Graph:
    """C5 with t1 grafted at cycle vertex 0 and t2 at the adjacent vertex 1.

    n = 3 + t1.size + t2.size.
    """
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(1, t1.size):
        p = t1.parent[i]
        edges.append((0 if p == 0 else 4 + p, 4 + i))
    off = 4 + t1.size - 1
    for i in range(1, t2.size):
        p = t2.parent[i]
        edges.append((1 if p == 0 else off + p, off + i))
    return build_graph(3 + t1.size + t2.size, edges)


@dataclass(frozen=True)
class BoundValue:
    """Exact bound as numerator over denominator 1 or 4."""

    numerator: int
    denominator: int


def bound_thm1(n: int) -> BoundValue:
    """2n - 5 for n >= 5."""
    if n < 5:
        raise HypothesisViolated(f"bound needs n >= 5, got {n}")
    return BoundValue(2 * n - 5, 1)


def bound_thm2(n: int) -> BoundValue:
    """4n - 8 for n >= 4."""
    if n < 4:
        raise HypothesisViolated(f"bound needs n >= 4, got {n}")
    return BoundValue(4 * n - 8, 1)


def bound_thm3(n: int) -> BoundValue:
    """(n^2 + 4n - 6)/4 for n >= 4."""
    if n < 4:
        raise HypothesisViolated(f"bound needs n >= 4, got {n}")
    return BoundValue(n * n + 4 * n - 6, 4)


def _unicyclic_attachments(g: Graph) -> tuple[int, list[int]] | None:
    """(cycle length, cycle vertices of degree > 2) for unicyclic g, else None.

    Assumes g connected; connected with m = n means exactly one cycle, and
    every tree hangs off a cycle vertex of degree above 2.
    """
    if g.m != g.n:
        return None
    cycle = girth(g).witness
    attach = [v for v in cycle if g.degree(v) > 2]
    return len(cycle), attach


def is_equality_thm1(g: Graph) -> bool:
    """Unicyclic with a 5-cycle and trees at one vertex or two adjacent ones.

    Requires g connected, nonbipartite, girth >= 5, n >= 5.
    """
    if g.n < 5:
        raise HypothesisViolated(f"need n >= 5, got {g.n}")
    if not is_connected(g):
        raise HypothesisViolated("need a connected graph")
    if is_bipartite(g):
        raise HypothesisViolated("need a nonbipartite graph")
    ginfo = girth(g)
    if ginfo.length is not None and ginfo.length < 5:
        raise HypothesisViolated(f"need girth >= 5, got {ginfo.length}")
    shape = _unicyclic_attachments(g)
    if shape is None:
        return False
    length, attach = shape
    if length != 5:
        return False
    if len(attach) <= 1:
        return True
    if len(attach) == 2:
        return g.has_edge(attach[0], attach[1])
    return False


def is_equality_thm2(g: Graph) -> bool:
    """Unicyclic with a 4-cycle and all tree growth at one cycle vertex.

    Requires g connected, bipartite, n >= 4, m >= n.
    """
    if g.n < 4:
        raise HypothesisViolated(f"need n >= 4, got {g.n}")
    if not is_connected(g):
        raise HypothesisViolated("need a connected graph")
    if not is_bipartite(g):
        raise HypothesisViolated("need a bipartite graph")
    if g.m < g.n:
        raise HypothesisViolated(f"need m >= n, got m = {g.m} < n = {g.n}")
    shape = _unicyclic_attachments(g)
    if shape is None:
        return False
    length, attach = shape
    return length == 4 and len(attach) <= 1


def is_equality_thm3(g: Graph) -> bool:
    """Unicyclic with a triangle and all tree growth at one cycle vertex.

    Requires g connected, nonbipartite, n >= 4.
    """
    if g.n < 4:
        raise HypothesisViolated(f"need n >= 4, got {g.n}")
    if not is_connected(g):
        raise HypothesisViolated("need a connected graph")
    if is_bipartite(g):
        raise HypothesisViolated("need a nonbipartite graph")
    shape = _unicyclic_attachments(g)
    if shape is None:
        return False
    length, attach = shape
    return length == 3 and len(attach) <= 1
