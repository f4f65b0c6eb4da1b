"""Incidence bipartite view of a hypergraph, and Y-side strong deletion.

X-vertices stand for hyperedges, Y-vertices for hypergraph vertices,
with x ~ y exactly when the hyperedge contains the vertex.  Strongly
deleting a Y-set removes it together with every X-neighbor, which
mirrors edge-destroying vertex deletion on the hypergraph side;
Y-toughness is the toughness notion this induces, and it coincides with
the hypergraph's toughness.

Global vertex ids (used by the criterion and barrier machinery) list X
first: x_i has id i, y_j has id x_count + j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from . import budget as _budget
from ._bits import bit_tuple
from .hypergraph import Hypergraph, ToughnessValue, _find


class BipartiteGraph:
    """Bipartite graph given by each X-vertex's sorted Y-neighborhood."""

    def __init__(self, x_count: int, y_count: int,
                 neighbors: Iterable[Iterable[int]] = ()):
        if x_count < 0 or y_count < 0:
            raise ValueError("side sizes must be non-negative")
        canon = []
        for x, nbrs in enumerate(neighbors):
            ns = tuple(sorted(nbrs))
            if len(set(ns)) != len(ns):
                raise ValueError(f"X-vertex {x} lists a neighbor twice: {ns}")
            if ns and (ns[0] < 0 or ns[-1] >= y_count):
                raise ValueError(
                    f"X-vertex {x} has a neighbor outside 0..{y_count - 1}: {ns}")
            canon.append(ns)
        if len(canon) != x_count:
            raise ValueError(f"expected {x_count} neighborhoods, got {len(canon)}")
        self.x_count = x_count
        self.y_count = y_count
        self.neighbors: tuple[tuple[int, ...], ...] = tuple(canon)

    @cached_property
    def y_neighbors(self) -> tuple[tuple[int, ...], ...]:
        rev: list[list[int]] = [[] for _ in range(self.y_count)]
        for x, nbrs in enumerate(self.neighbors):
            for y in nbrs:
                rev[y].append(x)
        return tuple(tuple(r) for r in rev)

    @cached_property
    def x_masks(self) -> tuple[int, ...]:
        """Per X-vertex: bitmask of Y-neighbors (bit j = y_j)."""
        out = []
        for nbrs in self.neighbors:
            m = 0
            for y in nbrs:
                m |= 1 << y
            out.append(m)
        return tuple(out)

    @cached_property
    def y_masks(self) -> tuple[int, ...]:
        """Per Y-vertex: bitmask of X-neighbors (bit i = x_i)."""
        out = []
        for xs in self.y_neighbors:
            m = 0
            for x in xs:
                m |= 1 << x
            out.append(m)
        return tuple(out)

    @property
    def has_isolated_x(self) -> bool:
        return any(not nbrs for nbrs in self.neighbors)

    def x_id(self, i: int) -> int:
        """Global vertex id of x_i."""
        return i

    def y_id(self, j: int) -> int:
        """Global vertex id of y_j."""
        return self.x_count + j

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BipartiteGraph)
                and self.x_count == other.x_count
                and self.y_count == other.y_count
                and self.neighbors == other.neighbors)

    def __hash__(self) -> int:
        return hash((self.x_count, self.y_count, self.neighbors))

    def __repr__(self) -> str:
        return (f"BipartiteGraph({self.x_count}, {self.y_count}, "
                f"{[list(n) for n in self.neighbors]})")


@dataclass(frozen=True)
class YStrongDeletion:
    """Survivors of a Y-side strong deletion, with old->new index maps."""

    graph: BipartiteGraph
    x_map: dict[int, int]
    y_map: dict[int, int]


def incidence_graph(h: Hypergraph) -> BipartiteGraph:
    """Bipartite graph with X = edge positions of `h`, Y = vertices of
    `h`, adjacency by containment.  Edge multiplicity survives as
    X-vertices with equal neighborhoods."""
    return BipartiteGraph(len(h.edges), h.n, h.edges)


def hypergraph_of(g: BipartiteGraph) -> Hypergraph:
    """Inverse of `incidence_graph`: vertex set Y, one edge N(x) per
    X-vertex, in X order.  Rejects graphs with isolated X-vertices,
    which represent no hypergraph (edges are nonempty)."""
    for x, nbrs in enumerate(g.neighbors):
        if not nbrs:
            raise ValueError(
                f"not hypergraph-representable: X-vertex {x} is isolated")
    return Hypergraph(g.y_count, g.neighbors)


def strong_delete_y(g: BipartiteGraph, s: Iterable[int]) -> YStrongDeletion:
    """Remove the Y-set `s`, every X-vertex adjacent to it, and all
    incident edges; survivors are reindexed contiguously."""
    s_set = set(s)
    for y in s_set:
        if not 0 <= y < g.y_count:
            raise ValueError(f"Y-vertex {y} outside 0..{g.y_count - 1}")
    keep_x = [x for x in range(g.x_count)
              if not any(y in s_set for y in g.neighbors[x])]
    keep_y = [y for y in range(g.y_count) if y not in s_set]
    x_map = {x: i for i, x in enumerate(keep_x)}
    y_map = {y: j for j, y in enumerate(keep_y)}
    nbrs = [[y_map[y] for y in g.neighbors[x]] for x in keep_x]
    return YStrongDeletion(
        BipartiteGraph(len(keep_x), len(keep_y), nbrs), x_map, y_map)


def bipartite_components(g: BipartiteGraph
                         ) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components as (X-vertices, Y-vertices) pairs of sorted
    tuples, ordered by smallest global id."""
    nx = g.x_count
    parent = list(range(nx + g.y_count))
    for x, nbrs in enumerate(g.neighbors):
        a = _find(parent, x)
        for y in nbrs:
            b = _find(parent, nx + y)
            if b != a:
                parent[b] = a
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for v in range(nx + g.y_count):
        xs, ys = groups.setdefault(_find(parent, v), ([], []))
        if v < nx:
            xs.append(v)
        else:
            ys.append(v - nx)
    return [(tuple(xs), tuple(ys)) for xs, ys in groups.values()]


def y_toughness(g: BipartiteGraph, budget: int | None = None) -> ToughnessValue:
    """Toughness over Y-cutsets under strong deletion: the minimum
    |S| / c(G (-) S) over S inside Y leaving at least two components.
    Witness indices are Y-local (hypergraph vertex numbers).  Requires a
    graph without isolated X-vertices, so every surviving component
    contains a Y-vertex."""
    if g.has_isolated_x:
        raise ValueError("Y-toughness needs a graph without isolated X-vertices")
    if g.y_count < 1:
        raise ValueError("Y-toughness needs at least one Y-vertex")
    limit = _budget.resolve(budget, _budget.DEFAULT_VERTEX_BUDGET)
    _budget.check("Y-toughness", g.y_count, limit)
    nx, ny = g.x_count, g.y_count
    y_masks = g.y_masks
    neighbors = g.neighbors
    bn = 0
    bd = 0
    best_size = -1
    best_mask = 0
    for s_mask in range(1 << ny):
        dead = 0
        m = s_mask
        while m:
            low = m & -m
            m ^= low
            dead |= y_masks[low.bit_length() - 1]
        count = (nx - dead.bit_count()) + (ny - s_mask.bit_count())
        if count < 2:
            continue
        parent = list(range(nx + ny))
        for x in range(nx):
            if (dead >> x) & 1:
                continue
            a = _find(parent, x)
            # Every neighbor of a surviving X-vertex survives.
            for y in neighbors[x]:
                b = _find(parent, nx + y)
                if b != a:
                    parent[b] = a
                    count -= 1
        if count < 2:
            continue
        size = s_mask.bit_count()
        if bd == 0 or size * bd < bn * count:
            bn, bd = size, count
            best_size, best_mask = size, s_mask
        elif size * bd == bn * count:
            if size < best_size or (size == best_size
                                    and bit_tuple(s_mask) < bit_tuple(best_mask)):
                bn, bd = size, count
                best_size, best_mask = size, s_mask
    if bd == 0:
        return ToughnessValue(None, None)
    return ToughnessValue(Fraction(bn, bd), bit_tuple(best_mask))
