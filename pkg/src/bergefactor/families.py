"""Small named hypergraph families used in tests, demos and searches.

Everything is 2-uniform (ordinary graphs as hypergraphs) except
`complete_uniform`.  Edge lists are sorted so serialization round-trips
exactly.
"""

from __future__ import annotations

from itertools import combinations

from .hypergraph import Hypergraph


def path(n: int) -> Hypergraph:
    """Path on n vertices (n >= 2)."""
    return Hypergraph(n, sorted((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Hypergraph:
    """Cycle on n vertices (n >= 3)."""
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Hypergraph(n, sorted(edges))


def star(leaves: int) -> Hypergraph:
    """Star with center 0 and the given number of leaves."""
    return Hypergraph(leaves + 1, sorted((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Hypergraph:
    return Hypergraph(n, sorted(combinations(range(n), 2)))


def complete_uniform(n: int, r: int) -> Hypergraph:
    """Complete r-uniform hypergraph on n vertices."""
    return Hypergraph(n, sorted(combinations(range(n), r)))


def complete_bipartite(a: int, b: int) -> Hypergraph:
    """K_{a,b} with part {0..a-1} against {a..a+b-1}."""
    return Hypergraph(a + b, sorted((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Hypergraph:
    """The Petersen graph: outer 5-cycle 0..4, spokes, inner 5-cycle on
    5..9 with step 2."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Hypergraph(10, sorted(tuple(sorted(e)) for e in edges))
