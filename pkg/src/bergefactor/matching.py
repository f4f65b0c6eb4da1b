"""Maximum matching in general graphs via blossom contraction.

Unweighted Edmonds matching: a deterministic greedy seed over the
canonical edge list, then one BFS augmentation phase per exposed vertex,
contracting odd cycles by rebasing them onto their stem (the `base`
array).  Each phase is O(V * E).  Scan order is fixed by the sorted
adjacency lists, so equal inputs always produce equal matchings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GeneralGraph:
    """Simple undirected graph on 0..n-1; loops rejected, parallel edges
    collapse."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GeneralGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"GeneralGraph({self.n}, {list(self.edges)})"


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, stored sorted."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, pairs: Iterable[tuple[int, int]]) -> "Matching":
        return cls(tuple(sorted(tuple(sorted(p)) for p in pairs)))

    def __len__(self) -> int:
        return len(self.edges)


def _is_matching(g: GeneralGraph, m: Matching) -> bool:
    host = set(g.edges)
    used: set[int] = set()
    for u, v in m.edges:
        if (u, v) not in host or u in used or v in used:
            return False
        used.add(u)
        used.add(v)
    return True


def is_perfect(g: GeneralGraph, m: Matching) -> bool:
    """True when `m` covers every vertex of `g`.  Rejects inputs that are
    not matchings of `g` outright."""
    if not _is_matching(g, m):
        raise ValueError("not a matching of the host graph")
    return 2 * len(m.edges) == g.n


def _augment_from(root: int, adj: tuple[tuple[int, ...], ...],
                  match: list[int], n: int) -> bool:
    # BFS over outer vertices; p[] holds the traversal parent of outer
    # vertices, base[] the blossom base each vertex currently maps to.
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    q: deque[int] = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, flower: list[bool]) -> None:
        while base[v] != b:
            flower[base[v]] = True
            flower[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                # Odd cycle: contract it onto the common base.
                cur = lca(v, to)
                flower = [False] * n
                mark_path(v, cur, to, flower)
                mark_path(to, cur, v, flower)
                for i in range(n):
                    if flower[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    # Exposed vertex reached: flip the augmenting path.
                    while to != -1:
                        pv = p[to]
                        ppv = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = ppv
                    return True
                used[match[to]] = True
                q.append(match[to])
    return False


def max_matching(g: GeneralGraph) -> Matching:
    """Maximum-cardinality matching, deterministic for a fixed input."""
    n = g.n
    adj = g.adjacency
    match = [-1] * n
    for u, v in g.edges:
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u
    for v in range(n):
        if match[v] == -1:
            _augment_from(v, adj, match, n)
    pairs = [(v, match[v]) for v in range(n) if v < match[v]]
    return Matching.make(pairs)
