"""Undirected simple graph with giant-component measurement.

Nodes are dense integers 0..N-1. Edges are stored as normalized (u, v)
tuples with u < v. Node removal is expressed as removal of all incident
edges; the node itself stays in the node set so N is constant.
"""

from __future__ import annotations

import hashlib
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError

Edge = tuple[int, int]


def edge_id(u: int, v: int) -> Edge:
    """Normalize an edge to (min, max) form."""
    if u == v:
        raise ValidationError(f"self-loop on node {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Mutable-by-edge-removal undirected simple graph."""

    def __init__(self, n: int, edges: Iterable[Edge] = (), labels: Sequence[str] | None = None):
        if n < 1:
            raise ValidationError("graph needs at least one node")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._edges: set[Edge] = set()
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValidationError("label list length does not match node count")
        for u, v in edges:
            self.add_edge(u, v)

    # -- construction / mutation -----------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValidationError(f"edge ({u},{v}) references an unknown node")
        e = edge_id(u, v)
        if e in self._edges:
            raise ValidationError(f"duplicate edge {e}")
        self._edges.add(e)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        e = edge_id(u, v)
        if e not in self._edges:
            raise ValidationError(f"no such edge {e}")
        self._edges.remove(e)
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def copy(self) -> "Graph":
        g = Graph(self.n, labels=self.labels)
        g._edges = set(self._edges)
        g._adj = [set(s) for s in self._adj]
        return g

    # -- queries -----------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def nodes(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        """Edge set in sorted (deterministic) order."""
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_id(u, v) in self._edges

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def fingerprint(self) -> tuple[int, int, str]:
        """(N, E, sha256-of-edge-set) used to tie attack plans to graphs."""
        h = hashlib.sha256()
        for u, v in self.edges():
            h.update(f"{u},{v};".encode())
        return (self.n, len(self._edges), h.hexdigest())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self._edges)})"


def connected_components(g: Graph) -> Iterator[list[int]]:
    """Yield components as node lists (BFS)."""
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        yield comp


def giant_component_size(g: Graph) -> int:
    """Node count of the largest connected component (>= 1)."""
    return max(len(c) for c in connected_components(g))


class UnionFind:
    """Disjoint sets over 0..n-1 with size tracking and a running maximum."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.max_size = 1 if n else 0

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        if self.size[ra] > self.max_size:
            self.max_size = self.size[ra]


def removal_size_sequence(g: Graph, edge_order: Sequence[Edge]) -> list[int]:
    """Giant-component sizes s~_0..s~_E along a full edge-removal order.

    Computed backwards: start from the edgeless graph and add edges in
    reverse removal order with union-find, recording the running maximum.
    O(E alpha(N)) total instead of one BFS per step.
    """
    if len(edge_order) != g.num_edges:
        raise ValidationError("edge order must cover every edge exactly once")
    uf = UnionFind(g.n)
    sizes = [uf.max_size]  # state after all E removals
    for u, v in reversed(edge_order):
        uf.union(u, v)
        sizes.append(uf.max_size)
    sizes.reverse()
    return sizes
