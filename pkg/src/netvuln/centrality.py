"""Degree and betweenness centralities for nodes and edges.

Betweenness uses Brandes' dependency accumulation over BFS shortest-path
DAGs with fractional counting of non-unique shortest paths. Scores count
ordered (source, target) pairs: summing dependencies over every source of
an undirected graph reaches each unordered pair from both ends, so no
halving is applied. Relative to unordered counting this doubles every
value uniformly and cannot change a ranking.
"""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, edge_id


def node_degree(g: Graph) -> dict[int, int]:
    return {v: g.degree(v) for v in g.nodes}


def edge_degree(g: Graph) -> dict[Edge, int]:
    """Product of endpoint degrees, per edge."""
    deg = [g.degree(v) for v in g.nodes]
    return {(u, v): deg[u] * deg[v] for u, v in g.edges()}


def _brandes_sssp(g: Graph, s: int):
    """Single-source stage of Brandes: visit stack, predecessors, path counts."""
    sigma = [0.0] * g.n
    dist = [-1] * g.n
    pred: list[list[int]] = [[] for _ in range(g.n)]
    sigma[s] = 1.0
    dist[s] = 0
    stack: list[int] = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        stack.append(v)
        dv = dist[v]
        sv = sigma[v]
        for w in g.neighbors(v):
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] += sv
                pred[w].append(v)
    return stack, pred, sigma


def node_betweenness(g: Graph) -> dict[int, float]:
    """Fractional shortest-path counts through each node, ordered pairs."""
    bc = [0.0] * g.n
    for s in g.nodes:
        stack, pred, sigma = _brandes_sssp(g, s)
        delta = [0.0] * g.n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in pred[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return {v: bc[v] for v in g.nodes}


def edge_betweenness(g: Graph) -> dict[Edge, float]:
    """Fractional shortest-path counts along each edge, ordered pairs."""
    bc = {e: 0.0 for e in g.edges()}
    for s in g.nodes:
        stack, pred, sigma = _brandes_sssp(g, s)
        delta = [0.0] * g.n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in pred[w]:
                c = sigma[v] * coeff
                bc[edge_id(v, w)] += c
                delta[v] += c
    return bc
