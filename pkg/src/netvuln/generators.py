"""Small-world test network construction (Watts-Strogatz ring rewiring)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph
from .rng import make_rng

# Rewiring that keeps hitting self-loops/duplicates gives up after this many
# draws and leaves the lattice edge in place; cannot trigger for k < n/2.
_MAX_REWIRE_TRIES = 100


@dataclass(frozen=True)
class WsParams:
    n: int
    k: int
    p: float
    seed: int = 0

    def validate(self) -> None:
        if self.n < 3:
            raise ParameterError("n must be >= 3")
        if not 1 <= self.k < self.n / 2:
            raise ParameterError("k must satisfy 1 <= k < n/2")
        if not 0.0 <= self.p <= 1.0:
            raise ParameterError("p must lie in [0, 1]")


def generate_ws(params: WsParams) -> Graph:
    """Ring lattice of n nodes, each linked to its k right neighbors, then
    every lattice edge independently rewired with probability p.

    Rewiring keeps the source endpoint and redraws the destination uniformly,
    rejecting self-loops and already-present edges. Edge count is always n*k.
    """
    params.validate()
    n, k, p = params.n, params.k, params.p
    rng = make_rng(params.seed)
    g = Graph(n)
    for i in range(n):
        for j in range(1, k + 1):
            g.add_edge(i, (i + j) % n)
    if p == 0.0:
        return g
    # iterate the original lattice edges once, in construction order
    for i in range(n):
        for j in range(1, k + 1):
            if rng.random() >= p:
                continue
            v = (i + j) % n
            for _ in range(_MAX_REWIRE_TRIES):
                w = int(rng.integers(n))
                if w != i and not g.has_edge(i, w):
                    g.remove_edge(i, v)
                    g.add_edge(i, w)
                    break
    return g
