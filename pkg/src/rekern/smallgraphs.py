"""Small-graph corpora for exhaustive and randomized sweeps.

Exhaustive sweeps run over one representative per isomorphism class
(via the networkx graph atlas, which covers up to seven vertices);
larger sizes are sampled with a seeded generator.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from .graphs import Graph

ATLAS_MAX_N = 7


@lru_cache(maxsize=None)
def _atlas_by_size() -> dict[int, tuple[Graph, ...]]:
    import networkx as nx

    by_size: dict[int, list[Graph]] = {n: [] for n in range(0, ATLAS_MAX_N + 1)}
    for gnx in nx.graph_atlas_g():
        n = gnx.number_of_nodes()
        if n > ATLAS_MAX_N:
            continue
        by_size[n].append(Graph.from_edges(n, list(gnx.edges())))
    return {n: tuple(graphs) for n, graphs in by_size.items()}


def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class (n <= 7)."""
    if n > ATLAS_MAX_N:
        raise ValueError(f"exhaustive enumeration only up to {ATLAS_MAX_N} vertices")
    return _atlas_by_size()[n]


def all_graphs_upto(max_n: int, *, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from nonisomorphic_graphs(n)


def random_graph(rng: random.Random, n: int, edge_prob: float) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)
