from itertools import combinations

import pytest

from rekern.errors import SidesOverlap, TargetUnmatched
from rekern.graphs import Graph, cycle_graph, star_graph
from rekern.matching import (
    Matching,
    alternating_reachability,
    maximum_bipartite_matching,
    rematch_to_expose,
)


def brute_max_matching(g: Graph, side_a: set[int], side_b: set[int]) -> int:
    """Independent oracle: best disjoint set of cross edges, all subsets."""
    cross = [
        e
        for e in g.sorted_edges()
        if (e[0] in side_a and e[1] in side_b) or (e[0] in side_b and e[1] in side_a)
    ]
    best = 0
    for size in range(len(cross), 0, -1):
        if size <= best:
            break
        for subset in combinations(cross, size):
            used = [v for e in subset for v in e]
            if len(used) == len(set(used)):
                best = max(best, size)
                break
    return best


def test_matching_type_rejects_shared_vertices():
    with pytest.raises(ValueError):
        Matching.of([(0, 1), (1, 2)])


def test_star_matching_size_one():
    g = star_graph(3)
    m = maximum_bipartite_matching(g, {0}, {1, 2, 3})
    assert m.size == 1


def test_c4_perfect_matching():
    g = cycle_graph(4)
    m = maximum_bipartite_matching(g, {0, 2}, {1, 3})
    assert m.size == 2


def test_two_by_three_example():
    # A={a1,a2}, B={b1,b2,b3}, edges a1b1, a1b2, a2b1 -> size 2
    g = Graph.from_edges(5, [(0, 2), (0, 3), (1, 2)])
    m = maximum_bipartite_matching(g, {0, 1}, {2, 3, 4})
    assert m.size == 2
    assert sorted(m.pairs) == [(0, 3), (1, 2)]


def test_sides_overlap_rejected():
    with pytest.raises(SidesOverlap):
        maximum_bipartite_matching(star_graph(2), {0, 1}, {1, 2})


def test_matching_matches_brute_force(rng):
    from tests.conftest import random_graph

    checked = 0
    for _ in range(120):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, 0.45)
        if len(g.edges) > 12:
            continue
        side_a = {v for v in range(n) if rng.random() < 0.5}
        side_b = set(range(n)) - side_a
        m = maximum_bipartite_matching(g, side_a, side_b)
        assert m.size == brute_max_matching(g, side_a, side_b)
        for u, v in m.pairs:
            assert g.has_edge(u, v)
            assert (u in side_a) != (v in side_a)
        checked += 1
    assert checked > 60


def test_matching_determinism(rng):
    from tests.conftest import random_graph

    for _ in range(20):
        g = random_graph(rng, 7, 0.5)
        side_a = {0, 1, 2}
        side_b = {3, 4, 5, 6}
        first = maximum_bipartite_matching(g, side_a, side_b)
        second = maximum_bipartite_matching(g, side_a, side_b)
        assert first == second


def test_alternating_reachability_examples():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    m = Matching.of([(0, 1)])
    ra, rb = alternating_reachability(g, {0}, {1, 2, 3}, m, "B")
    assert ra == {0} and rb == {1}

    # perfect matching, nothing unmatched
    g = Graph.from_edges(4, [(0, 2), (1, 3)])
    m = Matching.of([(0, 2), (1, 3)])
    assert alternating_reachability(g, {0, 1}, {2, 3}, m, "B") == (
        frozenset(),
        frozenset(),
    )

    # extra edge pulls in exactly one pair
    g = Graph.from_edges(5, [(0, 2), (1, 3), (0, 4)])
    m = Matching.of([(0, 2), (1, 3)])
    ra, rb = alternating_reachability(g, {0, 1}, {2, 3, 4}, m, "B")
    assert ra == {0} and rb == {2}


def test_alternating_reachability_disjoint_for_maximum(rng):
    from tests.conftest import random_graph

    def check(g, side_a, side_b):
        m = maximum_bipartite_matching(g, side_a, side_b)
        a1, b1 = alternating_reachability(g, side_a, side_b, m, "B")
        a2, b2 = alternating_reachability(g, side_a, side_b, m, "A")
        assert not (a1 & a2) and not (b1 & b2)
        assert a1 <= m.vertices() and b2 <= m.vertices()

    # exhaustive over isomorphism classes up to 5 vertices, all splits
    from rekern.smallgraphs import all_graphs_upto

    for g in all_graphs_upto(5):
        for mask in range(1 << g.n):
            side_a = {v for v in range(g.n) if (mask >> v) & 1}
            check(g, side_a, set(range(g.n)) - side_a)
    # random splits at larger sizes
    for _ in range(150):
        n = rng.randint(6, 8)
        g = random_graph(rng, n, 0.4)
        side_a = {v for v in range(n) if rng.random() < 0.5}
        check(g, side_a, set(range(n)) - side_a)


def test_rematch_to_expose_examples():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    m = Matching.of([(0, 1)])
    res = rematch_to_expose(g, {0}, {1, 2}, m, 1)
    assert res is not None and res.pairs == frozenset({(0, 2)})

    # perfect matching, no unmatched escape vertex
    g = Graph.from_edges(4, [(0, 2), (1, 3)])
    m = Matching.of([(0, 2), (1, 3)])
    assert rematch_to_expose(g, {0, 1}, {2, 3}, m, 2) is None

    # the only escape is forbidden
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    m = Matching.of([(0, 1)])
    assert rematch_to_expose(g, {0}, {1, 2}, m, 1, forbidden=2) is None


def test_rematch_requires_matched_target():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    m = Matching.of([(0, 1)])
    with pytest.raises(TargetUnmatched):
        rematch_to_expose(g, {0}, {1, 2}, m, 2)


def test_rematch_preserves_cardinality_and_exposes_target(rng):
    from tests.conftest import random_graph

    exercised = 0
    for _ in range(200):
        n = rng.randint(3, 8)
        g = random_graph(rng, n, 0.45)
        side_a = {v for v in range(n) if rng.random() < 0.5}
        side_b = set(range(n)) - side_a
        m = maximum_bipartite_matching(g, side_a, side_b)
        matched_b = sorted(m.vertices() & side_b)
        if not matched_b:
            continue
        target = matched_b[rng.randrange(len(matched_b))]
        res = rematch_to_expose(g, side_a, side_b, m, target)
        if res is None:
            continue
        assert res.size == m.size
        assert target not in res.vertices()
        for u, v in res.pairs:
            assert g.has_edge(u, v)
        previously = m.vertices() - {target}
        assert previously & side_a <= res.vertices()  # A-side stays covered
        exercised += 1
    assert exercised > 30
