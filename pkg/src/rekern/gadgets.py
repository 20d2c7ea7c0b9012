"""Hardness-construction gadgets: extremal graphs, negative
reoptimization instances, and the set-cover-to-connected-vertex-cover
grid gadget.

A negative instance glues an extremal block onto an arbitrary graph and
dismantles the block with the local modification, so the modified
instance is a member exactly when the carrier graph is.  The grid gadget
realizes set cover (parameterized by universe size) inside connected
vertex cover so that one added edge shifts the optimum by one exactly
when a small set cover exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decomposition import TreeDecomposition, validate_tree_decomposition
from .errors import (
    OracleTooSlow,
    UnsupportedCombination,
    UnsupportedProblem,
)
from .graphs import (
    Digraph,
    EdgeAdd,
    EdgeDel,
    Graph,
    LocalModification,
    VertexAdd,
    VertexDel,
    apply_modification,
    complete_graph,
    disjoint_union,
    normalize_edge,
    path_graph,
)
from .instances import ReoptInstance
from .oracles import SIZE_GUARDS, membership
from .problems import ProblemKind
from .setcover import SetCoverInstance

# re-exported here because tree decompositions are gadget-adjacent types
__all__ = [
    "TreeDecomposition",
    "validate_tree_decomposition",
    "SetCoverInstance",
    "SetCoverCvcGadget",
    "build_extremal",
    "is_extremal",
    "build_negative_reopt_instance",
    "build_clique_reopt_instance",
    "build_setcover_cvc",
    "s2_from_cover",
]


def build_extremal(problem: ProblemKind, k: int) -> Graph | Digraph:
    """The canonical extremal block for a problem at parameter k.

    Internal-vertex subtree: the path on k + 2 vertices (k internal).
    Clique: the complete graph on k vertices.  Treewidth: K_{k+2}, whose
    width k + 1 drops to k on any single deletion.  Leaf out tree: the
    out-star with k leaves.
    """
    if k < 1:
        raise UnsupportedProblem("extremal blocks need k >= 1")
    if problem is ProblemKind.IVST:
        return path_graph(k + 2)
    if problem is ProblemKind.CLIQUE:
        return complete_graph(k)
    if problem is ProblemKind.TREEWIDTH:
        return complete_graph(k + 2)
    if problem is ProblemKind.LEAF_OUT_TREE:
        return Digraph.from_arcs(k + 1, [(0, i) for i in range(1, k + 1)])
    raise UnsupportedProblem(f"no extremal construction for {problem}")


def _extremal_member(problem: ProblemKind, g: Graph | Digraph, k: int) -> bool:
    # For treewidth the block is extremal with respect to the complement
    # problem (width exceeding k); every other problem uses membership.
    if problem is ProblemKind.TREEWIDTH:
        return not membership(problem, g, k)
    return membership(problem, g, k)


def _single_deletions(g: Graph | Digraph) -> list[Graph | Digraph]:
    out: list[Graph | Digraph] = []
    if isinstance(g, Graph):
        for e in g.sorted_edges():
            out.append(apply_modification(g, EdgeDel(*e)))
        for v in g.vertices:
            out.append(apply_modification(g, VertexDel(v)))
        return out
    for arc in sorted(g.arcs):
        out.append(Digraph(g.n, g.arcs - {arc}))
    for v in range(g.n):
        remap = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
        arcs = frozenset(
            (remap[a], remap[b]) for a, b in g.arcs if v not in (a, b)
        )
        out.append(Digraph(g.n - 1, arcs))
    return out


def is_extremal(
    g: Graph | Digraph,
    problem: ProblemKind,
    k: int,
    mode: str = "minimal-yes",
) -> bool:
    """Whether the block is a minimal yes-instance (every single deletion
    leaves the language) or a maximal one (every single edge addition
    leaves it); membership is complement-flipped for treewidth blocks."""
    size = g.n
    if size > SIZE_GUARDS[problem] + 2:
        raise OracleTooSlow(f"extremality check needs oracle calls at size {size}")
    if not _extremal_member(problem, g, k):
        return False
    if mode == "minimal-yes":
        return all(
            not _extremal_member(problem, h, k) for h in _single_deletions(g)
        )
    if mode == "maximal-yes":
        if isinstance(g, Digraph):
            raise UnsupportedCombination("maximal mode is defined for graphs only")
        additions = [
            apply_modification(g, EdgeAdd(u, v))
            for u, v in combinations(range(g.n), 2)
            if not g.has_edge(u, v)
        ]
        return all(not _extremal_member(problem, h, k) for h in additions)
    raise UnsupportedCombination(f"unknown extremality mode {mode!r}")


# --- negative reoptimization instances (deletions on glued blocks) -----------


def _block_witness(problem: ProblemKind, block: Graph, shift: int) -> object | None:
    """The block's own solution, expressed in glued-instance indices."""
    if problem is ProblemKind.TREEWIDTH:
        return None  # AND-compositional construction starts from a no-instance
    if problem is ProblemKind.IVST:
        return frozenset(
            normalize_edge(u + shift, v + shift) for u, v in block.edges
        )
    if problem is ProblemKind.LONGEST_PATH:
        return tuple(range(shift, shift + block.n))
    if problem is ProblemKind.CLIQUE:
        return frozenset(range(shift, shift + block.n))
    raise UnsupportedCombination(f"no block witness for {problem}")


def _block_deletion(
    problem: ProblemKind, block: Graph, shift: int, mode: str
) -> LocalModification:
    if mode == "edge":
        if not block.edges:
            raise UnsupportedCombination(
                f"the {problem.value} block at this parameter has no edge to delete"
            )
        if problem in (ProblemKind.IVST, ProblemKind.LONGEST_PATH):
            # middle edge of the path block
            mid = (block.n - 1) // 2
            return EdgeDel(shift + mid, shift + mid + 1)
        u, v = min(block.edges)
        return EdgeDel(shift + u, shift + v)
    if mode == "vertex":
        if problem in (ProblemKind.IVST, ProblemKind.LONGEST_PATH):
            # lowest-index internal path vertex
            return VertexDel(shift + 1)
        return VertexDel(shift)
    raise UnsupportedCombination(f"unknown deletion mode {mode!r}")


def build_negative_reopt_instance(
    problem: ProblemKind, g: Graph, k: int, mode: str = "edge"
) -> ReoptInstance:
    """Glue the extremal block onto g and dismantle it with one deletion.

    Longest path glues the path with k edges (the witness itself); the
    OR-compositional comonotone problems glue their minimal yes-blocks;
    treewidth glues K_{k+2} with no witness.  The modified instance is a
    member iff (g, k) is, which is what makes these constructions
    hardness-preserving.
    """
    if problem is ProblemKind.LONGEST_PATH:
        block = path_graph(k + 1)  # path of length k
    elif problem in (ProblemKind.IVST, ProblemKind.CLIQUE, ProblemKind.TREEWIDTH):
        block = build_extremal(problem, k)
    else:
        raise UnsupportedCombination(f"no negative construction for {problem}")
    glued = disjoint_union(g, block)
    shift = g.n
    witness = _block_witness(problem, block, shift)
    modification = _block_deletion(problem, block, shift, mode)
    return ReoptInstance(problem, glued, k, witness, modification, k)


def build_clique_reopt_instance(
    g: Graph, k: int, mode: str = "edge"
) -> ReoptInstance:
    """Clique reoptimization instances for the addition modifications.

    Edge mode: K_{k+1} glued to g extended by two universal vertices that
    miss one edge; adding that edge asks for a clique of size k + 2, which
    exists iff g has one of size k.  Vertex mode: K_k glued to g; the new
    vertex adjacent to all of g raises the target to k + 1.
    """
    if mode == "edge":
        n = g.n
        extended = Graph(
            n + 2,
            g.edges
            | frozenset(normalize_edge(i, n) for i in range(n))
            | frozenset(normalize_edge(i, n + 1) for i in range(n)),
        )
        block = complete_graph(k + 1)
        glued = disjoint_union(block, extended)
        v1, v2 = block.n + n, block.n + n + 1
        witness = frozenset(range(k + 1))
        return ReoptInstance(
            ProblemKind.CLIQUE, glued, k + 1, witness, EdgeAdd(v1, v2), k + 2
        )
    if mode == "vertex":
        block = complete_graph(k)
        glued = disjoint_union(block, g)
        witness = frozenset(range(k))
        neighbors = frozenset(range(k, k + g.n))
        return ReoptInstance(
            ProblemKind.CLIQUE, glued, k, witness, VertexAdd(neighbors), k + 1
        )
    raise UnsupportedCombination(f"unknown clique reopt mode {mode!r}")


# --- set cover -> connected vertex cover gadget ------------------------------


@dataclass(frozen=True)
class SetCoverCvcGadget:
    """The grid gadget: rows 1..k+2 of universe columns 0..u with pendant
    leaves, family vertices, the extra-set vertex x, row collectors v_i,
    and the hubs f and y."""

    instance: SetCoverInstance
    graph: Graph
    grid: tuple[tuple[int, ...], ...]  # grid[i][j] -> vertex of u_{i+1,j}
    leaves: tuple[tuple[int, ...], ...]
    family_vertices: tuple[int, ...]  # f_1 .. f_t
    x: int
    row_vertices: tuple[int, ...]  # v_1 .. v_{k+2}
    f: int
    y: int
    reopt_edge: tuple[int, int]
    budget_c: int
    s1: frozenset[int]

    @property
    def rows(self) -> int:
        return self.instance.k + 2

    @property
    def cols(self) -> int:
        return self.instance.universe_size + 1

    def reopt_instance(self) -> ReoptInstance:
        return ReoptInstance(
            ProblemKind.CONNECTED_VERTEX_COVER,
            self.graph,
            self.budget_c + 2,
            self.s1,
            EdgeAdd(*self.reopt_edge),
            self.budget_c + 1,
        )


def build_setcover_cvc(sc: SetCoverInstance) -> SetCoverCvcGadget:
    """Realize a set cover instance as a connected-vertex-cover gadget.

    Column 0 plays the extra universe element covered only by x; the edge
    (x, u_{k+2,0}) is withheld for the reoptimization step.  Vertex
    layout: grid row-major, then leaves, then f_1..f_t, x, v_1..v_{k+2},
    f, y.
    """
    k, u, t = sc.k, sc.universe_size, sc.t
    rows, cols = k + 2, u + 1
    grid_count = rows * cols

    def grid_at(i: int, j: int) -> int:  # i in 1..rows, j in 0..u
        return (i - 1) * cols + j

    def leaf_at(i: int, j: int) -> int:
        return grid_count + (i - 1) * cols + j

    family0 = 2 * grid_count
    x = family0 + t
    row0 = x + 1
    f = row0 + rows
    y = f + 1
    n = y + 1

    labels = [""] * n
    edges: list[tuple[int, int]] = []
    for i in range(1, rows + 1):
        for j in range(0, cols):
            labels[grid_at(i, j)] = f"u_{{{i},{j}}}"
            labels[leaf_at(i, j)] = f"u'_{{{i},{j}}}"
            edges.append((grid_at(i, j), leaf_at(i, j)))
            edges.append((grid_at(i, j), row0 + i - 1))
    for ell in range(1, t + 1):
        labels[family0 + ell - 1] = f"f_{ell}"
        for j in sorted(sc.family[ell - 1]):
            for i in range(1, rows + 1):
                edges.append((grid_at(i, j), family0 + ell - 1))
        edges.append((family0 + ell - 1, f))
    labels[x] = "x"
    for i in range(1, rows):  # connects rows 1..k+1 only
        edges.append((x, grid_at(i, 0)))
    edges.append((x, f))
    for i in range(1, rows + 1):
        labels[row0 + i - 1] = f"v_{i}"
        edges.append((row0 + i - 1, y))
    labels[f] = "f"
    labels[y] = "y"
    edges.append((f, y))

    graph = Graph.from_edges(n, edges, labels=labels)
    grid = tuple(
        tuple(grid_at(i, j) for j in range(cols)) for i in range(1, rows + 1)
    )
    leaves = tuple(
        tuple(leaf_at(i, j) for j in range(cols)) for i in range(1, rows + 1)
    )
    s1 = frozenset(
        [grid_at(i, j) for i in range(1, rows + 1) for j in range(cols)]
        + [f, y]
        + [row0 + i for i in range(rows)]
    )
    budget_c = (k + 2) * (u + 2)
    return SetCoverCvcGadget(
        instance=sc,
        graph=graph,
        grid=grid,
        leaves=leaves,
        family_vertices=tuple(range(family0, family0 + t)),
        x=x,
        row_vertices=tuple(range(row0, row0 + rows)),
        f=f,
        y=y,
        reopt_edge=(x, grid_at(rows, 0)),
        budget_c=budget_c,
        s1=s1,
    )


def s2_from_cover(gadget: SetCoverCvcGadget, cover: tuple[int, ...]) -> frozenset[int]:
    """The alternative solution built from a set cover: the grid, the
    chosen family vertices, x, and the connectors f, v_{k+2}, y.

    Size (k+2)(u+1) + |cover| + 1 + 3; equals the budget's c + 2 exactly
    when |cover| = k.
    """
    chosen = [gadget.family_vertices[i] for i in cover]
    last_row_collector = gadget.row_vertices[-1]
    members = (
        [v for row in gadget.grid for v in row]
        + chosen
        + [gadget.x, gadget.f, last_row_collector, gadget.y]
    )
    return frozenset(members)
