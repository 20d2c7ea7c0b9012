"""Exact brute-force ground-truth solvers for every problem in the toolkit.

Each solver decomposes the input into connected components first (a
cover decomposes as a sum, every other solution object is connected, and
treewidth is the maximum over components), then solves each component
within its size guard.  Values are exact optima; witnesses are
deterministic, with lexicographically smallest witnesses where the
solver enumerates candidates directly.

Oracles are deliberately slow and simple: they are the verification
backbone for every kernelizer in the package, so they must be obviously
correct rather than fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable

from .decomposition import TreeDecomposition, validate_tree_decomposition
from .errors import SizeGuardExceeded, UnsupportedProblem
from .graphs import Digraph, Graph, components, induced_subgraph, normalize_edge
from .instances import KernelResult
from .problems import Direction, ProblemKind, direction_of
from .setcover import SetCoverInstance

# Default per-component size guards.  ``solve_exact`` accepts an explicit
# override for callers that knowingly pay for larger instances.
SIZE_GUARDS: dict[ProblemKind, int] = {
    ProblemKind.VERTEX_COVER: 20,
    ProblemKind.CONNECTED_VERTEX_COVER: 30,
    ProblemKind.IVST: 10,
    ProblemKind.LONGEST_PATH: 16,
    ProblemKind.CLIQUE: 20,
    ProblemKind.SET_COVER: 20,
    ProblemKind.TREEWIDTH: 10,
    ProblemKind.LEAF_OUT_TREE: 8,
}
LEAF_OUT_TREE_ARC_GUARD = 14


@dataclass(frozen=True)
class ExactSolution:
    value: int | None
    witness: Any | None


def _guard(kind: ProblemKind, size: int, limit: int | None) -> None:
    cap = limit if limit is not None else SIZE_GUARDS[kind]
    if size > cap:
        raise SizeGuardExceeded(
            f"{kind.value} oracle limited to {cap}, got instance of size {size}"
        )


# --- vertex cover ----------------------------------------------------------


def is_vertex_cover(g: Graph, candidate: Iterable[int]) -> bool:
    cover = set(candidate)
    return all(u in cover or v in cover for u, v in g.edges)


def _vc_branch(adj: dict[int, set[int]], budget: int | None) -> tuple[int, tuple[int, ...]] | None:
    """Smallest (size, sorted-tuple) cover of the edge set in ``adj``.

    Branches on an endpoint of an uncovered edge around a max-degree
    vertex; both branches are explored so the lexicographic minimum among
    minimum covers survives.
    """
    live = {v: ns for v, ns in adj.items() if ns}
    if not live:
        return (0, ())
    if budget is not None and budget <= 0:
        return None
    u = max(sorted(live), key=lambda v: len(live[v]))
    v = max(sorted(live[u]), key=lambda w: len(live.get(w, ())))

    best: tuple[int, tuple[int, ...]] | None = None
    for pick in (u, v):
        reduced = {x: (ns - {pick}) for x, ns in adj.items() if x != pick}
        sub_budget = None if budget is None else budget - 1
        sub = _vc_branch(reduced, sub_budget)
        if sub is None:
            continue
        size, vertices = sub
        candidate = (size + 1, tuple(sorted(vertices + (pick,))))
        if best is None or candidate < best:
            best = candidate
            if budget is not None:
                budget = min(budget, candidate[0])
    return best


def _solve_vertex_cover(g: Graph, budget: int | None = None) -> ExactSolution:
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    result = _vc_branch(adj, budget)
    if result is None:
        return ExactSolution(None, None)
    return ExactSolution(result[0], frozenset(result[1]))


def all_minimum_vertex_covers(g: Graph) -> list[frozenset[int]]:
    """Every minimum vertex cover, by exhaustive enumeration (tiny graphs)."""
    opt = _solve_vertex_cover(g).value
    assert opt is not None
    return [
        frozenset(subset)
        for subset in combinations(range(g.n), opt)
        if is_vertex_cover(g, subset)
    ]


# --- connected vertex cover ------------------------------------------------


def is_connected_vertex_cover(g: Graph, candidate: Iterable[int]) -> bool:
    cover = sorted(set(candidate))
    if not is_vertex_cover(g, cover):
        return False
    if len(cover) <= 1:
        return True
    sub, _ = induced_subgraph(g, cover)
    return len(components(sub)) == 1


def _anchor_component(g: Graph, vs: frozenset[int]) -> tuple[set[int], bool]:
    """Component of the smallest vertex within the induced subgraph on vs,
    plus whether it already spans all of vs."""
    start = min(vs)
    comp = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for y in g.adjacency[x]:
            if y in vs and y not in comp:
                comp.add(y)
                frontier.append(y)
    return comp, len(comp) == len(vs)


def _matching_lower_bound(adj: dict[int, set[int]]) -> int:
    """Greedy matching size: each matched edge forces one cover vertex."""
    used: set[int] = set()
    count = 0
    for v in sorted(adj):
        if v in used:
            continue
        for w in sorted(adj[v]):
            if w not in used:
                used.add(v)
                used.add(w)
                count += 1
                break
    return count


def _cvc_completions(
    g: Graph,
    cover: frozenset[int],
    cap: int,
    best: list[tuple[int, tuple[int, ...]]],
    stop_at: int | None,
) -> bool:
    """Exhaustively grow ``cover`` until its induced subgraph is connected.

    Every connected completion is reachable by repeatedly adding a vertex
    adjacent to the component of the smallest cover vertex, so the search
    only branches on those candidates.  Returns True once a completion of
    size <= stop_at has been recorded.
    """
    stack = [cover]
    seen = {cover}
    while stack:
        current = stack.pop()
        if best and (len(current), tuple(sorted(current))) >= best[0]:
            continue
        anchor, connected = _anchor_component(g, current)
        if connected:
            entry = (len(current), tuple(sorted(current)))
            if not best or entry < best[0]:
                best[:] = [entry]
                if stop_at is not None and entry[0] <= stop_at:
                    return True
            continue
        if len(current) >= cap:
            continue
        candidates: set[int] = set()
        for a in anchor:
            candidates |= g.adjacency[a]
        for w in sorted(candidates - current):
            grown = current | {w}
            if grown not in seen:
                seen.add(grown)
                stack.append(grown)
    return False


def _solve_cvc(
    g: Graph, cap: int | None = None, stop_at: int | None = None
) -> ExactSolution:
    """Minimum connected vertex cover of size <= cap, or None if none exists.

    Enumerates covers by bounded branching on uncovered edges, then
    completes each to a connected set within the remaining budget.  When
    ``stop_at`` is given the search stops at the first cover of that size
    or better (enough for membership queries).
    """
    if not g.edges:
        return ExactSolution(0, frozenset())
    edge_comps = [c for c in components(g) if len(c) > 1]
    if len(edge_comps) > 1:
        return ExactSolution(None, None)
    limit = cap if cap is not None else g.n
    best: list[tuple[int, tuple[int, ...]]] = []
    seen_covers: set[frozenset[int]] = set()
    done = False

    def branch(adj: dict[int, set[int]], chosen: frozenset[int]) -> None:
        nonlocal done
        if done or len(chosen) > limit:
            return
        live = {v: ns for v, ns in adj.items() if ns}
        if len(chosen) + _matching_lower_bound(live) > limit:
            return
        if best and len(chosen) > best[0][0]:
            return
        if not live:
            if chosen not in seen_covers:
                seen_covers.add(chosen)
                if _cvc_completions(g, chosen, limit, best, stop_at):
                    done = True
            return
        u = max(sorted(live), key=lambda v: len(live[v]))
        # u in the cover:
        branch({x: ns - {u} for x, ns in adj.items() if x != u}, chosen | {u})
        # u excluded: every neighbor of u must be in the cover.
        forced = set(adj[u])
        reduced = {
            x: {y for y in ns if y not in forced}
            for x, ns in adj.items()
            if x != u and x not in forced
        }
        branch(reduced, chosen | forced)

    branch({v: set(g.adjacency[v]) for v in g.vertices}, frozenset())
    if not best:
        return ExactSolution(None, None)
    size, vertices = best[0]
    return ExactSolution(size, frozenset(vertices))


# --- clique ----------------------------------------------------------------


def is_clique(g: Graph, candidate: Iterable[int]) -> bool:
    vs = sorted(set(candidate))
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def _solve_clique(g: Graph) -> ExactSolution:
    if g.n == 0:
        return ExactSolution(0, frozenset())
    omega = 0

    def grow(candidates: list[int], size: int) -> None:
        nonlocal omega
        omega = max(omega, size)
        for i, v in enumerate(candidates):
            rest = [w for w in candidates[i + 1 :] if g.has_edge(v, w)]
            if size + 1 + len(rest) > omega:
                grow(rest, size + 1)

    grow(list(g.vertices), 0)

    # Second pass: first clique of size omega in include-first ascending
    # order is the lexicographically smallest one.
    target = omega

    def find(candidates: list[int], chosen: tuple[int, ...]) -> tuple[int, ...] | None:
        if len(chosen) == target:
            return chosen
        for i, v in enumerate(candidates):
            rest = [w for w in candidates[i + 1 :] if g.has_edge(v, w)]
            if len(chosen) + 1 + len(rest) >= target:
                found = find(rest, chosen + (v,))
                if found is not None:
                    return found
        return None

    witness = find(list(g.vertices), ()) or ()
    return ExactSolution(omega, frozenset(witness))


# --- longest path ----------------------------------------------------------


def is_path(g: Graph, candidate: Iterable[int]) -> bool:
    seq = list(candidate)
    if len(seq) != len(set(seq)):
        return False
    if not seq:
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def _lp_tables(g: Graph) -> list[list[int]]:
    """longest[mask][v]: longest extension from v with ``mask`` visited."""
    n = g.n
    adjmask = [0] * n
    for u, v in g.edges:
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u
    table = [[0] * n for _ in range(1 << n)]
    order = sorted(range(1 << n), key=lambda m: bin(m).count("1"), reverse=True)
    for mask in order:
        for v in range(n):
            if not (mask >> v) & 1:
                continue
            free = adjmask[v] & ~mask
            best = 0
            w = 0
            while free:
                if free & 1:
                    ext = 1 + table[mask | (1 << w)][w]
                    if ext > best:
                        best = ext
                w += 1
                free >>= 1
            table[mask][v] = best
    return table


def _solve_longest_path(g: Graph) -> ExactSolution:
    if g.n == 0:
        return ExactSolution(0, ())
    table = _lp_tables(g)
    value = max(table[1 << v][v] for v in g.vertices)
    start = min(v for v in g.vertices if table[1 << v][v] == value)
    path = [start]
    mask = 1 << start
    remaining = value
    while remaining:
        v = path[-1]
        for w in sorted(g.adjacency[v]):
            if not (mask >> w) & 1 and 1 + table[mask | (1 << w)][w] == remaining:
                path.append(w)
                mask |= 1 << w
                remaining -= 1
                break
        else:
            raise AssertionError("path reconstruction failed")
    return ExactSolution(value, tuple(path))


# --- internal vertex subtree ------------------------------------------------


def is_subtree_with_internal(g: Graph, candidate: Iterable[Iterable[int]], k: int) -> bool:
    """candidate: edge set that must form a subtree with >= k internal vertices."""
    edges = {normalize_edge(u, v) for u, v in candidate}
    if not edges <= g.edges:
        return False
    if not edges:
        return k <= 0
    vertices = {v for e in edges for v in e}
    if len(edges) != len(vertices) - 1:
        return False
    sub, idx = induced_subgraph(g, vertices)
    back = {old: new for new, old in enumerate(idx)}
    tree_edges = {normalize_edge(back[u], back[v]) for u, v in edges}
    tree = Graph(len(vertices), frozenset(tree_edges))
    if len(components(tree)) != 1:
        return False
    internal = sum(1 for v in tree.vertices if tree.degree(v) >= 2)
    return internal >= k


def _solve_ivst(g: Graph) -> ExactSolution:
    """Maximum internal vertices over all subtrees, by subset DP.

    States (S, v, c): a tree spanning vertex set S rooted at v whose root
    degree class c is 1 or exactly >= 2; values count internal vertices
    excluding the root.  Attaching a child subtree resolves the child
    root's internality on the spot.
    """
    n = g.n
    if n == 0:
        return ExactSolution(0, frozenset())
    adjmask = [0] * n
    for u, v in g.edges:
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u

    NEG = -1
    dp1 = [dict() for _ in range(n)]  # dp1[v][S] = value, root degree 1
    dp2 = [dict() for _ in range(n)]  # dp2[v][S] = value, root degree >= 2
    bp: dict[tuple[int, int, int], tuple] = {}
    resolved: list[dict[int, int]] = [dict() for _ in range(n)]
    resolved_tag: dict[tuple[int, int], int] = {}

    for v in range(n):
        resolved[v][1 << v] = 0  # child that stays a leaf
        resolved_tag[(v, 1 << v)] = 0

    masks = sorted(range(1, 1 << n), key=lambda m: bin(m).count("1"))
    for mask in masks:
        bits = [v for v in range(n) if (mask >> v) & 1]
        if len(bits) == 1:
            continue
        for v in bits:
            rest = mask ^ (1 << v)
            # Enumerate the last-attached child subtree T, a submask of rest.
            t = rest
            while t:
                if t & adjmask[v]:
                    base = mask ^ t  # previous tree at v, contains v
                    base_states: list[tuple[int, int]] = []
                    if base == (1 << v):
                        base_states.append((0, 0))
                    val1 = dp1[v].get(base, NEG)
                    if val1 > NEG:
                        base_states.append((1, val1))
                    val2 = dp2[v].get(base, NEG)
                    if val2 > NEG:
                        base_states.append((2, val2))
                    if base_states:
                        cand = t & adjmask[v]
                        while cand:
                            u = (cand & -cand).bit_length() - 1
                            cand &= cand - 1
                            child = resolved[u].get(t, NEG)
                            if child <= NEG:
                                continue
                            for cls, val in base_states:
                                new_cls = 2 if cls >= 1 else 1
                                total = val + child
                                store = dp2[v] if new_cls == 2 else dp1[v]
                                if total > store.get(mask, NEG):
                                    store[mask] = total
                                    bp[(new_cls, mask, v)] = (cls, base, u, t)
                t = (t - 1) & rest
        for v in bits:
            # Resolve v as a child root: degree bumps by one on attachment.
            options = []
            v1 = dp1[v].get(mask, NEG)
            if v1 > NEG:
                options.append((1, v1 + 1))
            v2 = dp2[v].get(mask, NEG)
            if v2 > NEG:
                options.append((2, v2 + 1))
            if options:
                tag, value = max(options, key=lambda o: (o[1], -o[0]))
                resolved[v][mask] = value
                resolved_tag[(v, mask)] = tag

    best_value = 0
    best_state: tuple[int, int, int] | None = None
    for v in range(n):
        for mask, val in dp1[v].items():
            if val > best_value:
                best_value, best_state = val, (1, mask, v)
        for mask, val in dp2[v].items():
            if val + 1 > best_value:
                best_value, best_state = val + 1, (2, mask, v)

    edges: set[tuple[int, int]] = set()

    def rebuild(cls: int, mask: int, v: int) -> None:
        if cls == 0:
            return
        prev_cls, base, u, t = bp[(cls, mask, v)]
        edges.add(normalize_edge(v, u))
        rebuild(prev_cls, base, v)
        rebuild(resolved_tag[(u, t)], t, u)

    if best_state is not None:
        rebuild(*best_state)
    return ExactSolution(best_value, frozenset(edges))


# --- treewidth ---------------------------------------------------------------


def _tw_elimination(g: Graph) -> tuple[int, list[int]]:
    """Treewidth and an optimal elimination order via DP over subsets."""
    n = g.n
    if n == 0:
        return -1, []
    adjmask = [0] * n
    for u, v in g.edges:
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u
    full = (1 << n) - 1

    def fill_degree(done: int, v: int) -> int:
        # Vertices outside done u {v} adjacent to v or reachable through done.
        seen = 1 << v
        stack = [v]
        outside = 0
        while stack:
            x = stack.pop()
            nbrs = adjmask[x] & ~seen
            seen |= nbrs
            rest = nbrs
            while rest:
                y = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if (done >> y) & 1:
                    stack.append(y)
                else:
                    outside |= 1 << y
        return bin(outside).count("1")

    f = {0: -1}
    choice: dict[int, int] = {}
    for mask in sorted(range(1, 1 << n), key=lambda m: bin(m).count("1")):
        best = None
        best_v = -1
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            prior = mask ^ (1 << v)
            width = max(f[prior], fill_degree(prior, v))
            if best is None or width < best:
                best, best_v = width, v
        f[mask] = best  # type: ignore[assignment]
        choice[mask] = best_v

    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()  # choice[mask] is the vertex eliminated last within mask
    return f[full], order


def _td_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Tree decomposition induced by an elimination order (fill-in method)."""
    if g.n == 0:
        return TreeDecomposition(Graph.from_edges(1), (frozenset(),))
    if len(order) == 1:
        return TreeDecomposition(Graph.from_edges(1), (frozenset({order[0]}),))
    v = order[0]
    nbrs = set(g.neighbors(v))
    remaining = [w for w in g.vertices if w != v]
    fill = {normalize_edge(a, b) for a, b in combinations(sorted(nbrs), 2)}
    reduced_edges = {e for e in g.edges if v not in e} | fill
    remap = {old: new for new, old in enumerate(sorted(remaining))}
    reduced = Graph(
        g.n - 1,
        frozenset(normalize_edge(remap[a], remap[b]) for a, b in reduced_edges),
    )
    sub_order = [remap[w] for w in order[1:]]
    sub_td = _td_from_order(reduced, sub_order)
    back = {new: old for old, new in remap.items()}
    bags = tuple(frozenset(back[x] for x in bag) for bag in sub_td.bags)
    new_bag = frozenset({v} | nbrs)
    attach = 0
    for i, bag in enumerate(bags):
        if nbrs <= bag:
            attach = i
            break
    tree_edges = set(sub_td.tree.edges) | {normalize_edge(len(bags), attach)}
    tree = Graph(len(bags) + 1, frozenset(tree_edges))
    return TreeDecomposition(tree, bags + (new_bag,))


def _solve_treewidth(g: Graph) -> ExactSolution:
    width, order = _tw_elimination(g)
    td = _td_from_order(g, order)
    problems = validate_tree_decomposition(g, td)
    if problems or td.width != width:
        raise AssertionError(f"bad witness decomposition: {problems}")
    return ExactSolution(width, td)


# --- set cover ---------------------------------------------------------------


def is_set_cover(sc: SetCoverInstance, candidate: Iterable[int]) -> bool:
    chosen = list(candidate)
    if any(not (0 <= i < sc.t) for i in chosen):
        return False
    covered: frozenset[int] = frozenset()
    for i in chosen:
        covered |= sc.family[i]
    return covered == sc.universe


def _solve_set_cover(sc: SetCoverInstance) -> ExactSolution:
    for size in range(0, sc.t + 1):
        for chosen in combinations(range(sc.t), size):
            if is_set_cover(sc, chosen):
                return ExactSolution(size, tuple(chosen))
    return ExactSolution(None, None)


# --- leaf out tree -------------------------------------------------------------


def is_out_tree(d: Digraph, candidate: Iterable[tuple[int, int]], k: int) -> bool:
    arcs = {(u, v) for u, v in candidate}
    if not arcs <= d.arcs or not arcs:
        return False
    vertices = {x for arc in arcs for x in arc}
    indeg = {v: 0 for v in vertices}
    for _, v in arcs:
        indeg[v] += 1
    roots = [v for v in vertices if indeg[v] == 0]
    if len(roots) != 1 or any(indeg[v] > 1 for v in vertices):
        return False
    reached = {roots[0]}
    frontier = [roots[0]]
    children: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in arcs:
        children[u].append(v)
    while frontier:
        x = frontier.pop()
        for y in children[x]:
            if y not in reached:
                reached.add(y)
                frontier.append(y)
    if reached != vertices:
        return False
    leaves = sum(1 for v in vertices if v != roots[0] and not children[v])
    return leaves >= k


def _solve_leaf_out_tree(d: Digraph) -> ExactSolution:
    arcs = sorted(d.arcs)
    if len(arcs) > LEAF_OUT_TREE_ARC_GUARD:
        raise SizeGuardExceeded(
            f"leaf-out-tree oracle limited to {LEAF_OUT_TREE_ARC_GUARD} arcs"
        )
    best = 0
    best_witness: frozenset[tuple[int, int]] = frozenset()
    for mask in range(1, 1 << len(arcs)):
        subset = [arcs[i] for i in range(len(arcs)) if (mask >> i) & 1]
        vertices = {x for arc in subset for x in arc}
        if len(subset) != len(vertices) - 1:
            continue
        if is_out_tree(d, subset, 0):
            leaves = _count_out_tree_leaves(subset)
            if leaves > best:
                best = leaves
                best_witness = frozenset(subset)
    return ExactSolution(best, best_witness)


def _count_out_tree_leaves(arcs: list[tuple[int, int]]) -> int:
    vertices = {x for arc in arcs for x in arc}
    heads = {u for u, _ in arcs}
    indeg = {v: 0 for v in vertices}
    for _, v in arcs:
        indeg[v] += 1
    return sum(1 for v in vertices if indeg[v] == 1 and v not in heads)


# --- dispatch ----------------------------------------------------------------


def _weak_components(d: Digraph) -> list[list[int]]:
    undirected = Graph.from_edges(d.n, [(u, v) for u, v in d.arcs])
    return components(undirected)


def _induced_digraph(d: Digraph, vertices: list[int]) -> tuple[Digraph, tuple[int, ...]]:
    index_map = tuple(sorted(vertices))
    back = {old: new for new, old in enumerate(index_map)}
    arcs = frozenset(
        (back[u], back[v]) for u, v in d.arcs if u in back and v in back
    )
    return Digraph(len(index_map), arcs), index_map


def solve_exact(
    kind: ProblemKind,
    instance: Graph | Digraph | SetCoverInstance,
    *,
    limit: int | None = None,
    cvc_budget: int | None = None,
) -> ExactSolution:
    """Exact optimum and a witness for any supported problem.

    For connected vertex cover, ``cvc_budget`` bounds the search; a value
    of ``None`` in the result means no connected cover within the budget
    (or none at all when edges span several components).
    """
    if kind is ProblemKind.SET_COVER:
        if not isinstance(instance, SetCoverInstance):
            raise UnsupportedProblem("set cover expects a SetCoverInstance")
        _guard(kind, instance.t, limit)
        return _solve_set_cover(instance)

    if kind is ProblemKind.LEAF_OUT_TREE:
        if not isinstance(instance, Digraph):
            raise UnsupportedProblem("leaf out tree expects a Digraph")
        best = ExactSolution(0, frozenset())
        for comp in _weak_components(instance):
            sub, idx = _induced_digraph(instance, comp)
            _guard(kind, sub.n, limit)
            local = _solve_leaf_out_tree(sub)
            if local.value is not None and local.value > (best.value or 0):
                witness = frozenset((idx[u], idx[v]) for u, v in local.witness)
                best = ExactSolution(local.value, witness)
        return best

    if not isinstance(instance, Graph):
        raise UnsupportedProblem(f"{kind.value} expects a Graph")
    g = instance

    if kind is ProblemKind.CONNECTED_VERTEX_COVER:
        _guard(kind, g.n, limit)
        stop = cvc_budget
        return _solve_cvc(g, cvc_budget, stop_at=stop)

    if kind is ProblemKind.VERTEX_COVER:
        total = 0
        vc_witness: frozenset[int] = frozenset()
        for comp in components(g):
            sub, idx = induced_subgraph(g, comp)
            _guard(kind, sub.n, limit)
            local = _solve_vertex_cover(sub)
            total += local.value
            vc_witness |= frozenset(idx[v] for v in local.witness)
        return ExactSolution(total, vc_witness)

    if kind is ProblemKind.TREEWIDTH:
        # Width is the maximum over components; the witness decomposition
        # must still cover every component, so the per-component trees are
        # chained together into one tree.
        if g.n == 0:
            return _solve_treewidth(g)
        width = -1
        all_bags: list[frozenset[int]] = []
        tree_edges: list[tuple[int, int]] = []
        for comp in components(g):
            sub, idx = induced_subgraph(g, comp)
            _guard(kind, sub.n, limit)
            local = _solve_treewidth(sub)
            td: TreeDecomposition = local.witness
            offset = len(all_bags)
            if offset:
                tree_edges.append((offset - 1, offset))
            tree_edges.extend((offset + a, offset + b) for a, b in td.tree.edges)
            all_bags.extend(frozenset(idx[v] for v in bag) for bag in td.bags)
            width = max(width, local.value)
        combined = TreeDecomposition(
            Graph.from_edges(len(all_bags), tree_edges), tuple(all_bags)
        )
        return ExactSolution(width, combined)

    per_component = {
        ProblemKind.IVST: _solve_ivst,
        ProblemKind.LONGEST_PATH: _solve_longest_path,
        ProblemKind.CLIQUE: _solve_clique,
    }
    if kind not in per_component:
        raise UnsupportedProblem(f"no exact solver for {kind}")
    solver = per_component[kind]

    # Maximum-over-components problems: solution objects are connected.
    best_value: int | None = None
    best_witness: Any = None
    for comp in components(g):
        sub, idx = induced_subgraph(g, comp)
        _guard(kind, sub.n, limit)
        local = solver(sub)
        if best_value is None or (local.value is not None and local.value > best_value):
            best_value = local.value
            best_witness = _map_witness(kind, local.witness, idx)
    if best_value is None:  # empty graph
        empty = solver(g)
        return ExactSolution(empty.value, empty.witness)
    return ExactSolution(best_value, best_witness)


def _map_witness(kind: ProblemKind, witness: Any, idx: tuple[int, ...]) -> Any:
    if witness is None:
        return None
    if kind is ProblemKind.LONGEST_PATH:
        return tuple(idx[v] for v in witness)
    if kind is ProblemKind.IVST:
        return frozenset(normalize_edge(idx[u], idx[v]) for u, v in witness)
    if kind is ProblemKind.CLIQUE:
        return frozenset(idx[v] for v in witness)
    return witness


def membership(
    kind: ProblemKind,
    instance: Graph | Digraph | SetCoverInstance,
    k: int,
    *,
    limit: int | None = None,
) -> bool:
    """Whether (instance, k) is a member of the parameterized problem."""
    budget = k if kind is ProblemKind.CONNECTED_VERTEX_COVER else None
    solution = solve_exact(kind, instance, limit=limit, cvc_budget=budget)
    if solution.value is None:
        return False
    if direction_of(kind) is Direction.MIN:
        return solution.value <= k
    return solution.value >= k


def verify_solution(
    kind: ProblemKind,
    instance: Graph | Digraph | SetCoverInstance,
    candidate: Any,
    k: int,
) -> bool:
    """True iff the candidate satisfies the problem's defining predicate
    at cost k."""
    if candidate is None:
        return False
    if kind is ProblemKind.VERTEX_COVER:
        return len(set(candidate)) <= k and is_vertex_cover(instance, candidate)
    if kind is ProblemKind.CONNECTED_VERTEX_COVER:
        return len(set(candidate)) <= k and is_connected_vertex_cover(
            instance, candidate
        )
    if kind is ProblemKind.CLIQUE:
        return len(set(candidate)) >= k and is_clique(instance, candidate)
    if kind is ProblemKind.LONGEST_PATH:
        return len(list(candidate)) >= k + 1 and is_path(instance, candidate)
    if kind is ProblemKind.IVST:
        return is_subtree_with_internal(instance, candidate, k)
    if kind is ProblemKind.SET_COVER:
        return len(list(candidate)) <= k and is_set_cover(instance, candidate)
    if kind is ProblemKind.TREEWIDTH:
        if not isinstance(candidate, TreeDecomposition):
            return False
        return candidate.width <= k and not validate_tree_decomposition(
            instance, candidate
        )
    if kind is ProblemKind.LEAF_OUT_TREE:
        return is_out_tree(instance, candidate, k)
    raise UnsupportedProblem(f"no verifier for {kind}")


def verify_kernel_equivalence(
    kind: ProblemKind,
    instance: Graph | Digraph | SetCoverInstance,
    k: int,
    result: KernelResult,
    *,
    limit: int | None = None,
) -> bool:
    """Oracle membership of the original equals the result's decision (or
    the oracle membership of the reduced instance)."""
    original = membership(kind, instance, k, limit=limit)
    if result.is_decided:
        return original == result.answer
    assert result.graph is not None and result.parameter is not None
    if result.parameter < 0:
        return original is False
    reduced = membership(kind, result.graph, result.parameter, limit=limit)
    return original == reduced
