"""Vertex cover kernels: the classic 3k crown kernel and the 2k
reoptimization kernel for edge addition.

The reoptimization kernel starts from a known vertex cover ``A`` of the
original graph, splits ``A`` and the independent rest ``B`` along a
maximum matching into the subsets reachable by alternating paths from
either side's unmatched vertices, and repairs one of two canonical crown
decompositions after the new edge lands inside ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crown import CrownDecomposition, crown_or_matching, validate_crown
from .errors import (
    InternalInvariantBroken,
    InvalidCrown,
    ModificationMismatch,
    NotACover,
    WitnessNotACover,
)
from .graphs import (
    EdgeAdd,
    Graph,
    apply_modification,
    induced_subgraph,
    normalize_edge,
)
from .instances import KernelResult, ReoptInstance
from .matching import (
    Matching,
    alternating_reachability,
    maximum_bipartite_matching,
    rematch_to_expose,
)
from .oracles import is_vertex_cover
from .problems import ProblemKind


@dataclass(frozen=True)
class ReoptPartition:
    """The matched/unmatched split of a cover ``A`` and independent ``B``.

    ``a1``/``b1`` are the matched pairs alternating-reachable from the
    unmatched part of ``B``; ``a2``/``b2`` the pairs reachable from the
    unmatched part of ``A``; ``a3``/``b3`` the rest.  For a maximum
    matching the reachable sets cannot intersect.
    """

    cover: frozenset[int]
    independent: frozenset[int]
    matching: Matching
    a_unmatched: frozenset[int]
    b_unmatched: frozenset[int]
    a1: frozenset[int]
    b1: frozenset[int]
    a2: frozenset[int]
    b2: frozenset[int]
    a3: frozenset[int]
    b3: frozenset[int]

    def crown_c1(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        crown = self.b_unmatched | self.b1 | self.b3
        head = self.a1 | self.a3
        rest = self.a_unmatched | self.a2 | self.b2
        return crown, head, rest

    def crown_c2(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        crown = self.b_unmatched | self.b1
        head = self.a1
        rest = self.a_unmatched | self.a2 | self.b2 | self.a3 | self.b3
        return crown, head, rest

    def saturating(self, head: frozenset[int]) -> Matching:
        return Matching(
            frozenset(
                p for p in self.matching.pairs if p[0] in head or p[1] in head
            )
        )


def _partition_from_matching(
    g: Graph, cover: frozenset[int], m: Matching
) -> ReoptPartition:
    b = frozenset(g.vertices) - cover
    matched = m.vertices()
    a_unmatched = cover - matched
    b_unmatched = b - matched
    a1, b1 = alternating_reachability(g, cover, b, m, "B")
    a2, b2 = alternating_reachability(g, cover, b, m, "A")
    if (a1 | a2) - matched or (b1 | b2) - matched:
        raise InternalInvariantBroken(
            "alternating search reached an unmatched vertex; matching not maximum"
        )
    if a1 & a2 or b1 & b2:
        raise InternalInvariantBroken(
            "reachable subsets intersect; matching not maximum"
        )
    a3 = (cover & matched) - a1 - a2
    b3 = (b & matched) - b1 - b2
    partners = m.partner_map()
    if {partners[a] for a in a1} != set(b1) or {partners[a] for a in a3} != set(b3):
        raise InternalInvariantBroken("matching does not pair the subsets")
    return ReoptPartition(
        cover, b, m, a_unmatched, b_unmatched, a1, b1, a2, b2, a3, b3
    )


def build_reopt_partition(g: Graph, cover_a: frozenset[int] | set[int]) -> ReoptPartition:
    """Partition ``A`` and ``B`` around a maximum matching between them."""
    cover = frozenset(cover_a)
    for v in cover:
        g._check_vertex(v)
    if not is_vertex_cover(g, cover):
        raise NotACover("the given set does not cover every edge")
    b = frozenset(g.vertices) - cover
    m = maximum_bipartite_matching(g, cover, b)
    return _partition_from_matching(g, cover, m)


# --- classic crown kernel ---------------------------------------------------


def crown_reduce_vc(g: Graph, k: int, cd: CrownDecomposition) -> tuple[Graph, int]:
    """Remove crown and head, pay |H| from the budget.

    Any cover needs |H| vertices for the saturating matching, and taking
    all of H covers every edge into the crown, so (G, k) and
    (G - (H u C), k - |H|) are equivalent.  A negative parameter means the
    caller must decide "no".
    """
    violations = validate_crown(g, cd)
    if violations:
        raise InvalidCrown("; ".join(violations))
    reduced, _ = induced_subgraph(g, cd.rest)
    return reduced, k - len(cd.head)


def vc_kernelize_3k(g: Graph, k: int) -> KernelResult:
    """Crown-lemma kernel: decide, or reduce to at most 3k vertices."""
    cur, budget = g, k
    while True:
        non_isolated = [v for v in cur.vertices if cur.degree(v) > 0]
        if len(non_isolated) < cur.n:
            cur, _ = induced_subgraph(cur, non_isolated)
        if budget < 0:
            return KernelResult.decided(False)
        if cur.n == 0:
            return KernelResult.decided(True)
        if cur.n <= 3 * budget:
            return KernelResult.reduced(cur, budget, size_bound_claim=3 * budget)
        outcome = crown_or_matching(cur, budget)
        if outcome.matching is not None:
            # k + 1 disjoint edges need k + 1 distinct cover vertices.
            return KernelResult.decided(False)
        assert outcome.crown is not None
        cur, budget = crown_reduce_vc(cur, budget, outcome.crown)


# --- reoptimization 2k kernel ------------------------------------------------


@dataclass(frozen=True)
class ReoptVcReport:
    """Kernelization outcome plus the dispatch branch taken."""

    result: KernelResult
    branch: str
    trace: tuple[str, ...]


def _strip_isolated(g: Graph) -> tuple[Graph, dict[int, int]]:
    keep = [v for v in g.vertices if g.degree(v) > 0]
    sub, idx = induced_subgraph(g, keep)
    forward = {old: new for new, old in enumerate(idx)}
    return sub, forward


def _finish(
    modified: Graph,
    crown: frozenset[int],
    head: frozenset[int],
    rest: frozenset[int],
    saturating: Matching,
    budget: int,
    claim: int,
    branch: str,
    trace: list[str],
) -> ReoptVcReport:
    if not crown:
        if head:
            raise InternalInvariantBroken("empty crown with non-empty head")
        residual, parameter = modified, budget
    else:
        cd = CrownDecomposition(crown, head, rest, saturating)
        violations = validate_crown(modified, cd)
        if violations:
            raise InternalInvariantBroken(
                f"constructed crown invalid on the modified graph: {violations}"
            )
        residual, parameter = crown_reduce_vc(modified, budget, cd)
    if parameter < 0:
        result = KernelResult.decided(False)
    elif residual.n == 0:
        result = KernelResult.decided(True)
    else:
        result = KernelResult.reduced(residual, parameter, size_bound_claim=claim)
    return ReoptVcReport(result, branch, tuple(trace))


def _reduce_with_cover(
    h: Graph, cover: frozenset[int], budget: int, claim: int, branch: str, trace: list[str]
) -> ReoptVcReport:
    """Standard crown reduction of an unmodified graph with a known cover."""
    stripped, forward = _strip_isolated(h)
    live_cover = frozenset(forward[v] for v in cover if v in forward)
    if budget < 0:
        return ReoptVcReport(KernelResult.decided(False), branch, tuple(trace))
    if stripped.n == 0:
        return ReoptVcReport(KernelResult.decided(True), branch, tuple(trace))
    part = build_reopt_partition(stripped, live_cover)
    crown, head, rest = part.crown_c2()
    return _finish(
        stripped, crown, head, rest, part.saturating(head), budget, claim, branch, trace
    )


def reopt_vc_kernelize_2k_report(inst: ReoptInstance) -> ReoptVcReport:
    """The 2k reoptimization kernel for vertex cover under edge addition,
    with the dispatch branch recorded for observability.

    The degenerate case-5 branch can return 2k + 1 vertices (three on the
    path a-b-c with k = 1); its occurrences carry the ``case5-degenerate``
    trace marker so callers can log them.
    """
    if inst.problem is not ProblemKind.VERTEX_COVER or not isinstance(
        inst.modification, EdgeAdd
    ):
        raise ModificationMismatch(
            "expected a vertex cover instance under edge addition"
        )
    if inst.witness is None:
        raise WitnessNotACover("the 2k kernel needs a vertex cover witness")
    cover = frozenset(inst.witness)
    g = inst.original
    if not is_vertex_cover(g, cover):
        raise WitnessNotACover("witness does not cover every edge")
    if len(cover) > inst.k:
        raise WitnessNotACover(f"witness has {len(cover)} > k = {inst.k} vertices")
    u, v = inst.modification.u, inst.modification.v
    budget = inst.k_modified
    claim = 2 * inst.k
    trace: list[str] = []

    # The old cover still covers G + e when the new edge touches it.
    if u in cover or v in cover:
        trace.append("trivial")
        if len(cover) <= budget:
            return ReoptVcReport(KernelResult.decided(True), "trivial", tuple(trace))
        modified = apply_modification(g, inst.modification)
        return _reduce_with_cover(modified, cover, budget, claim, "trivial", trace)

    # New edge incident to a previously isolated vertex: it is now a leaf;
    # take its support into the cover and reduce the remainder.
    if g.degree(u) == 0 or g.degree(v) == 0:
        trace.append("isolated-leaf")
        modified = apply_modification(g, inst.modification)
        stripped, forward = _strip_isolated(modified)
        leaf_old = u if g.degree(u) == 0 else v
        support_old = v if leaf_old == u else u
        leaf, support = forward[leaf_old], forward[support_old]
        if stripped.degree(leaf) != 1:
            raise InternalInvariantBroken("isolated endpoint did not become a leaf")
        keep = [w for w in stripped.vertices if w not in (leaf, support)]
        remainder, idx = induced_subgraph(stripped, keep)
        back = {old: new for new, old in enumerate(idx)}
        live_cover = frozenset(
            back[forward[w]]
            for w in cover
            if w in forward and forward[w] in back
        )
        return _reduce_with_cover(
            remainder, live_cover, budget - 1, claim, "isolated-leaf", trace
        )

    # Main branch: the new edge joins two non-isolated vertices of B.
    stripped, forward = _strip_isolated(g)
    live_cover = frozenset(forward[w] for w in cover if w in forward)
    su, sv = forward[u], forward[v]
    k_bound = len(live_cover)
    modified = apply_modification(stripped, EdgeAdd(su, sv))
    part = build_reopt_partition(stripped, live_cover)
    branch = ""

    for _ in range(2 * stripped.n + 4):
        _check_partition_bounds(stripped, part, k_bound)

        def region(x: int) -> str:
            if x in part.b_unmatched:
                return "BU"
            if x in part.b1:
                return "B1"
            if x in part.b2 or x in part.b3:
                return "B23"
            raise InternalInvariantBroken(f"endpoint {x} is not in B")

        ru, rv = region(su), region(sv)
        regions = {ru, rv}

        if regions == {"B23"}:
            branch = branch or "case1"
            trace.append("case1")
            crown, head, rest = part.crown_c2()
            return _finish(
                modified, crown, head, rest, part.saturating(head),
                budget, claim, branch, trace,
            )

        if regions == {"BU"}:
            branch = branch or "case2"
            trace.append("case2")
            x, y = min(su, sv), max(su, sv)
            c1, h1, r1 = part.crown_c1()
            head = h1 | {x}
            crown = c1 - {x}
            saturating = Matching(
                part.saturating(h1).pairs | {normalize_edge(x, y)}
            )
            return _finish(
                modified, crown, head, r1, saturating, budget, claim, branch, trace
            )

        if regions == {"BU", "B23"}:
            branch = branch or "case3"
            trace.append("case3")
            x = su if ru == "BU" else sv
            c2, h2, r2 = part.crown_c2()
            return _finish(
                modified, c2 - {x}, h2, r2 | {x}, part.saturating(h2),
                budget, claim, branch, trace,
            )

        if regions == {"B1", "B23"}:
            branch = branch or "case4"
            trace.append("case4")
            x = su if ru == "B1" else sv
            rematched = rematch_to_expose(
                stripped, part.cover, part.independent, part.matching, x
            )
            if rematched is None:
                raise InternalInvariantBroken(
                    "no alternating escape for a vertex reachable from unmatched B"
                )
            part = _partition_from_matching(stripped, part.cover, rematched)
            continue

        # Case 5: one endpoint in B1, the other in B1 or unmatched B.
        branch = branch or "case5"
        if regions == {"B1"}:
            trace.append("case5-rematch-v")
            target = max(su, sv)
            rematched = rematch_to_expose(
                stripped, part.cover, part.independent, part.matching, target
            )
            if rematched is None:
                raise InternalInvariantBroken(
                    "no alternating escape for a vertex reachable from unmatched B"
                )
            part = _partition_from_matching(stripped, part.cover, rematched)
            continue

        # regions == {"B1", "BU"}
        x = su if ru == "B1" else sv  # in B1
        y = sv if x == su else su  # in unmatched B
        rematched = rematch_to_expose(
            stripped, part.cover, part.independent, part.matching, x, forbidden=y
        )
        if rematched is not None:
            trace.append("case5-rematch-u")
            part = _partition_from_matching(stripped, part.cover, rematched)
            continue

        # Every alternating path from x to unmatched B leads through y:
        # the pairs that lose reachability when y disappears move to the
        # rest together with y itself.
        trace.append("case5-degenerate")
        b_v, a_v = _vanishing_pairs(stripped, part, y)
        if x not in b_v:
            raise InternalInvariantBroken(
                "endpoint with no escape still reachable without the blocker"
            )
        c2, h2, r2 = part.crown_c2()
        crown = c2 - b_v - {y}
        head = h2 - a_v
        rest = r2 | b_v | a_v | {y}
        return _finish(
            modified, crown, head, rest, part.saturating(head),
            budget, 2 * inst.k + 1, branch, trace,
        )

    raise InternalInvariantBroken("case dispatch did not terminate")


def _vanishing_pairs(
    g: Graph, part: ReoptPartition, banned: int
) -> tuple[frozenset[int], frozenset[int]]:
    """B1/A1 pairs whose alternating reachability from unmatched B
    vanishes when ``banned`` is removed from the graph."""
    partners = part.matching.partner_map()
    frontier = sorted(part.b_unmatched - {banned})
    seen_a: set[int] = set()
    seen_b: set[int] = set()
    queue = list(frontier)
    while queue:
        x = queue.pop(0)
        for a in sorted(g.adjacency[x] & part.cover):
            if a in seen_a:
                continue
            seen_a.add(a)
            partner = partners.get(a)
            if partner is not None and partner != banned and partner not in seen_b:
                seen_b.add(partner)
                queue.append(partner)
    b_v = part.b1 - frozenset(seen_b)
    a_v = frozenset(partners[b] for b in b_v)
    return b_v, a_v


def _check_partition_bounds(g: Graph, part: ReoptPartition, k_bound: int) -> None:
    """After isolated-vertex stripping, the second crown always leaves at
    most 2k - 2 vertices outside crown and head when the graph is larger
    than 2k."""
    if g.n <= 2 * k_bound:
        return
    c2, _, r2 = part.crown_c2()
    if len(c2) < g.n - 2 * k_bound + 1:
        raise InternalInvariantBroken(
            f"second crown too small: |C2|={len(c2)} < n-2k+1={g.n - 2 * k_bound + 1}"
        )
    if len(r2) > 2 * k_bound - 2:
        raise InternalInvariantBroken(
            f"second rest too large: |R2|={len(r2)} > 2k-2={2 * k_bound - 2}"
        )


def reopt_vc_kernelize_2k(inst: ReoptInstance) -> KernelResult:
    """See ``reopt_vc_kernelize_2k_report``; this drops the branch report."""
    return reopt_vc_kernelize_2k_report(inst).result
