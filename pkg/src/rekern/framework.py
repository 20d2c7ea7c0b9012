"""Environment-based reoptimization kernelizers for compositional problems.

For an OR-compositional problem, membership of a disjoint union is the
disjunction over components; for AND-compositional, the conjunction.
When a local modification respects the problem's closure direction
(monotone problems tolerate deletions, comonotone ones additions), the
given witness either survives outright or the question localizes to the
components touched by the modification, where a pluggable component
kernelizer takes over.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import DegreeTooHigh, SpecModificationMismatch, UnsupportedCombination
from .graphs import (
    EdgeAdd,
    EdgeDel,
    Graph,
    LocalModification,
    VertexAdd,
    VertexDel,
    apply_modification,
    check_modification,
    component_of,
    components,
    disjoint_union,
    induced_subgraph,
    path_graph,
)
from .instances import KernelResult, ReoptInstance, as_concrete_instance
from .oracles import membership, verify_solution
from .problems import Direction, ProblemKind, direction_of


class Monotonicity(Enum):
    MONOTONE = "monotone"  # closed under removal of edges and vertices
    COMONOTONE = "comonotone"  # closed under addition
    NEITHER = "neither"


class Compositionality(Enum):
    OR = "or"
    AND = "and"
    NEITHER = "neither"


@dataclass(frozen=True)
class ProblemSpec:
    """Declared properties of a parameterized graph problem, plus hooks
    for its verifier and a desk-scale exact membership oracle."""

    name: str
    kind: ProblemKind
    direction: Direction
    monotonicity: Monotonicity
    compositionality: Compositionality
    verifier: Callable[[Graph, int, object], bool]
    oracle: Callable[[Graph, int], bool]


def _spec_for(
    kind: ProblemKind, monotonicity: Monotonicity, compositionality: Compositionality
) -> ProblemSpec:
    return ProblemSpec(
        name=kind.value,
        kind=kind,
        direction=direction_of(kind),
        monotonicity=monotonicity,
        compositionality=compositionality,
        verifier=lambda g, k, cand, _kind=kind: verify_solution(_kind, g, cand, k),
        oracle=lambda g, k, _kind=kind: membership(_kind, g, k),
    )


def builtin_spec(kind: ProblemKind) -> ProblemSpec:
    """Prebuilt specs for the compositional problems the toolkit ships.

    Longest path is registered under the deletion (monotone) dispatch
    rule; its trivial yes shortcut is only sound when the deletion cannot
    break the recorded solution, so drive it with absent witnesses.
    """
    table = {
        ProblemKind.IVST: (Monotonicity.COMONOTONE, Compositionality.OR),
        ProblemKind.CLIQUE: (Monotonicity.COMONOTONE, Compositionality.OR),
        ProblemKind.LONGEST_PATH: (Monotonicity.MONOTONE, Compositionality.OR),
        ProblemKind.TREEWIDTH: (Monotonicity.MONOTONE, Compositionality.AND),
    }
    if kind not in table:
        raise UnsupportedCombination(f"no compositional spec for {kind}")
    mono, comp = table[kind]
    return _spec_for(kind, mono, comp)


@dataclass(frozen=True)
class ComponentKernelizer:
    """A kernelizer applied to one connected component at a time."""

    name: str
    run: Callable[[Graph, int], KernelResult]
    size_bound: Callable[[int], int]


def exact_component_kernelizer(kind: ProblemKind) -> ComponentKernelizer:
    """Desk-scale component kernelizer backed by the exact oracle.

    Not polynomial time in general; this seam is where an external
    per-component kernel (e.g. a 2k connected-instance kernel) would
    attach in a production deployment.
    """
    return ComponentKernelizer(
        name=f"exact-{kind.value}",
        run=lambda comp, k: KernelResult.decided(membership(kind, comp, k)),
        size_bound=lambda k: 2,
    )


def environment(
    g_before: Graph, m: LocalModification
) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components of the modified graph touched by the modification.

    Additions yield the single component containing the new edge or
    vertex; an edge deletion the one or two components of its former
    endpoints; a vertex deletion every component meeting the deleted
    vertex's former neighborhood.
    """
    check_modification(g_before, m)
    g_after = apply_modification(g_before, m)
    if isinstance(m, EdgeAdd):
        return [component_of(g_after, m.u)]
    if isinstance(m, VertexAdd):
        return [component_of(g_after, g_before.n)]
    if isinstance(m, EdgeDel):
        envs = [component_of(g_after, m.u)]
        if m.v not in envs[0][1]:
            envs.append(component_of(g_after, m.v))
        return envs
    # VertexDel: indices above the deleted vertex shift down by one.
    neighbors = sorted(g_before.adjacency[m.v])
    mapped = [w if w < m.v else w - 1 for w in neighbors]
    envs = []
    seen: set[int] = set()
    for comp in components(g_after):
        if seen.isdisjoint(comp) and any(w in comp for w in mapped):
            seen.update(comp)
            envs.append(induced_subgraph(g_after, comp))
    return envs


_SUPPORTED = {
    (Compositionality.OR, Monotonicity.MONOTONE): (EdgeDel, VertexDel),
    (Compositionality.OR, Monotonicity.COMONOTONE): (EdgeAdd, VertexAdd),
    (Compositionality.AND, Monotonicity.MONOTONE): (EdgeAdd, VertexAdd),
    (Compositionality.AND, Monotonicity.COMONOTONE): (EdgeDel, VertexDel),
}


def _combine(results: list[KernelResult], or_mode: bool) -> KernelResult:
    """Fold per-component kernels into one result.

    Decided answers short-circuit; surviving reduced kernels are unioned,
    which preserves membership exactly because the problem composes over
    disjoint unions.
    """
    reduced: list[KernelResult] = []
    for r in results:
        if r.is_decided:
            if or_mode and r.answer:
                return KernelResult.decided(True)
            if not or_mode and not r.answer:
                return KernelResult.decided(False)
        else:
            reduced.append(r)
    if not reduced:
        return KernelResult.decided(not or_mode)
    if len(reduced) == 1:
        return reduced[0]
    params = {r.parameter for r in reduced}
    if len(params) != 1:
        raise UnsupportedCombination(
            "cannot union component kernels with different parameters"
        )
    graph = reduced[0].graph
    claim = reduced[0].size_bound_claim or reduced[0].graph.n
    for r in reduced[1:]:
        graph = disjoint_union(graph, r.graph)
        claim += r.size_bound_claim or r.graph.n
    return KernelResult.reduced(graph, reduced[0].parameter, size_bound_claim=claim)


def compositional_reopt_kernelize(
    inst: ReoptInstance,
    spec: ProblemSpec,
    ck: ComponentKernelizer,
    *,
    max_env_components: int = 8,
) -> KernelResult:
    """Dispatch a reoptimization instance per the four compositional rules.

    The witness branch applies the closure theorem without inspecting the
    graph; the other branch runs the component kernelizer on the
    environment of the modification.
    """
    key = (spec.compositionality, spec.monotonicity)
    if key not in _SUPPORTED:
        raise SpecModificationMismatch(
            f"{spec.name} is not compositional-with-closure; nothing to dispatch"
        )
    if not isinstance(inst.modification, _SUPPORTED[key]):
        raise SpecModificationMismatch(
            f"{spec.name} ({key[0].value}, {key[1].value}) does not support "
            f"{type(inst.modification).__name__}"
        )
    if isinstance(inst.modification, VertexDel):
        envs = environment(inst.original, inst.modification)
        if len(envs) > max_env_components:
            raise DegreeTooHigh(
                f"vertex deletion split into {len(envs)} components, "
                f"bound is {max_env_components}"
            )
    or_mode = spec.compositionality is Compositionality.OR

    if or_mode:
        # Deletion on a monotone problem / addition on a comonotone one
        # preserves the recorded solution.
        if inst.witness is not None:
            return KernelResult.decided(True)
        envs = environment(inst.original, inst.modification)
        results = [ck.run(comp, inst.k_modified) for comp, _ in envs]
        return _combine(results, or_mode=True)

    # AND-compositional: a no-instance stays a no-instance when the
    # modification cannot create solutions; otherwise only the environment
    # components need re-checking.
    if inst.witness is None:
        return KernelResult.decided(False)
    envs = environment(inst.original, inst.modification)
    results = [ck.run(comp, inst.k_modified) for comp, _ in envs]
    return _combine(results, or_mode=False)


def canonical_ivst_yes_instance(k: int) -> Graph:
    """Path on k + 2 vertices: the smallest tree with k internal vertices.

    For k = 1 this has 3 > 2k vertices; the 2k bound on trivial yes
    instances only holds from k >= 2 on.
    """
    return path_graph(k + 2)


def ivst_reopt_kernelize_eplus(
    inst: ReoptInstance,
    ck: ComponentKernelizer,
    *,
    prior_kernel: Graph | None = None,
) -> KernelResult:
    """Edge-addition reoptimization kernel for the internal-vertex-subtree
    problem.

    With a witness subtree the answer is yes outright (subtrees survive
    edge additions).  Without one, only the component containing the new
    edge can host a solution, so the component kernelizer settles it.
    When ``prior_kernel`` carries a kernel of the original instance
    instead of a solution, the union of both kernels is returned.
    """
    if inst.problem is not ProblemKind.IVST or not isinstance(
        inst.modification, EdgeAdd
    ):
        raise SpecModificationMismatch("expected an IVST instance under edge addition")
    if prior_kernel is not None:
        comp, _ = component_of(inst.modified, inst.modification.u)
        env_kernel, env_param = as_concrete_instance(ck.run(comp, inst.k_modified))
        union = disjoint_union(prior_kernel, env_kernel)
        return KernelResult.reduced(
            union, inst.k_modified, size_bound_claim=union.n
        )
    if inst.witness is not None:
        return KernelResult.decided(True)
    comp, _ = component_of(inst.modified, inst.modification.u)
    return ck.run(comp, inst.k_modified)


@dataclass(frozen=True)
class CompositionReport:
    holds: bool
    counterexample: tuple[Graph, Graph, int] | None = None


def check_composition(
    spec: ProblemSpec, mode: Compositionality, size_bound: int
) -> CompositionReport:
    """Exhaustively test the compositionality biconditional over all small
    graph pairs, using the exact oracle; returns the first counterexample."""
    from .smallgraphs import nonisomorphic_graphs

    pool = [g for n in range(1, size_bound + 1) for g in nonisomorphic_graphs(n)]
    for k in range(0, size_bound + 1):
        for g1 in pool:
            in1 = spec.oracle(g1, k)
            for g2 in pool:
                in2 = spec.oracle(g2, k)
                union_in = spec.oracle(disjoint_union(g1, g2), k)
                if mode is Compositionality.OR:
                    expected = in1 or in2
                elif mode is Compositionality.AND:
                    expected = in1 and in2
                else:
                    raise UnsupportedCombination("mode must be OR or AND")
                if union_in != expected:
                    return CompositionReport(False, (g1, g2, k))
    return CompositionReport(True, None)
