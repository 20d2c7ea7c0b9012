"""Problem kinds and optimization directions used across the toolkit."""

from __future__ import annotations

from enum import Enum


class Direction(Enum):
    MIN = "min"
    MAX = "max"


class ProblemKind(Enum):
    VERTEX_COVER = "vertex_cover"
    CONNECTED_VERTEX_COVER = "connected_vertex_cover"
    IVST = "ivst"
    LONGEST_PATH = "longest_path"
    CLIQUE = "clique"
    SET_COVER = "set_cover"
    TREEWIDTH = "treewidth"
    LEAF_OUT_TREE = "leaf_out_tree"


_DIRECTIONS = {
    ProblemKind.VERTEX_COVER: Direction.MIN,
    ProblemKind.CONNECTED_VERTEX_COVER: Direction.MIN,
    ProblemKind.IVST: Direction.MAX,
    ProblemKind.LONGEST_PATH: Direction.MAX,
    ProblemKind.CLIQUE: Direction.MAX,
    ProblemKind.SET_COVER: Direction.MIN,
    ProblemKind.TREEWIDTH: Direction.MIN,
    ProblemKind.LEAF_OUT_TREE: Direction.MAX,
}


def direction_of(kind: ProblemKind) -> Direction:
    """Whether a problem asks for cost <= k (MIN) or cost >= k (MAX)."""
    return _DIRECTIONS[kind]
