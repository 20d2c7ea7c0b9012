"""Set cover instances parameterized by universe size."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidSetCover


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe {1..u}, a family of subsets, and a target size k <= u."""

    universe_size: int
    family: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self) -> None:
        if self.universe_size < 1:
            raise InvalidSetCover("universe must be non-empty")
        universe = self.universe
        for i, member in enumerate(self.family):
            if not member <= universe:
                raise InvalidSetCover(
                    f"family member {i} is not a subset of the universe"
                )
        if not (0 < self.k <= self.universe_size):
            raise InvalidSetCover(
                f"target k={self.k} must satisfy 1 <= k <= u={self.universe_size}"
            )

    @classmethod
    def of(
        cls, universe_size: int, family: Iterable[Iterable[int]], k: int
    ) -> "SetCoverInstance":
        return cls(universe_size, tuple(frozenset(m) for m in family), k)

    @property
    def universe(self) -> frozenset[int]:
        return frozenset(range(1, self.universe_size + 1))

    @property
    def t(self) -> int:
        return len(self.family)
