"""Concrete blocks: a group label, defect exponent and ordinary degrees."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

FAMILIES = ("dihedral", "semidihedral", "quaternion")

__all__ = ["FAMILIES", "BlockData", "TameBlockError"]


class TameBlockError(ValueError):
    """Input cannot be the degree data of a tame 2-block."""


@dataclass(frozen=True)
class BlockData:
    group: str
    n: int
    characters: tuple[tuple[int, int], ...]
    family: str | None = None
    v2_order: int | None = None

    def __post_init__(self):
        chars = tuple((int(d), int(m)) for d, m in self.characters)
        if not chars:
            raise ValueError(f"{self.group}: no characters")
        for d, m in chars:
            if d < 1:
                raise ValueError(f"{self.group}: degree {d} is not positive")
            if m < 1:
                raise ValueError(f"{self.group}: multiplicity {m} is not positive")
        if self.family is not None and self.family not in FAMILIES:
            raise ValueError(f"{self.group}: unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError(f"{self.group}: defect exponent must be >= 2")
        object.__setattr__(self, "characters", chars)

    @classmethod
    def from_degrees(cls, group: str, n: int, degrees: Iterable[int], family: str | None = None,
                     v2_order: int | None = None) -> "BlockData":
        counts: dict[int, int] = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        return cls(group, n, tuple(counts.items()), family, v2_order)

    @property
    def degrees(self) -> list[int]:
        return [d for d, m in self.characters for _ in range(m)]

    @property
    def k(self) -> int:
        return sum(m for _, m in self.characters)

    def degree_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d, m in self.characters:
            out[d] = out.get(d, 0) + m
        return out

    def scaled(self, factor: int) -> "BlockData":
        return BlockData(self.group, self.n, tuple((d * factor, m) for d, m in self.characters),
                         self.family, self.v2_order)
