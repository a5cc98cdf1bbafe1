"""Hook and core calculus for partitions.

The ell-core is computed on the abacus: a partition with r parts has
first-column hook lengths (beta-numbers) ``parts[i] + r - 1 - i``, and
removing an ell-hook is the same as sliding one bead from position b to
the empty position b - ell.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "Partition",
    "ell_core",
    "removable_hooks",
    "remove_hook",
    "is_triangular",
    "triangular_partition",
    "sym_blocks_of_weight",
    "alt_dihedral_block_exists",
    "partitions_of",
    "partitions_with_core",
    "hook_lengths",
    "character_degree",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of ``str``: ``"8,1"``; ``"-"`` is the empty partition."""
        text = text.strip()
        if text in ("-", ""):
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def beta_numbers(self, length: int | None = None) -> tuple[int, ...]:
        r = len(self.parts) if length is None else length
        if r < len(self.parts):
            raise ValueError("beta-set shorter than the partition")
        padded = self.parts + (0,) * (r - len(self.parts))
        return tuple(p + r - 1 - i for i, p in enumerate(padded))

    @classmethod
    def from_beta_numbers(cls, beta) -> "Partition":
        beta = sorted(beta, reverse=True)
        r = len(beta)
        parts = [b - (r - 1 - i) for i, b in enumerate(beta)]
        return cls(tuple(p for p in parts if p > 0))


def removable_hooks(lam: Partition, ell: int) -> list[tuple[int, int]]:
    """Removable ell-rim-hooks as (start row, leg length), top row first."""
    if ell < 1:
        raise ValueError("ell must be positive")
    beta = lam.beta_numbers()
    present = set(beta)
    out = []
    for i, b in enumerate(beta):
        if b - ell >= 0 and b - ell not in present:
            # beads strictly between b-ell and b are the rows the hook crosses
            leg = sum(1 for c in beta if b - ell < c < b)
            out.append((i, leg))
    return out


def remove_hook(lam: Partition, start_row: int, ell: int) -> Partition:
    beta = list(lam.beta_numbers())
    b = beta[start_row]
    if b - ell < 0 or b - ell in beta:
        raise ValueError(f"no removable {ell}-hook starting in row {start_row} of {lam}")
    beta[start_row] = b - ell
    return Partition.from_beta_numbers(beta)


def ell_core(lam: Partition, ell: int) -> tuple[Partition, int]:
    """Return (ell-core, ell-weight).

    Removes hooks one at a time, always the one whose top row is highest;
    the result does not depend on that choice.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    weight = 0
    while True:
        hooks = removable_hooks(lam, ell)
        if not hooks:
            return lam, weight
        lam = remove_hook(lam, hooks[0][0], ell)
        weight += 1


def _abacus_core(lam: Partition, ell: int) -> tuple[Partition, int]:
    # Slide every runner's beads to the top in one pass; used by the
    # bulk helpers below.
    beta = lam.beta_numbers()
    weight = 0
    counts = {r: 0 for r in range(ell)}
    for b in sorted(beta):
        r = b % ell
        target = counts[r] * ell + r
        weight += (b - target) // ell
        counts[r] += 1
    core_beta = [k * ell + r for r in range(ell) for k in range(counts[r])]
    return Partition.from_beta_numbers(core_beta), weight


def is_triangular(lam: Partition) -> int | None:
    """t if ``lam == (t, t-1, ..., 1)``, else None; the empty partition gives 0."""
    t = len(lam.parts)
    if lam.parts == tuple(range(t, 0, -1)):
        return t
    return None


def triangular_partition(t: int) -> Partition:
    return Partition(tuple(range(t, 0, -1)))


def _triangular_index(m: int) -> int | None:
    """t with t(t+1)/2 == m, if any."""
    if m < 0:
        return None
    t = (math.isqrt(8 * m + 1) - 1) // 2
    return t if t * (t + 1) // 2 == m else None


def sym_blocks_of_weight(n: int, w: int) -> list[Partition]:
    """2-cores labelling the 2-blocks of Sym(n) of weight ``w``."""
    t = _triangular_index(n - 2 * w)
    return [] if t is None else [triangular_partition(t)]


def alt_dihedral_block_exists(n: int) -> bool:
    """Whether Alt(n) has a 2-block with dihedral defect groups of order >= 8."""
    if n < 5:
        raise ValueError("n must be >= 5")
    if n == 6:
        return True
    t = _triangular_index(n - 6)
    return t is not None and t >= 1


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def partitions_with_core(core: Partition, ell: int, w: int) -> list[Partition]:
    """The ordinary characters of the Sym(|core| + ell*w) block with this core."""
    n = core.size + ell * w
    return [lam for lam in partitions_of(n) if _abacus_core(lam, ell) == (core, w)]


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = lam.conjugate().parts
    return [[lam.parts[i] - j + conj[j] - i - 1 for j in range(lam.parts[i])] for i in range(len(lam))]


@lru_cache(maxsize=None)
def _degree(parts: tuple[int, ...]) -> int:
    lam = Partition(parts)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return math.factorial(lam.size) // prod


def character_degree(lam: Partition) -> int:
    """Degree of the irreducible character of Sym(|lam|), by the hook formula."""
    return _degree(lam.parts)
