"""Decomposition-matrix templates for tame 2-blocks, keyed by Morita class.

Each matrix is stored in its standard row order: the first four rows are the
height-zero characters, the last row is the height-one character repeated
2^(n-2) - 1 times, and anything in between has height n - 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .blocks import FAMILIES, BlockData
from .matrices import DecompMatrix, Row
from .polyq import v2

__all__ = [
    "MoritaClass",
    "TemplateRow",
    "DecompTemplate",
    "BlockCounts",
    "FamilyBlock",
    "CatalogError",
    "get_class",
    "classes",
    "template",
    "counts",
    "is_realizable",
    "family_block",
    "normalize_tag",
    "MIN_N",
]

ZERO, ONE, LARGE = "zero", "one", "large"

MIN_N = {"dihedral": 3, "quaternion": 3, "semidihedral": 4}


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class MoritaClass:
    family: str
    tag: str
    min_n: int
    # no blocks in this class for n >= eliminated_from
    eliminated_from: int | None
    matrix_twin: str | None = None  # identical decomposition matrix
    degree_twin: str | None = None  # same degrees can fit both matrices
    exemplar: str = ""

    def eliminated_at(self, n: int) -> bool:
        return self.eliminated_from is not None and n >= self.eliminated_from

    @property
    def label(self) -> str:
        return f"{self.family} {self.tag}"


@dataclass(frozen=True)
class TemplateRow:
    vector: tuple[int, ...]
    height_tag: str
    mult: int

    def height(self, n: int) -> int:
        return {ZERO: 0, ONE: 1, LARGE: n - 2}[self.height_tag]


@dataclass(frozen=True)
class DecompTemplate:
    morita_class: MoritaClass
    n: int
    rows: tuple[TemplateRow, ...]

    @property
    def l(self) -> int:
        return len(self.rows[0].vector)

    @property
    def k(self) -> int:
        return sum(r.mult for r in self.rows)

    @property
    def large_count(self) -> int:
        return sum(1 for r in self.rows if r.height_tag == LARGE)

    def instantiate(self, brauer: Iterable[int]) -> DecompMatrix:
        brauer = tuple(brauer)
        if len(brauer) != self.l:
            raise ValueError(f"need {self.l} Brauer degrees, got {len(brauer)}")
        rows = tuple(
            Row(sum(c * b for c, b in zip(r.vector, brauer)), r.vector, r.mult, r.height(self.n))
            for r in self.rows
        )
        return DecompMatrix(rows, brauer)

    def to_text(self) -> str:
        lines = [f"{self.morita_class.label}  n={self.n}  k={self.k}  l={self.l}"]
        for r in self.rows:
            cells = " ".join("." if c == 0 else str(c) for c in r.vector)
            lines.append(f"  {cells:<7} {r.height_tag:<5} h={r.height(self.n):<3} x{r.mult}")
        return "\n".join(lines)

    def to_document(self) -> dict:
        return {
            "family": self.morita_class.family,
            "tag": self.morita_class.tag,
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "realizable": not self.morita_class.eliminated_at(self.n),
            "rows": [
                {"vector": list(r.vector), "height": r.height_tag, "height_value": r.height(self.n), "mult": r.mult}
                for r in self.rows
            ],
        }


@dataclass(frozen=True)
class BlockCounts:
    k: int
    l: int
    height_histogram: dict[int, int]


# Rows in standard order.
_MATRICES: dict[str, dict[str, tuple[tuple[int, ...], ...]]] = {
    "dihedral": {
        "1A": ((1,), (1,), (1,), (1,), (2,)),
        "2A": ((1, 0), (1, 0), (1, 1), (1, 1), (2, 1)),
        "2B": ((1, 0), (1, 0), (1, 1), (1, 1), (0, 1)),
        "3A": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (2, 1, 1)),
        "3K": ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (0, 1, 1)),
        "3B": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (0, 1, 0)),
    },
    "quaternion": {
        "3A": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (0, 1, 0), (0, 0, 1), (2, 1, 1)),
        "3K": ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1)),
        "3B": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (2, 1, 1), (0, 0, 1), (0, 1, 0)),
        "1A": ((1,), (1,), (1,), (1,), (2,)),
        "2A": ((1, 0), (1, 0), (1, 1), (1, 1), (0, 1), (2, 1)),
        "2B": ((1, 0), (1, 0), (1, 1), (1, 1), (2, 1), (0, 1)),
    },
    "semidihedral": {
        "3B1": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (0, 0, 1), (0, 1, 0)),
        "3D": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (0, 0, 1), (0, 1, 0)),
        "3A1": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (0, 0, 1), (2, 1, 1)),
        "3C2,2": ((1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 1), (1, 1, 1)),
        "3B2": ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (2, 1, 1), (0, 1, 0)),
        "3C2,1": ((1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1), (0, 0, 1)),
        "3H": ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 1, 0)),
        "1A": ((1,), (1,), (1,), (1,), (2,)),
        "2A1": ((1, 0), (1, 0), (1, 1), (1, 1), (0, 1), (2, 1)),
        "2B2": ((1, 0), (1, 0), (1, 1), (1, 1), (2, 1), (0, 1)),
        "2A2": ((1, 0), (1, 0), (1, 1), (1, 1), (2, 1)),
        "2B1": ((1, 0), (1, 0), (1, 1), (1, 1), (0, 1)),
        "2B4": ((1, 0), (1, 0), (0, 1), (0, 1), (1, 1)),
    },
}


def _cls(family, tag, eliminated_from=None, min_n=None, **kw) -> MoritaClass:
    return MoritaClass(family, tag, MIN_N[family] if min_n is None else min_n, eliminated_from, **kw)


_CLASSES: tuple[MoritaClass, ...] = (
    _cls("dihedral", "1A", exemplar="kD_{2^n}"),
    _cls("dihedral", "2A", exemplar="principal block of PGL2(q), q = 1 mod 4"),
    _cls("dihedral", "2B", exemplar="principal block of PGL2(q), q = 3 mod 4"),
    _cls("dihedral", "3A", exemplar="principal block of PSL2(q), q = 1 mod 4"),
    _cls("dihedral", "3K", exemplar="principal block of PSL2(q), q = 3 mod 4"),
    _cls("dihedral", "3B", eliminated_from=4, exemplar="principal block of Alt(7), n = 3 only"),
    _cls("quaternion", "3A", exemplar="principal block of SL2(q), q = 1 mod 4"),
    _cls("quaternion", "3K", exemplar="principal block of SL2(q), q = 3 mod 4"),
    # At n = 3 this matrix coincides with quaternion 3A; the class starts at n = 4.
    _cls("quaternion", "3B", eliminated_from=5, min_n=4, exemplar="principal block of 2.Alt(7), n = 4 only"),
    _cls("quaternion", "1A", exemplar="kQ_{2^n}"),
    _cls("quaternion", "2A", exemplar="principal block of SL2(q).2, q = 1 mod 4, n >= 4"),
    _cls("quaternion", "2B", exemplar="principal block of SL2(q).2, q = 3 mod 4, n >= 4"),
    _cls("semidihedral", "3B1", matrix_twin="3D", exemplar="principal block of PSL3(q), q = 3 mod 4"),
    _cls("semidihedral", "3D", matrix_twin="3B1", exemplar="no known example"),
    _cls("semidihedral", "3A1", degree_twin="3C2,2", exemplar="principal block of PSU3(q), q = 1 mod 4"),
    _cls("semidihedral", "3C2,2", degree_twin="3A1", exemplar="no known example"),
    _cls("semidihedral", "3B2", eliminated_from=5, degree_twin="3C2,1", exemplar="possibly a block of M, n = 4"),
    _cls("semidihedral", "3C2,1", eliminated_from=5, degree_twin="3B2", exemplar="possibly a block of M, n = 4"),
    _cls("semidihedral", "3H", eliminated_from=4, exemplar="none"),
    _cls("semidihedral", "1A", exemplar="kSD_{2^n}"),
    _cls("semidihedral", "2A1", exemplar="principal block of GU2(q), q = 1 mod 4"),
    _cls("semidihedral", "2B2", exemplar="principal block of GL2(q), q = 3 mod 4"),
    _cls("semidihedral", "2A2", exemplar="principal block of PSL2(q^2).2"),
    _cls("semidihedral", "2B1", eliminated_from=5, exemplar="non-principal block of 3.M10, n = 4"),
    _cls("semidihedral", "2B4", eliminated_from=4, exemplar="none"),
)

_BY_KEY = {(c.family, c.tag): c for c in _CLASSES}


def normalize_tag(tag: str) -> str:
    """``"3B_1"``, ``"(3b1)"`` and ``"3B1"`` all become ``"3B1"``;
    ``"3C_{2,2}"`` becomes ``"3C2,2"``."""
    t = tag.strip()
    for ch in "_{}() ":
        t = t.replace(ch, "")
    return t.upper()


def get_class(family: str, tag: str) -> MoritaClass:
    try:
        return _BY_KEY[(family, normalize_tag(tag))]
    except KeyError:
        raise CatalogError(f"unknown class {tag!r} for family {family!r}") from None


def classes(family: str | None = None) -> tuple[MoritaClass, ...]:
    if family is not None and family not in FAMILIES:
        raise CatalogError(f"unknown family {family!r}")
    return tuple(c for c in _CLASSES if family is None or c.family == family)


def _resolve(cls_or_family, tag=None) -> MoritaClass:
    if isinstance(cls_or_family, MoritaClass):
        return cls_or_family
    return get_class(cls_or_family, tag)


def template(cls: MoritaClass | str, n: int | str, tag_n: int | None = None) -> DecompTemplate:
    """``template(cls, n)`` or ``template(family, tag, n)``."""
    if isinstance(cls, str):
        cls, n = get_class(cls, n), tag_n
    if n is None or n < cls.min_n:
        raise CatalogError(f"{cls.label} needs n >= {cls.min_n}, got {n}")
    vectors = _MATRICES[cls.family][cls.tag]
    rep = 2 ** (n - 2) - 1
    rows = []
    for i, v in enumerate(vectors):
        if i < 4:
            rows.append(TemplateRow(v, ZERO, 1))
        elif i == len(vectors) - 1:
            rows.append(TemplateRow(v, ONE, rep))
        else:
            rows.append(TemplateRow(v, LARGE, 1))
    return DecompTemplate(cls, n, tuple(rows))


def counts(cls: MoritaClass | str, n: int | str, tag_n: int | None = None) -> BlockCounts:
    t = template(cls, n, tag_n)
    hist: dict[int, int] = {}
    for r in t.rows:
        h = r.height(t.n)
        hist[h] = hist.get(h, 0) + r.mult
    return BlockCounts(t.k, t.l, hist)


def is_realizable(cls: MoritaClass | str, n: int | str, tag_n: int | None = None) -> bool:
    if isinstance(cls, str):
        cls, n = get_class(cls, n), tag_n
    if n < cls.min_n:
        raise CatalogError(f"{cls.label} needs n >= {cls.min_n}, got {n}")
    return not cls.eliminated_at(n)


# -- generators for the group families that realize the classes ----------


@dataclass(frozen=True)
class FamilyBlock:
    block: BlockData
    morita_class: MoritaClass | None  # None when the block is not tame
    brauer: tuple[int, ...]
    matrix: DecompMatrix


def _is_odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    p = next((d for d in range(3, math.isqrt(q) + 1, 2) if q % d == 0), q)
    while q % p == 0:
        q //= p
    return q == 1


def _general_linear_matrix(q: int, unitary: bool) -> tuple[DecompMatrix, int]:
    a, c = 2 ** v2(q + 1), 2 ** v2(q - 1)
    x, y = (a, c) if unitary else (c, a)
    # the q-1 and q+1 counts trade places between the two groups
    small, big = (x * (x - 1) // 2, x * (y - 1) // 2) if unitary else (x * (y - 1) // 2, x * (x - 1) // 2)
    rows = (
        Row(1, (1, 0), x),
        Row(q, (1, 1), x),
        Row(q - 1, (0, 1), small),
        Row(q + 1, (2, 1), big),
    )
    rows = tuple(r for r in rows if r.mult)
    # Sylow 2-subgroup order of GU2(q) is a^2 c, of GL2(q) is c^2 a
    n = 2 * v2(x) + v2(y)
    return DecompMatrix(rows, (1, q - 1)), n


FAMILY_NAMES = ("psl2", "pgl2", "sl2", "gu2", "gl2")


def family_block(family_name: str, q: int) -> FamilyBlock:
    """Principal 2-block of PSL2/PGL2/SL2/GU2/GL2 over GF(q), q odd.

    The tame cases come with their class and instantiated template; GU2(q)
    for q = 3 mod 4 and GL2(q) for q = 1 mod 4 are returned with
    ``morita_class=None`` (their defect groups are not tame).
    """
    if family_name not in FAMILY_NAMES:
        raise CatalogError(f"unknown group family {family_name!r}")
    if not _is_odd_prime_power(q):
        raise CatalogError(f"q must be an odd prime power, got {q}")
    eps = 1 if q % 4 == 1 else -1
    label = f"{family_name.upper()}({q})"

    if family_name in ("gu2", "gl2"):
        unitary = family_name == "gu2"
        matrix, n = _general_linear_matrix(q, unitary)
        tame = (eps == 1) if unitary else (eps == -1)
        if not tame:
            block = BlockData.from_degrees(label, n, (r.degree for r in matrix.expanded()))
            return FamilyBlock(block, None, matrix.brauer, matrix)
        cls = get_class("semidihedral", "2A1" if unitary else "2B2")
        n = v2(q - eps) + 2
        brauer = (1, q - 1)
    elif family_name == "psl2":
        cls = get_class("dihedral", "3A" if eps == 1 else "3K")
        n = v2(q - eps)
        brauer = (1, (q - 1) // 2, (q - 1) // 2)
    elif family_name == "pgl2":
        cls = get_class("dihedral", "2A" if eps == 1 else "2B")
        n = v2(q - eps) + 1
        brauer = (1, q - 1)
    else:  # sl2
        cls = get_class("quaternion", "3A" if eps == 1 else "3K")
        n = v2(q - eps) + 1
        brauer = (1, (q - 1) // 2, (q - 1) // 2)

    if n < cls.min_n:
        raise CatalogError(f"{label}: defect exponent {n} is below {cls.min_n} for {cls.family} blocks")
    matrix = template(cls, n).instantiate(brauer)
    block = BlockData.from_degrees(label, n, (r.degree for r in matrix.expanded()), cls.family)
    return FamilyBlock(block, cls, brauer, matrix)
