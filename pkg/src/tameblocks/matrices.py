"""Concrete decomposition matrices with row multiplicities."""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

__all__ = ["Row", "DecompMatrix", "matrix_from_document", "matrix_to_document"]


@dataclass(frozen=True, order=True)
class Row:
    degree: int
    vector: tuple[int, ...]
    mult: int = 1
    height: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(int(x) for x in self.vector))
        if self.degree < 1:
            raise ValueError(f"row degree must be positive, got {self.degree}")
        if self.mult < 1:
            raise ValueError(f"row multiplicity must be positive, got {self.mult}")
        if any(x < 0 for x in self.vector):
            raise ValueError(f"negative decomposition number in {self.vector}")


@dataclass(frozen=True)
class DecompMatrix:
    """Rows are ordinary characters (grouped, with multiplicity); columns are
    Brauer characters, optionally with known degrees."""

    rows: tuple[Row, ...]
    brauer: tuple[int | None, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(self.rows)
        if not rows:
            raise ValueError("empty decomposition matrix")
        width = len(rows[0].vector)
        if any(len(r.vector) != width for r in rows):
            raise ValueError("rows have different lengths")
        brauer = tuple(self.brauer) if self.brauer else (None,) * width
        if len(brauer) != width:
            raise ValueError("brauer degree count does not match column count")
        for r in rows:
            if not any(r.vector):
                raise ValueError(f"zero row for degree {r.degree}")
        for j in range(width):
            if not any(r.vector[j] for r in rows):
                raise ValueError(f"column {j} is zero")
        if all(b is not None for b in brauer):
            for r in rows:
                if sum(c * b for c, b in zip(r.vector, brauer)) != r.degree:
                    raise ValueError(f"row {r.vector} does not give degree {r.degree}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "brauer", brauer)

    @property
    def l(self) -> int:
        return len(self.brauer)

    @property
    def k(self) -> int:
        return sum(r.mult for r in self.rows)

    def expanded(self) -> list[Row]:
        """One Row (mult 1) per ordinary character."""
        return [Row(r.degree, r.vector, 1, r.height) for r in self.rows for _ in range(r.mult)]

    def degree_multiset(self) -> Counter:
        c: Counter = Counter()
        for r in self.rows:
            c[r.degree] += r.mult
        return c

    def merged(self) -> "DecompMatrix":
        """Combine rows that agree in degree, vector and height."""
        acc: dict[tuple, int] = {}
        for r in self.rows:
            key = (r.degree, r.vector, r.height)
            acc[key] = acc.get(key, 0) + r.mult
        rows = tuple(Row(d, v, m, h) for (d, v, h), m in acc.items())
        return DecompMatrix(rows, self.brauer)

    def permute_columns(self, perm: Sequence[int]) -> "DecompMatrix":
        """New column j is old column perm[j]."""
        rows = tuple(Row(r.degree, tuple(r.vector[p] for p in perm), r.mult, r.height) for r in self.rows)
        return DecompMatrix(rows, tuple(self.brauer[p] for p in perm))

    def canonical(self) -> "DecompMatrix":
        """Representative up to row and column permutation.

        Rows sorted by (height, degree, vector); the column order is the one
        giving the lexicographically least result over all l! orders.
        """
        merged = self.merged()
        best = None
        for perm in itertools.permutations(range(self.l)):
            cand = merged.permute_columns(perm)
            key = _sort_key(cand)
            if best is None or key < best[0]:
                best = (key, cand)
        key, cand = best
        rows = tuple(sorted(cand.rows, key=_row_key))
        return DecompMatrix(rows, cand.brauer)

    def key(self) -> tuple:
        """Hashable canonical key; equal keys mean equal up to permutation."""
        return _sort_key(self.canonical())

    def same_as(self, other: "DecompMatrix", heights: bool = True) -> bool:
        """Equal up to row and column permutation; ``heights=False`` ignores height labels."""
        if not heights:
            return self.without_heights().key() == other.without_heights().key()
        return self.key() == other.key()

    def without_heights(self) -> "DecompMatrix":
        return DecompMatrix(tuple(Row(r.degree, r.vector, r.mult) for r in self.rows), self.brauer)

    def duplicate_rows(self, factor: int) -> "DecompMatrix":
        if factor < 1:
            raise ValueError("factor must be >= 1")
        return DecompMatrix(tuple(Row(r.degree, r.vector, r.mult * factor, r.height) for r in self.rows), self.brauer)

    def to_text(self) -> str:
        width = max(len(str(r.degree)) for r in self.rows)
        lines = []
        if any(b is not None for b in self.brauer):
            lines.append(" " * width + " | " + " ".join("?" if b is None else str(b) for b in self.brauer))
        for r in self.rows:
            cells = " ".join("." if c == 0 else str(c) for c in r.vector)
            tail = f"  x{r.mult}" if r.mult != 1 else ""
            if r.height is not None:
                tail += f"  h={r.height}"
            lines.append(f"{r.degree:>{width}} | {cells}{tail}")
        return "\n".join(lines)


def _row_key(r: Row) -> tuple:
    return (-1 if r.height is None else r.height, r.degree, r.vector, r.mult)


def _sort_key(m: DecompMatrix) -> tuple:
    rows = tuple(sorted(_row_key(r) for r in m.rows))
    brauer = tuple(-1 if b is None else b for b in m.brauer)
    return (rows, brauer)


def matrix_to_document(m: DecompMatrix) -> dict:
    doc: dict = {}
    if any(b is not None for b in m.brauer):
        doc["brauer"] = [None if b is None else str(b) for b in m.brauer]
    rows = []
    for r in m.rows:
        row = {"degree": str(r.degree), "vector": list(r.vector), "mult": r.mult}
        if r.height is not None:
            row["height"] = r.height
        rows.append(row)
    doc["rows"] = rows
    return doc


def matrix_from_document(doc: dict | str) -> DecompMatrix:
    """Build a matrix from a mapping or JSON text.

    ``{"brauer": ["1", null], "rows": [{"degree": "1", "vector": [1, 0], "mult": 2}]}``
    Degrees may be given as strings or integers.
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        rows = tuple(
            Row(
                int(r["degree"]),
                tuple(int(x) for x in r["vector"]),
                int(r.get("mult", 1)),
                None if r.get("height") is None else int(r["height"]),
            )
            for r in doc["rows"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix document: {exc!r}") from None
    brauer = doc.get("brauer")
    if brauer is not None:
        brauer = tuple(None if b is None else int(b) for b in brauer)
    return DecompMatrix(rows, brauer or ())
