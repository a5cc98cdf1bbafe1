"""Identify the Morita class of a tame block from its ordinary degrees.

Heights come from 2-adic valuations. Each catalog template valid at the
block's defect is then tried: the four height-zero degrees are assigned
to the four height-zero rows (only orders compatible with componentwise
dominance of the row vectors are tried), the Brauer degrees are solved
from ``l`` independent rows, and every other row's degree is predicted
and compared with the block.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .blocks import FAMILIES, BlockData, TameBlockError
from .catalog import MoritaClass, classes, get_class, template
from .matrices import DecompMatrix
from .polyq import v2

__all__ = [
    "TemplateSolution",
    "infer_heights",
    "match_templates",
    "classify_dihedral_shortcut",
    "MAX_LARGE",
]

MAX_LARGE = {"dihedral": 0, "semidihedral": 1, "quaternion": 2}


@dataclass(frozen=True)
class TemplateSolution:
    morita_class: MoritaClass
    n: int
    brauer: tuple[int, ...]
    # (degree, height, index of the template row it fills)
    row_assignment: tuple[tuple[int, int, int], ...]

    @cached_property
    def matrix(self) -> DecompMatrix:
        return template(self.morita_class, self.n).instantiate(self.brauer)

    @property
    def family(self) -> str:
        return self.morita_class.family

    @property
    def tag(self) -> str:
        return self.morita_class.tag

    @property
    def realizable(self) -> bool:
        return not self.morita_class.eliminated_at(self.n)

    def __str__(self) -> str:
        phi = ", ".join(map(str, self.brauer))
        note = "" if self.realizable else "  [eliminated at this n]"
        return f"{self.family} {self.tag}  phi=({phi}){note}"


def _legal_histograms(n: int, family: str | None) -> list[dict[int, int]]:
    top = MAX_LARGE[family] if family else 2
    out = []
    for large in range(top + 1):
        hist = Counter({0: 4})
        hist[1] += 2 ** (n - 2) - 1
        if large:
            hist[n - 2] += large
        out.append(dict(hist))
    return out


def infer_heights(block: BlockData, family: str | None = None) -> dict[int, int]:
    """Map each degree to its height.

    With ``v2_order`` the height is ``v2(deg) - (v2_order - n)``; without it
    the smallest valuation in the block is taken as height zero.
    """
    if block.n < 3:
        raise TameBlockError(f"{block.group}: heights need n >= 3, got {block.n}")
    family = family or block.family
    vals = {d: v2(d) for d, _ in block.characters}
    base = block.v2_order - block.n if block.v2_order is not None else min(vals.values())
    heights = {d: v - base for d, v in vals.items()}
    if any(h < 0 for h in heights.values()):
        raise TameBlockError(f"{block.group}: negative height; v2_order too small for these degrees")
    hist: Counter = Counter()
    for d, m in block.characters:
        hist[heights[d]] += m
    if dict(hist) not in _legal_histograms(block.n, family):
        shown = ", ".join(f"{h}:{c}" for h, c in sorted(hist.items()))
        raise TameBlockError(f"{block.group}: height histogram {{{shown}}} is not that of a tame block with n={block.n}")
    return heights


# -- compiled templates ---------------------------------------------------


@dataclass(frozen=True)
class _Compiled:
    cls: MoritaClass
    n: int
    l: int
    zero_vectors: tuple[tuple[int, ...], ...]
    others: tuple[tuple[int, tuple[int, ...], int, int], ...]  # (height, vector, mult, row index)
    histogram: tuple[tuple[int, int], ...]
    orders: tuple[tuple[int, ...], ...]  # orders[k][i] = rank of the degree given to zero row i
    symmetries: tuple[tuple[int, ...], ...]  # column permutations fixing the template
    basis: tuple[int, ...]
    adjugate: tuple[tuple[int, ...], ...]
    det: int


def _dominated(u, w) -> bool:
    return u != w and all(a <= b for a, b in zip(u, w))


def _det(m) -> int:
    size = len(m)
    if size == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(size))


def _adjugate(m) -> tuple[tuple[int, ...], ...]:
    size = len(m)
    if size == 1:
        return ((1,),)
    cof = [[(-1) ** (i + j) * _det([r[:j] + r[j + 1:] for k, r in enumerate(m) if k != i]) for j in range(size)]
           for i in range(size)]
    return tuple(tuple(cof[j][i] for j in range(size)) for i in range(size))


@lru_cache(maxsize=None)
def _compile(family: str, tag: str, n: int) -> _Compiled:
    t = template(family, tag, n)
    zero = tuple(r.vector for r in t.rows[:4])
    others = tuple((r.height(n), r.vector, r.mult, i) for i, r in enumerate(t.rows) if i >= 4)
    hist: Counter = Counter()
    for r in t.rows:
        hist[r.height(n)] += r.mult
    orders = set()
    for ranks in itertools.permutations(range(4)):
        if all(ranks[i] < ranks[j] for i in range(4) for j in range(4) if _dominated(zero[i], zero[j])):
            orders.add(ranks)
    basis = next(
        b for b in itertools.combinations(range(4), t.l) if _det([list(zero[i]) for i in b]) != 0
    )
    m = [list(zero[i]) for i in basis]
    shape = Counter((r.vector, r.height(n), r.mult) for r in t.rows)
    symmetries = tuple(
        p for p in itertools.permutations(range(t.l))
        if Counter((tuple(r.vector[j] for j in p), r.height(n), r.mult) for r in t.rows) == shape
    )
    return _Compiled(t.morita_class, n, t.l, zero, others, tuple(sorted(hist.items())), _dedupe_orders(zero, orders),
                     symmetries, basis, _adjugate(m), _det(m))


def _dedupe_orders(zero, orders) -> tuple[tuple[int, ...], ...]:
    # two orders that hand the same sorted degree positions to the same
    # vectors are the same assignment
    seen = {}
    for ranks in sorted(orders):
        key = tuple(sorted((ranks[i], zero[i]) for i in range(4)))
        seen.setdefault(key, ranks)
    return tuple(seen.values())


def _candidates(family: str | None, n: int) -> list[MoritaClass]:
    fams = (family,) if family else FAMILIES
    return [c for f in fams for c in classes(f) if c.min_n <= n]


def _solve(comp: _Compiled, zero_degrees: list[int], by_height: dict[int, Counter]):
    for ranks in comp.orders:
        d = [zero_degrees[ranks[i]] for i in range(4)]
        rhs = [d[i] for i in comp.basis]
        phi = []
        for row in comp.adjugate:
            num = sum(a * b for a, b in zip(row, rhs))
            if num % comp.det:
                break
            x = num // comp.det
            if x <= 0:
                break
            phi.append(x)
        else:
            if any(sum(c * p for c, p in zip(v, phi)) != d[i] for i, v in enumerate(comp.zero_vectors)):
                continue
            predicted: dict[int, Counter] = {}
            for h, v, mult, _ in comp.others:
                predicted.setdefault(h, Counter())[sum(c * p for c, p in zip(v, phi))] += mult
            if all(by_height.get(h) == c for h, c in predicted.items()):
                yield tuple(phi), d


def match_templates(block: BlockData, family: str | None = None, include_eliminated: bool = True
                    ) -> list[TemplateSolution]:
    """Every (class, Brauer degrees) pair whose template reproduces the block.

    ``family`` overrides ``block.family``; when neither is set all three
    families are tried. Classes that cannot occur at this ``n`` are still
    matched (and flagged via ``realizable``) unless ``include_eliminated``
    is false. An empty list means no template fits.
    """
    family = family or block.family
    try:
        heights = infer_heights(block, family)
    except TameBlockError:
        return []
    n = block.n
    by_height: dict[int, Counter] = {}
    for deg, m in block.characters:
        by_height.setdefault(heights[deg], Counter())[deg] += m
    hist = tuple(sorted((h, sum(c.values())) for h, c in by_height.items()))
    zero_degrees = sorted(by_height[0].elements())

    out: list[TemplateSolution] = []
    seen: set[tuple] = set()
    for cls in _candidates(family, n):
        if not include_eliminated and cls.eliminated_at(n):
            continue
        comp = _compile(cls.family, cls.tag, n)
        if comp.histogram != hist:
            continue
        for phi, d in _solve(comp, zero_degrees, by_height):
            # phi and its images under column symmetries give the same matrix
            phi = min(tuple(phi[j] for j in p) for p in comp.symmetries)
            key = (cls.family, cls.tag, phi)
            if key in seen:
                continue
            seen.add(key)
            assignment = tuple(sorted((sum(c * p for c, p in zip(v, phi)), 0, i)
                                      for i, v in enumerate(comp.zero_vectors))) + tuple(
                (sum(c * p for c, p in zip(v, phi)), h, idx) for h, v, _, idx in comp.others)
            out.append(TemplateSolution(cls, n, phi, assignment))
    return out


def classify_dihedral_shortcut(block: BlockData) -> MoritaClass:
    """Degree-only recipe for dihedral blocks.

    The (2B) test is the one forced by the (2B) matrix: two distinct
    height-zero degrees d < D, each twice, with D = d + e for the
    height-one degree e, and e not the largest degree. A literal reading
    of "the largest degree has height one" would misfire here, since in
    (2B) the height-one degree is smaller than D. Raises TameBlockError if
    no branch applies.
    """
    if block.family not in (None, "dihedral"):
        raise TameBlockError(f"{block.group}: shortcut applies to dihedral blocks only")
    heights = infer_heights(block, "dihedral")
    zero = sorted(d for d, m in block.characters if heights[d] == 0 for _ in range(m))
    e = next(d for d in heights if heights[d] == 1)
    largest = max(heights)

    if e == largest:
        distinct = len(set(zero))
        return get_class("dihedral", {1: "1A", 2: "2A"}.get(distinct, "3A"))
    counts = Counter(zero)
    if len(counts) == 2 and set(counts.values()) == {2}:
        d, big = sorted(counts)
        if big == d + e:
            return get_class("dihedral", "2B")
    if zero[3] == zero[0] + zero[1] + zero[2]:
        return get_class("dihedral", "3K")
    d1, d2, d3, d4 = zero
    if d1 + e in (d2, d3) and d2 + d3 - d1 == d4:
        return get_class("dihedral", "3B")
    raise TameBlockError(f"{block.group}: degrees fit no branch of the dihedral recipe")
