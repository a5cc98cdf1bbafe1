"""Index-2 Clifford theory for decomposition matrices at the prime 2.

Let N be a normal subgroup of index 2 in G, b a block of N and B the block
of G covering it. Conjugation by G acts on the columns of b as an
involution sigma. Then:

* a sigma-invariant Brauer character extends to exactly one Brauer
  character of B (same degree); a sigma-orbit {psi, psi^sigma} induces to
  one Brauer character of degree 2 psi(1);
* an invariant ordinary character chi has two extensions, each with the
  decomposition vector of chi read on orbit representatives; this needs
  the row of chi to be sigma-invariant;
* a conjugate pair {chi, chi^sigma} (equal degree, rows v and sigma(v))
  induces to one character of degree 2 chi(1) whose entry on the orbit O
  of phi is v[phi] + v[sigma(phi)].

``induce_candidates`` enumerates every sigma and every way of pairing rows
that meets the target (k, l); ``restrict_candidates`` runs the calculus
backwards.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .classifier import MAX_LARGE
from .matrices import DecompMatrix, Row
from .polyq import v2

__all__ = [
    "FusionPattern",
    "SearchCapExceeded",
    "DEFAULT_CAP",
    "duplicate_rows",
    "column_involutions",
    "induce_candidates",
    "restrict_candidates",
]

DEFAULT_CAP = 10**6


class SearchCapExceeded(RuntimeError):
    """More fusion patterns than the cap allows; results would be incomplete."""


@dataclass(frozen=True)
class FusionPattern:
    """How the characters of the smaller block sit under the larger one.

    Row orbits index instances of ``DecompMatrix.expanded()`` of the
    smaller block: singletons are invariant (split) characters, pairs are
    conjugate (fused) characters. Column orbits likewise.
    """

    row_orbits: tuple[tuple[int, ...], ...]
    column_orbits: tuple[tuple[int, ...], ...]
    brauer_known: bool = True

    @property
    def split_rows(self) -> int:
        return sum(1 for o in self.row_orbits if len(o) == 1)

    @property
    def fused_pairs(self) -> int:
        return sum(1 for o in self.row_orbits if len(o) == 2)


def duplicate_rows(m: DecompMatrix, factor: int) -> DecompMatrix:
    """Each row repeated ``factor`` times (central product with a cyclic 2-group)."""
    return m.duplicate_rows(factor)


def column_involutions(l: int) -> Iterator[tuple[int, ...]]:
    """All involutions (including the identity) of range(l), as images."""
    def build(free: list[int], acc: dict[int, int]):
        if not free:
            yield tuple(acc[i] for i in range(l))
            return
        first, rest = free[0], free[1:]
        yield from build(rest, {**acc, first: first})
        for j, other in enumerate(rest):
            yield from build(rest[:j] + rest[j + 1:], {**acc, first: other, other: first})
    yield from build(list(range(l)), {})


def _orbits(sigma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted({tuple(sorted({i, sigma[i]})) for i in range(len(sigma))}))


def _relative_heights(rows: list[Row]) -> list[Row]:
    base = min(v2(r.degree) for r in rows)
    return [Row(r.degree, r.vector, r.mult, v2(r.degree) - base) for r in rows]


def _legal_for(m: DecompMatrix, family: str) -> bool:
    hist: Counter = Counter()
    for r in m.rows:
        hist[r.height] += r.mult
    k = m.k
    for large in range(MAX_LARGE[family] + 1):
        rest = k - 3 - large
        if rest < 2 or rest & (rest - 1):
            continue
        n = rest.bit_length() + 1  # 2^(n-2) == rest
        want = Counter({0: 4})
        want[1] += rest - 1
        want[n - 2] += large
        if hist == want:
            return True
    return False


def _finish(rows: list[Row], brauer, heights: bool) -> DecompMatrix:
    if heights:
        rows = _relative_heights(rows)
    return DecompMatrix(tuple(rows), brauer).canonical()


def _sigma_options(m: DecompMatrix, l_target: int) -> list[tuple[int, ...]]:
    out = []
    for sigma in column_involutions(m.l):
        if len(_orbits(sigma)) != l_target:
            continue
        if any(m.brauer[i] is not None and m.brauer[sigma[i]] is not None and m.brauer[i] != m.brauer[sigma[i]]
               for i in range(m.l)):
            continue
        out.append(sigma)
    return out


def induce_candidates(d_b: DecompMatrix, k_B: int, l_B: int, cap: int = DEFAULT_CAP,
                      target_family: str | None = None) -> list[tuple[FusionPattern, DecompMatrix]]:
    """Decomposition matrices of G that can cover ``d_b`` with |G:N| = 2.

    Returns (pattern, matrix) pairs, matrices in canonical form and pairwise
    distinct. Heights are recomputed from the new degrees; with
    ``target_family`` set, candidates whose height histogram is not that of
    a tame block of that family are dropped. Raises SearchCapExceeded when
    more than ``cap`` row pairings would have to be examined.
    """
    inst = d_b.expanded()
    # instance indices per (degree, vector) class
    classes: dict[tuple[int, tuple[int, ...]], list[int]] = {}
    for idx, r in enumerate(inst):
        classes.setdefault((r.degree, r.vector), []).append(idx)
    known = all(b is not None for b in d_b.brauer)
    with_heights = any(r.height is not None for r in d_b.rows) or target_family is not None

    results: dict[tuple, tuple[FusionPattern, DecompMatrix]] = {}
    examined = 0
    for sigma in _sigma_options(d_b, l_B):
        orbits = _orbits(sigma)
        swap = lambda v: tuple(v[sigma[i]] for i in range(len(v)))
        invariant, pairs, ok = [], [], True
        done = set()
        for key in classes:
            if key in done:
                continue
            deg, v = key
            w = swap(v)
            if w == v:
                invariant.append(key)
            else:
                partner = (deg, w)
                if partner not in classes or len(classes[partner]) != len(classes[key]):
                    ok = False
                    break
                pairs.append((key, partner))
                done.add(partner)
            done.add(key)
        if not ok:
            continue
        paired = sum(len(classes[a]) for a, _ in pairs)
        base = sum(2 * len(classes[key]) for key in invariant) + paired
        # each fused pair inside an invariant class costs 3 characters of B
        excess = base - k_B
        if excess < 0 or excess % 3:
            continue
        need = excess // 3
        ranges = [range(min(len(classes[key]) // 2, need) + 1) for key in invariant]
        for js in itertools.product(*ranges):
            examined += 1
            if examined > cap:
                raise SearchCapExceeded(f"more than {cap} fusion patterns; raise the cap to finish")
            if sum(js) != need:
                continue
            rows: list[Row] = []
            row_orbits: list[tuple[int, ...]] = []
            for key, j in zip(invariant, js):
                deg, v = key
                idx = classes[key]
                reps = tuple(v[o[0]] for o in orbits)
                doubled = tuple(v[o[0]] + v[sigma[o[0]]] for o in orbits)
                if len(idx) - 2 * j:
                    rows.append(Row(deg, reps, 2 * (len(idx) - 2 * j)))
                if j:
                    rows.append(Row(2 * deg, doubled, j))
                row_orbits += [(i,) for i in idx[2 * j:]]
                row_orbits += [(idx[2 * t], idx[2 * t + 1]) for t in range(j)]
            for a, b in pairs:
                deg, v = a
                rows.append(Row(2 * deg, tuple(v[o[0]] + v[sigma[o[0]]] for o in orbits), len(classes[a])))
                row_orbits += list(zip(classes[a], classes[b]))
            brauer = tuple(sum(d_b.brauer[i] for i in o) for o in orbits) if known else ()
            try:
                cand = _finish(rows, brauer, with_heights)
            except ValueError:
                continue
            if target_family and not _legal_for(cand, target_family):
                continue
            pattern = FusionPattern(tuple(sorted(row_orbits)), orbits, known)
            results.setdefault(cand.key(), (pattern, cand))
    return [results[k] for k in sorted(results)]


def _split_options(vector: tuple[int, ...], orbits, sigma) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Unordered pairs {v, sigma(v)} of rows of b inducing to ``vector``."""
    l_b = len(sigma)
    choices = []
    for o, value in zip(orbits, vector):
        if len(o) == 1:
            if value % 2:
                return []
            choices.append([((o[0], value // 2),)])
        else:
            choices.append([((o[0], x), (o[1], value - x)) for x in range(value + 1)])
    out = set()
    for combo in itertools.product(*choices):
        v = [0] * l_b
        for part in combo:
            for i, x in part:
                v[i] = x
        v = tuple(v)
        w = tuple(v[sigma[i]] for i in range(l_b))
        out.add(tuple(sorted((v, w))))
    return sorted(out)


def restrict_candidates(d_B: DecompMatrix, k_b: int, l_b: int, cap: int = DEFAULT_CAP,
                        target_family: str | None = None) -> list[tuple[FusionPattern, DecompMatrix]]:
    """Decomposition matrices of N whose covering block could be ``d_B``.

    A pair of identical rows of ``d_B`` may come from one invariant
    character of N; any other row is induced from a conjugate pair and
    needs even degree. Each column of ``d_B`` either restricts
    irreducibly or splits into two conjugate columns of half the degree.
    Every candidate is checked by inducing it back.
    """
    l_B = d_B.l
    split_cols = l_b - l_B
    if split_cols < 0 or split_cols > l_B:
        return []
    merges2 = 2 * d_B.k - k_b
    if merges2 < 0 or merges2 % 3:
        return []
    merges = merges2 // 3
    classes: dict[tuple[int, tuple[int, ...]], int] = {}
    for r in d_B.rows:
        classes[(r.degree, r.vector)] = classes.get((r.degree, r.vector), 0) + r.mult
    keys = sorted(classes)
    known = all(b is not None for b in d_B.brauer)
    with_heights = any(r.height is not None for r in d_B.rows) or target_family is not None

    results: dict[tuple, tuple[FusionPattern, DecompMatrix]] = {}
    examined = 0
    for split in itertools.combinations(range(l_B), split_cols):
        if known and any(d_B.brauer[c] % 2 for c in split):
            continue
        # columns of b: invariant ones keep their slot, split ones get two
        orbits, sigma_list = [], []
        for c in range(l_B):
            if c in split:
                orbits.append((len(sigma_list), len(sigma_list) + 1))
                sigma_list += [len(sigma_list) + 1, len(sigma_list)]
            else:
                orbits.append((len(sigma_list),))
                sigma_list.append(len(sigma_list))
        sigma = tuple(sigma_list)
        if known:
            brauer_b = []
            for c, o in enumerate(orbits):
                brauer_b += [d_B.brauer[c] // len(o)] * len(o)
            brauer_b = tuple(brauer_b)
        else:
            brauer_b = ()

        def lift(v):
            out = [0] * l_b
            for o, x in zip(orbits, v):
                for i in o:
                    out[i] = x
            return tuple(out)

        ranges = [range(min(classes[k] // 2, merges) + 1) for k in keys]
        for ts in itertools.product(*ranges):
            examined += 1
            if examined > cap:
                raise SearchCapExceeded(f"more than {cap} fusion patterns; raise the cap to finish")
            if sum(ts) != merges:
                continue
            fixed: list[Row] = []
            free: list[tuple[int, list]] = []  # (count, options) for induced rows
            feasible = True
            for key, t in zip(keys, ts):
                deg, vec = key
                if t:
                    fixed.append(Row(deg, lift(vec), t))
                rest = classes[key] - 2 * t
                if rest:
                    opts = _split_options(vec, orbits, sigma) if deg % 2 == 0 else []
                    if not opts:
                        feasible = False
                        break
                    free.append((deg // 2, rest, opts))
            if not feasible:
                continue
            per_class = [list(itertools.combinations_with_replacement(opts, rest)) for _, rest, opts in free]
            for choice in itertools.product(*per_class):
                examined += 1
                if examined > cap:
                    raise SearchCapExceeded(f"more than {cap} fusion patterns; raise the cap to finish")
                rows = list(fixed)
                for (half, _, _), picks in zip(free, choice):
                    for v, w in picks:
                        rows.append(Row(half, v, 1))
                        rows.append(Row(half, w, 1))
                try:
                    cand = _finish(rows, brauer_b, with_heights)
                except ValueError:
                    continue
                if target_family and not _legal_for(cand, target_family):
                    continue
                # the pattern reported is the one that induces back to d_B
                back = [p for p, m in induce_candidates(cand, d_B.k, l_B, cap) if m.same_as(d_B, heights=False)]
                if back:
                    results.setdefault(cand.key(), (back[0], cand))
    return [results[k] for k in sorted(results)]
