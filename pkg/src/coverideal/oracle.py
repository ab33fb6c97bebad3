"""Ground-truth Betti numbers via simplicial homology, and shelling search.

For a squarefree monomial ideal ``I`` and a squarefree multidegree ``sigma``,
``b_{i,sigma}(I)`` is the rank of the reduced homology ``H_{i-1}`` of the
upper Koszul complex

    K^sigma(I) = { tau subset of sigma : sigma \\ tau contains a generator }.

Homology is computed over the rationals with exact integer elimination, so
the result does not depend on any of the combinatorial shortcuts used
elsewhere in the package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .betti import BettiTable
from .chordal import SimplicialComplex
from .graph import bits, is_subset, popcount

HOCHSTER_MAX_N = 14
SHELLING_MAX_FACETS = 9


def integer_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given as ``{column: entry}`` rows.

    Fraction-free elimination: each reduction ``r <- a*r - b*pivot`` is
    followed by dividing out the row content, so entries stay small and every
    step is exact.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = row
                rank += 1
                break
            a, b = pivot[col], row[col]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in pivot.items():
                new[c] = new.get(c, 0) - b * v
            row = {c: v for c, v in new.items() if v}
            if row:
                content = 0
                for v in row.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    row = {c: v // content for c, v in row.items()}
    return rank


def _faces(facets: Sequence[int]) -> set[int]:
    faces: set[int] = set()
    for f in facets:
        if f in faces:
            continue
        # every subset of f, by the standard submask walk
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return faces


def _boundary_rows(faces_k: list[int], index_below: dict[int, int]) -> list[dict[int, int]]:
    rows = []
    for face in faces_k:
        row = {}
        sign = 1
        for v in bits(face):
            row[index_below[face & ~(1 << v)]] = sign
            sign = -sign
        rows.append(row)
    return rows


def reduced_homology(facets: Sequence[int]) -> dict[int, int]:
    """Ranks of reduced homology over Q, keyed by dimension, zeros omitted.

    Conventions: the void complex (no faces at all, ``facets == []``) has
    zero homology everywhere.  The complex ``{empty set}`` (``facets == [0]``)
    has ``H_{-1}`` of rank 1, since the augmentation map is zero there.
    """
    if not facets:
        return {}
    by_dim: dict[int, list[int]] = {}
    for face in _faces(facets):
        by_dim.setdefault(popcount(face) - 1, []).append(face)
    top = max(by_dim)
    index = {k: {f: i for i, f in enumerate(sorted(fs))} for k, fs in by_dim.items()}
    # rank of the boundary map C_k -> C_{k-1}, for k = 0..top (C_{-1} = Q)
    ranks = {top + 1: 0, -1: 0}
    for k in range(0, top + 1):
        ranks[k] = integer_rank(_boundary_rows(sorted(by_dim[k]), index[k - 1]))
    out = {}
    for k in range(-1, top + 1):
        h = len(by_dim[k]) - ranks[k] - ranks[k + 1]
        if h:
            out[k] = h
    return out


@dataclass(frozen=True)
class HomologyResult:
    multidegree: int
    reduced_betti: dict[int, int]


def upper_koszul_facets(gens: Sequence[int], sigma: int) -> list[int]:
    inside = [g for g in gens if is_subset(g, sigma)]
    return [sigma & ~g for g in inside]


def upper_koszul_homology(gens: Sequence[int], sigma: int) -> HomologyResult:
    return HomologyResult(sigma, reduced_homology(upper_koszul_facets(gens, sigma)))


def lcm_lattice(gens: Sequence[int]) -> set[int]:
    """All unions of non-empty subsets of ``gens``."""
    lattice: set[int] = set()
    for g in gens:
        lattice |= {g | m for m in lattice}
        lattice.add(g)
    return lattice


def _check_generators(gens: Sequence[int], n: int) -> None:
    if n > HOCHSTER_MAX_N:
        raise ValueError(f"homology oracle is limited to {HOCHSTER_MAX_N} variables, got {n}")
    full = (1 << n) - 1
    for p, g in enumerate(gens):
        if g & ~full:
            raise ValueError(f"generator {p} uses a variable outside range({n})")
        for q in range(p):
            if is_subset(gens[q], g) or is_subset(g, gens[q]):
                raise ValueError(f"generators {q} and {p} are comparable; need a minimal set")


def hochster_betti(gens: Sequence[int], n: int) -> BettiTable:
    """Graded Betti numbers of the ideal generated by squarefree ``gens``.

    Only multidegrees in the lcm lattice can carry homology, so only those
    are visited.
    """
    gens = list(gens)
    _check_generators(gens, n)
    table: Counter = Counter()
    for sigma in sorted(lcm_lattice(gens)):
        d = popcount(sigma)
        for k, rank in reduced_homology(upper_koszul_facets(gens, sigma)).items():
            table[k + 1, d] += rank
    return BettiTable(table, "oracle")


def exhaustive_shelling_search(c: SimplicialComplex | Sequence[int]) -> tuple[int, ...] | None:
    """Find a shelling order of the facets, or prove there is none.

    Depth-first over facet permutations; a prefix is extended only by a facet
    that satisfies the shelling condition against the whole prefix, so a dead
    prefix is never revisited.  Returns ``None`` when no order works.
    """
    facets = tuple(c.facets if isinstance(c, SimplicialComplex) else c)
    if len(facets) > SHELLING_MAX_FACETS:
        raise ValueError(
            f"exhaustive shelling search is limited to {SHELLING_MAX_FACETS} facets, "
            f"got {len(facets)}"
        )

    def fits(prefix: list[int], f: int) -> bool:
        reachable = 0
        for prev in prefix:
            diff = f & ~prev
            if diff & (diff - 1) == 0:
                reachable |= diff
        return all(f & ~prev & reachable for prev in prefix)

    order: list[int] = []
    used = [False] * len(facets)

    def extend() -> bool:
        if len(order) == len(facets):
            return True
        for k, f in enumerate(facets):
            if not used[k] and fits(order, f):
                used[k] = True
                order.append(f)
                if extend():
                    return True
                order.pop()
                used[k] = False
        return False

    return tuple(order) if extend() else None
