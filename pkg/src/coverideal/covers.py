"""Minimal vertex covers, independence complexes and induced matchings."""

from __future__ import annotations

from dataclasses import dataclass

from ._memo import Memo
from .chordal import PivotRule, SimplicialComplex, canonical, is_chordal, require_chordal
from .graph import Graph, bits, has_edge_within, popcount

BRUTEFORCE_MAX_N = 20
MATCHING_MAX_N = 20


@dataclass(frozen=True)
class CoverFamily:
    """Minimal vertex covers of a graph, i.e. the generators of its cover ideal."""

    covers: tuple[int, ...]
    n: int

    def __len__(self) -> int:
        return len(self.covers)

    def __iter__(self):
        return iter(self.covers)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.covers)


def _check_size(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise ValueError(f"{what} is limited to {cap} vertices, graph has {g.n}")


def minimal_covers_bruteforce(g: Graph) -> CoverFamily:
    """Every inclusion-minimal vertex cover, found by exhaustive search.

    Walks all independent sets depth-first and keeps the maximal ones; their
    complements are exactly the minimal covers.  An edgeless graph yields the
    single cover ``0`` (the empty set).
    """
    _check_size(g, BRUTEFORCE_MAX_N, "exhaustive cover search")
    full = g.vertices
    found = []

    def walk(indep: int, start: int) -> None:
        maximal = True
        for v in range(g.n):
            if not indep >> v & 1 and not g.adj[v] & indep:
                maximal = False
                if v >= start:
                    walk(indep | 1 << v, v + 1)
        if maximal:
            found.append(full & ~indep)

    walk(0, 0)
    return CoverFamily(canonical(found), g.n)


def _recursive_covers(g: Graph, alive: int, rule: PivotRule, memo: Memo) -> frozenset[int]:
    hit = memo.get(alive)
    if hit is not None:
        return hit
    if not has_edge_within(g, alive):
        return memo.store(alive, frozenset([0]))
    order = rule.choose(g, alive)
    v = order[0]
    w = g.adj[v] & alive
    closed = w | 1 << v
    result = {w | a for a in _recursive_covers(g, alive & ~closed, rule, memo)}
    result.update(
        b | 1 << v
        for b in _recursive_covers(g, alive & ~(1 << v), rule, memo)
        if w & ~b
    )
    return memo.store(alive, frozenset(result))


def minimal_covers_recursive(g: Graph, pivot="min", memo: Memo | None = None) -> CoverFamily:
    """Minimal covers of a chordal graph by splitting on a simplicial vertex.

    With ``v`` simplicial and ``w = N(v)``, every minimal cover either
    contains all of ``w`` (and then a minimal cover of ``G - N[v]``), or
    contains ``v`` together with a minimal cover of ``G - v`` that misses
    part of ``w``.
    """
    require_chordal(g)
    rule = PivotRule.coerce(pivot)
    found = _recursive_covers(g, g.vertices, rule, Memo() if memo is None else memo)
    return CoverFamily(canonical(found), g.n)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Facets are the maximal independent sets, i.e. complements of minimal covers."""
    family = minimal_covers_recursive(g) if is_chordal(g) else minimal_covers_bruteforce(g)
    full = g.vertices
    return SimplicialComplex(canonical(full & ~c for c in family), g.n)


def induced_matching_number(g: Graph) -> int:
    """Size of a largest induced matching, by exact memoised branching.

    At each step the lowest vertex ``v`` with a live neighbour is either left
    unmatched, or matched to some neighbour ``u``; matching ``uv`` deletes
    ``N[u] | N[v]``.
    """
    _check_size(g, MATCHING_MAX_N, "induced matching search")
    memo: dict[int, int] = {}

    def best(alive: int) -> int:
        hit = memo.get(alive)
        if hit is not None:
            return hit
        v = -1
        for x in bits(alive):
            if g.adj[x] & alive:
                v = x
                break
        if v < 0:
            memo[alive] = 0
            return 0
        result = best(alive & ~(1 << v))
        nv = g.adj[v] | 1 << v
        for u in bits(g.adj[v] & alive):
            rest = alive & ~(nv | g.adj[u])
            if 1 + popcount(rest) // 2 <= result:
                continue
            result = max(result, 1 + best(rest))
        memo[alive] = result
        return result

    return best(g.vertices)
