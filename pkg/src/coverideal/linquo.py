"""Linear quotients orderings of cover ideals and their shellings.

Generators are squarefree monomials stored as vertex bitmasks.  For such
monomials the colon ideal ``(m_1, ..., m_{p-1}) : m_p`` is generated by the
differences ``m_l \\ m_p`` (l < p), so every check here reduces to set
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._memo import Memo
from .chordal import PivotRule, PivotSpec, is_chordal, require_chordal
from .graph import Graph, bits, has_edge_within, is_clique, is_subset, isolated_vertices, popcount


@dataclass(frozen=True)
class MonomialOrdering:
    gens: tuple[int, ...]
    method: str = "user"
    colon_counts: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.gens)


@dataclass(frozen=True)
class Shelling:
    facets: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification; falsy on failure.

    ``witness`` is the failing pair of positions, 0-based: ``(j, p)`` for
    linear quotients, ``(i, j)`` for shellings.
    """

    ok: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


class ComparableGeneratorsError(ValueError):
    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"generators at positions {pair[0]} and {pair[1]} are comparable")


class NotLinearQuotientsError(ValueError):
    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        j, p = verdict.witness
        super().__init__(
            f"ordering lacks linear quotients: colon at position {p} "
            f"needs a non-linear generator coming from position {j}"
        )


def _require_antichain(sets: Sequence[int]) -> None:
    for q in range(len(sets)):
        for p in range(q + 1, len(sets)):
            if is_subset(sets[q], sets[p]) or is_subset(sets[p], sets[q]):
                raise ComparableGeneratorsError((q, p))


def _linear_part(gens: Sequence[int], p: int) -> int:
    """Variables ``x`` with ``{x} = m_l \\ m_p`` for some ``l < p``, as a mask."""
    mp = gens[p]
    linear = 0
    for l in range(p):
        diff = gens[l] & ~mp
        if diff & (diff - 1) == 0:
            linear |= diff
    return linear


def verify_linear_quotients(gens: Sequence[int]) -> Verdict:
    gens = tuple(gens)
    _require_antichain(gens)
    for p in range(1, len(gens)):
        linear = _linear_part(gens, p)
        for j in range(p):
            if not gens[j] & ~gens[p] & linear:
                return Verdict(False, (j, p))
    return Verdict(True)


def colon_counts(o: MonomialOrdering | Sequence[int]) -> tuple[int, ...]:
    """Number of variables generating each successive colon ideal."""
    gens = o.gens if isinstance(o, MonomialOrdering) else tuple(o)
    verdict = verify_linear_quotients(gens)
    if not verdict:
        raise NotLinearQuotientsError(verdict)
    return tuple(popcount(_linear_part(gens, p)) for p in range(len(gens)))


def with_colon_counts(o: MonomialOrdering) -> MonomialOrdering:
    return MonomialOrdering(o.gens, o.method, colon_counts(o))


def _require_edges(g: Graph) -> None:
    require_chordal(g)
    if not g.num_edges:
        raise ValueError("graph has no edges; its cover ideal is the unit ideal")


def _vv(g: Graph, alive: int, rule: PivotRule, memo: Memo) -> tuple[int, ...]:
    hit = memo.get(alive)
    if hit is not None:
        return hit
    if not has_edge_within(g, alive):
        return memo.store(alive, (0,))
    out: list[int] = []
    for x in rule.choose(g, alive):
        y = g.adj[x] & alive
        out.extend(y | u for u in _vv(g, alive & ~(y | 1 << x), rule, memo))
    return memo.store(alive, tuple(out))


def vv_ordering(g: Graph, pivot: PivotSpec = "min") -> MonomialOrdering:
    """Blockwise ordering over the closed neighbourhood of a simplicial vertex.

    For the pivot ``x_1`` and each ``x_i`` in ``N[x_1]`` (in pivot-rule
    order), the block is ``N(x_i)`` times a recursively built ordering of the
    cover ideal of ``G - N[x_i]``.  Blocks are concatenated in that order.
    """
    _require_edges(g)
    rule = PivotRule.coerce(pivot)
    gens = _vv(g, g.vertices, rule, Memo())
    return with_colon_counts(MonomialOrdering(gens, "vv"))


def _complete_graph_order(alive: int) -> tuple[int, ...]:
    # Any order has linear quotients on a clique; use lexicographic order,
    # which for (r-1)-subsets means dropping the highest vertex first.
    return tuple(alive & ~(1 << v) for v in reversed(list(bits(alive))))


def _fvt(g: Graph, alive: int, rule: PivotRule, memo: Memo) -> tuple[int, ...]:
    hit = memo.get(alive)
    if hit is not None:
        return hit
    if not has_edge_within(g, alive):
        return memo.store(alive, (0,))
    isolated = isolated_vertices(g, alive)
    if isolated:
        return memo.store(alive, _fvt(g, alive & ~isolated, rule, memo))
    if is_clique(g, alive):
        return memo.store(alive, _complete_graph_order(alive))
    x = rule.choose(g, alive)[0]
    nx = g.adj[x] & alive
    head = [nx | a for a in _fvt(g, alive & ~(nx | 1 << x), rule, memo)]
    tail = [b | 1 << x for b in _fvt(g, alive & ~(1 << x), rule, memo) if nx & ~b]
    return memo.store(alive, tuple(head + tail))


def fvt_ordering(g: Graph, pivot: PivotSpec = "min", sub: str = "fvt") -> MonomialOrdering:
    """Ordering built from the covers of ``G - N[x]`` and ``G - x``.

    Emits ``N(x)`` times each generator of ``G - N[x]``, then ``x`` times each
    generator of ``G - x`` that does not contain ``N(x)``.  With
    ``sub="fvt"`` both sub-orderings are built the same way all the way down,
    and complete graphs are ordered lexicographically.  With ``sub="vv"`` the
    two sub-orderings come from :func:`vv_ordering` and only the top level
    uses this construction.
    """
    _require_edges(g)
    rule = PivotRule.coerce(pivot)
    if sub == "fvt":
        gens = _fvt(g, g.vertices, rule, Memo())
        return with_colon_counts(MonomialOrdering(gens, "fvt"))
    if sub != "vv":
        raise ValueError(f"unknown sub-ordering method {sub!r}")
    memo = Memo()
    alive = g.vertices & ~isolated_vertices(g)
    x = rule.choose(g, alive)[0]
    nx = g.adj[x] & alive
    head = [nx | a for a in _vv(g, alive & ~(nx | 1 << x), rule, memo)]
    tail = [b | 1 << x for b in _vv(g, alive & ~(1 << x), rule, memo) if nx & ~b]
    return with_colon_counts(MonomialOrdering(tuple(head + tail), "fvt+vv"))


def shelling_from_ordering(o: MonomialOrdering | Sequence[int], n: int) -> Shelling:
    gens = o.gens if isinstance(o, MonomialOrdering) else tuple(o)
    full = (1 << n) - 1
    if any(m & ~full for m in gens):
        raise ValueError(f"generator outside the ambient set of {n} vertices")
    return Shelling(tuple(full & ~m for m in gens))


def verify_shelling(s: Shelling | Sequence[int]) -> Verdict:
    facets = s.facets if isinstance(s, Shelling) else tuple(s)
    _require_antichain(facets)
    for j in range(1, len(facets)):
        fj = facets[j]
        # vertices u with F_j \ F_l == {u} for some earlier l
        reachable = 0
        for l in range(j):
            diff = fj & ~facets[l]
            if diff & (diff - 1) == 0:
                reachable |= diff
        for i in range(j):
            if not fj & ~facets[i] & reachable:
                return Verdict(False, (i, j))
    return Verdict(True)


def is_cover_ordering(g: Graph, o: MonomialOrdering) -> bool:
    from .covers import minimal_covers_bruteforce, minimal_covers_recursive

    family = minimal_covers_recursive(g) if is_chordal(g) else minimal_covers_bruteforce(g)
    return sorted(o.gens) == sorted(family.covers)
