"""Betti tables of cover ideals of chordal graphs.

Tables are stored sparsely as ``{(i, j): b_ij}`` with ``i`` the homological
degree and ``j`` the internal degree.  The recursions work in strand
coordinates ``(i, j - i)`` internally, where the linear-quotients structure is
easiest to state.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from ._memo import Memo
from .chordal import PivotRule, PivotSpec, require_chordal, unmixed_certificate
from .covers import _recursive_covers, independence_complex, induced_matching_number
from .graph import Graph, has_edge_within, isolated_vertices, popcount
from .linquo import MonomialOrdering, colon_counts, fvt_ordering, vv_ordering


@dataclass(frozen=True)
class BettiTable:
    entries: Mapping[tuple[int, int], int]
    method: str = field(default="", compare=False)

    def __post_init__(self):
        clean = {k: v for k, v in sorted(self.entries.items()) if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("Betti numbers must be non-negative")
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return dict(sorted(out.items()))

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in self.entries.items()]

    def format(self) -> str:
        """Macaulay2-style display: columns ``i``, rows ``j - i``."""
        if not self.entries:
            return "(zero table)"
        cols = range(self.pd + 1)
        strands = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in [*self.entries.values(), *self.totals().values()])
        width = max(width, len(str(self.pd)))
        head = max(len(f"{s}:") for s in [*strands, "total"])
        lines = [" " * head + " " + " ".join(f"{i:>{width}}" for i in cols)]
        lines.append(
            f"{'total:':>{head}} " + " ".join(f"{self.total(i):>{width}}" for i in cols)
        )
        for s in strands:
            cells = " ".join(f"{self[i, i + s] or '.':>{width}}" for i in cols)
            lines.append(f"{str(s) + ':':>{head}} {cells}")
        return "\n".join(lines)


class InternalInconsistencyError(RuntimeError):
    """Two independent computations of the same invariant disagreed."""


def betti_from_ordering(o: MonomialOrdering) -> BettiTable:
    """Graded Betti numbers from a linear quotients ordering.

    Generator ``f_p`` whose colon ideal needs ``n_p`` variables contributes
    ``C(n_p, i)`` to ``b_{i, i + deg f_p}``.
    """
    counts = colon_counts(o)
    table: Counter = Counter()
    for gen, n_p in zip(o.gens, counts):
        d = popcount(gen)
        for i in range(n_p + 1):
            table[i, i + d] += comb(n_p, i)
    return BettiTable(table, o.method and f"lq-{o.method}")


def complete_graph_betti(n: int) -> BettiTable:
    """Closed form for ``J(K_n)``: every ordering has linear quotients.

    The covers are the ``n`` sets missing one vertex, and the ``p``-th of them
    (in any order) has ``p - 1`` colon variables, so ``b_{0,n-1} = n`` and
    ``b_{1,n} = n - 1``.
    """
    if n < 2:
        raise ValueError("K_n has no edges for n < 2")
    return BettiTable({(0, n - 1): n, (1, n): n - 1}, "closed-form")


def _require_edges(g: Graph) -> None:
    require_chordal(g)
    if not g.num_edges:
        raise ValueError("graph has no edges; its cover ideal is the unit ideal")


class _Recursion:
    """Shared state for the strand recursion over induced subgraphs of ``g``."""

    def __init__(self, g: Graph, rule: PivotRule):
        self.g = g
        self.rule = rule
        self.covers = Memo()
        self.graded = Memo()

    def degree_counts(self, alive: int) -> Counter:
        gens = _recursive_covers(self.g, alive, self.rule, self.covers)
        return Counter(popcount(c) for c in gens)

    def strands(self, alive: int) -> dict[tuple[int, int], int]:
        """``{(i, s): b_{i, i+s}}`` for the cover ideal of ``g[alive]``.

        An edgeless subgraph has the unit ideal, recorded as the single
        entry ``(0, 0)``: one generator, the empty product, of degree 0.
        """
        g = self.g
        alive &= ~isolated_vertices(g, alive)
        hit = self.graded.get(alive)
        if hit is not None:
            return hit
        table: Counter = Counter({(0, d): c for d, c in self.degree_counts(alive).items()})
        if has_edge_within(g, alive):
            # The first block (t = 1) keeps its colon counts.  Every later
            # block gains the variable x_t, so C(m+1, i) = C(m, i) + C(m, i-1)
            # and the H_t table appears twice: at homological degree i and
            # shifted up by one.  Both copies keep the strand s - |N(x_t)|.
            for t, x in enumerate(self.rule.choose(g, alive)):
                y = popcount(g.adj[x] & alive)
                sub = self.strands(alive & ~(g.adj[x] | 1 << x))
                for (i, s), v in sub.items():
                    if i >= 1:
                        table[i, s + y] += v
                    if t >= 1:
                        table[i + 1, s + y] += v
        return self.graded.store(alive, dict(table))


def graded_recursive(g: Graph, pivot: PivotSpec = "min") -> BettiTable:
    """Graded Betti table of ``J(g)`` by recursion on a simplicial vertex.

    Row ``i = 0`` comes from the degrees of the minimal covers; rows ``i >= 1``
    come from the tables of ``J(G - N[x_t])`` for ``x_t`` in the closed
    neighbourhood of the pivot.
    """
    _require_edges(g)
    rec = _Recursion(g, PivotRule.coerce(pivot))
    strands = rec.strands(g.vertices)
    return BettiTable({(i, i + s): v for (i, s), v in strands.items()}, "recursive")


def _totals(g: Graph, alive: int, rule: PivotRule, covers: Memo, memo: Memo) -> dict[int, int]:
    alive &= ~isolated_vertices(g, alive)
    hit = memo.get(alive)
    if hit is not None:
        return hit
    table: Counter = Counter({0: len(_recursive_covers(g, alive, rule, covers))})
    if has_edge_within(g, alive):
        for t, x in enumerate(rule.choose(g, alive)):
            sub = _totals(g, alive & ~(g.adj[x] | 1 << x), rule, covers, memo)
            for i, v in sub.items():
                if i >= 1:
                    table[i] += v
                if t >= 1:
                    table[i + 1] += v
    return memo.store(alive, dict(table))


def total_recursive(g: Graph, pivot: PivotSpec = "min") -> dict[int, int]:
    """Total Betti numbers ``{i: b_i(J(g))}``; ``b_0`` is the number of covers."""
    _require_edges(g)
    rule = PivotRule.coerce(pivot)
    out = _totals(g, g.vertices, rule, Memo(), Memo())
    return {i: v for i, v in sorted(out.items()) if v}


@dataclass(frozen=True)
class Invariants:
    pd: int
    reg_edge_ideal: int
    im: int
    b0: int

    @property
    def reg_quotient(self) -> int:
        """``reg(S/I(G))``, one less than the regularity of the edge ideal."""
        return self.reg_edge_ideal - 1


def invariants(g: Graph, table: BettiTable | None = None) -> Invariants:
    """Projective dimension of ``J(g)`` and the regularity it determines.

    ``reg(I(G)) = pd(S/J(G)) = pd(J(G)) + 1`` by Alexander duality.  The
    induced matching number is computed independently and must equal
    ``pd(J(G))`` for chordal graphs.
    """
    if table is None:
        table = graded_recursive(g)
    pd = table.pd
    im = induced_matching_number(g)
    if pd != im:
        raise InternalInconsistencyError(
            f"projective dimension {pd} differs from induced matching number {im}"
        )
    return Invariants(pd=pd, reg_edge_ideal=pd + 1, im=im, b0=table.total(0))


@dataclass(frozen=True)
class UnmixedBetti:
    b0: int
    b1: int
    b2: int


@dataclass(frozen=True)
class NotApplicable:
    reason: str


def unmixed_1dim_betti(g: Graph) -> UnmixedBetti | NotApplicable:
    """Closed forms ``b_1 = 2 b_0 - n`` and ``b_2 = b_0 - n + 1``.

    Only valid for unmixed chordal graphs whose independence complex has
    dimension one; anything else gets a :class:`NotApplicable` verdict.
    """
    if not g.num_edges:
        return NotApplicable("graph has no edges")
    if isolated_vertices(g):
        return NotApplicable("graph has isolated vertices")
    try:
        cert = unmixed_certificate(g)
    except ValueError as exc:
        return NotApplicable(str(exc))
    if not cert.is_unmixed:
        return NotApplicable("graph is not unmixed")
    ind = independence_complex(g)
    if ind.dim != 1:
        return NotApplicable(f"independence complex has dimension {ind.dim}, not 1")
    b0 = len(ind.facets)
    return UnmixedBetti(b0=b0, b1=2 * b0 - g.n, b2=b0 - g.n + 1)


METHODS = ("lq", "lq-fvt", "recursive", "oracle")


def betti_table(g: Graph, method: str = "recursive", pivot: PivotSpec = "min") -> BettiTable:
    if method == "lq":
        return betti_from_ordering(vv_ordering(g, pivot))
    if method == "lq-fvt":
        return betti_from_ordering(fvt_ordering(g, pivot))
    if method == "recursive":
        return graded_recursive(g, pivot)
    if method == "oracle":
        from .oracle import hochster_betti
        from .covers import minimal_covers_recursive

        _require_edges(g)
        return hochster_betti(minimal_covers_recursive(g).covers, g.n)
    raise ValueError(f"unknown Betti method {method!r}; choose from {', '.join(METHODS)}")
