"""Chordality, simplicial vertices, clique complexes and the unmixed test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graph import Graph, bits, induced_subgraph, is_clique, lowest, popcount


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets, each a vertex bitmask over ``range(n)``."""

    facets: tuple[int, ...]
    n: int

    @property
    def dim(self) -> int:
        return max((popcount(f) for f in self.facets), default=0) - 1

    def __len__(self) -> int:
        return len(self.facets)


def canonical(masks) -> tuple[int, ...]:
    """Sort vertex sets by cardinality, then by bit pattern."""
    return tuple(sorted(masks, key=lambda m: (popcount(m), m)))


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]

    chordal = True


@dataclass(frozen=True)
class NotChordal:
    """Verdict for a graph without a simplicial elimination ordering.

    ``vertex`` is the first vertex of the candidate ordering whose later
    neighbours fail to form a clique; ``pair`` is two of those neighbours
    that are not adjacent.
    """

    vertex: int
    pair: tuple[int, int]
    order: tuple[int, ...]

    chordal = False


class NotChordalError(ValueError):
    def __init__(self, verdict: NotChordal):
        self.verdict = verdict
        super().__init__(
            f"graph is not chordal: later neighbours {verdict.pair} of vertex "
            f"{verdict.vertex} are not adjacent"
        )


def _mcs_visit_order(g: Graph) -> list[int]:
    # Maximum cardinality search.  Ties go to the highest index so that the
    # reversed visit order lists low indices first.
    weight = [0] * g.n
    unvisited = g.vertices
    visit = []
    while unvisited:
        best = -1
        for v in bits(unvisited):
            if best < 0 or weight[v] >= weight[best]:
                best = v
        visit.append(best)
        unvisited &= ~(1 << best)
        for u in bits(g.adj[best] & unvisited):
            weight[u] += 1
    return visit


def elimination_ordering(g: Graph) -> EliminationOrdering | NotChordal:
    order = tuple(reversed(_mcs_visit_order(g)))
    later = g.vertices
    for v in order:
        later &= ~(1 << v)
        nbrs = g.adj[v] & later
        if not is_clique(g, nbrs):
            for u in bits(nbrs):
                missing = nbrs & ~g.adj[u] & ~(1 << u)
                if missing:
                    return NotChordal(v, (u, lowest(missing)), order)
    return EliminationOrdering(order)


def is_chordal(g: Graph) -> bool:
    return elimination_ordering(g).chordal


def require_chordal(g: Graph) -> EliminationOrdering:
    result = elimination_ordering(g)
    if not result.chordal:
        raise NotChordalError(result)
    return result


def is_simplicial(g: Graph, v: int, alive: int | None = None) -> bool:
    nbrs = g.adj[v] if alive is None else g.adj[v] & alive
    return is_clique(g, nbrs)


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if is_simplicial(g, v)]


def maximal_cliques(g: Graph, within: int | None = None) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting over bitmasks."""
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: popcount(p & g.adj[u]))
        for v in bits(p & ~g.adj[pivot]):
            expand(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    alive = g.vertices if within is None else within
    if alive:
        expand(0, alive, 0)
    return found


def clique_complex_facets(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(canonical(maximal_cliques(g)), g.n)


@dataclass(frozen=True)
class UnmixedCertificate:
    free_facets: tuple[int, ...]
    is_unmixed: bool


def unmixed_certificate(g: Graph) -> UnmixedCertificate:
    """Decide unmixedness of a chordal graph from its clique complex.

    A chordal graph is unmixed exactly when the maximal cliques that own a
    free vertex (one lying in no other maximal clique) partition the vertex
    set.
    """
    require_chordal(g)
    cliques = maximal_cliques(g)
    seen_once = seen_twice = 0
    for c in cliques:
        seen_twice |= seen_once & c
        seen_once |= c
    free = seen_once & ~seen_twice
    free_facets = canonical(c for c in cliques if c & free)
    union = 0
    disjoint = True
    for f in free_facets:
        if union & f:
            disjoint = False
        union |= f
    return UnmixedCertificate(free_facets, disjoint and union == g.vertices)


PivotSpec = Union[str, Sequence[int], "PivotRule"]


class PivotRule:
    """Chooses the simplicial pivot and the order of its closed neighbourhood.

    ``"min"`` takes the lowest-index simplicial vertex and lists its
    neighbours by index.  ``"max"`` takes a simplicial vertex of largest
    degree (highest index on ties) and lists its neighbours by ascending
    degree, then index; degrees are measured in the current subgraph.

    A sequence ``[x_1, x_2, ...]`` fixes the pivot ``x_1`` and puts the listed
    neighbours first, in the given order.  The recursive constructors always
    delete ``x_1`` before recursing, so below the root the ``then`` rule takes
    over.
    """

    def __init__(self, spec: str | Sequence[int] = "min", then: str = "min"):
        self.spec = spec
        self.then = then
        self.root: list[int] | None = None
        if isinstance(spec, str):
            if spec not in ("min", "max"):
                raise ValueError(f"unknown pivot rule {spec!r}")
            self.name = spec
        else:
            root = list(spec)
            if not root:
                raise ValueError("pivot list is empty")
            if len(set(root)) != len(root):
                raise ValueError("pivot list repeats a vertex")
            if then not in ("min", "max"):
                raise ValueError(f"unknown fallback pivot rule {then!r}")
            self.name = then
            self.root = root

    @classmethod
    def coerce(cls, spec: PivotSpec) -> PivotRule:
        return spec if isinstance(spec, PivotRule) else cls(spec)

    def choose(self, g: Graph, alive: int) -> list[int]:
        """Return ``[x_1, x_2, ..., x_r]`` with ``N[x_1] = {x_1..x_r}`` a clique."""
        if self.root is not None and alive >> self.root[0] & 1:
            return self._choose_listed(g, alive)
        pivot = -1
        best_degree = -1
        for v in bits(alive):
            if is_clique(g, g.adj[v] & alive):
                if self.name == "min":
                    pivot = v
                    break
                d = popcount(g.adj[v] & alive)
                if d >= best_degree:
                    pivot, best_degree = v, d
        if pivot < 0:
            raise NotChordalError(_verdict_within(g, alive))
        return [pivot] + self._neighbour_order(g, alive, pivot)

    def _neighbour_order(self, g: Graph, alive: int, pivot: int) -> list[int]:
        nbrs = list(bits(g.adj[pivot] & alive))
        if self.name == "max":
            nbrs.sort(key=lambda u: (popcount(g.adj[u] & alive), u))
        return nbrs

    def _choose_listed(self, g: Graph, alive: int) -> list[int]:
        assert self.root is not None
        pivot = self.root[0]
        nbrs = g.adj[pivot] & alive
        if not is_clique(g, nbrs):
            raise ValueError(f"pivot {pivot} is not simplicial")
        listed = self.root[1:]
        for u in listed:
            if not nbrs >> u & 1:
                raise ValueError(f"vertex {u} is not a neighbour of pivot {pivot}")
        tail = [u for u in self._neighbour_order(g, alive, pivot) if u not in listed]
        return [pivot] + listed + tail

    def __repr__(self) -> str:
        if self.root is None:
            return f"PivotRule({self.spec!r})"
        return f"PivotRule({self.root!r}, then={self.then!r})"


def _verdict_within(g: Graph, alive: int) -> NotChordal:
    sub, remap = induced_subgraph(g, alive)
    verdict = elimination_ordering(sub)
    assert not verdict.chordal
    back = {i: v for v, i in remap.items()}
    return NotChordal(
        back[verdict.vertex],
        (back[verdict.pair[0]], back[verdict.pair[1]]),
        tuple(back[v] for v in verdict.order),
    )


def vertices_of(g: Graph, labels: Sequence[str]) -> list[int]:
    return [g.index(x) for x in labels]

