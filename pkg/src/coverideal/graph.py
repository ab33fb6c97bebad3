"""Immutable simple graphs on at most 64 vertices with bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  The same integer doubles as a squarefree monomial: bit ``v`` set means
the variable ``x_v`` divides it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Use
    :meth:`from_edges` rather than the raw constructor; it validates input.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the graph")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count does not match vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("vertex labels must be unique")
        object.__setattr__(self, "_hash", hash((self.n, self.adj, self.labels)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def from_labeled_edges(cls, edges: Iterable[tuple[str, str]]) -> Graph:
        """Build a graph from label pairs; first appearance fixes the index."""
        index: dict[str, int] = {}
        pairs = []
        for a, b in edges:
            for x in (a, b):
                if x not in index:
                    index[x] = len(index)
            pairs.append((index[a], index[b]))
        return cls.from_edges(len(index), pairs, list(index))

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, label: str) -> int:
        if self.labels is not None:
            try:
                return self.labels.index(label)
            except ValueError:
                pass
        try:
            v = int(label)
        except ValueError:
            raise KeyError(label) from None
        if not 0 <= v < self.n:
            raise KeyError(label)
        return v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def format_set(self, mask: int, sep: str = "") -> str:
        return sep.join(self.label(v) for v in bits(mask))


def neighborhood(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> int:
    return neighborhood(g, v) | 1 << v


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    """Return the subgraph induced on ``keep`` and the old-to-new index map."""
    if keep & ~g.vertices:
        raise ValueError("kept set contains vertices outside the graph")
    old = list(bits(keep))
    remap = {v: i for i, v in enumerate(old)}
    adj = tuple(mask_of(remap[u] for u in bits(g.adj[v] & keep)) for v in old)
    labels = tuple(g.label(v) for v in old) if g.labels is not None else None
    return Graph(len(old), adj, labels), remap


def is_clique(g: Graph, s: int) -> bool:
    rest = s
    while rest:
        v = lowest(rest)
        rest ^= 1 << v
        if rest & ~g.adj[v]:
            return False
    return True


def isolated_vertices(g: Graph, within: int | None = None) -> int:
    alive = g.vertices if within is None else within
    return mask_of(v for v in bits(alive) if not g.adj[v] & alive)


def has_edge_within(g: Graph, alive: int) -> bool:
    return any(g.adj[v] & alive for v in bits(alive))
