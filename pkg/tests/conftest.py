import itertools
import random

import pytest

from coverideal.families import figure1
from coverideal.graph import Graph, bits, popcount


@pytest.fixture
def fig1() -> Graph:
    return figure1()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


def word(g: Graph, mask: int) -> str:
    return g.format_set(mask)


def masks(g: Graph, words: str) -> list[int]:
    """``"bceg abd"`` -> bitmasks, letters in any order."""
    return [sum(1 << g.index(ch) for ch in w) for w in words.split()]


# Independent oracles.  Deliberately naive: plain subset loops, no shared code
# with the package beyond the Graph container.

def brute_chordal(g: Graph) -> bool:
    """No induced cycle of length >= 4, by checking every vertex subset."""
    for k in range(4, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            s = sum(1 << v for v in subset)
            degs = [popcount(g.adj[v] & s) for v in subset]
            if any(d != 2 for d in degs):
                continue
            # 2-regular; a cycle iff connected
            seen, stack = 1 << subset[0], [subset[0]]
            while stack:
                v = stack.pop()
                for u in bits(g.adj[v] & s & ~seen):
                    seen |= 1 << u
                    stack.append(u)
            if seen == s:
                return False
    return True


def brute_covers(g: Graph) -> set[int]:
    edges = g.edges()
    covers = [
        m for m in range(1 << g.n)
        if all(m >> u & 1 or m >> v & 1 for u, v in edges)
    ]
    cover_set = set(covers)
    return {m for m in covers if not any((m & ~(1 << v)) in cover_set for v in bits(m))}


def brute_induced_matching(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for combo in itertools.combinations(edges, k):
            ends = [(1 << u) | (1 << v) for u, v in combo]
            if any(a & b for a, b in itertools.combinations(ends, 2)):
                continue
            if any(
                (g.adj[u] | g.adj[v]) & b
                for (u, v), a in zip(combo, ends)
                for b in ends if b != a
            ):
                continue
            found = True
            break
        if not found:
            break
        best = k
    return best
