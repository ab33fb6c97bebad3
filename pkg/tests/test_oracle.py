import itertools
import random
from fractions import Fraction

import pytest

from coverideal.families import figure1
from coverideal.covers import independence_complex
from coverideal.linquo import verify_shelling
from coverideal.oracle import (
    exhaustive_shelling_search,
    hochster_betti,
    integer_rank,
    lcm_lattice,
    reduced_homology,
    upper_koszul_facets,
)


def fraction_rank(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_integer_rank_against_fractions():
    rng = random.Random(7)
    for _ in range(300):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        dense = [[rng.choice([0, 0, 1, -1, 2, 3]) for _ in range(cols)] for _ in range(rows)]
        sparse = [{c: v for c, v in enumerate(row) if v} for row in dense]
        assert integer_rank(sparse) == fraction_rank(dense)


def test_integer_rank_small():
    assert integer_rank([]) == 0
    assert integer_rank([{}, {0: 0}]) == 0
    assert integer_rank([{0: 2, 1: 4}, {0: 1, 1: 2}]) == 1


def test_reduced_homology_conventions():
    assert reduced_homology([]) == {}
    assert reduced_homology([0]) == {-1: 1}
    assert reduced_homology([0b1]) == {}
    assert reduced_homology([0b1, 0b10]) == {0: 1}


def test_reduced_homology_spheres():
    # boundary of a simplex on k+2 vertices is a k-sphere
    for k in range(0, 4):
        full = (1 << (k + 2)) - 1
        facets = [full & ~(1 << v) for v in range(k + 2)]
        assert reduced_homology(facets) == {k: 1}
    # gluing a triangle along one edge keeps the loop; two triangles on an edge do not form one
    assert reduced_homology([0b011, 0b110, 0b101, 0b1011]) == {1: 1}
    assert reduced_homology([0b0111, 0b1110]) == {}


def test_upper_koszul_and_lattice():
    gens = [0b011, 0b110]
    assert lcm_lattice(gens) == {0b011, 0b110, 0b111}
    assert sorted(upper_koszul_facets(gens, 0b111)) == [0b001, 0b100]


def test_hochster_examples():
    assert hochster_betti([0b0011, 0b1100], 4).entries == {(0, 2): 2, (1, 4): 1}
    # maximal ideal in three variables: Koszul complex
    assert hochster_betti([1, 2, 4], 3).entries == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    assert hochster_betti([0], 2).entries == {(0, 0): 1}


def test_hochster_rejects_bad_input():
    with pytest.raises(ValueError, match="comparable"):
        hochster_betti([0b01, 0b11], 2)
    with pytest.raises(ValueError, match="outside"):
        hochster_betti([0b100], 2)
    with pytest.raises(ValueError, match="limited"):
        hochster_betti([1], 15)


def test_shelling_search_disconnected():
    assert exhaustive_shelling_search([0b0011, 0b1100]) is None


def test_shelling_search_sphere():
    facets = [0b1111 & ~(1 << v) for v in range(4)]
    order = exhaustive_shelling_search(facets)
    assert order is not None and sorted(order) == sorted(facets)
    assert verify_shelling(order)


def test_shelling_search_figure1():
    ind = independence_complex(figure1())
    order = exhaustive_shelling_search(ind)
    assert order is not None and verify_shelling(order)


def test_shelling_search_agrees_with_verifier():
    # brute force over every order of small random pure complexes
    rng = random.Random(11)
    for _ in range(80):
        faces = list(itertools.combinations(range(5), 2))
        facets = [sum(1 << v for v in f) for f in rng.sample(faces, rng.randint(1, 5))]
        any_order = any(verify_shelling(p) for p in itertools.permutations(facets))
        assert (exhaustive_shelling_search(facets) is not None) == any_order


def test_shelling_search_cap():
    facets = [1 << v for v in range(10)]
    with pytest.raises(ValueError, match="limited"):
        exhaustive_shelling_search(facets)
