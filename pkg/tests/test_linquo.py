import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverideal.chordal import PivotRule, simplicial_vertices
from coverideal.covers import minimal_covers_bruteforce
from coverideal.families import complete_graph, cycle_graph, empty_graph, path_graph, random_chordal_graph, random_graph
from coverideal.graph import bits
from coverideal.linquo import (
    ComparableGeneratorsError,
    MonomialOrdering,
    NotLinearQuotientsError,
    colon_counts,
    fvt_ordering,
    shelling_from_ordering,
    verify_linear_quotients,
    verify_shelling,
    vv_ordering,
)
from coverideal.oracle import exhaustive_shelling_search
from coverideal.covers import independence_complex

from conftest import masks

# generator lists copied from the worked example, letters as printed
VV_BC = "bceg bcfdg bcfed acedf acedg abdef abdfg abdge"
VV_CB = "bceg bcfdg bcfed abdef abdfg abdge acedf acedg"
FVT_A = "bceg bcfdg bcfed acdeg abdeg abdef acdef abdgf"
SHELL_FVT = "adf ae ag bf cf cg bg ce"
SHELL_VV_BC = "adf ae ag bg bf cg ce cf"
SHELL_VV_CB = "adf ae ag cg ce cf bg bf"


def pivot(g, names, then="max"):
    return PivotRule([g.index(x) for x in names], then=then)


def test_vv_worked_example_orderings(fig1):
    assert vv_ordering(fig1, pivot(fig1, "abc")).gens == tuple(masks(fig1, VV_BC))
    assert vv_ordering(fig1, pivot(fig1, "acb")).gens == tuple(masks(fig1, VV_CB))


def test_fvt_worked_example_ordering(fig1):
    o = fvt_ordering(fig1, pivot(fig1, "a"), sub="vv")
    assert o.gens == tuple(masks(fig1, FVT_A))
    assert o.method == "fvt+vv"


def test_fvt_colon_counts_figure1(fig1):
    o = fvt_ordering(fig1, pivot(fig1, "a"), sub="vv")
    # set differences by hand: bcdfg\bceg... each later generator sees
    # one variable until the last three, which see two
    assert o.colon_counts == (0, 1, 1, 1, 1, 2, 2, 2)


def test_worked_example_shellings(fig1):
    n = fig1.n
    cases = [
        (fvt_ordering(fig1, pivot(fig1, "a"), sub="vv"), SHELL_FVT),
        (vv_ordering(fig1, pivot(fig1, "abc")), SHELL_VV_BC),
        (vv_ordering(fig1, pivot(fig1, "acb")), SHELL_VV_CB),
    ]
    for o, expected in cases:
        s = shelling_from_ordering(o, n)
        assert s.facets == tuple(masks(fig1, expected))
        assert verify_shelling(s)


def test_single_edge_orderings():
    edge = path_graph(2)
    assert vv_ordering(edge).gens == (0b10, 0b01)
    assert vv_ordering(edge, [1]).gens == (0b01, 0b10)
    assert set(fvt_ordering(edge).gens) == {0b01, 0b10}


def test_fvt_complete_graph_lexicographic():
    for n in range(2, 7):
        gens = fvt_ordering(complete_graph(n)).gens
        words = [tuple(bits(m)) for m in gens]
        assert words == sorted(itertools.combinations(range(n), n - 1))


def test_fvt_path3():
    # x2 first, then x1 x3
    assert fvt_ordering(path_graph(3)).gens == (0b010, 0b101)


def test_constructors_reject_bad_input():
    for build in (vv_ordering, fvt_ordering):
        with pytest.raises(ValueError, match="not chordal"):
            build(cycle_graph(4))
        with pytest.raises(ValueError, match="no edges"):
            build(empty_graph(3))


def test_colon_counts_examples():
    k4 = complete_graph(4)
    assert colon_counts(fvt_ordering(k4)) == (0, 1, 1, 1)
    assert colon_counts([0b111]) == (0,)


def test_colon_counts_rejects_non_lq():
    with pytest.raises(NotLinearQuotientsError):
        colon_counts([0b0011, 0b1100])


def test_verify_linear_quotients_examples(fig1):
    assert verify_linear_quotients(masks(fig1, VV_BC))
    assert verify_linear_quotients(masks(fig1, FVT_A))
    verdict = verify_linear_quotients([0b0011, 0b1100])
    assert not verdict and verdict.witness == (0, 1)


def test_reversed_fvt_fails(fig1):
    # regression fixture: abdfg then acdef differ in {b, g}
    gens = masks(fig1, FVT_A)[::-1]
    verdict = verify_linear_quotients(gens)
    assert not verdict
    assert verdict.witness == (0, 1)


def test_verify_rejects_comparable():
    with pytest.raises(ComparableGeneratorsError) as info:
        verify_linear_quotients([0b011, 0b111])
    assert info.value.pair == (0, 1)
    with pytest.raises(ComparableGeneratorsError):
        verify_shelling([0b1, 0b11])


def test_verify_shelling_examples():
    assert verify_shelling([0b111])
    # two disjoint edges of ind(C_5) placed first
    c5 = cycle_graph(5)
    facets = independence_complex(c5).facets
    bad = [0b00101, 0b01010]
    assert all(f in facets for f in bad)
    order = bad + [f for f in facets if f not in bad]
    verdict = verify_shelling(order)
    assert not verdict and verdict.witness == (0, 1)
    assert exhaustive_shelling_search(facets) is not None


@pytest.mark.parametrize("rule", ["min", "max"])
def test_constructed_orderings_have_linear_quotients(rule):
    rng = random.Random(hash(rule) % 1000)
    for _ in range(300):
        g = random_chordal_graph(rng.randint(2, 12), rng, connected=rng.random() < 0.8)
        if not g.num_edges:
            continue
        expected = sorted(minimal_covers_bruteforce(g).covers)
        for o in (vv_ordering(g, rule), fvt_ordering(g, rule), fvt_ordering(g, rule, sub="vv")):
            assert verify_linear_quotients(o.gens), o
            assert sorted(o.gens) == expected


def test_listed_pivots_have_linear_quotients(rng):
    for _ in range(200):
        g = random_chordal_graph(rng.randint(2, 10), rng)
        x = rng.choice(simplicial_vertices(g))
        nbrs = list(bits(g.adj[x]))
        rng.shuffle(nbrs)
        rule = PivotRule([x] + nbrs, then=rng.choice(["min", "max"]))
        for o in (vv_ordering(g, rule), fvt_ordering(g, rule)):
            assert verify_linear_quotients(o.gens)


def test_complete_graph_any_order():
    for n in range(2, 7):
        gens = minimal_covers_bruteforce(complete_graph(n)).covers
        for perm in itertools.permutations(gens):
            assert verify_linear_quotients(perm)


def _cover_orderings(rng, count):
    out = []
    while len(out) < count:
        g = random_chordal_graph(rng.randint(2, 8), rng) if rng.random() < 0.5 else None
        if g is None:
            g = random_graph(rng.randint(2, 8), 0.45, rng)
        gens = list(minimal_covers_bruteforce(g).covers)
        rng.shuffle(gens)
        out.append((g, gens))
    return out


def test_shelling_equivalence_random_orders():
    rng = random.Random(99)
    outcomes = {True: 0, False: 0}
    for g, gens in _cover_orderings(rng, 400):
        lq = verify_linear_quotients(gens).ok
        sh = verify_shelling(shelling_from_ordering(gens, g.n)).ok
        assert lq == sh
        outcomes[lq] += 1
    assert outcomes[True] > 20 and outcomes[False] > 20


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_pivot_rules_agree_on_betti_sums(seed):
    from math import comb

    rng = random.Random(seed)
    g = random_chordal_graph(rng.randint(2, 9), rng)
    sums = set()
    for o in (vv_ordering(g, "min"), vv_ordering(g, "max"), fvt_ordering(g, "min"), fvt_ordering(g, "max")):
        per_degree = {}
        for gen, n_p in zip(o.gens, o.colon_counts):
            for i in range(n_p + 1):
                key = (i, bin(gen).count("1"))
                per_degree[key] = per_degree.get(key, 0) + comb(n_p, i)
        sums.add(tuple(sorted(per_degree.items())))
    assert len(sums) == 1


def test_monomial_ordering_len():
    assert len(MonomialOrdering((1, 2))) == 2


def test_shelling_from_ordering_ambient():
    assert shelling_from_ordering([0b11], 2).facets == (0,)
    assert shelling_from_ordering([0b01], 3).facets == (0b110,)
    with pytest.raises(ValueError):
        shelling_from_ordering([0b100], 2)
