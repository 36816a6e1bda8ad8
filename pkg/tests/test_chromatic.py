import random

import pytest

import gapfree as gf
from gapfree.errors import BudgetExceeded, NotBipartite, NotRegular

from helpers import SEED, named


def bipartite_regular_zoo():
    k2 = named("K", 2)
    return [
        k2,
        named("C", 4),
        named("C", 6),
        named("C", 8),
        named("kmn", 3, 3),
        named("kmn", 4, 4),
        named("Q", 3),
        named("Q", 4),
        gf.product(gf.ProductKind.TENSOR, k2, named("C", 5)).graph,
        gf.product(gf.ProductKind.TENSOR, k2, named("C", 4)).graph,
    ]


def test_single_edge():
    coloring = gf.bipartite_regular_coloring(named("K", 2))
    assert coloring.colors == (1,)


def test_c4_alternating():
    c4 = named("C", 4)
    coloring = gf.bipartite_regular_coloring(c4)
    assert sorted(coloring.palette) == [1, 2]
    for v in range(4):
        assert gf.spectrum(c4, coloring, v).colors == (1, 2)


def test_double_cover_of_c5():
    cover = gf.product(gf.ProductKind.TENSOR, named("K", 2), named("C", 5)).graph
    assert gf.degree_profile(cover).regularity == 2
    assert cover.n == 10
    coloring = gf.bipartite_regular_coloring(cover)
    for v in range(cover.n):
        assert gf.spectrum(cover, coloring, v).colors == (1, 2)


def test_every_vertex_sees_full_palette():
    for g in bipartite_regular_zoo():
        r = gf.degree_profile(g).regularity
        coloring = gf.bipartite_regular_coloring(g)
        assert sorted(coloring.palette) == list(range(1, r + 1))
        for v in range(g.n):
            assert gf.spectrum(g, coloring, v).colors == tuple(range(1, r + 1))
        report = gf.verify_interval(g, coloring, r)
        assert report.valid


def test_color_classes_are_perfect_matchings():
    # equivalent to the peeling invariant: after removing classes 1..k the
    # residue is (r-k)-regular
    for g in bipartite_regular_zoo():
        r = gf.degree_profile(g).regularity
        coloring = gf.bipartite_regular_coloring(g)
        for k in range(1, r + 1):
            hits = [0] * g.n
            for e, (u, v) in enumerate(g.edges):
                if coloring.colors[e] == k:
                    hits[u] += 1
                    hits[v] += 1
            assert hits == [1] * g.n


def test_not_bipartite_rejected():
    with pytest.raises(NotBipartite):
        gf.bipartite_regular_coloring(named("C", 5))


def test_not_regular_rejected():
    with pytest.raises(NotRegular):
        gf.bipartite_regular_coloring(named("P", 3))
    with pytest.raises(NotRegular):
        gf.bipartite_regular_coloring(named("nk1", 3))


def test_chi_prime_petersen():
    result = gf.exact_chromatic_index(named("petersen"))
    assert result.chi_prime == 4 and not result.class1
    report = gf.verify_interval(named("petersen"), result.witness, result.witness.t)
    assert not report.properness_violations
    assert sorted(result.witness.palette) == [1, 2, 3, 4]


def test_chi_prime_k4():
    result = gf.exact_chromatic_index(named("K", 4))
    assert result.chi_prime == 3 and result.class1


def test_chi_prime_c3():
    result = gf.exact_chromatic_index(named("C", 3))
    assert result.chi_prime == 3 and not result.class1


def test_chi_prime_empty():
    result = gf.exact_chromatic_index(named("nk1", 3))
    assert result.chi_prime == 0 and result.class1


def test_witness_is_lex_least_deterministic():
    a = gf.exact_chromatic_index(named("petersen")).witness
    b = gf.exact_chromatic_index(named("petersen")).witness
    assert a == b


def _search_order(g):
    from gapfree.graph import bfs_edge_order

    rank = {e: i for i, e in enumerate(bfs_edge_order(g))}
    return sorted(
        range(g.m),
        key=lambda e: (-(g.degrees[g.edges[e][0]] + g.degrees[g.edges[e][1]]), rank[e]),
    )


def test_witness_is_lex_least_against_brute_force():
    # plain enumeration of every proper k-coloring, no symmetry tricks; the
    # search's witness must be the lexicographically least color sequence
    for g in [named("C", 4), named("C", 5), named("K", 4), named("P", 4)]:
        result = gf.exact_chromatic_index(g)
        k = result.chi_prime
        order = _search_order(g)
        best = None

        def enum(pos, seq, at_vertex):
            nonlocal best
            if best is not None:
                return  # first hit in ascending order is the minimum
            if pos == g.m:
                best = tuple(seq)
                return
            e = order[pos]
            u, v = g.edges[e]
            for c in range(1, k + 1):
                if c in at_vertex[u] or c in at_vertex[v]:
                    continue
                at_vertex[u].add(c)
                at_vertex[v].add(c)
                enum(pos + 1, seq + [c], at_vertex)
                at_vertex[u].remove(c)
                at_vertex[v].remove(c)

        enum(0, [], [set() for _ in range(g.n)])
        assert best == tuple(result.witness.colors[e] for e in order)


def _random_graph(rng, n, p=0.5):
    return gf.build_graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def test_vizing_bound_on_random_graphs():
    rng = random.Random(SEED + 2)
    for _ in range(30):
        g = _random_graph(rng, rng.randint(2, 8))
        result = gf.exact_chromatic_index(g)
        assert result.chi_prime in (g.max_degree, g.max_degree + 1)
        report = gf.verify_interval(g, result.witness, result.witness.t)
        assert not report.properness_violations


def test_regular_membership_examples():
    assert gf.regular_membership(named("C", 5)) is False
    assert gf.regular_membership(named("C", 4)) is True
    assert gf.regular_membership(named("torus", 3, 3)) is False
    with pytest.raises(NotRegular):
        gf.regular_membership(named("P", 4))


def test_t33_is_class_2_with_witness_at_5():
    result = gf.exact_chromatic_index(named("torus", 3, 3))
    assert result.chi_prime == 5 and not result.class1


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        gf.exact_chromatic_index(named("petersen"), budget=10)


def test_membership_agrees_with_oracle_on_small_regular_graphs():
    for g in [named("C", 4), named("C", 5), named("C", 6), named("K", 4),
              named("K", 2), named("Q", 3), named("torus", 2, 3),
              named("torus", 3, 3)]:
        assert gf.regular_membership(g) == gf.oracle(g).member
