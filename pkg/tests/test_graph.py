import pytest

import gapfree as gf
from gapfree.errors import (
    BadParameter,
    DuplicateEdge,
    LoopEdge,
    VertexOutOfRange,
)

from helpers import named


def test_build_graph_canonicalizes():
    g = gf.build_graph(4, [(3, 0), (1, 0), (2, 1)])
    assert g.edges == ((0, 1), (0, 3), (1, 2))
    assert g.edge_id(3, 0) == 1
    assert g.adjacency[0] == (1, 3)
    assert g.has_edge(0, 3) and not g.has_edge(2, 3)


def test_build_graph_k2():
    g = gf.build_graph(2, [(0, 1)])
    assert (g.n, g.m) == (2, 1)


def test_build_graph_k13e_example():
    g = gf.build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert g.max_degree == 3
    assert g.edges == named("k13e").edges


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        gf.build_graph(3, [(1, 1)])


def test_unordered_duplicate_rejected():
    with pytest.raises(DuplicateEdge):
        gf.build_graph(3, [(0, 1), (1, 0)])


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        gf.build_graph(3, [(0, 3)])
    with pytest.raises(VertexOutOfRange):
        gf.build_graph(3, [(-1, 2)])


def test_path_generator():
    p4 = named("P", 4)
    assert (p4.n, p4.m, p4.max_degree) == (4, 3, 2)


def test_cycle_generator():
    c5 = named("C", 5)
    assert (c5.n, c5.m) == (5, 5)
    assert gf.degree_profile(c5).regularity == 2


def test_petersen_generator():
    p = named("petersen")
    assert (p.n, p.m) == (10, 15)
    profile = gf.degree_profile(p)
    assert profile.is_regular and profile.regularity == 3


def test_bad_parameters():
    with pytest.raises(BadParameter):
        gf.generate("C", 2)
    with pytest.raises(BadParameter):
        gf.generate("P", 0)
    with pytest.raises(BadParameter):
        gf.generate("nosuchfamily", 3)
    with pytest.raises(BadParameter):
        gf.generate("petersen", 5)


def test_degree_profile_k4():
    profile = gf.degree_profile(named("K", 4))
    assert profile.is_regular and profile.regularity == 3


def test_degree_profile_k13e():
    profile = gf.degree_profile(named("k13e"))
    assert not profile.is_regular and profile.max_degree == 3


def test_degree_profile_cylinder_2_4():
    # C(2,4) = P2 box C4 is the 3-cube: every vertex has degree 1 + 2
    profile = gf.degree_profile(named("cylinder", 2, 4))
    assert profile.max_degree == 3
    assert profile.degrees == (3,) * 8
    assert profile.is_regular and profile.regularity == 3


def test_hypercube_counts():
    for n in range(1, 7):
        q = named("Q", n)
        assert q.n == 2**n
        assert q.m == n * 2 ** (n - 1)
        profile = gf.degree_profile(q)
        assert profile.is_regular and profile.regularity == n
        ok, _ = gf.is_bipartite(q)
        assert ok


def test_handshake_across_families():
    zoo = [
        named("P", 5),
        named("C", 6),
        named("K", 5),
        named("kmn", 2, 3),
        named("nk1", 4),
        named("Q", 3),
        named("petersen"),
        named("k113"),
        named("k13e"),
        named("grid", 3, 4),
        named("cylinder", 3, 4),
        named("torus", 3, 4),
        named("hamming", 2, 3),
    ]
    for g in zoo:
        assert sum(g.degrees) == 2 * g.m


def test_k113_shape():
    g = named("k113")
    assert (g.n, g.m, g.max_degree) == (5, 7, 4)


def test_torus_and_hamming_shapes():
    t34 = named("torus", 3, 4)
    assert (t34.n, t34.m) == (12, 24)
    assert gf.degree_profile(t34).regularity == 4
    t24 = named("torus", 2, 4)  # dimension 2 read as K2
    assert (t24.n, t24.m) == (8, 12)
    assert gf.degree_profile(t24).regularity == 3
    h22 = named("hamming", 2, 2)
    assert (h22.n, h22.m) == (4, 4)
    assert gf.degree_profile(h22).regularity == 2


def test_is_bipartite_examples():
    ok, sides = gf.is_bipartite(named("C", 4))
    assert ok
    ok_odd, sides_odd = gf.is_bipartite(named("C", 5))
    assert not ok_odd and sides_odd is None
    cover = gf.product(gf.ProductKind.TENSOR, named("K", 2), named("C", 5))
    ok, _ = gf.is_bipartite(cover.graph)
    assert ok


def test_bipartite_partition_has_no_internal_edges():
    for g in [named("C", 4), named("P", 5), named("Q", 3), named("kmn", 2, 3)]:
        ok, sides = gf.is_bipartite(g)
        assert ok
        for u, v in g.edges:
            assert sides[u] != sides[v]


def test_edge_list_roundtrip(tmp_path):
    g = named("petersen")
    path = tmp_path / "petersen.g"
    gf.write_edge_list(path, g)
    again = gf.read_edge_list(path)
    assert again == g
    path2 = tmp_path / "copy.g"
    gf.write_edge_list(path2, again)
    assert path.read_bytes() == path2.read_bytes()


def test_edge_list_comments_ignored(tmp_path):
    path = tmp_path / "with_comments.g"
    path.write_text("# a graph\n3 2\n0 1\n# middle comment\n1 2\n")
    g = gf.read_edge_list(path)
    assert g.edges == ((0, 1), (1, 2))


def test_edge_list_malformed(tmp_path):
    path = tmp_path / "bad.g"
    path.write_text("3 5\n0 1\n")
    with pytest.raises(BadParameter):
        gf.read_edge_list(path)
