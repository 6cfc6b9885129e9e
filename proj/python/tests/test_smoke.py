import pytest

import sparsehg

TRIANGLE = "v a\nv b\nv c\ne ab a b\ne bc b c\ne ca c a\n"
K4 = "v a\nv b\nv c\nv d\ne ab a b\ne ac a c\ne ad a d\ne bc b c\ne bd b d\ne cd c d\n"


def test_parse_and_serialize():
    h = sparsehg.Hypergraph.parse(TRIANGLE)
    assert (h.num_vertices, h.num_edges, h.rank) == (3, 3, 2)
    assert sparsehg.Hypergraph.parse(h.serialize()) == h
    assert h.find_vertex("c") == 2
    assert h.find_edge("zz") is None


def test_sparsity_with_witness():
    k4 = sparsehg.Hypergraph.parse(K4)
    assert sparsehg.is_k_sparse(k4, 1, oracle=True) == {"sparse": False, "witness": [0, 1, 2, 3]}
    assert not sparsehg.is_k_sparse(k4, 1)["sparse"]
    assert sparsehg.is_k_sparse(k4, 2)["sparse"]


def test_orientations():
    h = sparsehg.Hypergraph.parse(TRIANGLE)
    assert sparsehg.bounded_orientation(h, 1) == [0, 1, 2]
    heads = sparsehg.antisymmetric_orientation(h, 1)
    arcs = sparsehg.directed_quotient(h, heads)
    assert not any((v, u) in arcs for u, v in arcs)


def test_domain_errors_carry_codes():
    k4 = sparsehg.Hypergraph.parse(K4)
    with pytest.raises(sparsehg.SparsehgError) as info:
        sparsehg.bounded_orientation(k4, 1)
    assert info.value.code == "NotKSparse"
    assert info.value.witness
    with pytest.raises(sparsehg.SparsehgError) as info:
        sparsehg.Hypergraph.parse("v a\ne x a a\n")
    assert info.value.code == "DuplicateVertexInEdge"


def test_dfst_of_hyperedge():
    h = sparsehg.Hypergraph.parse("v a\nv b\nv c\ne e a b c\n")
    nodes = sparsehg.build_dfst(h, 0)
    assert [n["vertex"] for n in nodes] == [0, 1]
    assert nodes[1] == {"vertex": 1, "parent": 0, "type": "succ_0", "attach": [0], "aux": [1, 2]}
    assert sparsehg.edge_ordering(h)[0][0] == 0
    assert sparsehg.neighbourhood_ordering(3, [(0, 2), (1, 2)])[2] in ([0, 1], [1, 0])


def test_priority_tree_star():
    h = sparsehg.Hypergraph.parse("v r\nv a\nv b\ne ra r a\ne rb r b\n")
    t = sparsehg.build_priority_tree(h, 0, [0, 1])
    assert t["edge_classes"] == [[0], [1]]
    assert sorted(t["order"]) == [0, 1, 2]


def test_flow_pipeline():
    g = sparsehg.Graph.from_pairs(2, [(0, 1)])
    flow = sparsehg.compute_delta_flow(g, [2, 0], 1)
    assert flow == {(0, 1): 1}
    assert sparsehg.check_delta_flow(2, flow, [2, 0])
    assert sparsehg.decompose_flow_paths(g, flow, [2, 0]) == [[0], [0, 1]]
    tri = sparsehg.Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
    assert sparsehg.cancel_cycles(3, {(0, 1): 1, (1, 2): 1, (0, 2): -1}) == {}
    assert sparsehg.is_k_sparse_distribution(tri, [1, 1, 1], 0)["sparse"]


def test_refinement():
    g = sparsehg.Graph.from_pairs(2, [(0, 1)])
    r = sparsehg.refine_to_injective(g, [([0], 0), ([0, 1], 0)], 1)
    assert r["verified"]
    assert r["gmap"] == [0, 0]
    assert r["h0"] == [([0], 0), ([0, 1], 1)]


def test_suite_is_deterministic():
    a = sparsehg.run_suite("oracle", 7, 5)
    assert a == sparsehg.run_suite("oracle", 7, 5)
    assert "FAIL" not in a
    assert sparsehg.run_suite("lemmas", 1, 0) == "suite lemmas seed 1\n"
