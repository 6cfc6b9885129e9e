#include "helpers.hpp"

#include <algorithm>

#include "sparsehg/sparsity.hpp"

using namespace sparsehg;
using test::hg;

TEST_CASE("brute-force sparsity") {
  auto k4 = hg(test::k4);
  auto r = is_k_sparse_bruteforce(k4, 1);
  CHECK_FALSE(r.is_sparse);
  CHECK(r.witness == std::optional<VertexSet>(VertexSet{0, 1, 2, 3}));
  CHECK(is_k_sparse_bruteforce(hg(test::triangle), 1).is_sparse);
  CHECK(is_k_sparse_bruteforce(Hypergraph(5), 0).is_sparse);
  CHECK_ERROR_CODE(is_k_sparse_bruteforce(Hypergraph(4), 1, 3), ErrorCode::CapExceeded);
}

TEST_CASE("flow-based sparsity") {
  auto k4 = hg(test::k4);
  auto r = is_k_sparse(k4, 1);
  CHECK_FALSE(r.is_sparse);
  REQUIRE(r.witness);
  CHECK(count_induced_edges(k4, *r.witness) > r.witness->size());
  CHECK(is_k_sparse(k4, 2).is_sparse);
  CHECK(is_k_sparse(k4, 6).is_sparse);
  CHECK(is_k_sparse(Hypergraph(3), 0).is_sparse);
}

TEST_CASE("orientation weight") {
  auto k2x2 = hg("v a\nv b\ne x a b\ne y a b\n");
  CHECK(orientation_weight(Orientation(k2x2, {0, 0}), 1) == 1);
  CHECK(orientation_weight(Orientation(k2x2, {0, 1}), 1) == 0);
  Hypergraph star(2);
  for (int i = 0; i < 3; ++i) star.add_edge({0, 1});
  CHECK(orientation_weight(Orientation(star, {0, 0, 0}), 1) == 2);
}

TEST_CASE("bounded orientation") {
  auto tri = hg(test::triangle);
  BoundedOrientationTrace trace;
  auto o = bounded_orientation(tri, 1, &trace);
  CHECK(preimage_counts(o) == std::vector<std::size_t>{1, 1, 1});
  for (std::size_t i = 1; i < trace.weights.size(); ++i) CHECK(trace.weights[i] < trace.weights[i - 1]);
  CHECK(trace.weights.back() == 0);

  auto k2 = hg(test::k2);
  CHECK(bounded_orientation(k2, 1)[0] == 0);
  CHECK_ERROR_CODE(bounded_orientation(hg(test::k4), 1), ErrorCode::NotKSparse);
  CHECK(format_orientation(tri, o) == "ab -> a\nbc -> b\nca -> c\n");
}

TEST_CASE("directed quotient") {
  auto k2 = hg(test::k2);
  auto q = directed_quotient(k2, Orientation(k2, {0}));
  CHECK(q.arcs() == std::vector<DirectedGraph::Arc>{{1, 0}});

  auto tri = hg(test::triangle);
  auto cyc = directed_quotient(tri, Orientation(tri, {1, 2, 0}));
  CHECK(cyc.num_arcs() == 3);
  CHECK(cyc.is_antisymmetric());

  auto par = hg("v a\nv b\ne x a b\ne y a b\n");
  auto both = directed_quotient(par, Orientation(par, {0, 1}));
  CHECK(both.arcs() == std::vector<DirectedGraph::Arc>{{0, 1}, {1, 0}});
  CHECK(bad_vertices(par, Orientation(par, {0, 1})) == VertexSet{0, 1});
}

TEST_CASE("antisymmetric orientation") {
  auto par = hg("v a\nv b\ne x a b\ne y a b\n");
  AntisymmetricTrace trace;
  auto o = antisymmetric_orientation(par, 1, &trace);
  CHECK(o[0] == o[1]);
  CHECK(directed_quotient(par, o).num_arcs() == 1);
  auto counts = preimage_counts(o);
  CHECK(*std::max_element(counts.begin(), counts.end()) <= 2);
  for (std::size_t i = 1; i < trace.bad_counts.size(); ++i)
    CHECK(trace.bad_counts[i] < trace.bad_counts[i - 1]);

  auto tri = hg(test::triangle);
  CHECK(directed_quotient(tri, antisymmetric_orientation(tri, 1)).is_antisymmetric());
  auto k2 = hg(test::k2);
  CHECK(antisymmetric_orientation(k2, 3) == bounded_orientation(k2, 3));
  CHECK_ERROR_CODE(antisymmetric_orientation(hg("v a\ne x a\n"), 1), ErrorCode::RankTooSmall);
  CHECK_ERROR_CODE(antisymmetric_orientation(hg(test::k4), 1), ErrorCode::NotKSparse);
}

TEST_CASE("homomorphisms") {
  DirectedGraph arc(2, {{0, 1}});
  CHECK(find_homomorphism(arc, arc) == std::vector<VertexId>{0, 1});
  DirectedGraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(find_homomorphism(cycle, DirectedGraph(1, {{0, 0}})) == std::vector<VertexId>{0, 0, 0});
  CHECK_ERROR_CODE(find_homomorphism(cycle, DirectedGraph(1)), ErrorCode::NoHomomorphism);
}

TEST_CASE("H-orientation check") {
  auto g = test::graph(test::k2);
  DirectedGraph arc(2, {{0, 1}});
  auto r = check_h_orientation(g, arc, {{0}, {1}});
  CHECK(r.encodes);
  REQUIRE(r.orientation);
  CHECK((*r.orientation)[0] == 1);
  CHECK_FALSE(check_h_orientation(g, DirectedGraph(2), {{0}, {1}}).encodes);
  CHECK(check_h_orientation(UndirectedGraph(), DirectedGraph(1), {{}}).encodes);
  CHECK_ERROR_CODE(check_h_orientation(g, arc, {{0, 1}, {1}}), ErrorCode::MalformedPartition);
}

TEST_CASE("make H-orientation") {
  auto g = test::graph(test::triangle);
  auto o = bounded_orientation(g.hypergraph(), 1);
  DirectedGraph loop(1, {{0, 0}});
  auto ho = make_h_orientation(g, o, loop);
  CHECK(ho.classes == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(oriented_graph(g, o).num_arcs() == 3);
}
