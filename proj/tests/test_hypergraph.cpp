#include "helpers.hpp"

using namespace sparsehg;
using test::hg;

TEST_CASE("parse minimal hypergraph") {
  auto h = hg("v a\nv b\ne 0 a b");
  CHECK(h.num_vertices() == 2);
  REQUIRE(h.num_edges() == 1);
  CHECK(std::vector<VertexId>(h.edge(0).begin(), h.edge(0).end()) == std::vector<VertexId>{0, 1});
  CHECK(h.rank() == 2);
}

TEST_CASE("parse errors") {
  CHECK_ERROR_CODE(hg("v a\ne 0 a a"), ErrorCode::DuplicateVertexInEdge);
  CHECK_ERROR_CODE(hg("v a\ne 0 a b"), ErrorCode::UndeclaredVertex);
  CHECK_ERROR_CODE(hg("v a\nv a"), ErrorCode::DuplicateLabel);
  CHECK_ERROR_CODE(hg("v a\ne 0"), ErrorCode::EmptyEdge);
  CHECK_ERROR_CODE(hg("x a"), ErrorCode::Syntax);
}

TEST_CASE("parallel edges and comments") {
  auto h = hg("# header\nv a\nv b\nv c\n\ne 0 a b\ne 1 a b  # again\n");
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 2);
  CHECK(h.incident_edges(0).size() == 2);
  CHECK(h.incident_edges(2).empty());
}

TEST_CASE("serialize round trip") {
  auto h = hg(test::k4);
  CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
  auto d = parse_digraph("v p\nv q\na p q\na q q\na p q\n");
  CHECK(d.num_arcs() == 2);
  CHECK(parse_digraph(serialize_digraph(d)) == d);
}

TEST_CASE("induced subhypergraph") {
  auto h = hg(test::triangle);
  auto sub = induced_subhypergraph(h, {0, 1});
  CHECK(sub.graph.num_vertices() == 2);
  REQUIRE(sub.graph.num_edges() == 1);
  CHECK(sub.graph.edge_label(0) == "ab");
  CHECK(sub.edge_origin == std::vector<EdgeId>{0});
  CHECK(induced_subhypergraph(h, {0, 1, 2}).graph == h);
  auto empty = induced_subhypergraph(h, {});
  CHECK(empty.graph.num_vertices() == 0);
  CHECK(empty.graph.num_edges() == 0);
  CHECK(count_induced_edges(h, {0, 1, 2}) == 3);
}

TEST_CASE("connected components") {
  auto h = hg("v a\nv b\nv c\nv d\ne x a b\ne y c d\n");
  CHECK(connected_components(h) == std::vector<VertexSet>{{0, 1}, {2, 3}});
  CHECK(connected_components(Hypergraph(1)) == std::vector<VertexSet>{{0}});
  CHECK(connected_components(hg(test::triangle)).size() == 1);
}

TEST_CASE("preimage counts") {
  auto k2 = hg(test::k2);
  CHECK(preimage_counts(Orientation(k2, {0})) == std::vector<std::size_t>{1, 0});
  auto tri = hg(test::triangle);
  CHECK(preimage_counts(Orientation(tri, {0, 1, 2})) == std::vector<std::size_t>{1, 1, 1});
  CHECK(preimage_counts(Orientation(Hypergraph(3), {})) == std::vector<std::size_t>{0, 0, 0});
  CHECK_ERROR_CODE(Orientation(k2, {5}), ErrorCode::InvalidArgument);
}

TEST_CASE("undirected graph validation") {
  CHECK_ERROR_CODE(UndirectedGraph(hg("v a\nv b\nv c\ne x a b c\n")), ErrorCode::NotAGraph);
  CHECK_ERROR_CODE(UndirectedGraph(hg("v a\nv b\ne x a b\ne y a b\n")), ErrorCode::NotAGraph);
  auto g = test::graph(test::path3);
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.edge_between(2, 1) == std::optional<EdgeId>(1));
  CHECK_FALSE(g.edge_between(0, 2));
}

TEST_CASE("digraph queries") {
  DirectedGraph d(3, {{0, 1}, {1, 0}, {2, 2}});
  CHECK_FALSE(d.is_antisymmetric());
  CHECK(d.has_loop());
  CHECK(d.max_indegree() == 1);
  CHECK(DirectedGraph(2, {{0, 1}}).is_antisymmetric());
}
