#include "helpers.hpp"

#include "sparsehg/encoding.hpp"

using namespace sparsehg;

TEST_CASE("spanning forest") {
  auto path = test::graph(test::path3);
  auto ctx = spanning_forest(path);
  CHECK(ctx.roots == VertexSet{0});
  CHECK(ctx.tree_leq(0, 2));
  CHECK(ctx.tree_leq(1, 2));
  CHECK_FALSE(ctx.tree_leq(2, 1));
  CHECK(ctx.address[2] == std::vector<std::size_t>{0, 0});

  auto edgeless = spanning_forest(UndirectedGraph(Hypergraph(3)));
  CHECK(edgeless.roots == VertexSet{0, 1, 2});

  auto two = spanning_forest(UndirectedGraph::from_pairs(4, {{0, 1}, {2, 3}}));
  CHECK(two.roots == VertexSet{0, 2});
  CHECK_FALSE(two.tree_leq(0, 3));
  CHECK_FALSE(two.tree_leq(3, 0));
}

TEST_CASE("lexicographic vertex order") {
  auto star = UndirectedGraph::from_pairs(3, {{0, 1}, {0, 2}});
  auto ctx = spanning_forest(star);
  CHECK(vertex_lex_order(ctx, 1, 1) == std::strong_ordering::equal);
  CHECK(vertex_lex_order(ctx, 0, 1) == std::strong_ordering::less);
  CHECK(vertex_lex_order(ctx, 1, 0) == std::strong_ordering::greater);
  auto first = ctx.children[0].at(0);
  auto second = ctx.children[0].at(1);
  CHECK(vertex_lex_order(ctx, first, second) == std::strong_ordering::less);
}

TEST_CASE("set order") {
  auto ctx = spanning_forest(test::graph(test::k2));
  CHECK(set_order(ctx, {}, {0}) == std::strong_ordering::less);
  CHECK(set_order(ctx, {0, 1}, {0, 1}) == std::strong_ordering::equal);
  // a <lex b; min of {a} Δ {b} is a, which lies in X = {a}.
  CHECK(set_order(ctx, {0}, {1}) == std::strong_ordering::greater);
  CHECK(set_order(ctx, {0}, {0, 1}) == std::strong_ordering::less);
}

TEST_CASE("refinement of the K2 example") {
  auto g = test::graph(test::k2);
  FiniteSetFunction h(2, {{{0}, 0}, {{0, 1}, 0}});
  auto r = refine_to_injective(g, h, 1);
  CHECK(r.delta.values() == std::vector<std::int64_t>{2, 0});
  CHECK(r.gmap == std::vector<std::optional<VertexId>>{0, 0});
  CHECK(r.h0.image(r.h0.find({0})) == 0);
  CHECK(r.h0.image(r.h0.find({0, 1})) == 1);
  CHECK(verify_encoding(h, r.h0, r.gmap));
  CHECK(format_refinement(g.hypergraph(), r) == "a -> a\na,b -> b\na -> a\nb -> a\n");
}

TEST_CASE("refinement of an injective function is the identity") {
  auto g = test::graph(test::path3);
  FiniteSetFunction h(3, {{{0, 2}, 0}, {{}, 2}});
  auto r = refine_to_injective(g, h, 1);
  CHECK(r.flow.is_zero());
  CHECK(r.gmap[0] == std::optional<VertexId>(0));
  CHECK(r.gmap[2] == std::optional<VertexId>(2));
  CHECK_FALSE(r.gmap[1]);
  CHECK(r.h0.entries() == h.entries());
}

TEST_CASE("refinement errors") {
  auto g = test::graph(test::k2);
  FiniteSetFunction h(2, {{{}, 0}, {{0}, 0}, {{1}, 0}});
  bool thrown = false;
  try {
    refine_to_injective(g, h, 1);
  } catch (const Error& e) {
    thrown = true;
    CHECK(e.code() == ErrorCode::NotSparseDistribution);
    CHECK(e.witness() == VertexSet{0});
  }
  CHECK(thrown);
  CHECK_ERROR_CODE(refine_to_injective(g, h, 0), ErrorCode::InvalidArgument);
}

TEST_CASE("verify encoding") {
  FiniteSetFunction h(2, {{{0}, 0}, {{1}, 0}});
  std::vector<std::optional<VertexId>> gmap{0, 0};
  CHECK(verify_encoding(h, FiniteSetFunction(2, {{{0}, 0}, {{1}, 1}}), gmap));
  CHECK_FALSE(verify_encoding(h, FiniteSetFunction(2, {{{0}, 0}, {{1}, 0}}), gmap));
  CHECK_FALSE(verify_encoding(h, FiniteSetFunction(2, {{{0}, 0}}), gmap));
}

TEST_CASE("set function format") {
  auto h = test::hg(test::path3);
  auto fn = parse_set_function(h, "a,c -> a\n -> b\n# note\nb -> b\n");
  CHECK(fn.size() == 3);
  CHECK(fn.find({}) == 1);
  CHECK(format_set_function(h, fn) == "a,c -> a\n-> b\nb -> b\n");
  CHECK(parse_set_function(h, format_set_function(h, fn)).entries() == fn.entries());
  CHECK_ERROR_CODE(parse_set_function(h, "a -> a\na -> b\n"), ErrorCode::DuplicateSet);
  CHECK_ERROR_CODE(parse_set_function(h, "a -> z\n"), ErrorCode::UndeclaredVertex);
  CHECK_ERROR_CODE(parse_set_function(h, "a b\n"), ErrorCode::Syntax);
}
