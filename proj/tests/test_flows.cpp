#include "helpers.hpp"

#include "sparsehg/flows.hpp"

using namespace sparsehg;

namespace {

Flow triangle_circulation() {
  Flow f(3);
  f.set(0, 1, 1);
  f.set(1, 2, 1);
  f.set(2, 0, 1);
  return f;
}

}  // namespace

TEST_CASE("flow antisymmetry") {
  Flow f(3);
  f.set(2, 0, 4);
  CHECK(f(2, 0) == 4);
  CHECK(f(0, 2) == -4);
  f.add(0, 2, 4);
  CHECK(f.is_zero());
  CHECK(f(1, 1) == 0);
}

TEST_CASE("border") {
  auto g = test::graph(test::path3);
  CHECK(border(g, {1}) == EdgeSet{0, 1});
  CHECK(border(g, {0, 1, 2}).empty());
  CHECK(border(g, {}).empty());
}

TEST_CASE("induced distribution") {
  auto g = test::graph(test::k2);
  FiniteSetFunction h(2, {{{0}, 0}, {{0, 1}, 0}});
  CHECK(induced_distribution(h, g).values() == std::vector<std::int64_t>{2, 0});
  CHECK(induced_distribution(FiniteSetFunction(2, {}), g).total() == 0);
  FiniteSetFunction inj(2, {{{0}, 0}, {{1}, 1}});
  CHECK(induced_distribution(inj, g).max() == 1);
}

TEST_CASE("distribution sparsity") {
  auto k2 = test::graph(test::k2);
  Distribution d({3, 0});
  auto brute = is_k_sparse_distribution_bruteforce(k2, d, 1);
  CHECK_FALSE(brute.is_sparse);
  CHECK(brute.witness == std::optional<VertexSet>(VertexSet{0}));
  auto fast = is_k_sparse_distribution(k2, d, 1);
  CHECK_FALSE(fast.is_sparse);
  CHECK(fast.witness == std::optional<VertexSet>(VertexSet{0}));

  auto path = test::graph(test::path3);
  CHECK(is_k_sparse_distribution(path, Distribution({2, 0, 0}), 1).is_sparse);
  CHECK(is_k_sparse_distribution_bruteforce(path, Distribution({2, 0, 0}), 1).is_sparse);
  CHECK(is_k_sparse_distribution(path, Distribution({1, 1, 1}), 0).is_sparse);
  CHECK(is_k_sparse_distribution(path, Distribution(3), 0).is_sparse);
  CHECK_ERROR_CODE(Distribution(std::vector<std::int64_t>{-1}), ErrorCode::InvalidArgument);
}

TEST_CASE("delta flows") {
  auto k2 = test::graph(test::k2);
  auto f = compute_delta_flow(k2, Distribution({2, 0}), 1);
  CHECK(f(0, 1) == 1);
  CHECK(defect(f) == std::vector<std::int64_t>{1, -1});
  CHECK(check_delta_flow(f, Distribution({2, 0})));

  auto path = test::graph(test::path3);
  CHECK(compute_delta_flow(path, Distribution(3), 1).is_zero());
  auto ones = compute_delta_flow(path, Distribution({1, 1, 1}), 1);
  CHECK(ones.is_zero());
  CHECK(check_delta_flow(ones, Distribution({1, 1, 1})));
  CHECK_FALSE(check_delta_flow(Flow(3), Distribution({2, 2, 2})));
  CHECK_ERROR_CODE(compute_delta_flow(k2, Distribution({3, 0}), 1), ErrorCode::NotSparseDistribution);
}

TEST_CASE("defect and bounds") {
  CHECK(defect(Flow(2)) == std::vector<std::int64_t>{0, 0});
  Flow unit(2);
  unit.set(0, 1, 1);
  CHECK(defect(unit) == std::vector<std::int64_t>{1, -1});
  CHECK(defect(triangle_circulation()) == std::vector<std::int64_t>{0, 0, 0});

  auto b0 = bounds(Flow(2));
  CHECK(b0.edge_bound == 0);
  CHECK(b0.vertex_bound == 0);
  auto b1 = bounds(unit);
  CHECK(b1.edge_bound == 1);
  CHECK(b1.vertex_bound == 1);
  auto b2 = bounds(triangle_circulation());
  CHECK(b2.edge_bound == 1);
  CHECK(b2.vertex_bound == 2);
}

TEST_CASE("cycle cancelling") {
  CHECK(cancel_cycles(Flow(3)).is_zero());
  CHECK(cancel_cycles(triangle_circulation()).is_zero());
  CHECK_FALSE(is_acyclic(triangle_circulation()));
  Flow unit(2);
  unit.set(0, 1, 1);
  CHECK(cancel_cycles(unit) == unit);
  CHECK(is_acyclic(unit));

  auto f = triangle_circulation();
  f.add(0, 1, 2);
  auto c = cancel_cycles(f);
  CHECK(is_acyclic(c));
  CHECK(defect(c) == defect(f));
}

TEST_CASE("path decomposition") {
  auto path = test::graph(test::path3);
  auto trivial = decompose_flow_paths(path, Flow(3), Distribution({1, 1, 1}));
  CHECK(trivial.paths == std::vector<std::vector<VertexId>>{{0}, {1}, {2}});
  CHECK(validate_path_family(path, trivial, 1));

  auto k2 = test::graph(test::k2);
  Flow unit(2);
  unit.set(0, 1, 1);
  auto p = decompose_flow_paths(k2, unit, Distribution({2, 0}));
  CHECK(p.paths == std::vector<std::vector<VertexId>>{{0}, {0, 1}});
  CHECK(p.start_counts(2) == std::vector<std::size_t>{2, 0});
  CHECK(p.end_counts(2) == std::vector<std::size_t>{1, 1});
  CHECK(decompose_flow_paths(path, Flow(3), Distribution(3)).paths.empty());

  CHECK_ERROR_CODE(decompose_flow_paths(path, Flow(3), Distribution({2, 0, 0})), ErrorCode::InvalidFlow);
  auto cyc = test::graph(test::triangle);
  CHECK_ERROR_CODE(decompose_flow_paths(cyc, triangle_circulation(), Distribution({1, 1, 1})),
                   ErrorCode::InvalidFlow);
}

TEST_CASE("path family validation") {
  auto k2 = test::graph(test::k2);
  PathFamily twice;
  twice.paths = {{0, 1}, {0, 1}};
  twice.usage = {{{0, 1}, 2}};
  CHECK_FALSE(validate_path_family(k2, twice, 1));
  CHECK(validate_path_family(k2, twice, 2));
  CHECK(validate_path_family(k2, PathFamily{}, 0));
}

TEST_CASE("function from flow") {
  auto path = test::graph(test::path3);
  auto id = function_from_flow(path, Distribution({1, 1, 1}), Flow(3));
  CHECK(id == std::vector<std::optional<VertexId>>{0, 1, 2});

  auto k2 = test::graph(test::k2);
  Flow unit(2);
  unit.set(0, 1, 1);
  auto g = function_from_flow(k2, Distribution({2, 0}), unit);
  CHECK(g == std::vector<std::optional<VertexId>>{0, 0});
  auto none = function_from_flow(k2, Distribution(2), Flow(2));
  CHECK_FALSE(none[0]);
  CHECK_FALSE(none[1]);
}

TEST_CASE("flow formats") {
  auto g = test::graph(test::path3);
  auto d = parse_distribution(g.hypergraph(), "a 2\n# c omitted\n");
  CHECK(d.values() == std::vector<std::int64_t>{2, 0, 0});
  auto f = compute_delta_flow(g, d, 1);
  auto text = format_flow(g.hypergraph(), f);
  CHECK(text == "a b 1\n");
  CHECK(parse_flow(g, text) == f);
  CHECK(parse_flow(g, "b a -1\n") == f);
  CHECK_ERROR_CODE(parse_flow(g, "a c 1\n"), ErrorCode::InvalidFlow);
  CHECK_ERROR_CODE(parse_distribution(g.hypergraph(), "z 1\n"), ErrorCode::UndeclaredVertex);
  auto p = decompose_flow_paths(g, f, d);
  CHECK(format_path_family(g.hypergraph(), p) == "a\na b\n");
}
