#include "helpers.hpp"

#include "sparsehg/generators.hpp"
#include "sparsehg/suite.hpp"

using namespace sparsehg;

TEST_CASE("generators are deterministic") {
  gen::Rng a(42), b(42);
  CHECK(serialize_hypergraph(gen::random_hypergraph(a, 8, 10, 3)) ==
        serialize_hypergraph(gen::random_hypergraph(b, 8, 10, 3)));
  gen::Rng c(3);
  auto h = gen::random_connected_hypergraph(c, 12, 4, 3);
  CHECK(connected_components(h).size() == 1);
  auto grid = gen::grid_graph(3, 4);
  CHECK(grid.num_edges() == 17);
  CHECK(grid.max_degree() == 4);
}

TEST_CASE("suite reports") {
  auto r = run_suite("oracle", 7, 10);
  CHECK(r.properties.size() == suite_properties("oracle").size());
  for (const auto& p : r.properties) CHECK_MESSAGE(p.ok(), p.name);
  CHECK(format_report(r) == format_report(run_suite("oracle", 7, 10)));
  CHECK(format_report(r).rfind("suite oracle seed 7\nPASS sparsity-oracle", 0) == 0);

  auto empty = run_suite("pipeline", 1, 0);
  CHECK(empty.properties.empty());
  CHECK(format_report(empty) == "suite pipeline seed 1\n");
  CHECK_ERROR_CODE(run_suite("nope", 1), ErrorCode::InvalidArgument);
}

TEST_CASE("pipeline encodings verify") {
  auto r = run_suite("pipeline", 1, 20);
  REQUIRE(r.find("encoding"));
  CHECK(r.find("encoding")->ok());
}
