#include "helpers.hpp"

#include <algorithm>

#include "sparsehg/spanning.hpp"

using namespace sparsehg;
using test::hg;

namespace {

const char* long_path = "v a\nv b\nv c\nv d\ne ab a b\ne bc b c\ne cd c d\n";
const char* star = "v r\nv a\nv b\nv c\ne ra r a\ne rb r b\ne rc r c\n";
const char* hyperedge = "v a\nv b\nv c\ne e a b c\n";

VertexOrder divisibility(std::vector<std::uint32_t> carrier) {
  return {std::move(carrier), VertexOrder::Kind::Partial,
          [](std::uint32_t x, std::uint32_t y) { return y % x == 0; }};
}

}  // namespace

TEST_CASE("order checks") {
  CHECK(check_partial_order(divisibility({1, 2, 3, 4, 6})).empty());
  // 6 has two incomparable predecessors 2 and 3.
  CHECK_FALSE(check_tree_order(divisibility({1, 2, 3, 6})).empty());
  CHECK(check_tree_order(divisibility({1, 2, 4, 3})).empty());
  VertexOrder bad{{0, 1}, VertexOrder::Kind::Partial, [](std::uint32_t, std::uint32_t) { return true; }};
  CHECK_FALSE(check_partial_order(bad).empty());
  auto div = divisibility({1, 2, 4});
  CHECK(div.is_total_on({4, 1, 2}));
  CHECK(div.sorted({4, 1, 2}) == std::vector<std::uint32_t>{1, 2, 4});
}

TEST_CASE("hyperpaths") {
  auto h = hg("v u\nv x\nv v\nv w\ne e0 u x\ne e1 x v\ne uv u v\n");
  CHECK(find_hyperpath(h, 0, 2) == Hyperpath{2});
  auto p = hg("v u\nv x\nv v\ne e0 u x\ne e1 x v\n");
  CHECK(find_hyperpath(p, 0, 2) == Hyperpath{0, 1});
  CHECK(is_hyperpath(p, {0, 1}));
  CHECK_FALSE(is_hyperpath(p, {}));
  CHECK_ERROR_CODE(find_hyperpath(h, 0, 3), ErrorCode::NoHyperpath);
  CHECK(find_hyperpath_to_edge(p, 0, 1) == Hyperpath{0, 1});
}

TEST_CASE("priority tree from a single hyperpath") {
  auto h = hg(long_path);
  auto t = build_priority_tree(h, 0, {2});
  CHECK(t.nodes == VertexSet{0, 1, 2, 3});
  CHECK(t.edges == EdgeSet{0, 1, 2});
  CHECK(t.leaves == EdgeSet{2});
  CHECK(t.edge_classes[0] == EdgeSet{0, 1, 2});
  CHECK(t.vertex_classes[0] == t.nodes);
  CHECK(validate_priority_tree(h, t).empty());

  auto bs = branches(h, t);
  CHECK(bs == std::vector<Hyperpath>{{0}, {0, 1}, {0, 1, 2}});
  auto order = edge_order(h, t);
  CHECK(check_tree_order(order).empty());
  CHECK(order.sorted({2, 0, 1}) == std::vector<std::uint32_t>{0, 1, 2});

  auto classes = vertex_equiv(h, t);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members == t.nodes);
  CHECK(classes[0].leaf == 2);

  auto lin = priority_tree_linear_order(h, t);
  CHECK(lin.is_total_on(t.nodes));
  // η(c) = η(d) = [cd] ⊂ η(b) ⊂ η(a).
  CHECK(lin.sorted(t.nodes) == std::vector<std::uint32_t>{2, 3, 1, 0});
}

TEST_CASE("priority tree edge cases") {
  auto h = hg(star);
  auto one = build_priority_tree(h, 0, {0});
  CHECK(one.edges == EdgeSet{0});
  CHECK(one.edge_class(0) == std::optional<std::size_t>(0));
  CHECK(branches(h, one).size() == 1);
  CHECK(edge_order(h, one).carrier.size() == 1);
  CHECK(vertex_equiv(h, one).size() == 1);

  auto two = build_priority_tree(h, 0, {0, 1});
  CHECK(two.edge_class(1) == std::optional<std::size_t>(1));
  CHECK(two.vertex_class(2) == std::optional<std::size_t>(1));
  CHECK(two.leaves == EdgeSet{0, 1});
  CHECK(vertex_equiv(h, two).size() == 2);
  auto order = edge_order(h, two);
  CHECK_FALSE(order.comparable(0, 1));

  auto three = build_priority_tree(h, 0, {0, 1, 2});
  CHECK(three.edge_class(2) == std::optional<std::size_t>(1));
  CHECK(validate_priority_tree(h, three).empty());
  // With one class the second edge meets P_0 at the root.
  CHECK_ERROR_CODE(build_priority_tree(h, 0, {0, 1}, 1), ErrorCode::ClassOverflow);
  CHECK_ERROR_CODE(build_priority_tree(hg("v r\nv a\nv b\ne x r a\ne y b\n"), 0, {1}),
                   ErrorCode::Disconnected);
}

TEST_CASE("DFST of a path") {
  auto h = hg(test::path3);
  auto t = build_dfst(h, 0);
  CHECK(validate_dfst(h, t).empty());
  CHECK(t.tree_leq(0, 1));
  CHECK(t.tree_leq(1, 2));
  CHECK_FALSE(t.tree_leq(2, 1));
  CHECK(t.node(1).attach == EdgeSet{0});
  CHECK(t.node(2).attach == EdgeSet{1});
  CHECK(t.aux(1) == VertexSet{1});
  CHECK(auxiliary_nodes(t, 2) == VertexSet{2});
  CHECK(t.node(0).type == NodeType{});
  CHECK(format_node_type(t.node(0).type) == "root0");

  auto d = dfst_orientation(h);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
}

TEST_CASE("DFST of a single hyperedge") {
  auto h = hg(hyperedge);
  auto t = build_dfst(h, 0);
  CHECK(validate_dfst(h, t).empty());
  CHECK(t.nodes().size() == 2);
  CHECK(t.is_node(1));
  CHECK_FALSE(t.is_node(2));
  CHECK(t.aux(1) == VertexSet{1, 2});
  CHECK(t.owner(2) == std::optional<VertexId>(1));
  CHECK_ERROR_CODE(t.aux(2), ErrorCode::NotATreeNode);
  CHECK(dfst_orientation(h)[0] == 0);
  auto orders = edge_ordering(h);
  REQUIRE(orders.size() == 1);
  CHECK(orders[0].front() == 0);
  CHECK(orders[0].size() == 3);
}

TEST_CASE("DFST edge cases") {
  auto single = Hypergraph(1);
  auto t = build_dfst(single, 0);
  CHECK(t.nodes().size() == 1);
  CHECK(t.aux(0) == VertexSet{0});
  CHECK(t.node(0).attach.empty());
  CHECK_ERROR_CODE(build_dfst(hg("v a\nv b\n"), 0), ErrorCode::Disconnected);
}

TEST_CASE("border sets") {
  auto h = hg(long_path);
  auto t = build_dfst(h, 0);
  auto v = b_set(t, {2});
  CHECK(v.nodes == VertexSet{2});
  CHECK(v.beta == std::optional<VertexId>(2));
  auto e = b_set(t, {1, 2});
  CHECK(e.nodes == VertexSet{1, 2});
  CHECK(e.beta == std::optional<VertexId>(2));
  auto none = b_set(t, {});
  CHECK(none.nodes.empty());
  CHECK_FALSE(none.beta);
}

TEST_CASE("DFST violations") {
  auto h = hg(hyperedge);
  using K = NodeType::Kind;
  DepthFirstSpanningTree overlap(h, {{0, {}, {}, {}}, {1, 0, {K::Succ, 0}, {0}}, {2, 1, {K::Succ, 0}, {0}}});
  auto v = validate_dfst(h, overlap);
  CHECK(std::any_of(v.begin(), v.end(), [](auto& s) { return s.rfind("AuxOverlap", 0) == 0; }));

  auto p = hg("v a\nv b\nv c\ne ab a b\ne s c\n");
  DepthFirstSpanningTree empty(p, {{0, {}, {}, {}}, {1, 0, {K::Succ, 0}, {0}}});
  auto w = validate_dfst(p, empty);
  CHECK(std::any_of(w.begin(), w.end(), [](auto& s) { return s.rfind("EmptyBorder", 0) == 0; }));

  CHECK_ERROR_CODE(DepthFirstSpanningTree(p, {{0, {}, {}, {}}, {1, 1, {K::Succ, 0}, {0}}}),
                   ErrorCode::MalformedTree);
}

TEST_CASE("aux orders") {
  auto h = hg(hyperedge);
  auto t = build_dfst(h, 0);
  auto pre = aux_preorder(t, h);
  CHECK(pre.leq(1, 2));
  CHECK(pre.leq(2, 1));
  CHECK(pre.leq(0, 0));
  auto lin = aux_order(t, h);
  CHECK(lin.less(0, 1));
  CHECK(lin.less(1, 2));
  CHECK_FALSE(lin.less(1, 1));
  CHECK(check_partial_order(lin).empty());
}

TEST_CASE("edge and neighbourhood orderings") {
  auto h = hg(test::k4);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto order = edge_ordering(h)[e];
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<VertexId>(h.edge(e).begin(), h.edge(e).end()));
  }
  DirectedGraph g(4, {{0, 2}, {1, 2}, {0, 3}});
  auto n = neighbourhood_ordering(g);
  CHECK(n[0].empty());
  CHECK(n[3] == std::vector<VertexId>{0});
  CHECK(n[2].size() == 2);
}

TEST_CASE("formats") {
  auto h = hg(test::path3);
  CHECK(format_dfst(h, build_dfst(h, 0)) ==
        "a parent=- type=root0 F= A=a\n"
        "b parent=a type=succ_0 F=ab A=b\n"
        "c parent=b type=succ_1 F=bc A=c\n");
  auto s = hg(star);
  CHECK(format_priority_tree(s, build_priority_tree(s, 0, {0, 1})) ==
        "class 0 leaf=ra F=ra P=r,a\nclass 1 leaf=rb F=rb P=b\norder r a b\n");
}
