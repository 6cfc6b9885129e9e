#include "sparsehg/encoding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "sparsehg/spanning.hpp"

namespace sparsehg {

bool LexContext::tree_leq(VertexId u, VertexId v) const {
  for (std::optional<VertexId> x = v; x; x = parent[*x])
    if (*x == u) return true;
  return false;
}

LexContext spanning_forest(const UndirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  LexContext ctx;
  ctx.parent.assign(n, std::nullopt);
  ctx.children.assign(n, {});
  ctx.root_of.assign(n, 0);
  ctx.address.assign(n, {});
  std::vector<char> seen(n, 0);
  std::vector<VertexId> bfs_order;
  for (VertexId r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ctx.roots.push_back(r);
    seen[r] = 1;
    ctx.root_of[r] = r;
    std::deque<VertexId> queue{r};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      bfs_order.push_back(u);
      for (VertexId w : g.neighbours(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        ctx.parent[w] = u;
        ctx.root_of[w] = r;
        ctx.forest_edges.push_back(*g.edge_between(u, w));
        queue.push_back(w);
      }
    }
  }
  std::sort(ctx.forest_edges.begin(), ctx.forest_edges.end());

  std::vector<DirectedGraph::Arc> arcs;
  for (VertexId v = 0; v < n; ++v)
    if (ctx.parent[v]) arcs.emplace_back(v, *ctx.parent[v]);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < n; ++v) labels.push_back(g.hypergraph().vertex_label(v));
  auto orders = neighbourhood_ordering(DirectedGraph(n, std::move(arcs), std::move(labels)));
  for (VertexId v = 0; v < n; ++v) ctx.children[v] = orders[v];

  for (VertexId v : bfs_order) {
    if (!ctx.parent[v]) continue;
    VertexId p = *ctx.parent[v];
    const auto& siblings = ctx.children[p];
    auto index = static_cast<std::size_t>(std::find(siblings.begin(), siblings.end(), v) - siblings.begin());
    ctx.address[v] = ctx.address[p];
    ctx.address[v].push_back(index);
  }
  return ctx;
}

std::strong_ordering vertex_lex_order(const LexContext& ctx, VertexId u, VertexId v) {
  if (auto c = ctx.root_of.at(u) <=> ctx.root_of.at(v); c != 0) return c;
  const auto& a = ctx.address[u];
  const auto& b = ctx.address[v];
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering set_order(const LexContext& ctx, const VertexSet& x, const VertexSet& y) {
  VertexSet diff;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
  if (diff.empty()) return std::strong_ordering::equal;
  VertexId least = *std::min_element(diff.begin(), diff.end(), [&](VertexId a, VertexId b) {
    return vertex_lex_order(ctx, a, b) < 0;
  });
  return std::binary_search(y.begin(), y.end(), least) ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
}

Refinement refine_to_injective(const UndirectedGraph& g, const FiniteSetFunction& h, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (h.num_vertices() != g.num_vertices())
    throw Error(ErrorCode::InvalidArgument, "set function and graph disagree on the vertex count");
  Refinement r;
  r.delta = induced_distribution(h, g);
  r.flow = compute_delta_flow(g, r.delta, k);
  r.gmap = function_from_flow(g, r.delta, r.flow);

  // Slot i of v is the i-th smallest member of gmap⁻¹(v).
  std::vector<std::vector<VertexId>> slots(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    if (r.gmap[u]) slots[*r.gmap[u]].push_back(u);

  auto ctx = spanning_forest(g);
  std::vector<std::vector<std::size_t>> by_image(g.num_vertices());
  for (std::size_t i = 0; i < h.size(); ++i) by_image[h.image(i)].push_back(i);
  std::vector<FiniteSetFunction::Entry> entries(h.size());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto& members = by_image[v];
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return set_order(ctx, h.set(a), h.set(b)) < 0; });
    if (members.size() != slots[v].size()) throw std::logic_error("preimage sizes disagree with the distribution");
    for (std::size_t rank = 0; rank < members.size(); ++rank)
      entries[members[rank]] = {h.set(members[rank]), slots[v][rank]};
  }
  r.h0 = FiniteSetFunction(h.num_vertices(), std::move(entries));
  return r;
}

bool verify_encoding(const FiniteSetFunction& h, const FiniteSetFunction& h0,
                     const std::vector<std::optional<VertexId>>& gmap) {
  if (h.size() != h0.size()) return false;
  std::set<VertexId> images;
  for (const auto& [x, image] : h0.entries())
    if (!images.insert(image).second) return false;
  for (const auto& [x, image] : h.entries()) {
    std::size_t i = h0.find(x);
    if (i == h0.size()) return false;
    VertexId y = h0.image(i);
    if (y >= gmap.size() || !gmap[y] || *gmap[y] != image) return false;
  }
  return true;
}

std::string format_refinement(const Hypergraph& g, const Refinement& r) {
  std::string out = format_set_function(g, r.h0);
  for (VertexId v = 0; v < r.gmap.size(); ++v)
    if (r.gmap[v]) out += g.vertex_label(v) + " -> " + g.vertex_label(*r.gmap[v]) + "\n";
  return out;
}

}  // namespace sparsehg
