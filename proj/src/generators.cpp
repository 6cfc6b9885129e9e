#include "sparsehg/generators.hpp"

#include <algorithm>
#include <set>

namespace sparsehg::gen {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi <= lo) return lo;
  return lo + rng() % (hi - lo + 1);
}

namespace {

std::vector<VertexId> random_subset(Rng& rng, std::size_t n, std::size_t size,
                                    std::vector<VertexId> forced = {}) {
  std::set<VertexId> s(forced.begin(), forced.end());
  size = std::min(size, n);
  while (s.size() < size) s.insert(static_cast<VertexId>(uniform(rng, 0, n - 1)));
  return {s.begin(), s.end()};
}

}  // namespace

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t edges, std::size_t max_rank) {
  Hypergraph h(n);
  if (n == 0) return h;
  for (std::size_t i = 0; i < edges; ++i)
    h.add_edge(random_subset(rng, n, uniform(rng, 1, std::max<std::size_t>(max_rank, 1))));
  return h;
}

Hypergraph random_connected_hypergraph(Rng& rng, std::size_t n, std::size_t extra,
                                       std::size_t max_rank) {
  Hypergraph h(n);
  max_rank = std::max<std::size_t>(max_rank, 2);
  for (VertexId v = 1; v < n; ++v) {
    auto earlier = static_cast<VertexId>(uniform(rng, 0, v - 1));
    h.add_edge(random_subset(rng, n, uniform(rng, 2, max_rank), {earlier, v}));
  }
  for (std::size_t i = 0; i < extra && n >= 2; ++i)
    h.add_edge(random_subset(rng, n, uniform(rng, 2, max_rank)));
  return h;
}

UndirectedGraph random_bounded_degree_graph(Rng& rng, std::size_t n, std::size_t max_degree,
                                            std::size_t attempts) {
  std::vector<std::size_t> degree(n, 0);
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < attempts && n >= 2; ++i) {
    auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
    auto v = static_cast<VertexId>(uniform(rng, 0, n - 1));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (degree[u] >= max_degree || degree[v] >= max_degree || pairs.count({u, v})) continue;
    pairs.insert({u, v});
    ++degree[u];
    ++degree[v];
  }
  return UndirectedGraph::from_pairs(n, {pairs.begin(), pairs.end()});
}

UndirectedGraph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) pairs.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) pairs.emplace_back(id(r, c), id(r + 1, c));
    }
  return UndirectedGraph::from_pairs(rows * cols, pairs);
}

Distribution random_sparse_distribution(Rng& rng, const UndirectedGraph& g, std::size_t k,
                                        std::size_t attempts) {
  Distribution d(g.num_vertices());
  for (std::size_t i = 0; i < attempts && g.num_vertices() > 0; ++i) {
    auto v = static_cast<VertexId>(uniform(rng, 0, g.num_vertices() - 1));
    d.set(v, d[v] + 1);
    if (!is_k_sparse_distribution(g, d, k).is_sparse) d.set(v, d[v] - 1);
  }
  return d;
}

FiniteSetFunction random_set_function(Rng& rng, const UndirectedGraph& g, std::size_t k,
                                      std::size_t max_sets, std::size_t max_set_size) {
  const std::size_t n = g.num_vertices();
  std::vector<FiniteSetFunction::Entry> entries;
  if (n == 0) return FiniteSetFunction(0, {});
  std::set<VertexSet> used;
  Distribution d(n);
  for (std::size_t i = 0; i < max_sets; ++i) {
    VertexSet x = random_subset(rng, n, uniform(rng, 0, max_set_size));
    auto v = static_cast<VertexId>(uniform(rng, 0, n - 1));
    if (used.count(x)) continue;
    d.set(v, d[v] + 1);
    if (!is_k_sparse_distribution(g, d, k).is_sparse) {
      d.set(v, d[v] - 1);
      continue;
    }
    used.insert(x);
    entries.emplace_back(std::move(x), v);
  }
  return FiniteSetFunction(n, std::move(entries));
}

Flow add_random_circulations(Rng& rng, const UndirectedGraph& g, Flow base, std::size_t cycles,
                             std::int64_t max_value) {
  const std::size_t n = g.num_vertices();
  for (std::size_t c = 0; c < cycles && n > 0; ++c) {
    // Random walk until it revisits a vertex; the loop closed there is a cycle.
    auto start = static_cast<VertexId>(uniform(rng, 0, n - 1));
    std::vector<VertexId> walk{start};
    std::vector<std::size_t> position(n, n);
    position[start] = 0;
    for (std::size_t step = 0; step < 4 * n; ++step) {
      VertexId u = walk.back();
      auto nb = g.neighbours(u);
      if (nb.empty()) break;
      VertexId w = nb[uniform(rng, 0, nb.size() - 1)];
      if (walk.size() >= 2 && w == walk[walk.size() - 2] && nb.size() > 1) continue;
      if (position[w] != n) {
        std::vector<VertexId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position[w]), walk.end());
        if (cycle.size() >= 3) {
          auto amount = static_cast<std::int64_t>(uniform(rng, 1, static_cast<std::uint64_t>(std::max<std::int64_t>(max_value, 1))));
          for (std::size_t i = 0; i < cycle.size(); ++i)
            base.add(cycle[i], cycle[(i + 1) % cycle.size()], amount);
        }
        break;
      }
      position[w] = walk.size();
      walk.push_back(w);
    }
  }
  return base;
}

}  // namespace sparsehg::gen
