#pragma once

// Integral s-t maximum flow by shortest augmenting paths (Edmonds-Karp).
// Internal to the library: sparsity decisions and δ-flows both reduce to it.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace sparsehg::detail {

class FlowNetwork {
 public:
  struct Arc {
    std::size_t to;
    std::size_t rev;  // index of the reverse arc in adj_[to]
    std::int64_t cap;
    std::int64_t flow;
  };

  explicit FlowNetwork(std::size_t n) : adj_(n) {}

  std::size_t size() const noexcept { return adj_.size(); }

  /// Adds arc from -> to with capacity `cap` and a zero-capacity reverse
  /// arc. Returns a handle usable with `flow_on`.
  std::pair<std::size_t, std::size_t> add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back({to, adj_[to].size(), cap, 0});
    adj_[to].push_back({from, adj_[from].size() - 1, 0, 0});
    sorted_ = false;
    return {from, adj_[from].size() - 1};
  }

  /// Breadth-first augmentation. Neighbours are scanned in ascending node
  /// order, so the result depends only on the network, not insertion order.
  std::int64_t max_flow(std::size_t s, std::size_t t) {
    prepare();
    std::int64_t total = 0;
    std::vector<std::pair<std::size_t, std::size_t>> parent(size());
    for (;;) {
      std::vector<char> seen(size(), 0);
      std::deque<std::size_t> queue{s};
      seen[s] = 1;
      while (!queue.empty() && !seen[t]) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t i : order_[u]) {
          const Arc& a = adj_[u][i];
          if (seen[a.to] || a.cap - a.flow <= 0) continue;
          seen[a.to] = 1;
          parent[a.to] = {u, i};
          queue.push_back(a.to);
        }
      }
      if (!seen[t]) break;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t v = t; v != s; v = parent[v].first) {
        const Arc& a = adj_[parent[v].first][parent[v].second];
        push = std::min(push, a.cap - a.flow);
      }
      for (std::size_t v = t; v != s; v = parent[v].first) {
        Arc& a = adj_[parent[v].first][parent[v].second];
        a.flow += push;
        adj_[a.to][a.rev].flow -= push;
      }
      total += push;
    }
    return total;
  }

  /// Nodes reachable from `s` in the residual network (source side of a
  /// minimum cut once max_flow has run).
  std::vector<char> residual_reachable(std::size_t s) {
    prepare();
    std::vector<char> seen(size(), 0);
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& a : adj_[u]) {
        if (seen[a.to] || a.cap - a.flow <= 0) continue;
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
    }
    return seen;
  }

  std::int64_t flow_on(std::pair<std::size_t, std::size_t> handle) const {
    return adj_[handle.first][handle.second].flow;
  }

 private:
  void prepare() {
    if (sorted_) return;
    order_.assign(size(), {});
    for (std::size_t u = 0; u < size(); ++u) {
      auto& ord = order_[u];
      ord.resize(adj_[u].size());
      for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
      std::stable_sort(ord.begin(), ord.end(),
                       [&](std::size_t a, std::size_t b) { return adj_[u][a].to < adj_[u][b].to; });
    }
    sorted_ = true;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::vector<std::size_t>> order_;
  bool sorted_ = false;
};

}  // namespace sparsehg::detail
