#include "sparsehg/flows.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "maxflow.hpp"

namespace sparsehg {

// Distribution ---------------------------------------------------------------

Distribution::Distribution(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (auto x : values_)
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "distribution values must be nonnegative");
}

void Distribution::set(VertexId v, std::int64_t value) {
  if (value < 0) throw Error(ErrorCode::InvalidArgument, "distribution values must be nonnegative");
  values_.at(v) = value;
}

std::int64_t Distribution::total() const {
  std::int64_t s = 0;
  for (auto x : values_) s += x;
  return s;
}

std::int64_t Distribution::sum(const VertexSet& x) const {
  std::int64_t s = 0;
  for (VertexId v : x) s += values_.at(v);
  return s;
}

std::int64_t Distribution::max() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

// Flow -----------------------------------------------------------------------

std::int64_t Flow::operator()(VertexId u, VertexId v) const {
  if (u == v) return 0;
  auto it = values_.find({std::min(u, v), std::max(u, v)});
  if (it == values_.end()) return 0;
  return u < v ? it->second : -it->second;
}

void Flow::set(VertexId u, VertexId v, std::int64_t value) {
  if (u >= n_ || v >= n_) throw Error(ErrorCode::UnknownVertex, "flow on unknown vertex");
  if (u == v) {
    if (value != 0) throw Error(ErrorCode::InvalidArgument, "flow on a loop must be zero");
    return;
  }
  if (u > v) {
    std::swap(u, v);
    value = -value;
  }
  if (value == 0)
    values_.erase({u, v});
  else
    values_[{u, v}] = value;
}

bool Flow::supported_by(const UndirectedGraph& g) const {
  if (n_ != g.num_vertices()) return false;
  return std::all_of(values_.begin(), values_.end(),
                     [&](const auto& kv) { return g.edge_between(kv.first.first, kv.first.second).has_value(); });
}

std::vector<std::size_t> PathFamily::start_counts(std::size_t n) const {
  std::vector<std::size_t> counts(n, 0);
  for (const auto& p : paths) ++counts.at(p.front());
  return counts;
}

std::vector<std::size_t> PathFamily::end_counts(std::size_t n) const {
  std::vector<std::size_t> counts(n, 0);
  for (const auto& p : paths) ++counts.at(p.back());
  return counts;
}

// Borders and sparsity -------------------------------------------------------

EdgeSet border(const UndirectedGraph& g, const VertexSet& z) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : z) in.at(v) = 1;
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (in[u] != in[v]) out.push_back(e);
  }
  return out;
}

Distribution induced_distribution(const FiniteSetFunction& h, const UndirectedGraph& g) {
  Distribution d(g.num_vertices());
  for (const auto& [x, image] : h.entries()) {
    if (image >= g.num_vertices()) throw Error(ErrorCode::UnknownVertex, "image outside the graph");
    d.set(image, d[image] + 1);
  }
  return d;
}

namespace {

bool violates(const UndirectedGraph& g, const Distribution& d, std::size_t k, const VertexSet& z) {
  auto b = static_cast<std::int64_t>(border(g, z).size());
  return d.sum(z) > static_cast<std::int64_t>(z.size()) + static_cast<std::int64_t>(k) * b;
}

// Network of the δ-flow construction: g with both directions at capacity k,
// source s -> v at max(0, δ(v) - 1), v -> sink t at 1 iff δ(v) = 0.
struct DeltaNetwork {
  detail::FlowNetwork net;
  std::size_t source, sink;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> edge_arcs;
  std::int64_t demand = 0;  ///< Σ max(0, δ(v) - 1)

  DeltaNetwork(const UndirectedGraph& g, const Distribution& d, std::size_t k)
      : net(g.num_vertices() + 2), source(g.num_vertices()), sink(g.num_vertices() + 1) {
    if (d.size() != g.num_vertices())
      throw Error(ErrorCode::InvalidArgument, "distribution size does not match the graph");
    const auto cap = static_cast<std::int64_t>(k);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.endpoints(e);
      edge_arcs.emplace_back(net.add_arc(u, v, cap), net.add_arc(v, u, cap));
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::int64_t supply = std::max<std::int64_t>(0, d[v] - 1);
      demand += supply;
      if (supply > 0) net.add_arc(source, v, supply);
      if (d[v] == 0) net.add_arc(v, sink, 1);
    }
  }

  bool saturates() { return net.max_flow(source, sink) == demand; }

  VertexSet cut_side() {
    auto side = net.residual_reachable(source);
    VertexSet z;
    for (VertexId v = 0; v < source; ++v)
      if (side[v]) z.push_back(v);
    return z;
  }
};

}  // namespace

DistributionSparsity is_k_sparse_distribution_bruteforce(const UndirectedGraph& g,
                                                         const Distribution& d, std::size_t k,
                                                         std::size_t cap) {
  const std::size_t n = g.num_vertices();
  if (n > cap || n > 62)
    throw Error(ErrorCode::CapExceeded, "brute force limited to " + std::to_string(std::min<std::size_t>(cap, 62)) +
                                            " vertices, got " + std::to_string(n));
  const auto kk = static_cast<std::int64_t>(k);
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    std::int64_t demand = 0, size = 0, crossing = 0;
    for (VertexId v = 0; v < n; ++v)
      if (x >> v & 1) {
        demand += d[v];
        ++size;
      }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = g.endpoints(e);
      if ((x >> u & 1) != (x >> v & 1)) ++crossing;
    }
    if (demand > size + kk * crossing) {
      VertexSet z;
      for (VertexId v = 0; v < n; ++v)
        if (x >> v & 1) z.push_back(v);
      return {false, std::move(z)};
    }
  }
  return {true, std::nullopt};
}

DistributionSparsity is_k_sparse_distribution(const UndirectedGraph& g, const Distribution& d,
                                              std::size_t k) {
  DeltaNetwork net(g, d, k);
  if (net.saturates()) return {true, std::nullopt};
  VertexSet z = net.cut_side();
  if (!violates(g, d, k, z)) throw std::logic_error("min-cut set does not violate sparsity");
  return {false, std::move(z)};
}

Flow compute_delta_flow(const UndirectedGraph& g, const Distribution& d, std::size_t k) {
  DeltaNetwork net(g, d, k);
  if (!net.saturates()) {
    VertexSet z = net.cut_side();
    if (!violates(g, d, k, z)) throw std::logic_error("min-cut set does not violate sparsity");
    throw Error(ErrorCode::NotSparseDistribution,
                "distribution is not " + std::to_string(k) + "-sparse", std::move(z));
  }
  Flow f(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    const auto& [forward, backward] = net.edge_arcs[e];
    f.set(u, v, net.net.flow_on(forward) - net.net.flow_on(backward));
  }
  return f;
}

// Flow analysis --------------------------------------------------------------

std::vector<std::int64_t> defect(const Flow& f) {
  std::vector<std::int64_t> d(f.num_vertices(), 0);
  for (const auto& [uv, value] : f.entries()) {
    d[uv.first] += value;
    d[uv.second] -= value;
  }
  return d;
}

bool check_delta_flow(const Flow& f, const Distribution& d) {
  if (d.size() != f.num_vertices()) return false;
  auto df = defect(f);
  for (VertexId v = 0; v < df.size(); ++v)
    if (df[v] != d[v] - 1 && !(d[v] == 0 && df[v] == 0)) return false;
  return true;
}

FlowBounds bounds(const Flow& f) {
  FlowBounds b;
  std::vector<std::int64_t> load(f.num_vertices(), 0);
  for (const auto& [uv, value] : f.entries()) {
    std::int64_t a = value < 0 ? -value : value;
    b.edge_bound = std::max(b.edge_bound, a);
    load[uv.first] += a;
    load[uv.second] += a;
  }
  for (auto l : load) b.vertex_bound = std::max(b.vertex_bound, l);
  return b;
}

namespace {

std::vector<std::vector<VertexId>> positive_successors(const Flow& f) {
  std::vector<std::vector<VertexId>> succ(f.num_vertices());
  for (const auto& [uv, value] : f.entries()) {
    if (value > 0) succ[uv.first].push_back(uv.second);
    if (value < 0) succ[uv.second].push_back(uv.first);
  }
  for (auto& s : succ) std::sort(s.begin(), s.end());
  return succ;
}

}  // namespace

std::optional<std::vector<VertexId>> find_positive_cycle(const Flow& f) {
  const auto succ = positive_successors(f);
  const std::size_t n = f.num_vertices();
  // 0 = unvisited, 1 = on the current path, 2 = finished
  std::vector<char> state(n, 0);
  std::vector<std::size_t> next_index(n, 0);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    stack.push_back(root);
    state[root] = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      if (next_index[u] == succ[u].size()) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      VertexId w = succ[u][next_index[u]++];
      if (state[w] == 1) {
        auto from = std::find(stack.begin(), stack.end(), w);
        return std::vector<VertexId>(from, stack.end());
      }
      if (state[w] == 0) {
        state[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::nullopt;
}

Flow cancel_cycles(Flow f) {
  while (auto cycle = find_positive_cycle(f)) {
    const auto& c = *cycle;
    std::int64_t amount = f(c.back(), c.front());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) amount = std::min(amount, f(c[i], c[i + 1]));
    for (std::size_t i = 0; i < c.size(); ++i) f.add(c[i], c[(i + 1) % c.size()], -amount);
  }
  return f;
}

PathFamily decompose_flow_paths(const UndirectedGraph& g, const Flow& f, const Distribution& d) {
  const std::size_t n = g.num_vertices();
  if (!f.supported_by(g)) throw Error(ErrorCode::InvalidFlow, "flow is not supported by the graph");
  if (!check_delta_flow(f, d)) throw Error(ErrorCode::InvalidFlow, "flow is not a δ-flow");
  if (!is_acyclic(f)) throw Error(ErrorCode::InvalidFlow, "flow has a positive cycle");

  // α needs no table: pairs (v, i) are enumerated in order, so a path is
  // started at v exactly δ(v) times.
  std::vector<std::size_t> ending(n, 0);  // β
  PathFamily family;
  for (VertexId start = 0; start < n; ++start) {
    for (std::int64_t i = 0; i < d[start]; ++i) {
      std::vector<VertexId> path{start};
      while (ending[path.back()] != 0) {
        if (path.size() > n) throw std::logic_error("path growth did not terminate");
        VertexId u = path.back();
        std::optional<VertexId> next;
        for (VertexId w : g.neighbours(u)) {
          auto used = family.usage.find({u, w});
          std::int64_t mu = used == family.usage.end() ? 0 : static_cast<std::int64_t>(used->second);
          if (f(u, w) > mu) {
            next = w;
            break;
          }
        }
        if (!next) throw std::logic_error("no unused positive arc leaves a covered vertex");
        ++family.usage[{u, *next}];
        path.push_back(*next);
      }
      ++ending[path.back()];
      family.paths.push_back(std::move(path));
    }
  }
  return family;
}

bool validate_path_family(const UndirectedGraph& g, const PathFamily& p, std::size_t m) {
  std::vector<std::size_t> vertex_load(g.num_vertices(), 0);
  std::vector<std::size_t> edge_load(g.num_edges(), 0);
  for (const auto& path : p.paths) {
    std::vector<VertexId> vs(path);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (VertexId v : vs) {
      if (v >= g.num_vertices()) return false;
      ++vertex_load[v];
    }
    std::vector<EdgeId> es;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto e = g.edge_between(path[i], path[i + 1]);
      if (!e) return false;
      es.push_back(*e);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (EdgeId e : es) ++edge_load[e];
  }
  auto within = [m](std::size_t x) { return x <= m; };
  return std::all_of(vertex_load.begin(), vertex_load.end(), within) &&
         std::all_of(edge_load.begin(), edge_load.end(), within);
}

std::vector<std::optional<VertexId>> function_from_flow(const UndirectedGraph& g,
                                                        const Distribution& d, const Flow& f) {
  if (!f.supported_by(g)) throw Error(ErrorCode::InvalidFlow, "flow is not supported by the graph");
  if (!check_delta_flow(f, d)) throw Error(ErrorCode::InvalidFlow, "flow is not a δ-flow");
  // Zero-flow edges carry nothing: Flow stores only nonzero values, so
  // dropping them is implicit.
  Flow acyclic = cancel_cycles(f);
  PathFamily family = decompose_flow_paths(g, acyclic, d);
  std::vector<std::optional<VertexId>> map(g.num_vertices());
  for (const auto& path : family.paths) {
    if (map[path.back()]) throw std::logic_error("two paths end at the same vertex");
    map[path.back()] = path.front();
  }
  return map;
}

// Text formats ---------------------------------------------------------------

Distribution parse_distribution(const Hypergraph& h, std::istream& in) {
  Distribution d(h.num_vertices());
  std::vector<char> seen(h.num_vertices(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line.substr(0, line.find('#')));
    std::string label;
    if (!(ss >> label)) continue;
    long long count = 0;
    std::string extra;
    if (!(ss >> count) || (ss >> extra) || count < 0)
      throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": expected `<vertex> <count>`");
    auto v = h.find_vertex(label);
    if (!v)
      throw Error(ErrorCode::UndeclaredVertex,
                  "line " + std::to_string(line_no) + ": undeclared vertex '" + label + "'");
    if (seen[*v]) throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": vertex listed twice");
    seen[*v] = 1;
    d.set(*v, count);
  }
  return d;
}

Distribution parse_distribution(const Hypergraph& h, std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_distribution(h, in);
}

std::string format_flow(const Hypergraph& h, const Flow& f) {
  std::string out;
  for (const auto& [uv, value] : f.entries())
    out += h.vertex_label(uv.first) + " " + h.vertex_label(uv.second) + " " + std::to_string(value) + "\n";
  return out;
}

Flow parse_flow(const UndirectedGraph& g, std::istream& in) {
  const Hypergraph& h = g.hypergraph();
  Flow f(g.num_vertices());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line.substr(0, line.find('#')));
    std::string a, b;
    if (!(ss >> a)) continue;
    long long value = 0;
    std::string extra;
    if (!(ss >> b >> value) || (ss >> extra))
      throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": expected `<u> <v> <value>`");
    auto u = h.find_vertex(a);
    auto v = h.find_vertex(b);
    if (!u || !v)
      throw Error(ErrorCode::UndeclaredVertex, "line " + std::to_string(line_no) + ": undeclared vertex");
    if (!g.edge_between(*u, *v))
      throw Error(ErrorCode::InvalidFlow, "line " + std::to_string(line_no) + ": flow on a non-edge");
    f.set(*u, *v, value);
  }
  return f;
}

Flow parse_flow(const UndirectedGraph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_flow(g, in);
}

std::string format_path_family(const Hypergraph& h, const PathFamily& p) {
  std::string out;
  for (const auto& path : p.paths) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0) out += " ";
      out += h.vertex_label(path[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace sparsehg
