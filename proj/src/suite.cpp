#include "sparsehg/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "sparsehg/encoding.hpp"
#include "sparsehg/flows.hpp"
#include "sparsehg/generators.hpp"
#include "sparsehg/sparsity.hpp"
#include "sparsehg/spanning.hpp"

namespace sparsehg {

const PropertyResult* SuiteReport::find(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

namespace {

constexpr std::size_t kMaxCounterexamples = 3;

gen::Rng case_rng(std::uint64_t seed, std::uint64_t salt, std::size_t i) {
  return gen::Rng(seed * 0x9E3779B97F4A7C15ULL + salt * 0xBF58476D1CE4E5B9ULL + i);
}

std::string indent(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += "    " + line + "\n";
  return out;
}

std::string set_text(const VertexSet& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + "}";
}

// One case outcome: empty string = pass, otherwise the failure description.
using CaseFn = std::function<std::string(std::size_t)>;

PropertyResult run_property(const std::string& name, std::size_t cases, const CaseFn& fn) {
  PropertyResult r;
  r.name = name;
  for (std::size_t i = 0; i < cases; ++i) {
    std::string failure;
    try {
      failure = fn(i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what() + "\n";
    }
    ++r.total;
    if (failure.empty()) {
      ++r.passed;
    } else if (r.counterexamples.size() < kMaxCounterexamples) {
      r.counterexamples.push_back("case " + std::to_string(i) + ": " + failure);
    }
  }
  return r;
}

bool strictly_decreasing(const std::vector<std::size_t>& xs) {
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (xs[i + 1] >= xs[i]) return false;
  return true;
}

// Instances shared by the sparsity oracle and the orientation checks.
struct SparsityCase {
  Hypergraph h;
  std::size_t k;
};

SparsityCase sparsity_case(std::uint64_t seed, std::size_t i) {
  auto rng = case_rng(seed, 1, i / 3);
  std::size_t n = gen::uniform(rng, 1, 12);
  auto h = gen::random_hypergraph(rng, n, gen::uniform(rng, 0, 3 * n), gen::uniform(rng, 1, 4));
  return {std::move(h), i % 3 + 1};
}

std::string check_sparsity_oracle(const SparsityCase& c) {
  auto fast = is_k_sparse(c.h, c.k);
  auto slow = is_k_sparse_bruteforce(c.h, c.k);
  std::string dump = "k=" + std::to_string(c.k) + "\n" + indent(serialize_hypergraph(c.h));
  if (fast.is_sparse != slow.is_sparse) return "flow and brute force disagree, " + dump;
  if (fast.witness) {
    const auto& x = *fast.witness;
    if (count_induced_edges(c.h, x) <= c.k * x.size()) return "witness " + set_text(x) + " is not violating, " + dump;
  }
  return {};
}

std::string check_distribution_oracle(std::uint64_t seed, std::size_t i) {
  auto rng = case_rng(seed, 2, i);
  std::size_t n = gen::uniform(rng, 1, 12);
  std::size_t k = i % 3 + 1;
  auto g = gen::random_bounded_degree_graph(rng, n, gen::uniform(rng, 1, 4), 2 * n);
  Distribution d(n);
  for (VertexId v = 0; v < n; ++v) d.set(v, static_cast<std::int64_t>(gen::uniform(rng, 0, k + 2)));
  auto fast = is_k_sparse_distribution(g, d, k);
  auto slow = is_k_sparse_distribution_bruteforce(g, d, k);
  if (fast.is_sparse == slow.is_sparse) return {};
  std::string values;
  for (auto x : d.values()) values += " " + std::to_string(x);
  return "flow and brute force disagree, k=" + std::to_string(k) + " delta" + values + "\n" +
         indent(serialize_hypergraph(g.hypergraph()));
}

std::string check_bounded(const SparsityCase& c) {
  if (!is_k_sparse(c.h, c.k).is_sparse) return {};
  BoundedOrientationTrace trace;
  auto o = bounded_orientation(c.h, c.k, &trace);
  auto counts = preimage_counts(o);
  std::string dump = "k=" + std::to_string(c.k) + "\n" + indent(serialize_hypergraph(c.h));
  if (!counts.empty() && *std::max_element(counts.begin(), counts.end()) > c.k)
    return "preimage exceeds k, " + dump;
  if (!strictly_decreasing(trace.weights)) return "weight did not strictly decrease, " + dump;
  return {};
}

std::string check_antisymmetric(const SparsityCase& c) {
  const std::size_t m = c.h.rank();
  if (m < 2 || !is_k_sparse(c.h, c.k).is_sparse) return {};
  AntisymmetricTrace trace;
  auto o = antisymmetric_orientation(c.h, c.k, &trace);
  auto counts = preimage_counts(o);
  std::string dump = "k=" + std::to_string(c.k) + "\n" + indent(serialize_hypergraph(c.h));
  if (!counts.empty() && *std::max_element(counts.begin(), counts.end()) > m * c.k * c.k)
    return "preimage exceeds m*k^2, " + dump;
  if (!directed_quotient(c.h, o).is_antisymmetric()) return "quotient has opposite arcs, " + dump;
  if (!strictly_decreasing(trace.bad_counts)) return "bad count did not strictly decrease, " + dump;
  return {};
}

std::string check_degree_lemma(std::uint64_t seed, std::size_t i) {
  auto rng = case_rng(seed, 3, i);
  std::size_t k = i % 3 + 1;
  std::size_t n = gen::uniform(rng, 1, 40);
  auto g = gen::random_bounded_degree_graph(rng, n, 2 * k, 4 * k * n);
  if (g.max_degree() > 2 * k) return "generator exceeded the degree bound";
  if (is_k_sparse(g.hypergraph(), k).is_sparse) return {};
  return "not " + std::to_string(k) + "-sparse\n" + indent(serialize_hypergraph(g.hypergraph()));
}

std::string check_grid(std::size_t i) {
  std::size_t rows = i / 5 + 1, cols = i % 5 + 1;
  auto g = gen::grid_graph(rows, cols);
  if (is_k_sparse_bruteforce(g.hypergraph(), 3).is_sparse) return {};
  return std::to_string(rows) + "x" + std::to_string(cols) + " grid is not 3-sparse";
}

std::string check_dfst(std::uint64_t seed, std::size_t i) {
  auto rng = case_rng(seed, 4, i);
  std::size_t n = gen::uniform(rng, 1, 30);
  auto h = gen::random_connected_hypergraph(rng, n, gen::uniform(rng, 0, n), gen::uniform(rng, 2, 4));
  std::string dump = indent(serialize_hypergraph(h));
  auto t = build_dfst(h, 0);
  auto violations = validate_dfst(h, t);
  if (!violations.empty()) return violations.front() + "\n" + dump;
  std::vector<char> covered(n, 0);
  for (const auto& nd : t.nodes())
    for (VertexId x : t.aux(nd.vertex)) covered[x] = 1;
  if (std::count(covered.begin(), covered.end(), 0) > 0) return "auxiliary sets do not cover V\n" + dump;
  auto order = aux_order(t, h);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    if (!order.is_total_on({vs.begin(), vs.end()})) return "edge " + h.edge_label(e) + " not linearly ordered\n" + dump;
  }
  auto o = dfst_orientation(h);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (!h.contains(e, o[e])) return "orientation leaves edge " + h.edge_label(e) + "\n" + dump;
  return {};
}

std::string check_priority_tree(std::uint64_t seed, std::size_t i) {
  auto rng = case_rng(seed, 5, i);
  std::size_t n = gen::uniform(rng, 2, 12);
  auto h = gen::random_connected_hypergraph(rng, n, gen::uniform(rng, 0, n), gen::uniform(rng, 2, 4));
  auto root = static_cast<VertexId>(gen::uniform(rng, 0, n - 1));
  EdgeSet l0;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (gen::uniform(rng, 0, 2) == 0) l0.push_back(e);
  if (l0.empty()) l0.push_back(static_cast<EdgeId>(gen::uniform(rng, 0, h.num_edges() - 1)));
  std::string dump = "root " + h.vertex_label(root) + " L0 " + set_text(l0) + "\n" + indent(serialize_hypergraph(h));

  auto t = build_priority_tree(h, root, l0);
  for (EdgeId e : l0)
    for (VertexId x : h.edge(e))
      if (!std::binary_search(t.nodes.begin(), t.nodes.end(), x)) return "union of L0 not inside T, " + dump;
  if (!std::includes(l0.begin(), l0.end(), t.leaves.begin(), t.leaves.end())) return "L not inside L0, " + dump;
  auto structural = validate_priority_tree(h, t);
  if (!structural.empty()) return structural.front() + ", " + dump;
  auto tree_order = check_tree_order(edge_order(h, t));
  if (!tree_order.empty()) return "edge order: " + tree_order.front() + ", " + dump;
  auto linear = priority_tree_linear_order(h, t);
  if (!linear.is_total_on(t.nodes) || !check_partial_order(linear).empty()) return "vertex order not linear, " + dump;
  return {};
}

// Instances shared by the flow properties.
struct FlowCase {
  UndirectedGraph g;
  Distribution d;
  std::size_t k;
};

FlowCase flow_case(std::uint64_t seed, std::size_t i) {
  auto rng = case_rng(seed, 6, i);
  std::size_t n = gen::uniform(rng, 1, 25);
  std::size_t k = gen::uniform(rng, 1, 3);
  auto g = gen::random_bounded_degree_graph(rng, n, gen::uniform(rng, 1, 5), 3 * n);
  auto d = gen::random_sparse_distribution(rng, g, k, 2 * n);
  return {std::move(g), std::move(d), k};
}

std::string flow_dump(const FlowCase& c) {
  std::string values;
  for (auto x : c.d.values()) values += " " + std::to_string(x);
  return "k=" + std::to_string(c.k) + " delta" + values + "\n" + indent(serialize_hypergraph(c.g.hypergraph()));
}

std::string check_delta_flow_case(const FlowCase& c) {
  auto f = compute_delta_flow(c.g, c.d, c.k);
  auto b = bounds(f);
  if (!f.supported_by(c.g)) return "flow leaves the graph, " + flow_dump(c);
  if (!check_delta_flow(f, c.d)) return "not a delta-flow, " + flow_dump(c);
  if (b.edge_bound > static_cast<std::int64_t>(c.k)) return "edge bound exceeds k, " + flow_dump(c);
  if (b.vertex_bound > static_cast<std::int64_t>(c.g.max_degree() * c.k)) return "vertex bound exceeds d*k, " + flow_dump(c);
  return {};
}

std::string check_cancelling(const UndirectedGraph& g, const Flow& f, const std::string& dump) {
  auto out = cancel_cycles(f);
  auto before = bounds(f), after = bounds(out);
  if (defect(out) != defect(f)) return "defect changed, " + dump;
  if (!is_acyclic(out)) return "positive cycle remains, " + dump;
  if (!out.supported_by(g)) return "support left the graph, " + dump;
  if (after.edge_bound > before.edge_bound || after.vertex_bound > before.vertex_bound) return "bounds increased, " + dump;
  return {};
}

std::string check_paths(const FlowCase& c) {
  auto f = cancel_cycles(compute_delta_flow(c.g, c.d, c.k));
  auto p = decompose_flow_paths(c.g, f, c.d);
  const std::size_t n = c.g.num_vertices();
  auto starts = p.start_counts(n), ends = p.end_counts(n);
  for (VertexId v = 0; v < n; ++v) {
    if (static_cast<std::int64_t>(starts[v]) != c.d[v]) return "start count differs from delta, " + flow_dump(c);
    if (ends[v] > 1) return "two paths end at one vertex, " + flow_dump(c);
  }
  std::map<std::pair<VertexId, VertexId>, std::size_t> used;
  for (const auto& path : p.paths)
    for (std::size_t i = 0; i + 1 < path.size(); ++i) ++used[{path[i], path[i + 1]}];
  if (used != std::map<std::pair<VertexId, VertexId>, std::size_t>(p.usage.begin(), p.usage.end()))
    return "usage counters disagree with the paths, " + flow_dump(c);
  for (const auto& [uv, count] : used)
    if (static_cast<std::int64_t>(count) > f(uv.first, uv.second)) return "edge used beyond its flow, " + flow_dump(c);
  return {};
}

std::string check_encoding(std::uint64_t seed, std::size_t i) {
  auto rng = case_rng(seed, 7, i);
  std::size_t n = gen::uniform(rng, 1, 25);
  std::size_t k = gen::uniform(rng, 1, 3);
  auto g = gen::random_bounded_degree_graph(rng, n, gen::uniform(rng, 1, 5), 3 * n);
  auto h = gen::random_set_function(rng, g, k, gen::uniform(rng, 1, 60), 4);
  auto r = refine_to_injective(g, h, k);
  std::string dump = "k=" + std::to_string(k) + "\n" + indent(serialize_hypergraph(g.hypergraph())) +
                     indent(format_set_function(g.hypergraph(), h));
  if (!verify_encoding(h, r.h0, r.gmap)) return "encoding check failed, " + dump;
  std::vector<std::int64_t> pre(n, 0);
  for (auto u : r.gmap)
    if (u) ++pre[*u];
  if (pre != r.delta.values()) return "preimage sizes differ from delta, " + dump;
  return {};
}

std::size_t count_or(std::optional<std::size_t> cases, std::size_t fallback) {
  return cases ? *cases : fallback;
}

}  // namespace

std::vector<std::string> suite_properties(const std::string& name) {
  if (name == "oracle")
    return {"sparsity-oracle", "distribution-oracle", "bounded-orientation", "antisymmetric-orientation"};
  if (name == "lemmas") return {"degree-2k-sparse", "grid-3-sparse", "dfst-validity", "priority-tree"};
  if (name == "pipeline") return {"delta-flow", "cycle-cancelling", "path-decomposition", "encoding"};
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::optional<std::size_t> cases) {
  SuiteReport r;
  r.suite = name;
  r.seed = seed;
  suite_properties(name);
  if (cases && *cases == 0) return r;

  if (name == "oracle") {
    // Three k values per hypergraph: 200 hypergraphs by default.
    const std::size_t n = 3 * count_or(cases, 200);
    std::vector<SparsityCase> instances;
    for (std::size_t i = 0; i < n; ++i) instances.push_back(sparsity_case(seed, i));
    r.properties.push_back(run_property("sparsity-oracle", n, [&](std::size_t i) { return check_sparsity_oracle(instances[i]); }));
    r.properties.push_back(run_property("distribution-oracle", n, [&](std::size_t i) { return check_distribution_oracle(seed, i); }));
    r.properties.push_back(run_property("bounded-orientation", n, [&](std::size_t i) { return check_bounded(instances[i]); }));
    r.properties.push_back(run_property("antisymmetric-orientation", n, [&](std::size_t i) { return check_antisymmetric(instances[i]); }));
  } else if (name == "lemmas") {
    r.properties.push_back(run_property("degree-2k-sparse", count_or(cases, 100), [&](std::size_t i) { return check_degree_lemma(seed, i); }));
    r.properties.push_back(run_property("grid-3-sparse", 20, check_grid));
    r.properties.push_back(run_property("dfst-validity", count_or(cases, 100), [&](std::size_t i) { return check_dfst(seed, i); }));
    r.properties.push_back(run_property("priority-tree", count_or(cases, 100), [&](std::size_t i) { return check_priority_tree(seed, i); }));
  } else {
    const std::size_t n = count_or(cases, 200);
    std::vector<FlowCase> instances;
    for (std::size_t i = 0; i < n; ++i) instances.push_back(flow_case(seed, i));
    r.properties.push_back(run_property("delta-flow", n, [&](std::size_t i) { return check_delta_flow_case(instances[i]); }));
    const std::size_t adversarial = count_or(cases, 50);
    r.properties.push_back(run_property("cycle-cancelling", n + adversarial, [&](std::size_t i) {
      if (i < n) {
        const auto& c = instances[i];
        return check_cancelling(c.g, compute_delta_flow(c.g, c.d, c.k), flow_dump(c));
      }
      auto rng = case_rng(seed, 8, i - n);
      const auto& c = instances[(i - n) % n];
      Flow base = gen::uniform(rng, 0, 1) ? compute_delta_flow(c.g, c.d, c.k) : Flow(c.g.num_vertices());
      auto f = gen::add_random_circulations(rng, c.g, base, gen::uniform(rng, 1, 8), 4);
      return check_cancelling(c.g, f, flow_dump(c) + indent(format_flow(c.g.hypergraph(), f)));
    }));
    r.properties.push_back(run_property("path-decomposition", n, [&](std::size_t i) { return check_paths(instances[i]); }));
    r.properties.push_back(run_property("encoding", count_or(cases, 100), [&](std::size_t i) { return check_encoding(seed, i); }));
  }
  return r;
}

std::string format_report(const SuiteReport& r) {
  std::string out = "suite " + r.suite + " seed " + std::to_string(r.seed) + "\n";
  for (const auto& p : r.properties) {
    out += std::string(p.ok() ? "PASS " : "FAIL ") + p.name + " " + std::to_string(p.passed) + "/" +
           std::to_string(p.total) + "\n";
    for (const auto& c : p.counterexamples) out += indent(c);
  }
  return out;
}

}  // namespace sparsehg
