#include "sparsehg/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

#include "maxflow.hpp"

namespace sparsehg {

namespace {

std::string set_to_string(const Hypergraph& h, const VertexSet& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ",";
    out += h.vertex_label(x[i]);
  }
  return out + "}";
}

[[noreturn]] void throw_not_sparse(const Hypergraph& h, std::size_t k, const VertexSet& witness) {
  throw Error(ErrorCode::NotKSparse,
              "hypergraph is not " + std::to_string(k) + "-sparse: " +
                  std::to_string(count_induced_edges(h, witness)) + " edges inside " +
                  set_to_string(h, witness),
              witness);
}

void require_positive(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
}

}  // namespace

SparsityReport is_k_sparse_bruteforce(const Hypergraph& h, std::size_t k, std::size_t cap) {
  const std::size_t n = h.num_vertices();
  if (n > cap || n > 62)
    throw Error(ErrorCode::CapExceeded, "brute force limited to " + std::to_string(std::min<std::size_t>(cap, 62)) +
                                            " vertices, got " + std::to_string(n));
  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::uint64_t mask = 0;
    for (VertexId v : h.edge(e)) mask |= std::uint64_t{1} << v;
    edge_masks.push_back(mask);
  }
  SparsityReport report{k, true, std::nullopt};
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 1; x < limit; ++x) {
    std::size_t inside = 0;
    for (std::uint64_t em : edge_masks)
      if ((em & ~x) == 0) ++inside;
    auto size = static_cast<std::size_t>(std::popcount(x));
    if (inside > k * size) {
      VertexSet witness;
      for (VertexId v = 0; v < n; ++v)
        if (x >> v & 1) witness.push_back(v);
      report.is_sparse = false;
      report.witness = std::move(witness);
      return report;
    }
  }
  return report;
}

SparsityReport is_k_sparse(const Hypergraph& h, std::size_t k) {
  // nodes: source, edges, vertices, sink
  const std::size_t m = h.num_edges();
  const std::size_t n = h.num_vertices();
  const std::size_t source = 0;
  const std::size_t sink = 1 + m + n;
  detail::FlowNetwork net(sink + 1);
  for (EdgeId e = 0; e < m; ++e) {
    net.add_arc(source, 1 + e, 1);
    for (VertexId v : h.edge(e)) net.add_arc(1 + e, 1 + m + v, 1);
  }
  for (VertexId v = 0; v < n; ++v) net.add_arc(1 + m + v, sink, static_cast<std::int64_t>(k));

  SparsityReport report{k, true, std::nullopt};
  if (net.max_flow(source, sink) == static_cast<std::int64_t>(m)) return report;

  // Source side of the minimum cut: its vertices span more than k·|X| edges.
  auto side = net.residual_reachable(source);
  VertexSet witness;
  for (VertexId v = 0; v < n; ++v)
    if (side[1 + m + v]) witness.push_back(v);
  if (count_induced_edges(h, witness) <= k * witness.size())
    throw std::logic_error("min-cut witness does not violate sparsity");
  report.is_sparse = false;
  report.witness = std::move(witness);
  return report;
}

std::size_t orientation_weight(const Orientation& o, std::size_t k) {
  std::size_t w = 0;
  for (std::size_t c : preimage_counts(o))
    if (c > k) w += c - k;
  return w;
}

Orientation bounded_orientation(const Hypergraph& h, std::size_t k, BoundedOrientationTrace* trace) {
  require_positive(k);
  if (auto report = is_k_sparse(h, k); !report.is_sparse) throw_not_sparse(h, k, *report.witness);

  const std::size_t n = h.num_vertices();
  std::vector<VertexId> heads(h.num_edges());
  std::vector<std::vector<EdgeId>> preimage(n);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    heads[e] = h.edge(e)[0];
    preimage[heads[e]].push_back(e);
  }
  auto weight = [&] {
    std::size_t w = 0;
    for (const auto& p : preimage)
      if (p.size() > k) w += p.size() - k;
    return w;
  };

  for (std::size_t w = weight(); w > 0;) {
    if (trace) trace->weights.push_back(w);
    VertexId a = 0;
    while (preimage[a].size() <= k) ++a;

    // Least edge set F ⊇ f⁻¹(a) closed under c ∈ ⋃F ⇒ f⁻¹(c) ⊆ F, explored
    // breadth-first from a. via[x] is the edge of F through which x was
    // first reached; following via backwards yields the rerouting chain.
    std::vector<char> reached(n, 0);
    std::vector<EdgeId> via(n);
    std::deque<VertexId> queue{a};
    reached[a] = 1;
    while (!queue.empty()) {
      VertexId c = queue.front();
      queue.pop_front();
      for (EdgeId e : preimage[c])
        for (VertexId x : h.edge(e))
          if (!reached[x]) {
            reached[x] = 1;
            via[x] = e;
            queue.push_back(x);
          }
    }
    std::optional<VertexId> b;
    for (VertexId x = 0; x < n && !b; ++x)
      if (reached[x] && preimage[x].size() < k) b = x;
    if (!b) throw std::logic_error("closed edge set has no underloaded vertex");

    // e_0 ∋ b, f(e_i) ∈ e_{i+1}, f(e_n) = a
    std::vector<EdgeId> chain;
    for (VertexId x = *b; x != a; x = heads[chain.back()]) chain.push_back(via[x]);

    std::vector<VertexId> new_heads(chain.size());
    new_heads[0] = *b;
    for (std::size_t i = 1; i < chain.size(); ++i) new_heads[i] = heads[chain[i - 1]];
    for (std::size_t i = 0; i < chain.size(); ++i) {
      EdgeId e = chain[i];
      auto& old_pre = preimage[heads[e]];
      old_pre.erase(std::find(old_pre.begin(), old_pre.end(), e));
      heads[e] = new_heads[i];
      auto& new_pre = preimage[heads[e]];
      new_pre.insert(std::lower_bound(new_pre.begin(), new_pre.end(), e), e);
    }
    if (trace) ++trace->reroutings;

    std::size_t next = weight();
    if (next >= w) throw std::logic_error("rerouting did not decrease the orientation weight");
    w = next;
  }
  if (trace) trace->weights.push_back(0);
  return Orientation(h, std::move(heads));
}

DirectedGraph directed_quotient(const Hypergraph& h, const Orientation& o) {
  std::vector<DirectedGraph::Arc> arcs;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    for (VertexId a : h.edge(e))
      if (a != o[e]) arcs.emplace_back(a, o[e]);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < h.num_vertices(); ++v) labels.push_back(h.vertex_label(v));
  return DirectedGraph(h.num_vertices(), std::move(arcs), std::move(labels));
}

VertexSet bad_vertices(const Hypergraph& h, const Orientation& o) {
  DirectedGraph q = directed_quotient(h, o);
  std::vector<char> bad(h.num_vertices(), 0);
  for (auto [u, v] : q.arcs())
    if (u != v && q.has_arc(v, u)) bad[u] = bad[v] = 1;
  VertexSet out;
  for (VertexId v = 0; v < h.num_vertices(); ++v)
    if (bad[v]) out.push_back(v);
  return out;
}

namespace {

// One elimination step at a bad vertex a: X := f⁻¹(a),
// Y := { e : a ∈ e, f(e) ∈ ⋃X ∖ {a} }, and every edge of Y is sent to a.
std::vector<VertexId> eliminate_at(const Hypergraph& h, std::vector<VertexId> heads, VertexId a) {
  std::vector<char> covered(h.num_vertices(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (heads[e] == a)
      for (VertexId x : h.edge(e)) covered[x] = 1;
  covered[a] = 0;
  for (EdgeId e : h.incident_edges(a))
    if (covered[heads[e]]) heads[e] = a;
  return heads;
}

// Smallest-last elimination: repeatedly remove a vertex of least degree in
// the remaining induced subhypergraph and orient every remaining edge
// containing it to it. O_f(H) is then acyclic, and in a k-sparse hypergraph
// of rank m each vertex receives at most m·k edges.
std::vector<VertexId> smallest_last_heads(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::size_t> degree(n, 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    for (VertexId v : h.edge(e)) ++degree[v];
  std::vector<char> removed(n, 0), edge_done(h.num_edges(), 0);
  std::vector<VertexId> heads(h.num_edges());
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = 0;
    bool found = false;
    for (VertexId v = 0; v < n; ++v)
      if (!removed[v] && (!found || degree[v] < degree[best])) {
        best = v;
        found = true;
      }
    removed[best] = 1;
    for (EdgeId e : h.incident_edges(best)) {
      if (edge_done[e]) continue;
      edge_done[e] = 1;
      heads[e] = best;
      for (VertexId x : h.edge(e)) --degree[x];
    }
  }
  return heads;
}

}  // namespace

Orientation antisymmetric_orientation(const Hypergraph& h, std::size_t k, AntisymmetricTrace* trace) {
  require_positive(k);
  const std::size_t m = h.rank();
  if (m < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2, got " + std::to_string(m));
  Orientation f = bounded_orientation(h, k);
  const std::size_t bound = m * k * k;

  // A step is admissible when it shrinks the bad set and keeps the
  // invariant |f⁻¹(x)| ≤ k for bad x, ≤ m·k² otherwise.
  auto admissible = [&](const Orientation& g, const VertexSet& bad_before, VertexSet& bad_after) {
    bad_after = bad_vertices(h, g);
    if (bad_after.size() >= bad_before.size()) return false;
    auto counts = preimage_counts(g);
    std::vector<char> is_bad(h.num_vertices(), 0);
    for (VertexId x : bad_after) is_bad[x] = 1;
    for (VertexId x = 0; x < h.num_vertices(); ++x)
      if (counts[x] > (is_bad[x] ? k : bound)) return false;
    return true;
  };

  for (VertexSet bad = bad_vertices(h, f); !bad.empty();) {
    if (trace) trace->bad_counts.push_back(bad.size());
    bool stepped = false;
    for (VertexId a : bad) {
      Orientation g(h, eliminate_at(h, f.heads(), a));
      VertexSet next;
      if (!admissible(g, bad, next)) continue;
      if (trace) trace->eliminated.push_back(a);
      f = std::move(g);
      bad = std::move(next);
      stepped = true;
      break;
    }
    if (stepped) continue;

    // No single elimination step keeps the invariant: with rank ≥ 3 an edge
    // sent to a may contain a vertex c with an existing arc ⟨a,c⟩, so a
    // stays bad. Finish with the smallest-last orientation instead.
    Orientation g(h, smallest_last_heads(h));
    VertexSet next;
    if (!admissible(g, bad, next) || !next.empty())
      throw std::logic_error("smallest-last orientation violates its bound");
    if (trace) trace->used_fallback = true;
    f = std::move(g);
    bad.clear();
  }
  if (trace) trace->bad_counts.push_back(0);
  return f;
}

// H-orientations -------------------------------------------------------------

DirectedGraph oriented_graph(const UndirectedGraph& g, const Orientation& o) {
  std::vector<DirectedGraph::Arc> arcs;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, w] = g.endpoints(e);
    VertexId head = o[e];
    arcs.emplace_back(head == w ? u : w, head);
  }
  std::vector<std::string> labels;
  for (VertexId v = 0; v < g.num_vertices(); ++v) labels.push_back(g.hypergraph().vertex_label(v));
  return DirectedGraph(g.num_vertices(), std::move(arcs), std::move(labels));
}

std::vector<VertexId> find_homomorphism(const DirectedGraph& g, const DirectedGraph& target) {
  if (target.num_vertices() == 0 && g.num_vertices() > 0)
    throw Error(ErrorCode::NoHomomorphism, "empty target");
  const std::size_t n = g.num_vertices();
  constexpr VertexId kUnassigned = ~VertexId{0};
  std::vector<VertexId> assignment(n, kUnassigned);

  auto consistent = [&](VertexId v, VertexId image) {
    for (VertexId w : g.out_neighbours(v)) {
      VertexId iw = w == v ? image : assignment[w];
      if (iw != kUnassigned && !target.has_arc(image, iw)) return false;
    }
    for (VertexId w : g.in_neighbours(v)) {
      if (w == v) continue;
      if (assignment[w] != kUnassigned && !target.has_arc(assignment[w], image)) return false;
    }
    return true;
  };

  std::function<bool(VertexId)> extend = [&](VertexId v) {
    if (v == n) return true;
    for (VertexId image = 0; image < target.num_vertices(); ++image) {
      if (!consistent(v, image)) continue;
      assignment[v] = image;
      if (extend(v + 1)) return true;
      assignment[v] = kUnassigned;
    }
    return false;
  };
  if (!extend(0)) throw Error(ErrorCode::NoHomomorphism, "no arc-preserving map into the target");
  return assignment;
}

HOrientation make_h_orientation(const UndirectedGraph& g, const Orientation& o,
                                const DirectedGraph& target) {
  HOrientation result{o, find_homomorphism(oriented_graph(g, o), target), {}};
  result.classes.resize(target.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) result.classes[result.hom[v]].push_back(v);
  return result;
}

HOrientationCheck check_h_orientation(const UndirectedGraph& g, const DirectedGraph& target,
                                      const std::vector<VertexSet>& classes,
                                      std::optional<std::size_t> bound) {
  if (classes.size() != target.num_vertices())
    throw Error(ErrorCode::MalformedPartition, "one class per target vertex required");
  constexpr VertexId kNone = ~VertexId{0};
  std::vector<VertexId> hom(g.num_vertices(), kNone);
  for (VertexId i = 0; i < classes.size(); ++i)
    for (VertexId v : classes[i]) {
      if (v >= g.num_vertices())
        throw Error(ErrorCode::MalformedPartition, "class member outside the graph");
      if (hom[v] != kNone) throw Error(ErrorCode::MalformedPartition, "classes overlap");
      hom[v] = i;
    }
  if (std::find(hom.begin(), hom.end(), kNone) != hom.end())
    throw Error(ErrorCode::MalformedPartition, "classes do not cover every vertex");

  HOrientationCheck check;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [v, w] = g.endpoints(e);
    if (!target.has_arc(hom[v], hom[w]) && !target.has_arc(hom[w], hom[v])) return check;
  }
  check.encodes = true;

  if (!target.is_antisymmetric() || target.has_loop()) return check;
  std::vector<VertexId> heads(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [v, w] = g.endpoints(e);
    heads[e] = target.has_arc(hom[v], hom[w]) ? w : v;
  }
  check.orientation = Orientation(g.hypergraph(), std::move(heads));
  if (bound) {
    auto counts = preimage_counts(*check.orientation);
    check.bounded = std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c <= *bound; });
  }
  return check;
}

}  // namespace sparsehg
