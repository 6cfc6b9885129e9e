#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparsehg/hypergraph.hpp"
#include "sparsehg/set_function.hpp"

namespace sparsehg {

/// Vertex demand δ : V -> ℕ.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::size_t n) : values_(n, 0) {}
  /// Throws InvalidArgument on a negative entry.
  explicit Distribution(std::vector<std::int64_t> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](VertexId v) const { return values_.at(v); }
  void set(VertexId v, std::int64_t value);
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::int64_t total() const;
  std::int64_t sum(const VertexSet& x) const;
  std::int64_t max() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Antisymmetric integer function on vertex pairs. Only f(u,v) for u < v is
/// stored; f(v,u) = -f(u,v) is implied, so antisymmetry holds by
/// construction. Zero entries are never stored.
class Flow {
 public:
  Flow() = default;
  explicit Flow(std::size_t n) : n_(n) {}

  std::size_t num_vertices() const noexcept { return n_; }
  std::int64_t operator()(VertexId u, VertexId v) const;
  void set(VertexId u, VertexId v, std::int64_t value);
  void add(VertexId u, VertexId v, std::int64_t delta) { set(u, v, (*this)(u, v) + delta); }
  /// Nonzero entries keyed by (u, v) with u < v.
  const std::map<std::pair<VertexId, VertexId>, std::int64_t>& entries() const noexcept {
    return values_;
  }
  bool is_zero() const noexcept { return values_.empty(); }
  /// f(u,v) ≠ 0 only on edges of g.
  bool supported_by(const UndirectedGraph& g) const;

  friend bool operator==(const Flow&, const Flow&) = default;

 private:
  std::size_t n_ = 0;
  std::map<std::pair<VertexId, VertexId>, std::int64_t> values_;
};

/// Multiset of vertex sequences; a one-vertex sequence is a length-0 path.
struct PathFamily {
  std::vector<std::vector<VertexId>> paths;
  /// Number of family paths traversing (u,v) in that direction.
  std::map<std::pair<VertexId, VertexId>, std::size_t> usage;

  std::vector<std::size_t> start_counts(std::size_t n) const;
  std::vector<std::size_t> end_counts(std::size_t n) const;
};

struct DistributionSparsity {
  bool is_sparse = true;
  std::optional<VertexSet> witness;  ///< Z with δ(Z) > |Z| + k·|B(Z)|
};

struct FlowBounds {
  std::int64_t edge_bound = 0;    ///< max |f(u,v)|
  std::int64_t vertex_bound = 0;  ///< max over v of Σ_u |f(u,v)|
};

/// Edges with exactly one endpoint in z, ascending.
EdgeSet border(const UndirectedGraph& g, const VertexSet& z);

/// δ(v) = |h⁻¹(v)|.
Distribution induced_distribution(const FiniteSetFunction& h, const UndirectedGraph& g);

/// Checks δ(Z) ≤ |Z| + k·|B(Z)| on every subset, in bitmask order.
/// Throws CapExceeded when |V| > cap.
DistributionSparsity is_k_sparse_distribution_bruteforce(const UndirectedGraph& g,
                                                         const Distribution& d, std::size_t k,
                                                         std::size_t cap = 20);

/// Same decision through the δ-flow network: sparse iff the maximum flow
/// saturates every source arc. Otherwise the source side of a minimum cut
/// (without the source) is a violating set.
DistributionSparsity is_k_sparse_distribution(const UndirectedGraph& g, const Distribution& d,
                                              std::size_t k);

/// δ-flow edge-bounded by k. Throws NotSparseDistribution with a witness.
Flow compute_delta_flow(const UndirectedGraph& g, const Distribution& d, std::size_t k);

/// d_f(v) = Σ_u f(v,u).
std::vector<std::int64_t> defect(const Flow& f);

/// For every v: d_f(v) = δ(v) - 1, or δ(v) = 0 and d_f(v) = 0.
bool check_delta_flow(const Flow& f, const Distribution& d);

FlowBounds bounds(const Flow& f);

/// A directed cycle u_0 … u_m with f(u_i, u_{i+1}) > 0 around it, if any.
std::optional<std::vector<VertexId>> find_positive_cycle(const Flow& f);
inline bool is_acyclic(const Flow& f) { return !find_positive_cycle(f); }

/// Subtracts the minimum value around positive cycles until none remains.
Flow cancel_cycles(Flow f);

/// Paths realising an acyclic δ-flow: δ(v) paths start at v, at most one
/// ends at v, and (u,v) is used by at most f(u,v) paths. Throws InvalidFlow.
PathFamily decompose_flow_paths(const UndirectedGraph& g, const Flow& f, const Distribution& d);

/// Every vertex and every edge of g lies on at most m family paths.
bool validate_path_family(const UndirectedGraph& g, const PathFamily& p, std::size_t m);

/// Partial map g with |g⁻¹(v)| = δ(v): each path of the decomposition of the
/// cycle-free version of f maps its end to its start. Throws InvalidFlow.
std::vector<std::optional<VertexId>> function_from_flow(const UndirectedGraph& g,
                                                        const Distribution& d, const Flow& f);

// Text formats ---------------------------------------------------------------

/// Lines `<vertex-label> <count>`; omitted vertices are 0.
Distribution parse_distribution(const Hypergraph& h, std::istream& in);
Distribution parse_distribution(const Hypergraph& h, std::string_view text);
/// Lines `<u> <v> <value>` with u < v by id, zero entries omitted.
std::string format_flow(const Hypergraph& h, const Flow& f);
Flow parse_flow(const UndirectedGraph& g, std::istream& in);
Flow parse_flow(const UndirectedGraph& g, std::string_view text);
/// One path per line, vertex labels separated by single spaces.
std::string format_path_family(const Hypergraph& h, const PathFamily& p);

}  // namespace sparsehg
