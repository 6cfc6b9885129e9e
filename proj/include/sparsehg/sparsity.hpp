#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sparsehg/hypergraph.hpp"

namespace sparsehg {

/// Outcome of a k-sparsity test. `witness` is present iff the hypergraph is
/// not k-sparse, and then |E|X| > k·|X| for X = *witness.
struct SparsityReport {
  std::size_t k = 0;
  bool is_sparse = true;
  std::optional<VertexSet> witness;
};

inline constexpr std::size_t kDefaultBruteForceCap = 20;

/// Enumerates every vertex subset in bitmask order and reports the first
/// violating one. Throws CapExceeded when |V| > cap.
SparsityReport is_k_sparse_bruteforce(const Hypergraph& h, std::size_t k,
                                      std::size_t cap = kDefaultBruteForceCap);

/// Decides k-sparsity through the existence of a k-bounded orientation,
/// posed as a bipartite flow problem (source -> edge -> vertex -> sink with
/// vertex capacity k). A witness is read off the minimum cut.
SparsityReport is_k_sparse(const Hypergraph& h, std::size_t k);

/// Σ max(0, |f⁻¹(a)| - k) over all vertices.
std::size_t orientation_weight(const Orientation& o, std::size_t k);

/// Per-iteration record of the weight-reduction loop.
struct BoundedOrientationTrace {
  std::vector<std::size_t> weights;  ///< weight before each rerouting, then the final 0
  std::size_t reroutings = 0;
};

/// Orientation with every preimage of size ≤ k, obtained by repeatedly
/// rerouting an edge chain from an overloaded vertex to an underloaded one.
/// Throws NotKSparse (with witness) when no such orientation exists.
Orientation bounded_orientation(const Hypergraph& h, std::size_t k,
                                BoundedOrientationTrace* trace = nullptr);

/// O_f(H): arc ⟨a,b⟩ for a ≠ b whenever some edge contains a and is oriented
/// to b.
DirectedGraph directed_quotient(const Hypergraph& h, const Orientation& o);

/// Vertices lying on a pair of opposite arcs of O_f(H), ascending.
VertexSet bad_vertices(const Hypergraph& h, const Orientation& o);

struct AntisymmetricTrace {
  std::vector<std::size_t> bad_counts;  ///< bad-vertex count before each step, then the final 0
  std::vector<VertexId> eliminated;     ///< vertex processed at each elimination step
  bool used_fallback = false;           ///< last step was the smallest-last orientation
};

/// Orientation bounded by rank·k² whose O_f(H) has no pair of opposite arcs.
///
/// Starts from bounded_orientation and eliminates bad vertices one at a
/// time, least id first, each step sending to a the edges through a whose
/// head lies in ⋃f⁻¹(a). A step is taken only if it shrinks the bad set and
/// keeps bad vertices at ≤ k and all others at ≤ rank·k²; when no bad vertex
/// admits such a step the smallest-last orientation (bound rank·k, acyclic
/// quotient) finishes the job. Throws NotKSparse or RankTooSmall (rank < 2).
Orientation antisymmetric_orientation(const Hypergraph& h, std::size_t k,
                                      AntisymmetricTrace* trace = nullptr);

// H-orientations -------------------------------------------------------------

/// G_f: each edge {u,w} with f(e) = w becomes the arc ⟨u,w⟩.
DirectedGraph oriented_graph(const UndirectedGraph& g, const Orientation& o);

/// First arc-preserving map g -> target found by backtracking with
/// least-id variable and value order. Throws NoHomomorphism.
std::vector<VertexId> find_homomorphism(const DirectedGraph& g, const DirectedGraph& target);

struct HOrientation {
  Orientation orientation;
  std::vector<VertexId> hom;         ///< V(G) -> V(target)
  std::vector<VertexSet> classes;    ///< classes[i] = hom⁻¹(i)
};

/// Pairs `o` with a homomorphism G_f -> target.
HOrientation make_h_orientation(const UndirectedGraph& g, const Orientation& o,
                                const DirectedGraph& target);

struct HOrientationCheck {
  bool encodes = false;
  /// Reconstructed orientation; set when the encoding is valid and the target
  /// is loop-free and antisymmetric, so that the classes determine it.
  std::optional<Orientation> orientation;
  /// Set when an orientation was reconstructed and a bound was supplied.
  std::optional<bool> bounded;
};

/// Semantic check that `classes` (indexed by target vertex) encode a
/// target-orientation of g. Throws MalformedPartition when the classes are
/// not a partition of V(g) or their count differs from |V(target)|.
HOrientationCheck check_h_orientation(const UndirectedGraph& g, const DirectedGraph& target,
                                      const std::vector<VertexSet>& classes,
                                      std::optional<std::size_t> bound = std::nullopt);

}  // namespace sparsehg
