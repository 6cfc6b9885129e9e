#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sparsehg/hypergraph.hpp"

namespace sparsehg {

/// Comparison oracle over a finite carrier. The carrier holds vertex ids,
/// except for edge_order where it holds edge ids.
struct VertexOrder {
  enum class Kind { Preorder, Partial, Linear };

  std::vector<std::uint32_t> carrier;
  Kind kind = Kind::Partial;
  std::function<bool(std::uint32_t, std::uint32_t)> leq;

  bool less(std::uint32_t x, std::uint32_t y) const { return leq(x, y) && !leq(y, x); }
  bool comparable(std::uint32_t x, std::uint32_t y) const { return leq(x, y) || leq(y, x); }
  /// Pairwise comparability on `xs`.
  bool is_total_on(const std::vector<std::uint32_t>& xs) const;
  /// `xs` sorted ascending; only meaningful when the order is total on `xs`.
  std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> xs) const;
};

/// Reflexivity, antisymmetry and transitivity over the carrier.
std::vector<std::string> check_partial_order(const VertexOrder& order);
/// Partial order whose down-sets are chains and where any two elements with
/// a common lower bound have an infimum.
std::vector<std::string> check_tree_order(const VertexOrder& order);

// Hyperpaths -----------------------------------------------------------------

using Hyperpath = std::vector<EdgeId>;

/// e_i ∩ e_k ≠ ∅ iff |i - k| ≤ 1, and the sequence is nonempty.
bool is_hyperpath(const Hypergraph& h, const Hyperpath& p);

/// Shortest edge sequence from an edge containing u to an edge containing v,
/// found by breadth-first search over edges in id order. Throws NoHyperpath.
Hyperpath find_hyperpath(const Hypergraph& h, VertexId u, VertexId v);

/// Shortest edge sequence from an edge containing u that ends with `target`.
Hyperpath find_hyperpath_to_edge(const Hypergraph& h, VertexId u, EdgeId target);

// Priority trees -------------------------------------------------------------

struct PriorityStep {
  Hyperpath edges;       ///< the added hyperpath (or suffix)
  std::size_t cls = 0;   ///< index k of F_k / P_k receiving it
  EdgeId leaf = 0;       ///< last edge, the new leaf edge
  VertexSet new_vertices;
};

struct PriorityTree {
  VertexId root = 0;
  std::size_t num_classes = 0;  ///< m
  VertexSet nodes;              ///< T
  EdgeSet edges;                ///< F
  EdgeSet leaves;               ///< L
  std::vector<EdgeSet> edge_classes;    ///< F_0 … F_{m-1}
  std::vector<VertexSet> vertex_classes;  ///< P_0 … P_{m-1}
  std::vector<PriorityStep> log;

  /// Index k with e ∈ F_k.
  std::optional<std::size_t> edge_class(EdgeId e) const;
  /// Index k with v ∈ P_k.
  std::optional<std::size_t> vertex_class(VertexId v) const;
};

/// Adds, for each edge of l0 in id order, the shortest suffix of a shortest
/// hyperpath from root to it that meets the current tree. `m` = 0 means
/// rank(h). Throws Disconnected, ClassOverflow or InvalidArgument.
PriorityTree build_priority_tree(const Hypergraph& h, VertexId root, const EdgeSet& l0,
                                 std::size_t m = 0);

/// Replays the log and checks the successor-case side conditions.
std::vector<std::string> validate_priority_tree(const Hypergraph& h, const PriorityTree& t);

inline constexpr std::size_t kDefaultBranchCap = 1'000'000;

/// All branches, maximal or not, in depth-first order. Throws CapExceeded.
std::vector<Hyperpath> branches(const Hypergraph& h, const PriorityTree& t,
                                std::size_t cap = kDefaultBranchCap);

/// e ≤ f iff every branch containing f contains e. Carrier = F.
VertexOrder edge_order(const Hypergraph& h, const PriorityTree& t,
                       std::size_t cap = kDefaultBranchCap);

struct EquivClass {
  VertexSet members;
  std::size_t cls = 0;
  EdgeId leaf = 0;
  Hyperpath path;  ///< the class's edges, ending with the leaf edge
  /// eta_start[i] = index j in `path` such that η(members[i]) = path[j..]
  std::vector<std::size_t> eta_start;
};

/// The ~ classes, ordered by least member. Connectivity inside P_k uses the
/// traces e ∩ P_k of the edges e ∈ F_k. Throws MalformedTree when a class
/// does not contain exactly one leaf edge.
std::vector<EquivClass> vertex_equiv(const Hypergraph& h, const PriorityTree& t);

/// Linear order on T: class index, then `leaf_rank` of the class's leaf edge
/// (default: edge id), then the shorter η first, then vertex id.
VertexOrder priority_tree_linear_order(const Hypergraph& h, const PriorityTree& t,
                                       const std::vector<EdgeId>& leaf_order = {});

// Depth-first spanning trees -------------------------------------------------

struct NodeType {
  enum class Kind { Root, Succ, Limit };
  Kind kind = Kind::Root;
  std::size_t index = 0;  ///< l of succ_l / limit_l

  friend bool operator==(const NodeType&, const NodeType&) = default;
};

std::string format_node_type(NodeType t);

struct DfstNode {
  VertexId vertex = 0;
  std::optional<VertexId> parent;
  NodeType type;
  EdgeSet attach;  ///< F_v
};

class DepthFirstSpanningTree {
 public:
  DepthFirstSpanningTree() = default;
  /// Nodes in any order; auxiliary sets are computed by a sweep along the
  /// tree order. Throws MalformedTree when the parent links do not form a
  /// tree or an attach set refers to an unknown edge.
  DepthFirstSpanningTree(const Hypergraph& h, std::vector<DfstNode> nodes);

  std::size_t num_vertices() const noexcept { return node_index_.size(); }
  VertexId root() const { return nodes_.at(0).vertex; }
  /// Nodes in a tree-order-compatible sequence (parents first).
  const std::vector<DfstNode>& nodes() const noexcept { return nodes_; }
  bool is_node(VertexId v) const { return v < node_index_.size() && node_index_[v] != kNone; }
  const DfstNode& node(VertexId v) const;
  std::size_t depth(VertexId v) const;
  /// u ≤ v in the tree order.
  bool tree_leq(VertexId u, VertexId v) const;
  /// A_v. Throws NotATreeNode.
  const VertexSet& aux(VertexId v) const;
  /// Tree node v with x ∈ A_v (the first one in sweep order, when several).
  std::optional<VertexId> owner(VertexId x) const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<DfstNode> nodes_;
  std::vector<std::size_t> node_index_;  // vertex -> position in nodes_
  std::vector<std::size_t> depth_;       // parallel to nodes_
  std::vector<std::size_t> pre_, post_;  // DFS interval per node
  std::vector<VertexSet> aux_;           // parallel to nodes_
  std::vector<std::optional<VertexId>> owner_;
};

/// Successor-case construction rooted at `root`. Throws Disconnected.
DepthFirstSpanningTree build_dfst(const Hypergraph& h, VertexId root);

/// A_v. Throws NotATreeNode.
VertexSet auxiliary_nodes(const DepthFirstSpanningTree& t, VertexId v);

struct BorderSet {
  VertexSet nodes;               ///< B(X/T)
  std::optional<VertexId> beta;  ///< max, present iff nonempty and a chain
};

BorderSet b_set(const DepthFirstSpanningTree& t, const VertexSet& x);

/// Violations of the depth-first spanning tree conditions, e.g.
/// "AuxOverlap ...", "EmptyBorder ...". Empty when valid.
std::vector<std::string> validate_dfst(const Hypergraph& h, const DepthFirstSpanningTree& t);

/// ⊑₀: A_u below A_v for u < v, each A_v one class.
VertexOrder aux_preorder(const DepthFirstSpanningTree& t, const Hypergraph& h);
/// ⊑: ⊑₀ with each class ordered by vertex id.
VertexOrder aux_order(const DepthFirstSpanningTree& t, const Hypergraph& h);

/// f(e) = ⊑-least vertex of e, one tree per component rooted at its least
/// vertex.
Orientation dfst_orientation(const Hypergraph& h);

/// Per edge, its vertices in ⊑-increasing order.
std::vector<std::vector<VertexId>> edge_ordering(const Hypergraph& h);

/// Per vertex, its in-neighbours ordered through edge_ordering of the
/// hypergraph of nonempty in-neighbourhoods.
std::vector<std::vector<VertexId>> neighbourhood_ordering(const DirectedGraph& g);

// Text formats ---------------------------------------------------------------

/// `<v> parent=<u|-> type=<t> F=<e,...> A=<v,...>` per node, parents first.
std::string format_dfst(const Hypergraph& h, const DepthFirstSpanningTree& t);
/// `class <k> leaf=<e> F=<e,...> P=<v,...>` per step, then `order <v> <v> ...`.
std::string format_priority_tree(const Hypergraph& h, const PriorityTree& t);

}  // namespace sparsehg
