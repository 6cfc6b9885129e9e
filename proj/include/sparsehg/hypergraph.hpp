#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sparsehg/error.hpp"
#include "sparsehg/types.hpp"

namespace sparsehg {

/// Two-sorted incidence structure with dense vertex and edge ids.
///
/// Edges are stored as sorted vertex lists; two edges may carry the same
/// vertex set. Isolated vertices are allowed. The structure only grows, and
/// every algorithm in the library treats it as immutable.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// `n` unlabelled vertices; labels default to the decimal id.
  explicit Hypergraph(std::size_t n);

  VertexId add_vertex(std::string label = {});
  /// Throws EmptyEdge, UnknownVertex or DuplicateVertexInEdge.
  EdgeId add_edge(std::vector<VertexId> vertices, std::string label = {});

  std::size_t num_vertices() const noexcept { return vertex_labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const VertexId> edge(EdgeId e) const { return edges_.at(e); }
  std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_.at(v); }
  bool contains(EdgeId e, VertexId v) const;

  const std::string& vertex_label(VertexId v) const { return vertex_labels_.at(v); }
  const std::string& edge_label(EdgeId e) const { return edge_labels_.at(e); }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<EdgeId> find_edge(std::string_view label) const;

  /// Maximum edge size (0 for an edgeless hypergraph).
  std::size_t rank() const noexcept { return rank_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_labels_ == b.vertex_labels_ && a.edge_labels_ == b.edge_labels_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::size_t rank_ = 0;
};

/// Simple loop-free graph: a hypergraph whose edges all have exactly two
/// vertices, without parallel edges.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  /// Throws NotAGraph if some edge has size != 2 or two edges coincide.
  explicit UndirectedGraph(Hypergraph h);
  /// Convenience builder: `n` vertices, the given vertex pairs as edges.
  static UndirectedGraph from_pairs(std::size_t n,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs);

  const Hypergraph& hypergraph() const noexcept { return h_; }
  std::size_t num_vertices() const noexcept { return h_.num_vertices(); }
  std::size_t num_edges() const noexcept { return h_.num_edges(); }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    auto ends = h_.edge(e);
    return {ends[0], ends[1]};
  }
  /// Sorted neighbour list.
  std::span<const VertexId> neighbours(VertexId v) const { return neighbours_.at(v); }
  std::size_t degree(VertexId v) const { return neighbours_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

 private:
  Hypergraph h_;
  std::vector<std::vector<VertexId>> neighbours_;
  std::vector<std::vector<EdgeId>> neighbour_edges_;  // parallel to neighbours_
};

/// Simple directed graph; loops allowed, duplicate arcs collapsed.
class DirectedGraph {
 public:
  using Arc = std::pair<VertexId, VertexId>;

  DirectedGraph() = default;
  explicit DirectedGraph(std::size_t n, std::vector<Arc> arcs = {},
                         std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  /// Arcs in lexicographic order.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::span<const VertexId> out_neighbours(VertexId v) const { return out_.at(v); }
  std::span<const VertexId> in_neighbours(VertexId v) const { return in_.at(v); }
  bool has_arc(VertexId u, VertexId v) const;
  std::size_t max_indegree() const noexcept;
  /// No pair of opposite arcs between distinct vertices.
  bool is_antisymmetric() const;
  bool has_loop() const;

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view label) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.labels_ == b.labels_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

/// Total map edge -> incident vertex. The incidence condition is checked on
/// construction.
class Orientation {
 public:
  Orientation() = default;
  Orientation(const Hypergraph& h, std::vector<VertexId> heads);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return heads_.size(); }
  VertexId operator[](EdgeId e) const { return heads_.at(e); }
  const std::vector<VertexId>& heads() const noexcept { return heads_; }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<VertexId> heads_;
};

struct Subhypergraph {
  Hypergraph graph;
  std::vector<VertexId> vertex_origin;  ///< new id -> id in the parent
  std::vector<EdgeId> edge_origin;      ///< new id -> id in the parent
};

/// ⟨C, E|C⟩: the vertices of `c` and every edge lying entirely inside `c`.
/// Ids are renumbered in ascending parent order; labels are kept.
Subhypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& c);

/// Number of edges e with e ⊆ x (x sorted).
std::size_t count_induced_edges(const Hypergraph& h, const VertexSet& x);

/// Vertex sets of the connected components, each sorted, ordered by least
/// member. Isolated vertices form singleton components.
std::vector<VertexSet> connected_components(const Hypergraph& h);

/// |f⁻¹(v)| for every vertex.
std::vector<std::size_t> preimage_counts(const Orientation& o);

// Text formats -----------------------------------------------------------

/// `v <label>` / `e <label> <v1> <v2> ...`, '#' comments, blank lines ignored.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

/// `v <label>` / `a <from> <to>` for target digraphs.
DirectedGraph parse_digraph(std::istream& in);
DirectedGraph parse_digraph(std::string_view text);
std::string serialize_digraph(const DirectedGraph& g);

/// One `<edge-label> -> <vertex-label>` line per edge, in edge-id order.
std::string format_orientation(const Hypergraph& h, const Orientation& o);

/// Sorted, duplicate-free copy.
VertexSet make_vertex_set(std::vector<VertexId> vs);

}  // namespace sparsehg
