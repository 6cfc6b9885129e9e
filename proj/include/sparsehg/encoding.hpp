#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sparsehg/flows.hpp"
#include "sparsehg/hypergraph.hpp"
#include "sparsehg/set_function.hpp"

namespace sparsehg {

/// Spanning forest T₀ with one root per component, the induced tree order and
/// an ordering of the children of every vertex.
struct LexContext {
  EdgeSet forest_edges;
  VertexSet roots;
  std::vector<std::optional<VertexId>> parent;
  std::vector<std::vector<VertexId>> children;  ///< in successor order
  std::vector<VertexId> root_of;
  /// Child indices along the tree path from the root.
  std::vector<std::vector<std::size_t>> address;

  /// u lies on the tree path from its root to v.
  bool tree_leq(VertexId u, VertexId v) const;
};

/// Breadth-first forest from the least vertex of each component. Children are
/// ordered by neighbourhood_ordering of the child -> parent digraph.
LexContext spanning_forest(const UndirectedGraph& g);

/// Root id first, then the address sequences lexicographically.
std::strong_ordering vertex_lex_order(const LexContext& ctx, VertexId u, VertexId v);

/// X < Y iff the ≤_lex-least element of the symmetric difference lies in Y.
std::strong_ordering set_order(const LexContext& ctx, const VertexSet& x, const VertexSet& y);

struct Refinement {
  FiniteSetFunction h0;
  std::vector<std::optional<VertexId>> gmap;
  Distribution delta;
  Flow flow;
};

/// h = gmap ∘ h0 with h0 injective. Throws NotSparseDistribution (with
/// witness) when the induced distribution is not k-sparse.
Refinement refine_to_injective(const UndirectedGraph& g, const FiniteSetFunction& h, std::size_t k);

/// h0 injective, same domain as h, and gmap(h0(X)) = h(X) for every X.
bool verify_encoding(const FiniteSetFunction& h, const FiniteSetFunction& h0,
                     const std::vector<std::optional<VertexId>>& gmap);

/// h0 in set-function format, then `<v> -> <u>` for every v with gmap(v) = u.
std::string format_refinement(const Hypergraph& g, const Refinement& r);

}  // namespace sparsehg
