#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparsehg/hypergraph.hpp"

namespace sparsehg {

/// Partial map from finite vertex sets to vertices, given as a table.
class FiniteSetFunction {
 public:
  using Entry = std::pair<VertexSet, VertexId>;

  FiniteSetFunction() = default;
  /// Sets are normalised (sorted, deduplicated). Throws DuplicateSet if a set
  /// occurs twice and UnknownVertex for ids ≥ num_vertices.
  FiniteSetFunction(std::size_t num_vertices, std::vector<Entry> entries);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const VertexSet& set(std::size_t i) const { return entries_.at(i).first; }
  VertexId image(std::size_t i) const { return entries_.at(i).second; }
  /// Index of `x` in the table, or size() if absent.
  std::size_t find(const VertexSet& x) const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Entry> entries_;
};

/// Lines `<v1>,<v2>,...,<vn> -> <vertex-label>`; an empty left side is the
/// empty set. Labels are resolved against `h`.
FiniteSetFunction parse_set_function(const Hypergraph& h, std::istream& in);
FiniteSetFunction parse_set_function(const Hypergraph& h, std::string_view text);
std::string format_set_function(const Hypergraph& h, const FiniteSetFunction& fn);

}  // namespace sparsehg
