#pragma once

#include <cstdint>
#include <vector>

namespace sparsehg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;
/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

}  // namespace sparsehg
