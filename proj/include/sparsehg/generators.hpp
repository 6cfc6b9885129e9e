#pragma once

#include <cstdint>
#include <random>

#include "sparsehg/flows.hpp"
#include "sparsehg/hypergraph.hpp"
#include "sparsehg/set_function.hpp"

namespace sparsehg::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by modular reduction; identical on every
/// platform for a given seed.
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

/// `edges` edges with sizes drawn from [1, max_rank].
Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t edges, std::size_t max_rank);

/// Connected: vertex i > 0 first joins an edge with some earlier vertex,
/// then `extra` random edges follow. Edge sizes lie in [2, max_rank].
Hypergraph random_connected_hypergraph(Rng& rng, std::size_t n, std::size_t extra,
                                       std::size_t max_rank);

/// Random pairs accepted while both endpoints have degree < max_degree and
/// the edge is new; stops after `attempts` proposals.
UndirectedGraph random_bounded_degree_graph(Rng& rng, std::size_t n, std::size_t max_degree,
                                            std::size_t attempts);

UndirectedGraph grid_graph(std::size_t rows, std::size_t cols);

/// Increments random vertices while the distribution stays k-sparse.
Distribution random_sparse_distribution(Rng& rng, const UndirectedGraph& g, std::size_t k,
                                        std::size_t attempts);

/// Up to `max_sets` distinct sets of size ≤ max_set_size; an entry is kept
/// only if the induced distribution stays k-sparse.
FiniteSetFunction random_set_function(Rng& rng, const UndirectedGraph& g, std::size_t k,
                                      std::size_t max_sets, std::size_t max_set_size);

/// Adds `cycles` random closed walks with positive values to `base`.
Flow add_random_circulations(Rng& rng, const UndirectedGraph& g, Flow base, std::size_t cycles,
                             std::int64_t max_value);

}  // namespace sparsehg::gen
