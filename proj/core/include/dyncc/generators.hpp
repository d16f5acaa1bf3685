#pragma once

#include <cstddef>
#include <random>

#include "dyncc/graph.hpp"

namespace dyncc::gen {

/// Uniform simple graph with n vertices and m edges (m is capped at n(n-1)/2).
DynamicGraph gnm(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// Connected graph: a uniform random recursive tree plus extra random edges
/// up to m in total (m >= n-1).
DynamicGraph connected_gnm(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// Preferential attachment: each new vertex links to `edges_per_vertex`
/// distinct earlier vertices chosen proportionally to degree. Power-law
/// degrees, logarithmic diameter.
DynamicGraph preferential_attachment(std::size_t n, std::size_t edges_per_vertex,
                                     std::mt19937_64& rng);

/// Preferential attachment with triad formation: after each degree-biased
/// link, the next link closes a triangle with probability `triad_probability`.
/// Power-law degrees with tunable clustering.
DynamicGraph clustered_preferential_attachment(std::size_t n, std::size_t edges_per_vertex,
                                               double triad_probability, std::mt19937_64& rng);

}  // namespace dyncc::gen
