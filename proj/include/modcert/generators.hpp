#pragma once

#include <cstdint>
#include <span>

#include "modcert/graph.hpp"

namespace modcert {

Graph make_complete(int n);                         // K_n, n >= 2
Graph make_star(int n);                             // hub 0, n >= 2
Graph make_cycle(int n);                            // C_n, n >= 3
Graph make_path(int n);                             // P_n, n >= 2
Graph make_complete_multipartite(std::span<const int> part_sizes);

/// Planted-partition random graph: vertices split into consecutive blocks of
/// the given sizes; each pair is an edge independently with probability p_in
/// (same block) or p_out (different blocks). Resamples until connected
/// (bounded retries, CouldNotConnect on exhaustion). Deterministic for a
/// fixed seed.
Graph make_planted_partition(std::span<const int> sizes, double p_in, double p_out,
                             std::uint64_t seed);

}  // namespace modcert
