#include "modcert/generators.hpp"

#include <numeric>
#include <random>
#include <string>

#include "modcert/errors.hpp"

namespace modcert {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// 53-bit uniform in [0,1); uniform_real_distribution is implementation
// defined, this keeps generated graphs identical across toolchains.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph make_complete(int n) {
  if (n < 2) fail(errc::too_small, "complete graph needs n >= 2");
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph make_star(int n) {
  if (n < 2) fail(errc::too_small, "star needs n >= 2");
  EdgeList edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::build(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) fail(errc::too_small, "cycle needs n >= 3");
  EdgeList edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

Graph make_path(int n) {
  if (n < 2) fail(errc::too_small, "path needs n >= 2");
  EdgeList edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph make_complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.size() < 2) fail(errc::too_small, "need at least two parts");
  for (int s : part_sizes)
    if (s < 1) fail(errc::too_small, "part sizes must be positive");
  int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  std::vector<int> block;
  for (std::size_t b = 0; b < part_sizes.size(); ++b)
    block.insert(block.end(), part_sizes[b], static_cast<int>(b));
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (block[u] != block[v]) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph make_planted_partition(std::span<const int> sizes, double p_in, double p_out,
                             std::uint64_t seed) {
  if (sizes.empty()) fail(errc::too_small, "need at least one block");
  for (int s : sizes)
    if (s < 1) fail(errc::too_small, "block sizes must be positive");
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (n < 2) fail(errc::too_small, "need at least two vertices");
  std::vector<int> block;
  for (std::size_t b = 0; b < sizes.size(); ++b)
    block.insert(block.end(), sizes[b], static_cast<int>(b));

  std::mt19937_64 rng(seed);
  constexpr int max_retries = 200;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    EdgeList edges;
    bool isolated = false;
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        double p = block[u] == block[v] ? p_in : p_out;
        if (next_uniform(rng) < p) {
          edges.emplace_back(u, v);
          ++deg[u];
          ++deg[v];
        }
      }
    }
    for (int u = 0; u < n; ++u) isolated |= deg[u] == 0;
    if (isolated) continue;
    Graph g = Graph::build(n, edges);
    if (is_connected(g)) return g;
  }
  fail(errc::could_not_connect,
       "no connected sample in " + std::to_string(max_retries) + " retries");
}

}  // namespace modcert
