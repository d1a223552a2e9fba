#include "modcert/graph.hpp"

#include <algorithm>
#include <queue>

#include "modcert/errors.hpp"

namespace modcert {

namespace {

std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

VertexSet::VertexSet(const Graph& g, std::span<const int> vertices)
    : n_(g.vertex_count()), words_(word_count(g.vertex_count()), 0) {
  for (int v : vertices) {
    if (v < 0 || v >= n_) fail(errc::index_out_of_range, "vertex " + std::to_string(v));
    std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
    std::uint64_t bit = std::uint64_t(1) << (v & 63);
    if (w & bit) continue;  // duplicates in the input list are harmless
    w |= bit;
    ++size_;
    volume_ += g.degree(v);
  }
}

VertexSet VertexSet::empty_set(const Graph& g) {
  VertexSet s;
  s.n_ = g.vertex_count();
  s.words_.assign(word_count(s.n_), 0);
  return s;
}

VertexSet VertexSet::full_set(const Graph& g) {
  return empty_set(g).complement(g);
}

VertexSet VertexSet::from_mask(const Graph& g, std::uint64_t mask) {
  std::vector<int> vs;
  for (int v = 0; v < g.vertex_count() && v < 64; ++v)
    if ((mask >> v) & 1u) vs.push_back(v);
  return VertexSet(g, vs);
}

VertexSet VertexSet::complement(const Graph& g) const {
  VertexSet c;
  c.n_ = n_;
  c.size_ = n_ - size_;
  c.volume_ = g.volume() - volume_;
  c.words_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
  int tail = n_ & 63;
  if (tail != 0 && !c.words_.empty())
    c.words_.back() &= (std::uint64_t(1) << tail) - 1;
  return c;
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size_);
  for (int v = 0; v < n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

Graph Graph::build(int n, std::span<const std::pair<int, int>> edges) {
  if (n <= 0) fail(errc::too_small, "graph needs at least one vertex");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::index_out_of_range,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) fail(errc::self_loop, "vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      fail(errc::duplicate_edge, "at vertex " + std::to_string(v));
    if (list.empty()) fail(errc::isolated_vertex, "vertex " + std::to_string(v));
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.adjacency_.reserve(g.offsets_[n]);
  for (auto& list : adj) g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
  g.volume_ = static_cast<long long>(g.adjacency_.size());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::span<const int> Graph::neighbors(int v) const {
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

long long edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
  long long count = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!s.contains(u)) continue;
    for (int v : g.neighbors(u))
      if (t.contains(v)) ++count;
  }
  return count;
}

long long internal_edge_ends(const Graph& g, const VertexSet& s) {
  return edge_count_between(g, s, s);
}

long long boundary_edge_count(const Graph& g, const VertexSet& s) {
  // vol S = e_in(S) + e_out(S)
  return s.volume() - internal_edge_ends(g, s);
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

bool is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool induces_connected_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  int start = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (s.contains(v)) {
      start = v;
      break;
    }
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (s.contains(v) && !seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == s.size();
}

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Star: return "star";
    case StructureKind::Complete: return "complete";
    case StructureKind::CompleteMultipartite: return "complete_multipartite";
    case StructureKind::Other: return "other";
  }
  return "other";
}

Classification classify_structure(const Graph& g) {
  if (!is_connected(g)) fail(errc::disconnected, "classification needs a connected graph");
  int n = g.vertex_count();

  // Closed non-neighborhood of each vertex as a 0/1 row; the graph is
  // complete multipartite iff grouping vertices by equal rows yields groups
  // identical to the rows themselves.
  std::vector<std::vector<char>> rows(n, std::vector<char>(n, 1));
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) rows[v][u] = 0;

  std::vector<int> group(n, -1);
  std::vector<int> rep;  // representative vertex per group
  for (int v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < rep.size(); ++k) {
      if (rows[v] == rows[rep[k]]) {
        group[v] = static_cast<int>(k);
        break;
      }
    }
    if (group[v] == -1) {
      group[v] = static_cast<int>(rep.size());
      rep.push_back(v);
    }
  }

  std::vector<std::vector<int>> parts(rep.size());
  for (int v = 0; v < n; ++v) parts[group[v]].push_back(v);

  bool multipartite = true;
  for (int v = 0; v < n && multipartite; ++v) {
    for (int u = 0; u < n && multipartite; ++u) {
      bool same_part = group[u] == group[v];
      if (rows[v][u] != (same_part ? 1 : 0)) multipartite = false;
    }
  }

  Classification result;
  if (!multipartite) {
    result.kind = StructureKind::Other;
    return result;
  }
  result.parts = std::move(parts);
  std::size_t k = result.parts.size();
  bool has_singleton = false;
  for (const auto& part : result.parts) has_singleton |= part.size() == 1;
  if (k == 2 && has_singleton)
    result.kind = StructureKind::Star;
  else if (static_cast<int>(k) == n)
    result.kind = StructureKind::Complete;
  else
    result.kind = StructureKind::CompleteMultipartite;
  return result;
}

}  // namespace modcert
