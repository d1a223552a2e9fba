#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modcert {

class Graph;

/// Subset of vertices of a fixed graph, stored as a bitset with cached
/// cardinality and volume. Immutable once built.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(const Graph& g, std::span<const int> vertices);

  static VertexSet empty_set(const Graph& g);
  static VertexSet full_set(const Graph& g);
  static VertexSet from_mask(const Graph& g, std::uint64_t mask);  // n <= 64

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  int size() const { return size_; }            // |S|
  long long volume() const { return volume_; }  // vol S
  int universe() const { return n_; }
  bool empty() const { return size_ == 0; }
  bool is_full() const { return size_ == n_; }

  VertexSet complement(const Graph& g) const;
  std::vector<int> vertices() const;  // ascending

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  int n_ = 0;
  int size_ = 0;
  long long volume_ = 0;
  std::vector<std::uint64_t> words_;

  friend class Graph;
};

/// Simple undirected unweighted graph on vertices 0..n-1 with sorted
/// adjacency lists, precomputed degrees and volume. Construction validates
/// all structural invariants; instances are immutable afterwards and safe
/// to share across threads.
class Graph {
 public:
  /// Validates and builds. Throws Error with code SelfLoop, DuplicateEdge,
  /// IndexOutOfRange or IsolatedVertex. Disconnected inputs are accepted
  /// (connectivity is a separate predicate); zero-degree vertices are not,
  /// since the normalized matrices need D^{-1/2}.
  static Graph build(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return volume_ / 2; }
  long long volume() const { return volume_; }  // sum of degrees = 2|E|
  int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int max_degree() const;
  double average_degree() const { return static_cast<double>(volume_) / n_; }
  std::span<const int> neighbors(int v) const;
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // each once, u < v, sorted

 private:
  int n_ = 0;
  long long volume_ = 0;
  std::vector<std::size_t> offsets_;  // n+1 prefix offsets into adjacency_
  std::vector<int> adjacency_;        // concatenated sorted neighbor lists
};

/// e(S,T) = 1_S^T A 1_T. e(S,S) is twice the edge count inside S.
long long edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t);
long long internal_edge_ends(const Graph& g, const VertexSet& s);  // e_in(S)
long long boundary_edge_count(const Graph& g, const VertexSet& s);  // e_out(S)

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool induces_connected_subgraph(const Graph& g, const VertexSet& s);

enum class StructureKind { Star, Complete, CompleteMultipartite, Other };

const char* to_string(StructureKind kind);

struct Classification {
  StructureKind kind = StructureKind::Other;
  std::vector<std::vector<int>> parts;  // independent sets, for multipartite kinds
};

/// Detects complete multipartite structure by grouping vertices with equal
/// closed non-neighborhoods. Priority: Star > Complete > CompleteMultipartite
/// > Other. Requires a connected graph (throws Disconnected).
Classification classify_structure(const Graph& g);

}  // namespace modcert
