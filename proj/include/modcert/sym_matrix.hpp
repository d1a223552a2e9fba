#pragma once

#include <span>
#include <vector>

#include "modcert/graph.hpp"

namespace modcert {

/// Dense symmetric matrix; set() mirrors both triangles so symmetry is exact
/// by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double value) {
    a_[idx(i, j)] = value;
    a_[idx(j, i)] = value;
  }
  void add(int i, int j, double value) {
    a_[idx(i, j)] += value;
    if (i != j) a_[idx(j, i)] += value;
  }

  std::vector<double> apply(std::span<const double> x) const;  // A x
  double quadratic_form(std::span<const double> x) const;      // x^T A x
  double max_abs() const;
  const std::vector<double>& data() const { return a_; }

 private:
  int n_;
  std::vector<double> a_;  // row-major, both triangles kept in sync

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
};

SymMatrix adjacency_matrix(const Graph& g);             // A
SymMatrix normalized_adjacency_matrix(const Graph& g);  // D^{-1/2} A D^{-1/2}
SymMatrix modularity_matrix(const Graph& g);            // M = A - d d^T / vol V
SymMatrix normalized_modularity_matrix(const Graph& g); // D^{-1/2} M D^{-1/2}
SymMatrix combinatorial_laplacian(const Graph& g);      // L = D - A
SymMatrix normalized_laplacian(const Graph& g);         // I - D^{-1/2} A D^{-1/2}

/// m - c * w w^T for a unit direction w; shifts w's eigenvalue down by c and
/// leaves the rest of an invariant decomposition untouched.
SymMatrix rank_one_deflate(const SymMatrix& m, std::span<const double> unit_dir, double c);

}  // namespace modcert
