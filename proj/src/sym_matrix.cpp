#include "modcert/sym_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace modcert {

std::vector<double> SymMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    const double* row = a_.data() + static_cast<std::size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double SymMatrix::quadratic_form(std::span<const double> x) const {
  double acc = 0.0;
  auto ax = apply(x);
  for (int i = 0; i < n_; ++i) acc += x[i] * ax[i];
  return acc;
}

double SymMatrix::max_abs() const {
  double best = 0.0;
  for (double v : a_) best = std::max(best, std::abs(v));
  return best;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u)) a.set(u, v, 1.0);
  return a;
}

SymMatrix normalized_adjacency_matrix(const Graph& g) {
  SymMatrix a(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      a.set(u, v, 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v)));
  return a;
}

SymMatrix modularity_matrix(const Graph& g) {
  int n = g.vertex_count();
  double vol = static_cast<double>(g.volume());
  SymMatrix m = adjacency_matrix(g);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m.set(i, j, m(i, j) - g.degree(i) * g.degree(j) / vol);
  return m;
}

SymMatrix normalized_modularity_matrix(const Graph& g) {
  int n = g.vertex_count();
  double vol = static_cast<double>(g.volume());
  SymMatrix m = normalized_adjacency_matrix(g);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m.set(i, j, m(i, j) - std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j)) / vol);
  return m;
}

SymMatrix combinatorial_laplacian(const Graph& g) {
  int n = g.vertex_count();
  SymMatrix l(n);
  for (int u = 0; u < n; ++u) {
    l.set(u, u, static_cast<double>(g.degree(u)));
    for (int v : g.neighbors(u))
      if (u < v) l.set(u, v, -1.0);
  }
  return l;
}

SymMatrix normalized_laplacian(const Graph& g) {
  int n = g.vertex_count();
  SymMatrix l = normalized_adjacency_matrix(g);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) l.set(i, j, (i == j ? 1.0 : 0.0) - l(i, j));
  return l;
}

SymMatrix rank_one_deflate(const SymMatrix& m, std::span<const double> unit_dir, double c) {
  int n = m.order();
  if (static_cast<int>(unit_dir.size()) != n)
    throw std::invalid_argument("deflation direction has wrong dimension");
  SymMatrix out = m;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.set(i, j, out(i, j) - c * unit_dir[i] * unit_dir[j]);
  return out;
}

}  // namespace modcert
