#include "modcert/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "modcert/errors.hpp"

namespace modcert {

namespace {

std::vector<double> unit_ones(int n) {
  return std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

std::vector<double> unit_delta(const Graph& g) {
  std::vector<double> w(g.vertex_count());
  double inv = 1.0 / std::sqrt(static_cast<double>(g.volume()));
  for (int v = 0; v < g.vertex_count(); ++v)
    w[v] = std::sqrt(static_cast<double>(g.degree(v))) * inv;
  return w;
}

AlgebraicModularity from_deflated(const Spectrum& spec, double scale) {
  AlgebraicModularity result;
  result.value = spec.values[0];
  result.vector = spec.vectors[0];
  int n = static_cast<int>(spec.values.size());
  result.gap = n > 1 ? spec.values[0] - spec.values[1] : 0.0;
  result.is_simple = n <= 2 || result.gap > 1e-8 * std::max(1.0, scale);
  return result;
}

}  // namespace

Spectrum deflated_modularity_spectrum(const Graph& g) {
  auto m = modularity_matrix(g);
  auto ones = unit_ones(g.vertex_count());
  return eig_sym(rank_one_deflate(m, ones, static_cast<double>(g.volume())));
}

Spectrum deflated_normalized_modularity_spectrum(const Graph& g) {
  auto m = normalized_modularity_matrix(g);
  auto delta = unit_delta(g);
  return eig_sym(rank_one_deflate(m, delta, 2.0));
}

AlgebraicModularity algebraic_modularity(const Graph& g) {
  if (!is_connected(g)) fail(errc::disconnected, "algebraic modularity needs a connected graph");
  auto spec = deflated_modularity_spectrum(g);
  auto result = from_deflated(spec, modularity_matrix(g).max_abs());
  // orientation convention d^T u >= 0, canonical sign kept on a tie
  double dot = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) dot += g.degree(v) * result.vector[v];
  if (dot < -1e-12 * g.volume())
    for (double& x : result.vector) x = -x;
  return result;
}

AlgebraicModularity normalized_algebraic_modularity(const Graph& g) {
  if (!is_connected(g)) fail(errc::disconnected, "algebraic modularity needs a connected graph");
  auto spec = deflated_normalized_modularity_spectrum(g);
  auto result = from_deflated(spec, 1.0);

  auto delta = unit_delta(g);
  double ortho = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) ortho += delta[v] * result.vector[v];
  if (std::abs(ortho) > 1e-8)
    fail(errc::no_convergence, "deflated eigenvector not orthogonal to delta");

  double mu1 = eig_sym(normalized_modularity_matrix(g)).values[0];
  if (std::abs(mu1 - std::max(0.0, result.value)) > 1e-8)
    fail(errc::no_convergence, "mu_1 != max{0, mu_G} beyond tolerance");
  return result;
}

double laplacian_lambda2(const Graph& g) {
  auto spec = eig_sym(normalized_laplacian(g));
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("lambda_2 needs n >= 2");
  return spec.values[n - 2];  // values are descending, second smallest
}

VertexSet nodal_domain(const Graph& g, std::span<const double> v) {
  std::vector<int> members;
  for (int i = 0; i < g.vertex_count(); ++i)
    if (v[i] >= 0.0) members.push_back(i);
  return VertexSet(g, members);
}

std::vector<int> ambiguous_entries(std::span<const double> v, double tol) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) <= tol) out.push_back(static_cast<int>(i));
  return out;
}

bool degree_vector_is_adjacency_eigenvector(const Graph& g, double tol) {
  int n = g.vertex_count();
  std::vector<double> d(n);
  double norm = 0.0;
  for (int v = 0; v < n; ++v) {
    d[v] = static_cast<double>(g.degree(v));
    norm += d[v] * d[v];
  }
  norm = std::sqrt(norm);
  for (double& x : d) x /= norm;
  auto a = adjacency_matrix(g);
  auto ad = a.apply(d);
  double rayleigh = 0.0;
  for (int v = 0; v < n; ++v) rayleigh += d[v] * ad[v];
  double res = 0.0;
  for (int v = 0; v < n; ++v) {
    double diff = ad[v] - rayleigh * d[v];
    res += diff * diff;
  }
  return std::sqrt(res) <= tol * std::max(1.0, a.max_abs());
}

SpectralPredicates spectral_predicates(const Graph& g, double tol) {
  SpectralPredicates out;
  int n = g.vertex_count();

  auto spec_a = eig_sym(adjacency_matrix(g));
  auto m = modularity_matrix(g);
  auto spec_m = eig_sym(m);
  auto spec_mn = eig_sym(normalized_modularity_matrix(g));

  out.interlacing = true;
  for (int i = 0; i < n; ++i) {
    if (spec_a.values[i] < spec_m.values[i] - tol) out.interlacing = false;
    if (i + 1 < n && spec_m.values[i] < spec_a.values[i + 1] - tol) out.interlacing = false;
  }

  double rightmost = spec_m.values[0];
  bool multipartite = classify_structure(g).kind != StructureKind::Other;
  out.rightmost_matches_structure =
      rightmost >= -tol && ((std::abs(rightmost) <= tol) == multipartite);

  double scale_m = std::max(1.0, m.max_abs());
  int zeros_of_m = spec_m.count_within(0.0, tol * scale_m);
  int zeros_of_a = spec_a.count_within(0.0, tol);
  out.zero_simple_iff_adjacency_nonsingular = (zeros_of_m == 1) == (zeros_of_a == 0);

  out.normalized_spectrum_in_range =
      spec_mn.values[0] <= 1.0 + tol && spec_mn.values[n - 1] >= -1.0 - tol;

  out.extreme_values_excluded = true;
  if (is_connected(g) && spec_mn.count_within(1.0, tol) > 0)
    out.extreme_values_excluded = false;
  if (!is_bipartite(g) && spec_mn.count_within(-1.0, tol) > 0)
    out.extreme_values_excluded = false;

  out.m_g_simple_when_expected = degree_vector_is_adjacency_eigenvector(g, tol) ||
                                 algebraic_modularity(g).is_simple;
  return out;
}

}  // namespace modcert
