#pragma once

#include <span>
#include <vector>

#include "modcert/eigensolver.hpp"
#include "modcert/graph.hpp"

namespace modcert {

/// Extremal Rayleigh quotient of a modularity matrix over the complement of
/// its known kernel direction, with the attaining unit eigenvector.
struct AlgebraicModularity {
  double value = 0.0;
  std::vector<double> vector;
  bool is_simple = false;
  double gap = 0.0;  // distance to the next deflated eigenvalue
};

/// Spectrum of M - volV * (1 1^T / n). Entries 0..n-2 are the spectrum of M
/// restricted to the complement of the ones vector; the last entry is the
/// shifted kernel artifact near -vol V.
Spectrum deflated_modularity_spectrum(const Graph& g);

/// Spectrum of Mnorm - 2 * delta delta^T / vol V; last entry near -2.
Spectrum deflated_normalized_modularity_spectrum(const Graph& g);

/// m_G: max of v^T M v / v^T v over v orthogonal to the ones vector.
/// The attaining eigenvector is oriented so that d^T u >= 0 when possible.
AlgebraicModularity algebraic_modularity(const Graph& g);

/// mu_G: max of v^T Mnorm v / v^T v over v orthogonal to delta. Cross-checks
/// mu_1 = max{0, mu_G} against the undeflated spectrum.
AlgebraicModularity normalized_algebraic_modularity(const Graph& g);

/// Second-smallest eigenvalue of the normalized Laplacian I - Anorm.
double laplacian_lambda2(const Graph& g);

/// Nodal domain S = {i : v_i >= 0} of a vector over the graph's vertices.
VertexSet nodal_domain(const Graph& g, std::span<const double> v);

/// Indices with |v_i| <= tol: sign assignment is numerically ambiguous.
std::vector<int> ambiguous_entries(std::span<const double> v, double tol = 1e-10);

/// True when d is (numerically) an eigenvector of the adjacency matrix,
/// which is exactly the degenerate case for simplicity of m_G.
bool degree_vector_is_adjacency_eigenvector(const Graph& g, double tol = 1e-8);

struct SpectralPredicates {
  bool interlacing = false;                       // alpha_i >= m_i >= alpha_{i+1}
  bool rightmost_matches_structure = false;       // m_1 ~ 0 iff complete multipartite
  bool zero_simple_iff_adjacency_nonsingular = false;
  bool normalized_spectrum_in_range = false;      // spec(Mnorm) in [-1,1]
  bool extreme_values_excluded = false;           // 1 (connected), -1 (non-bipartite)
  bool m_g_simple_when_expected = false;          // simple unless d is an A-eigenvector

  bool all() const {
    return interlacing && rightmost_matches_structure &&
           zero_simple_iff_adjacency_nonsingular && normalized_spectrum_in_range &&
           extreme_values_excluded && m_g_simple_when_expected;
  }
};

SpectralPredicates spectral_predicates(const Graph& g, double tol = 1e-8);

}  // namespace modcert
