#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "modcert/errors.hpp"
#include "modcert/generators.hpp"
#include "modcert/spectral.hpp"
#include "test_graphs.hpp"

using namespace modcert;
using modcert::testing::barbell;
using modcert::testing::matched_cliques;

TEST_CASE("modularity matrix entries and kernel") {
  Graph k2 = make_complete(2);
  SymMatrix m2 = modularity_matrix(k2);
  CHECK(m2(0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(m2(0, 1) == doctest::Approx(0.5).epsilon(1e-15));

  Graph k3 = make_complete(3);
  SymMatrix m3 = modularity_matrix(k3);
  CHECK(m3(0, 0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
  CHECK(m3(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    SymMatrix m = modularity_matrix(g);
    std::vector<double> ones(g.vertex_count(), 1.0);
    for (double row_sum : m.apply(ones)) CHECK(std::abs(row_sum) <= 1e-12);
  }
}

TEST_CASE("normalized modularity matrix entries and kernel") {
  Graph k2 = make_complete(2);
  SymMatrix m2 = normalized_modularity_matrix(k2);
  CHECK(m2(0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(m2(0, 1) == doctest::Approx(0.5).epsilon(1e-15));

  Graph k3 = make_complete(3);
  SymMatrix m3 = normalized_modularity_matrix(k3);
  CHECK(m3(0, 0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(m3(0, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    SymMatrix m = normalized_modularity_matrix(g);
    std::vector<double> delta(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      delta[v] = std::sqrt(static_cast<double>(g.degree(v)));
    for (double entry : m.apply(delta)) CHECK(std::abs(entry) <= 1e-12);
  }
}

TEST_CASE("algebraic modularity m_G") {
  CHECK(algebraic_modularity(make_complete(3)).value == doctest::Approx(-1.0).epsilon(1e-12));
  AlgebraicModularity barbell_m = algebraic_modularity(barbell());
  CHECK(barbell_m.value > 0.0);
  CHECK(barbell_m.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(barbell_m.is_simple);
  // orientation convention d^T u >= 0; the barbell eigenvector is exactly
  // antisymmetric under the triangle swap, so the dot product is a zero tie
  Graph g = barbell();
  double dot = 0.0;
  for (int v = 0; v < 6; ++v) dot += g.degree(v) * barbell_m.vector[v];
  CHECK(dot >= -1e-10 * g.volume());

  for (const auto& [name, gg] : modcert::testing::corpus()) {
    CAPTURE(name);
    double rho = eig_sym(adjacency_matrix(gg)).values[0];
    CHECK(algebraic_modularity(gg).value < rho);
  }
}

TEST_CASE("normalized algebraic modularity mu_G") {
  CHECK(normalized_algebraic_modularity(make_cycle(4)).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(normalized_algebraic_modularity(make_complete(3)).value ==
        doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(normalized_algebraic_modularity(make_cycle(6)).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(normalized_algebraic_modularity(matched_cliques()).value ==
        doctest::Approx(0.5).epsilon(1e-12));

  // attaining vector is orthogonal to delta
  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    AlgebraicModularity mu = normalized_algebraic_modularity(g);
    double dot = 0.0, norm = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      double dv = std::sqrt(static_cast<double>(g.degree(v)));
      dot += dv * mu.vector[v];
      norm += g.degree(v);
    }
    CHECK(std::abs(dot) / std::sqrt(norm) <= 1e-8);
  }
}

TEST_CASE("lambda_2 of the normalized Laplacian") {
  CHECK(laplacian_lambda2(make_cycle(6)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(laplacian_lambda2(make_complete(3)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(laplacian_lambda2(make_cycle(4)) == doctest::Approx(1.0).epsilon(1e-12));
  // disconnected graphs have lambda_2 = 0
  std::vector<std::pair<int, int>> disjoint = {{0, 1}, {2, 3}};
  CHECK(laplacian_lambda2(Graph::build(4, disjoint)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("nodal domain extraction and barbell leading eigenvector") {
  Graph g = barbell();
  AlgebraicModularity mu = normalized_algebraic_modularity(g);
  CHECK(mu.value == doctest::Approx(0.7953336454431278).epsilon(1e-10));
  VertexSet s = nodal_domain(g, mu.vector);
  CHECK(s.vertices() == std::vector<int>{0, 1, 2});
  CHECK(ambiguous_entries(mu.vector).empty());
  CHECK(induces_connected_subgraph(g, s));

  std::vector<double> with_zero = {0.5, 0.0, -0.5};
  Graph p3 = make_path(3);
  CHECK(nodal_domain(p3, with_zero).vertices() == std::vector<int>{0, 1});
  CHECK(ambiguous_entries(with_zero) == std::vector<int>{1});
}

TEST_CASE("spectral predicates hold on reference graphs") {
  for (const auto& g : {make_cycle(4), make_cycle(6), barbell(), make_complete(4),
                        matched_cliques(), make_path(7)}) {
    SpectralPredicates p = spectral_predicates(g);
    CHECK(p.interlacing);
    CHECK(p.rightmost_matches_structure);
    CHECK(p.zero_simple_iff_adjacency_nonsingular);
    CHECK(p.normalized_spectrum_in_range);
    CHECK(p.extreme_values_excluded);
    CHECK(p.m_g_simple_when_expected);
  }
  // Stars break the simplicity claim: d is not an adjacency eigenvector, yet
  // m_G = 0 carries every leaf difference, so the predicate reports false.
  SpectralPredicates star = spectral_predicates(make_star(5));
  CHECK(star.interlacing);
  CHECK(star.rightmost_matches_structure);
  CHECK(star.normalized_spectrum_in_range);
  CHECK(!star.m_g_simple_when_expected);
}

TEST_CASE("bipartite cycles carry -1 in the normalized spectrum") {
  Spectrum spec = eig_sym(normalized_modularity_matrix(make_cycle(6)));
  CHECK(spec.count_within(-1.0, 1e-8) == 1);
}

TEST_CASE("normalized modularity and adjacency coincide off delta") {
  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    SymMatrix mn = normalized_modularity_matrix(g);
    SymMatrix an = normalized_adjacency_matrix(g);
    Spectrum spec = deflated_normalized_modularity_spectrum(g);
    int pairs = g.vertex_count() - 1;  // last entry is the deflated kernel artifact
    for (int k = 0; k < pairs; ++k) {
      const auto& v = spec.vectors[k];
      auto mv = mn.apply(v);
      auto av = an.apply(v);
      double diff = 0.0;
      for (int i = 0; i < g.vertex_count(); ++i) diff = std::max(diff, std::abs(mv[i] - av[i]));
      CHECK(diff <= 1e-8);
    }
  }
}

TEST_CASE("modularity matrix eigen-residuals across the corpus") {
  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    Spectrum spec = eig_sym(modularity_matrix(g));
    CHECK(spec.max_residual() <= 1e-8 * g.vertex_count());
  }
}

TEST_CASE("congruence keeps inertia: M and Mnorm share signs") {
  for (const auto& [name, g] : modcert::testing::corpus()) {
    CAPTURE(name);
    Spectrum m = eig_sym(modularity_matrix(g));
    Spectrum mn = eig_sym(normalized_modularity_matrix(g));
    double scale = std::max(1.0, modularity_matrix(g).max_abs());
    CHECK(m.count_greater(1e-8 * scale) == mn.count_greater(1e-8));
    CHECK(m.count_less(-1e-8 * scale) == mn.count_less(-1e-8));
  }
}

TEST_CASE("disconnected graphs are rejected by the algebraic ops") {
  std::vector<std::pair<int, int>> disjoint = {{0, 1}, {2, 3}};
  Graph g = Graph::build(4, disjoint);
  CHECK_THROWS_AS(algebraic_modularity(g), Error);
  CHECK_THROWS_AS(normalized_algebraic_modularity(g), Error);
}
