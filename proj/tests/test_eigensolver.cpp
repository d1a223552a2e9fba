#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "modcert/eigensolver.hpp"
#include "modcert/generators.hpp"
#include "test_graphs.hpp"

using namespace modcert;

TEST_CASE("two by two exchange matrix") {
  SymMatrix m(2);
  m.set(0, 1, 1.0);
  Spectrum spec = eig_sym(m);
  CHECK(spec.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spec.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(spec.vectors[0][0] == doctest::Approx(inv_sqrt2));
  CHECK(spec.vectors[0][1] == doctest::Approx(inv_sqrt2));
  // canonical sign: the largest-magnitude entry (tie -> index 0) is positive
  CHECK(spec.vectors[1][0] > 0.0);
  CHECK(spec.vectors[1][1] == doctest::Approx(-inv_sqrt2));
}

TEST_CASE("normalized adjacency of cycles has cosine eigenvalues") {
  auto check_cycle = [&](int n, const std::vector<double>& expected) {
    Spectrum spec = eig_sym(normalized_adjacency_matrix(make_cycle(n)));
    REQUIRE(spec.values.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(spec.values[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  };
  check_cycle(4, {1.0, 0.0, 0.0, -1.0});
  check_cycle(6, {1.0, 0.5, 0.5, -0.5, -0.5, -1.0});
}

TEST_CASE("diagonal matrices sort descending") {
  SymMatrix m(4);
  m.set(0, 0, -3.0);
  m.set(1, 1, 7.0);
  m.set(2, 2, 0.5);
  m.set(3, 3, 7.0);
  Spectrum spec = eig_sym(m);
  CHECK(spec.values == std::vector<double>{7.0, 7.0, 0.5, -3.0});
}

TEST_CASE("degenerate inputs: zero matrix and scaled identity") {
  Spectrum zero = eig_sym(SymMatrix(5));
  CHECK(zero.values == std::vector<double>(5, 0.0));
  CHECK(zero.orthogonality_defect() <= 1e-14);
  CHECK(zero.max_residual() == 0.0);

  SymMatrix ident(6);
  for (int i = 0; i < 6; ++i) ident.set(i, i, -2.5);
  Spectrum spec = eig_sym(ident);
  CHECK(spec.values == std::vector<double>(6, -2.5));
  CHECK(spec.orthogonality_defect() <= 1e-14);
}

TEST_CASE("random symmetric matrices: residuals, orthogonality, invariants") {
  std::mt19937_64 rng(123);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n : {1, 2, 3, 5, 8, 13, 21, 40}) {
    SymMatrix m(n);
    double trace = 0.0, frob_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double x = gauss(rng);
        m.set(i, j, x);
        frob_sq += (i == j ? 1.0 : 2.0) * x * x;
        if (i == j) trace += x;
      }
    }
    Spectrum spec = eig_sym(m);
    CHECK(spec.max_residual() <= 1e-12 * n * std::max(1.0, m.max_abs()));
    CHECK(spec.orthogonality_defect() <= 1e-10);
    double eig_sum = 0.0, eig_sq = 0.0;
    for (double v : spec.values) {
      eig_sum += v;
      eig_sq += v * v;
    }
    CHECK(eig_sum == doctest::Approx(trace).epsilon(1e-10));
    CHECK(eig_sq == doctest::Approx(frob_sq).epsilon(1e-10));
    for (std::size_t i = 0; i + 1 < spec.values.size(); ++i)
      CHECK(spec.values[i] >= spec.values[i + 1]);
  }
}

TEST_CASE("medium-size graph matrices stay accurate") {
  Graph g = make_planted_partition(std::vector<int>{60, 60, 60}, 0.3, 0.02, 11);
  int n = g.vertex_count();
  SymMatrix mn = normalized_modularity_matrix(g);
  Spectrum spec = eig_sym(mn);
  CHECK(spec.max_residual() <= 1e-10 * n);
  CHECK(spec.orthogonality_defect() <= 1e-8);
  CHECK(spec.values[0] <= 1.0 + 1e-8);
  CHECK(spec.values[n - 1] >= -1.0 - 1e-8);
  // the delta direction carries the zero eigenvalue
  CHECK(spec.count_within(0.0, 1e-8) >= 1);
}

TEST_CASE("deterministic output across repeated runs") {
  SymMatrix m = normalized_adjacency_matrix(modcert::testing::barbell());
  Spectrum a = eig_sym(m);
  Spectrum b = eig_sym(m);
  CHECK(a.values == b.values);
  for (std::size_t k = 0; k < a.vectors.size(); ++k) CHECK(a.vectors[k] == b.vectors[k]);
}

TEST_CASE("order cap") {
  CHECK_THROWS(eig_sym(SymMatrix(kEigOrderCap + 1)));
}
