#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modcert/graph.hpp"

namespace modcert {

enum class CertificateName {
  LaplacianCheeger,
  SimpleCheeger,
  PerturbationCheeger,
  ModuleCertA,
  ModuleCertB,
  AngleCorollary,
};

enum class Verdict { Certified, HypothesisFailed, Inconclusive };

const char* to_string(CertificateName name);
const char* to_string(Verdict verdict);

/// One inequality instance: which theorem, whether its hypothesis held, the
/// scalar evidence, the claimed bound(s), and the oracle cross-check result
/// (filled by verify_bounds when the oracle is available).
struct BoundCertificate {
  CertificateName name;
  Verdict verdict = Verdict::Inconclusive;
  bool hypothesis_ok = false;
  std::map<std::string, double> hypothesis_detail;
  std::optional<double> lower_bound;  // claimed lower bound for the target
  std::optional<double> upper_bound;  // claimed upper bound
  std::optional<VertexSet> domain;    // nodal domain whose modularity is claimed positive
  std::optional<bool> verified_against_oracle;
};

/// Quantities of the step-vector approximation behind the perturbation bound:
/// z = D^{-1/2} v, the nodal domain S of v, the best two-valued step vector
/// (p on S, q elsewhere) in the D-weighted norm, and the distortion ratio r.
struct PerturbationData {
  std::vector<double> z;
  VertexSet domain;
  double step_pos = 0;      // p = c / vol S
  double step_neg = 0;      // q = -c / vol S-bar
  double weighted_sum = 0;  // c = sum_{i in S} d_i z_i
  long long vol_s = 0;
  long long vol_sbar = 0;
  long long vol_total = 0;
  double ratio = 1;     // r >= 1 with r^{-1} <= z_i/x_i <= r
  double constant = 4;  // C = 4 r^4
  double identity_err_diff = 0;    // |(p-q) - c*nu/(s*sbar)|
  double identity_err_energy = 0;  // |p^2 s + q^2 sbar - c^2*nu/(s*sbar)|
};

/// Decomposition data of s = D^{1/2} 1_S against the (delta, v) plane.
struct AngleData {
  double cos_theta = 0;  // angle between |v| and delta
  double beta = 0;       // cos(theta) * sqrt(vol V) / 2
  double alpha = 0;      // vol S / sqrt(vol V)
  double gamma_sq = 0;   // vol S * vol S-bar / vol V - beta^2
};

/// Sum of the positive entries of a zero-sum vector; equals half its 1-norm.
/// Throws NotZeroSum when the entries do not cancel to within 1e-10 relative.
double positive_part_sum(std::span<const double> values);

/// q_ncut sandwich from mu_1: (1 - 2 sqrt(1 - mu_1^2), mu_1). Hypothesis:
/// the graph is not a star.
BoundCertificate simple_cheeger(const Graph& g, double mu1);

/// Conductance sandwich from lambda_2 of the normalized Laplacian:
/// lower lambda_2 / 2; upper sqrt(lambda_2 (2 - lambda_2)) when
/// lambda_2 <= 1, else the general form sqrt(2 lambda_2).
BoundCertificate laplacian_cheeger(const Graph& g);

/// Step-vector data for a unit eigenvector of Mnorm orthogonal to delta.
/// Throws ZeroEntry (vanishing v_i or step value) and DegenerateSide.
PerturbationData perturbation_data(const Graph& g, std::span<const double> v);

/// q_ncut >= 1 - 4 r^4 (1 - mu) for the eigenpair (mu, v).
/// ZeroEntry/DegenerateSide from the data stage yield an Inconclusive verdict.
BoundCertificate perturbation_cheeger(const Graph& g, std::span<const double> v, double mu);

/// Positive-modularity certificate via max_i v_i^2/d_i for a unit
/// eigenvector of a positive eigenvalue mu. Certified claims Q(S) > 0.
BoundCertificate module_cert_a(const Graph& g, std::span<const double> v, double mu);

/// Positive-modularity certificate via the angle between |v| and delta for
/// any real eigenvector of a positive eigenvalue mu. Certified when the
/// theorem hypothesis or the weaker tangent corollary holds.
BoundCertificate module_cert_b(const Graph& g, std::span<const double> v, double mu);

/// The tangent corollary mu > tan^2(theta) alone, as its own certificate.
BoundCertificate angle_corollary(const Graph& g, std::span<const double> v, double mu);

AngleData angle_data(const Graph& g, std::span<const double> v);

}  // namespace modcert
