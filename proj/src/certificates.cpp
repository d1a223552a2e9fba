#include "modcert/certificates.hpp"

#include <algorithm>
#include <cmath>

#include "modcert/errors.hpp"
#include "modcert/spectral.hpp"

namespace modcert {

const char* to_string(CertificateName name) {
  switch (name) {
    case CertificateName::LaplacianCheeger: return "laplacian_cheeger";
    case CertificateName::SimpleCheeger: return "simple_cheeger";
    case CertificateName::PerturbationCheeger: return "perturbation_cheeger";
    case CertificateName::ModuleCertA: return "module_cert_a";
    case CertificateName::ModuleCertB: return "module_cert_b";
    case CertificateName::AngleCorollary: return "angle_corollary";
  }
  return "unknown";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Certified: return "certified";
    case Verdict::HypothesisFailed: return "hypothesis_failed";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr double kMuPositiveThreshold = 1e-8;

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

bool is_star(const Graph& g) {
  return is_connected(g) && classify_structure(g).kind == StructureKind::Star;
}

}  // namespace

double positive_part_sum(std::span<const double> values) {
  double total = 0.0, abs_total = 0.0, positive = 0.0;
  for (double x : values) {
    total += x;
    abs_total += std::abs(x);
    if (x > 0.0) positive += x;
  }
  if (std::abs(total) > 1e-10 * abs_total)
    fail(errc::not_zero_sum, "entries sum to " + std::to_string(total));
  return positive;
}

BoundCertificate simple_cheeger(const Graph& g, double mu1) {
  if (mu1 < -1.0 - 1e-9 || mu1 > 1.0 + 1e-9)
    fail(errc::mu_out_of_range, "mu_1 = " + std::to_string(mu1));
  double mu = std::clamp(mu1, -1.0, 1.0);
  BoundCertificate cert;
  cert.name = CertificateName::SimpleCheeger;
  cert.hypothesis_ok = !is_star(g);
  cert.verdict = cert.hypothesis_ok ? Verdict::Certified : Verdict::HypothesisFailed;
  cert.lower_bound = 1.0 - 2.0 * std::sqrt(1.0 - mu * mu);
  cert.upper_bound = mu;
  cert.hypothesis_detail["mu_1"] = mu1;
  cert.hypothesis_detail["is_star"] = cert.hypothesis_ok ? 0.0 : 1.0;
  return cert;
}

BoundCertificate laplacian_cheeger(const Graph& g) {
  double lambda2 = std::max(0.0, laplacian_lambda2(g));
  BoundCertificate cert;
  cert.name = CertificateName::LaplacianCheeger;
  cert.hypothesis_ok = true;
  cert.verdict = Verdict::Certified;
  cert.lower_bound = lambda2 / 2.0;
  // The improved upper bound sqrt(lambda2 (2 - lambda2)) is only valid for
  // lambda2 <= 1 (it vanishes at lambda2 = 2 while h_G can be 1); fall back
  // to the general sqrt(2 lambda2) beyond that.
  bool improved = lambda2 <= 1.0;
  cert.upper_bound =
      improved ? std::sqrt(lambda2 * (2.0 - lambda2)) : std::sqrt(2.0 * lambda2);
  cert.hypothesis_detail["lambda_2"] = lambda2;
  cert.hypothesis_detail["improved_upper_form"] = improved ? 1.0 : 0.0;
  return cert;
}

PerturbationData perturbation_data(const Graph& g, std::span<const double> v) {
  int n = g.vertex_count();
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  for (int i = 0; i < n; ++i)
    if (std::abs(v[i]) <= 1e-12 * vmax)
      fail(errc::zero_entry, "v_" + std::to_string(i) + " vanishes");

  PerturbationData data;
  data.domain = nodal_domain(g, v);
  if (data.domain.empty() || data.domain.is_full())
    fail(errc::degenerate_side, "nodal domain is empty or all of V");

  data.z.resize(n);
  std::vector<double> weighted(n);
  double abs_weight = 0.0;
  for (int i = 0; i < n; ++i) {
    data.z[i] = v[i] / std::sqrt(static_cast<double>(g.degree(i)));
    weighted[i] = g.degree(i) * data.z[i];
    abs_weight += std::abs(weighted[i]);
  }
  // d^T z = delta^T v = 0, so c is the positive-part sum of the weighted
  // entries (half the 1-norm).
  data.weighted_sum = positive_part_sum(weighted);
  data.vol_s = data.domain.volume();
  data.vol_sbar = g.volume() - data.vol_s;
  data.vol_total = g.volume();
  if (data.weighted_sum <= 1e-12 * abs_weight)
    fail(errc::zero_entry, "step values vanish (c = 0)");
  data.step_pos = data.weighted_sum / data.vol_s;
  data.step_neg = -data.weighted_sum / data.vol_sbar;

  double r = 1.0;
  for (int i = 0; i < n; ++i) {
    double x = data.domain.contains(i) ? data.step_pos : data.step_neg;
    double q = data.z[i] / x;
    r = std::max(r, std::max(q, 1.0 / q));
  }
  data.ratio = r;
  data.constant = 4.0 * r * r * r * r;

  double s = static_cast<double>(data.vol_s);
  double sbar = static_cast<double>(data.vol_sbar);
  double nu = static_cast<double>(data.vol_total);
  double c = data.weighted_sum;
  data.identity_err_diff = std::abs((data.step_pos - data.step_neg) - c * nu / (s * sbar));
  data.identity_err_energy = std::abs(data.step_pos * data.step_pos * s +
                                      data.step_neg * data.step_neg * sbar -
                                      c * c * nu / (s * sbar));
  return data;
}

BoundCertificate perturbation_cheeger(const Graph& g, std::span<const double> v, double mu) {
  BoundCertificate cert;
  cert.name = CertificateName::PerturbationCheeger;
  cert.hypothesis_detail["mu"] = mu;
  try {
    PerturbationData data = perturbation_data(g, v);
    cert.hypothesis_ok = true;
    cert.verdict = Verdict::Certified;
    cert.lower_bound = 1.0 - data.constant * (1.0 - mu);
    cert.domain = data.domain;
    cert.hypothesis_detail["r"] = data.ratio;
    cert.hypothesis_detail["constant"] = data.constant;
    cert.hypothesis_detail["step_p"] = data.step_pos;
    cert.hypothesis_detail["step_q"] = data.step_neg;
    cert.hypothesis_detail["identity_err_diff"] = data.identity_err_diff;
    cert.hypothesis_detail["identity_err_energy"] = data.identity_err_energy;
  } catch (const Error& e) {
    if (e.code() != errc::zero_entry && e.code() != errc::degenerate_side) throw;
    cert.verdict = Verdict::Inconclusive;
    cert.hypothesis_detail[e.code() == errc::zero_entry ? "zero_entry" : "degenerate_side"] = 1.0;
  }
  return cert;
}

namespace {

void require_positive_mu(double mu) {
  if (!(mu > kMuPositiveThreshold))
    fail(errc::non_positive_mu, "mu = " + std::to_string(mu) + " not above 1e-8");
}

}  // namespace

BoundCertificate module_cert_a(const Graph& g, std::span<const double> v, double mu) {
  require_positive_mu(mu);
  if (std::abs(norm2(v) - 1.0) > 1e-8)
    fail(errc::not_unit_norm, "|v|_2 = " + std::to_string(norm2(v)));

  BoundCertificate cert;
  cert.name = CertificateName::ModuleCertA;
  VertexSet s = nodal_domain(g, v);
  cert.domain = s;
  if (s.empty() || s.is_full()) {
    cert.verdict = Verdict::Inconclusive;
    return cert;
  }
  double vol_v = static_cast<double>(g.volume());
  double vol_s = static_cast<double>(s.volume());
  double vol_sbar = vol_v - vol_s;
  double max_ratio = 0.0;
  for (int i = 0; i < g.vertex_count(); ++i)
    max_ratio = std::max(max_ratio, v[i] * v[i] / g.degree(i));
  double threshold = (vol_s * vol_s + vol_sbar * vol_sbar) / vol_v * max_ratio;
  cert.hypothesis_ok = mu > threshold;
  cert.verdict = cert.hypothesis_ok ? Verdict::Certified : Verdict::HypothesisFailed;
  cert.hypothesis_detail["mu"] = mu;
  cert.hypothesis_detail["threshold"] = threshold;
  cert.hypothesis_detail["max_v_sq_over_d"] = max_ratio;
  cert.hypothesis_detail["vol_s"] = vol_s;
  cert.hypothesis_detail["vol_sbar"] = vol_sbar;
  return cert;
}

AngleData angle_data(const Graph& g, std::span<const double> v) {
  int n = g.vertex_count();
  double vnorm = norm2(v);
  if (vnorm == 0.0) fail(errc::zero_cos, "zero vector");
  double vol_v = static_cast<double>(g.volume());
  // cos(theta) = sum_i delta_i |v_i| / (|v| sqrt(vol V)); computed through the
  // positive-part sum of the zero-sum entries delta_i v_i.
  std::vector<double> weighted(n);
  for (int i = 0; i < n; ++i)
    weighted[i] = std::sqrt(static_cast<double>(g.degree(i))) * v[i];
  double positive = positive_part_sum(weighted);
  AngleData data;
  data.cos_theta = 2.0 * positive / (vnorm * std::sqrt(vol_v));
  data.beta = 0.5 * data.cos_theta * std::sqrt(vol_v);
  VertexSet s = nodal_domain(g, v);
  double vol_s = static_cast<double>(s.volume());
  data.alpha = vol_s / std::sqrt(vol_v);
  data.gamma_sq = vol_s * (vol_v - vol_s) / vol_v - data.beta * data.beta;
  return data;
}

namespace {

BoundCertificate angle_certificate(const Graph& g, std::span<const double> v, double mu,
                                   CertificateName which) {
  require_positive_mu(mu);
  BoundCertificate cert;
  cert.name = which;
  AngleData data = angle_data(g, v);
  if (data.cos_theta <= 1e-12) {
    cert.verdict = Verdict::Inconclusive;
    cert.hypothesis_detail["cos_theta"] = data.cos_theta;
    return cert;
  }
  VertexSet s = nodal_domain(g, v);
  cert.domain = s;
  double vol_v = static_cast<double>(g.volume());
  double vol_s = static_cast<double>(s.volume());
  double theorem_rhs =
      4.0 * vol_s * (vol_v - vol_s) / (vol_v * vol_v) / (data.cos_theta * data.cos_theta);
  double tan_sq = 1.0 / (data.cos_theta * data.cos_theta) - 1.0;
  bool theorem_holds = mu + 1.0 > theorem_rhs;
  bool corollary_holds = mu > tan_sq;
  cert.hypothesis_detail["mu"] = mu;
  cert.hypothesis_detail["cos_theta"] = data.cos_theta;
  cert.hypothesis_detail["beta"] = data.beta;
  cert.hypothesis_detail["alpha"] = data.alpha;
  cert.hypothesis_detail["gamma_sq"] = data.gamma_sq;
  cert.hypothesis_detail["theorem_rhs"] = theorem_rhs;
  cert.hypothesis_detail["tan_sq"] = tan_sq;
  cert.hypothesis_ok = which == CertificateName::AngleCorollary
                           ? corollary_holds
                           : (theorem_holds || corollary_holds);
  cert.verdict = cert.hypothesis_ok ? Verdict::Certified : Verdict::HypothesisFailed;
  return cert;
}

}  // namespace

BoundCertificate module_cert_b(const Graph& g, std::span<const double> v, double mu) {
  return angle_certificate(g, v, mu, CertificateName::ModuleCertB);
}

BoundCertificate angle_corollary(const Graph& g, std::span<const double> v, double mu) {
  return angle_certificate(g, v, mu, CertificateName::AngleCorollary);
}

}  // namespace modcert
