#include "modcert/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

#include "modcert/errors.hpp"
#include "modcert/spectral.hpp"

namespace modcert {

using nlohmann::json;

namespace {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
  if (value.has_value()) j[key] = *value;
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& value) {
  if (j.contains(key) && !j.at(key).is_null())
    value = j.at(key).get<T>();
  else
    value.reset();
}

}  // namespace

void to_json(json& j, const ReportRational& r) {
  j = json{{"num", r.num}, {"den", r.den}, {"value", r.value}};
}
void from_json(const json& j, ReportRational& r) {
  j.at("num").get_to(r.num);
  j.at("den").get_to(r.den);
  j.at("value").get_to(r.value);
}

void to_json(json& j, const ReportGraph& r) {
  j = json{{"n", r.n},
           {"edges", r.edges},
           {"volume", r.volume},
           {"connected", r.connected},
           {"bipartite", r.bipartite},
           {"classification", r.classification},
           {"parts", r.parts}};
}
void from_json(const json& j, ReportGraph& r) {
  j.at("n").get_to(r.n);
  j.at("edges").get_to(r.edges);
  j.at("volume").get_to(r.volume);
  j.at("connected").get_to(r.connected);
  j.at("bipartite").get_to(r.bipartite);
  j.at("classification").get_to(r.classification);
  j.at("parts").get_to(r.parts);
}

void to_json(json& j, const ReportSpectrum& r) {
  j = json{{"matrix", r.matrix},
           {"eigenvalues", r.eigenvalues},
           {"max_residual", r.max_residual},
           {"kernel_index", r.kernel_index}};
}
void from_json(const json& j, ReportSpectrum& r) {
  j.at("matrix").get_to(r.matrix);
  j.at("eigenvalues").get_to(r.eigenvalues);
  j.at("max_residual").get_to(r.max_residual);
  j.at("kernel_index").get_to(r.kernel_index);
}

void to_json(json& j, const ReportCut& r) {
  j = json{{"set", r.set},
           {"q", r.q},
           {"q_rel", r.q_rel},
           {"q_norm", r.q_norm},
           {"conductance", r.conductance},
           {"e_in", r.e_in},
           {"e_out", r.e_out},
           {"vol_s", r.vol_s}};
}
void from_json(const json& j, ReportCut& r) {
  j.at("set").get_to(r.set);
  j.at("q").get_to(r.q);
  j.at("q_rel").get_to(r.q_rel);
  j.at("q_norm").get_to(r.q_norm);
  j.at("conductance").get_to(r.conductance);
  j.at("e_in").get_to(r.e_in);
  j.at("e_out").get_to(r.e_out);
  j.at("vol_s").get_to(r.vol_s);
}

void to_json(json& j, const ReportCertificate& r) {
  j = json{{"name", r.name},
           {"verdict", r.verdict},
           {"hypothesis_ok", r.hypothesis_ok},
           {"hypothesis", r.hypothesis}};
  put_optional(j, "lower", r.lower);
  put_optional(j, "upper", r.upper);
  put_optional(j, "domain", r.domain);
  put_optional(j, "verified_against_oracle", r.verified_against_oracle);
}
void from_json(const json& j, ReportCertificate& r) {
  j.at("name").get_to(r.name);
  j.at("verdict").get_to(r.verdict);
  j.at("hypothesis_ok").get_to(r.hypothesis_ok);
  j.at("hypothesis").get_to(r.hypothesis);
  get_optional(j, "lower", r.lower);
  get_optional(j, "upper", r.upper);
  get_optional(j, "domain", r.domain);
  get_optional(j, "verified_against_oracle", r.verified_against_oracle);
}

void to_json(json& j, const ReportCutOptimum& r) {
  j = json{{"value", r.value}, {"arg", r.arg}};
}
void from_json(const json& j, ReportCutOptimum& r) {
  j.at("value").get_to(r.value);
  j.at("arg").get_to(r.arg);
}

void to_json(json& j, const ReportPartitionOptimum& r) {
  j = json{{"best_q", r.best_q}, {"parts", r.parts}, {"all_modules", r.all_modules}};
  put_optional(j, "module_count", r.module_count);
}
void from_json(const json& j, ReportPartitionOptimum& r) {
  j.at("best_q").get_to(r.best_q);
  j.at("parts").get_to(r.parts);
  j.at("all_modules").get_to(r.all_modules);
  get_optional(j, "module_count", r.module_count);
}

void to_json(json& j, const ReportOracle& r) {
  j = json{{"q_cut", r.q_cut},
           {"q_rcut", r.q_rcut},
           {"q_ncut", r.q_ncut},
           {"conductance", r.conductance}};
  put_optional(j, "multiway", r.multiway);
}
void from_json(const json& j, ReportOracle& r) {
  j.at("q_cut").get_to(r.q_cut);
  j.at("q_rcut").get_to(r.q_rcut);
  j.at("q_ncut").get_to(r.q_ncut);
  j.at("conductance").get_to(r.conductance);
  get_optional(j, "multiway", r.multiway);
}

void to_json(json& j, const ReportVerificationLine& r) {
  j = json{{"name", r.name}, {"applicable", r.applicable}, {"ok", r.ok}, {"note", r.note}};
}
void from_json(const json& j, ReportVerificationLine& r) {
  j.at("name").get_to(r.name);
  j.at("applicable").get_to(r.applicable);
  j.at("ok").get_to(r.ok);
  j.at("note").get_to(r.note);
}

void to_json(json& j, const ReportVerification& r) {
  j = json{{"all_ok", r.all_ok}, {"lines", r.lines}};
}
void from_json(const json& j, ReportVerification& r) {
  j.at("all_ok").get_to(r.all_ok);
  j.at("lines").get_to(r.lines);
}

void to_json(json& j, const ReportNodalDomain& r) {
  j = json{{"vertices", r.vertices}, {"ambiguous", r.ambiguous}};
  put_optional(j, "cut", r.cut);
}
void from_json(const json& j, ReportNodalDomain& r) {
  j.at("vertices").get_to(r.vertices);
  j.at("ambiguous").get_to(r.ambiguous);
  get_optional(j, "cut", r.cut);
}

void to_json(json& j, const AnalysisReport& r) {
  j = json{{"schema", r.schema},
           {"tool", json{{"name", r.tool_name}, {"version", r.tool_version}}},
           {"tolerance", r.tolerance},
           {"oracle_cap", r.oracle_cap},
           {"graph", r.graph},
           {"spectra", json{{"modularity", r.modularity_spectrum},
                            {"normalized_modularity", r.normalized_spectrum}}},
           {"algebraic", json{{"m_g", r.m_g},
                              {"mu_g", r.mu_g},
                              {"mu_1", r.mu_1},
                              {"lambda_2", r.lambda_2},
                              {"m_g_simple", r.m_g_simple},
                              {"mu_g_simple", r.mu_g_simple}}},
           {"nodal_domain", r.nodal_domain},
           {"certificates", r.certificates}};
  put_optional(j, "timestamp", r.timestamp);
  put_optional(j, "oracle", r.oracle);
  put_optional(j, "verification", r.verification);
}
void from_json(const json& j, AnalysisReport& r) {
  j.at("schema").get_to(r.schema);
  j.at("tool").at("name").get_to(r.tool_name);
  j.at("tool").at("version").get_to(r.tool_version);
  j.at("tolerance").get_to(r.tolerance);
  j.at("oracle_cap").get_to(r.oracle_cap);
  j.at("graph").get_to(r.graph);
  j.at("spectra").at("modularity").get_to(r.modularity_spectrum);
  j.at("spectra").at("normalized_modularity").get_to(r.normalized_spectrum);
  j.at("algebraic").at("m_g").get_to(r.m_g);
  j.at("algebraic").at("mu_g").get_to(r.mu_g);
  j.at("algebraic").at("mu_1").get_to(r.mu_1);
  j.at("algebraic").at("lambda_2").get_to(r.lambda_2);
  j.at("algebraic").at("m_g_simple").get_to(r.m_g_simple);
  j.at("algebraic").at("mu_g_simple").get_to(r.mu_g_simple);
  j.at("nodal_domain").get_to(r.nodal_domain);
  j.at("certificates").get_to(r.certificates);
  get_optional(j, "timestamp", r.timestamp);
  get_optional(j, "oracle", r.oracle);
  get_optional(j, "verification", r.verification);
}

ReportRational make_report_rational(const Rational& q) {
  return ReportRational{q.num(), q.den(), q.to_double()};
}

ReportCut make_report_cut(const CutReport& cut) {
  ReportCut out;
  out.set = cut.set.vertices();
  out.q = make_report_rational(cut.modularity_q);
  out.q_rel = cut.q_rel;
  out.q_norm = cut.q_norm;
  out.conductance = cut.conductance;
  out.e_in = cut.e_in;
  out.e_out = cut.e_out;
  out.vol_s = cut.vol_s;
  return out;
}

ReportCertificate make_report_certificate(const BoundCertificate& cert) {
  ReportCertificate out;
  out.name = to_string(cert.name);
  out.verdict = to_string(cert.verdict);
  out.hypothesis_ok = cert.hypothesis_ok;
  out.hypothesis = cert.hypothesis_detail;
  out.lower = cert.lower_bound;
  out.upper = cert.upper_bound;
  if (cert.domain.has_value()) out.domain = cert.domain->vertices();
  out.verified_against_oracle = cert.verified_against_oracle;
  return out;
}

ReportOracle make_report_oracle(const OracleResult& oracle) {
  auto conv = [](const CutOptimum& o) {
    return ReportCutOptimum{make_report_rational(o.value), o.arg.vertices()};
  };
  ReportOracle out;
  out.q_cut = conv(oracle.q_cut);
  out.q_rcut = conv(oracle.q_rcut);
  out.q_ncut = conv(oracle.q_ncut);
  out.conductance = conv(oracle.conductance);
  if (oracle.multiway.has_value()) {
    ReportPartitionOptimum part;
    part.best_q = make_report_rational(oracle.multiway->best_q);
    for (const auto& p : oracle.multiway->partition) part.parts.push_back(p.vertices());
    part.all_modules = oracle.multiway->all_modules;
    part.module_count = oracle.multiway->module_count;
    out.multiway = std::move(part);
  }
  return out;
}

ReportVerification make_report_verification(const VerificationReport& verification) {
  ReportVerification out;
  out.all_ok = verification.all_ok;
  for (const auto& line : verification.lines)
    out.lines.push_back(ReportVerificationLine{to_string(line.name), line.applicable,
                                               line.ok, line.note});
  return out;
}

std::string current_utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

int kernel_index(const Spectrum& spec, const std::vector<double>& unit_dir) {
  int best = -1;
  double best_dot = 0.0;
  for (std::size_t k = 0; k < spec.vectors.size(); ++k) {
    double dot = 0.0;
    for (std::size_t i = 0; i < unit_dir.size(); ++i) dot += spec.vectors[k][i] * unit_dir[i];
    if (std::abs(dot) > best_dot) {
      best_dot = std::abs(dot);
      best = static_cast<int>(k);
    }
  }
  return best;
}

std::vector<double> unit_ones_vec(int n) {
  return std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

std::vector<double> unit_delta_vec(const Graph& g) {
  std::vector<double> w(g.vertex_count());
  double inv = 1.0 / std::sqrt(static_cast<double>(g.volume()));
  for (int v = 0; v < g.vertex_count(); ++v)
    w[v] = std::sqrt(static_cast<double>(g.degree(v))) * inv;
  return w;
}

}  // namespace

AnalysisReport build_analysis_report(const Graph& g, const AnalyzeOptions& options) {
  bool connected = is_connected(g);
  if (!connected && !options.allow_disconnected)
    fail(errc::disconnected, "input graph is disconnected (pass --allow-disconnected to override)");

  AnalysisReport report;
  if (options.with_timestamp) report.timestamp = current_utc_timestamp();
  report.tolerance = options.tolerance;
  report.oracle_cap = options.oracle_cap;

  int n = g.vertex_count();
  report.graph.n = n;
  report.graph.edges = g.edge_count();
  report.graph.volume = g.volume();
  report.graph.connected = connected;
  report.graph.bipartite = is_bipartite(g);
  if (connected) {
    Classification cls = classify_structure(g);
    report.graph.classification = to_string(cls.kind);
    if (cls.kind != StructureKind::Other) report.graph.parts = cls.parts;
  } else {
    report.graph.classification = "disconnected";
  }

  auto spec_m = eig_sym(modularity_matrix(g));
  auto spec_mn = eig_sym(normalized_modularity_matrix(g));
  report.modularity_spectrum =
      ReportSpectrum{"M", spec_m.values, spec_m.max_residual(), kernel_index(spec_m, unit_ones_vec(n))};
  report.normalized_spectrum =
      ReportSpectrum{"Mnorm", spec_mn.values, spec_mn.max_residual(),
                     kernel_index(spec_mn, unit_delta_vec(g))};

  auto deflated_m = deflated_modularity_spectrum(g);
  auto deflated_mn = deflated_normalized_modularity_spectrum(g);
  double scale_m = std::max(1.0, modularity_matrix(g).max_abs());
  report.m_g = deflated_m.values[0];
  report.mu_g = deflated_mn.values[0];
  report.mu_1 = spec_mn.values[0];
  report.m_g_simple = n <= 2 || deflated_m.values[0] - deflated_m.values[1] > 1e-8 * scale_m;
  report.mu_g_simple = n <= 2 || deflated_mn.values[0] - deflated_mn.values[1] > 1e-8;
  report.lambda_2 = laplacian_lambda2(g);

  int pair_count = std::max(1, n - 1);  // deflated eigenpairs exclude the kernel artifact
  int k = options.eigenvector_index;
  if (k < 0 || k >= pair_count)
    fail(errc::index_out_of_range, "eigenvector index " + std::to_string(k) + " not in [0, " +
                                       std::to_string(pair_count - 1) + "]");
  const auto& v = deflated_mn.vectors[k];
  double mu_k = deflated_mn.values[k];

  VertexSet domain = nodal_domain(g, v);
  report.nodal_domain.vertices = domain.vertices();
  report.nodal_domain.ambiguous = ambiguous_entries(v);
  if (!domain.empty() && !domain.is_full())
    report.nodal_domain.cut = make_report_cut(cut_functionals(g, domain));

  std::vector<BoundCertificate> certificates;
  certificates.push_back(laplacian_cheeger(g));
  certificates.push_back(simple_cheeger(g, report.mu_1));
  certificates.push_back(perturbation_cheeger(g, v, mu_k));
  auto push_module_cert = [&](auto&& fn, CertificateName name) {
    try {
      certificates.push_back(fn(g, v, mu_k));
    } catch (const Error& e) {
      if (e.code() != errc::non_positive_mu) throw;
      BoundCertificate cert;
      cert.name = name;
      cert.verdict = Verdict::Inconclusive;
      cert.hypothesis_detail["mu"] = mu_k;
      certificates.push_back(std::move(cert));
    }
  };
  push_module_cert([](const Graph& gg, std::span<const double> vv, double mm) {
    return module_cert_a(gg, vv, mm);
  }, CertificateName::ModuleCertA);
  push_module_cert([](const Graph& gg, std::span<const double> vv, double mm) {
    return module_cert_b(gg, vv, mm);
  }, CertificateName::ModuleCertB);
  push_module_cert([](const Graph& gg, std::span<const double> vv, double mm) {
    return angle_corollary(gg, vv, mm);
  }, CertificateName::AngleCorollary);

  bool run_oracle = options.force_oracle || n <= options.oracle_cap;
  if (run_oracle && n > kOracleCutCap)
    fail(errc::too_large, "exhaustive verification is capped at n = " +
                              std::to_string(kOracleCutCap));
  if (run_oracle) {
    OracleResult oracle = brute_force_cuts(g);
    VerificationReport verification =
        verify_bounds(g, certificates, oracle, options.tolerance);
    report.oracle = make_report_oracle(oracle);
    report.verification = make_report_verification(verification);
  }

  for (const auto& cert : certificates)
    report.certificates.push_back(make_report_certificate(cert));
  return report;
}

}  // namespace modcert
