#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modcert/certificates.hpp"
#include "modcert/graph.hpp"
#include "modcert/modularity.hpp"
#include "modcert/oracle.hpp"

namespace modcert {

inline constexpr const char* kToolName = "modcert";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Plain, JSON-round-trippable mirror structs. Exact rationals are kept as
/// num/den pairs next to a float rendering.

struct ReportRational {
  long long num = 0;
  long long den = 1;
  double value = 0.0;
};

struct ReportGraph {
  int n = 0;
  long long edges = 0;
  long long volume = 0;
  bool connected = false;
  bool bipartite = false;
  std::string classification;  // star|complete|complete_multipartite|other|disconnected
  std::vector<std::vector<int>> parts;
};

struct ReportSpectrum {
  std::string matrix;
  std::vector<double> eigenvalues;
  double max_residual = 0.0;
  int kernel_index = -1;  // position of the known kernel direction, -1 if n/a
};

struct ReportCut {
  std::vector<int> set;
  ReportRational q;
  double q_rel = 0.0;
  double q_norm = 0.0;
  double conductance = 0.0;
  long long e_in = 0;
  long long e_out = 0;
  long long vol_s = 0;
};

struct ReportCertificate {
  std::string name;
  std::string verdict;
  bool hypothesis_ok = false;
  std::map<std::string, double> hypothesis;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<std::vector<int>> domain;
  std::optional<bool> verified_against_oracle;
};

struct ReportCutOptimum {
  ReportRational value;
  std::vector<int> arg;
};

struct ReportPartitionOptimum {
  ReportRational best_q;
  std::vector<std::vector<int>> parts;
  bool all_modules = false;
  std::optional<int> module_count;
};

struct ReportOracle {
  ReportCutOptimum q_cut, q_rcut, q_ncut, conductance;
  std::optional<ReportPartitionOptimum> multiway;
};

struct ReportVerificationLine {
  std::string name;
  bool applicable = false;
  bool ok = true;
  std::string note;
};

struct ReportVerification {
  bool all_ok = true;
  std::vector<ReportVerificationLine> lines;
};

struct ReportNodalDomain {
  std::vector<int> vertices;
  std::vector<int> ambiguous;
  std::optional<ReportCut> cut;
};

struct AnalysisReport {
  int schema = kSchemaVersion;
  std::string tool_name = kToolName;
  std::string tool_version = kToolVersion;
  std::optional<std::string> timestamp;
  double tolerance = 1e-8;
  int oracle_cap = 20;
  ReportGraph graph;
  ReportSpectrum modularity_spectrum;
  ReportSpectrum normalized_spectrum;
  double m_g = 0.0;
  double mu_g = 0.0;
  double mu_1 = 0.0;
  double lambda_2 = 0.0;
  bool m_g_simple = false;
  bool mu_g_simple = false;
  ReportNodalDomain nodal_domain;
  std::vector<ReportCertificate> certificates;
  std::optional<ReportOracle> oracle;
  std::optional<ReportVerification> verification;
};

void to_json(nlohmann::json& j, const ReportRational& r);
void from_json(const nlohmann::json& j, ReportRational& r);
void to_json(nlohmann::json& j, const ReportGraph& r);
void from_json(const nlohmann::json& j, ReportGraph& r);
void to_json(nlohmann::json& j, const ReportSpectrum& r);
void from_json(const nlohmann::json& j, ReportSpectrum& r);
void to_json(nlohmann::json& j, const ReportCut& r);
void from_json(const nlohmann::json& j, ReportCut& r);
void to_json(nlohmann::json& j, const ReportCertificate& r);
void from_json(const nlohmann::json& j, ReportCertificate& r);
void to_json(nlohmann::json& j, const ReportCutOptimum& r);
void from_json(const nlohmann::json& j, ReportCutOptimum& r);
void to_json(nlohmann::json& j, const ReportPartitionOptimum& r);
void from_json(const nlohmann::json& j, ReportPartitionOptimum& r);
void to_json(nlohmann::json& j, const ReportOracle& r);
void from_json(const nlohmann::json& j, ReportOracle& r);
void to_json(nlohmann::json& j, const ReportVerificationLine& r);
void from_json(const nlohmann::json& j, ReportVerificationLine& r);
void to_json(nlohmann::json& j, const ReportVerification& r);
void from_json(const nlohmann::json& j, ReportVerification& r);
void to_json(nlohmann::json& j, const ReportNodalDomain& r);
void from_json(const nlohmann::json& j, ReportNodalDomain& r);
void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

ReportRational make_report_rational(const Rational& q);
ReportCut make_report_cut(const CutReport& cut);
ReportCertificate make_report_certificate(const BoundCertificate& cert);
ReportOracle make_report_oracle(const OracleResult& oracle);
ReportVerification make_report_verification(const VerificationReport& verification);

struct AnalyzeOptions {
  double tolerance = 1e-8;
  int oracle_cap = 20;
  bool force_oracle = false;
  bool with_timestamp = true;
  bool allow_disconnected = false;
  int eigenvector_index = 0;  // which deflated eigenpair feeds the certificates
};

/// Full pipeline: structure, spectra, algebraic modularities, nodal-domain
/// cut, every certificate, and (within the cap) the exhaustive oracle with
/// cross-verification.
AnalysisReport build_analysis_report(const Graph& g, const AnalyzeOptions& options);

std::string current_utc_timestamp();

}  // namespace modcert
