#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcert/certificates.hpp"
#include "modcert/graph.hpp"
#include "modcert/rational.hpp"

namespace modcert {

inline constexpr int kOracleCutCap = 24;        // 2^(n-1) - 1 proper cuts
inline constexpr int kOraclePartitionCap = 10;  // Bell-number enumeration

struct CutOptimum {
  Rational value;
  VertexSet arg;  // canonical representative among optima and complements
};

struct PartitionOptimum {
  Rational best_q;
  std::vector<VertexSet> partition;
  bool all_modules = false;          // every part has Q(S_i) > 0
  std::optional<int> module_count;   // k of the all-module minimal optimum
};

/// Exact optima over all nonempty proper cuts / all partitions, by
/// exhaustive enumeration in integer arithmetic.
struct OracleResult {
  CutOptimum q_cut;         // max of q(S, S-bar) = 2 Q(S) / vol V
  CutOptimum q_rcut;        // max relative cut modularity
  CutOptimum q_ncut;        // max normalized cut modularity
  CutOptimum conductance;   // min h(S)
  std::optional<PartitionOptimum> multiway;
};

/// Gray-code sweep over the 2^(n-1)-1 cuts with O(1) incremental updates of
/// e_in and vol S. Throws TooLarge beyond the cut cap.
OracleResult brute_force_cuts(const Graph& g);

/// Restricted-growth-string sweep over all partitions of V; reports a
/// maximizer of minimal cardinality, preferring all-module ones among ties.
/// Throws TooLarge beyond the partition cap.
PartitionOptimum brute_force_partitions(const Graph& g);

struct VerificationLine {
  CertificateName name;
  bool applicable = false;  // the certificate made an oracle-checkable claim
  bool ok = true;
  std::string note;
};

struct VerificationReport {
  std::vector<VerificationLine> lines;
  bool all_ok = true;
};

/// Cross-checks every certificate against exact oracle optima, filling
/// verified_against_oracle. Violations beyond the tolerance are reported
/// (never thrown) with a diagnostic note.
VerificationReport verify_bounds(const Graph& g, std::vector<BoundCertificate>& certificates,
                                 const OracleResult& oracle, double tol = 1e-8);

}  // namespace modcert
