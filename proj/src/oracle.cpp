#include "modcert/oracle.hpp"

#include <bit>
#include <cstdint>
#include <sstream>

#include "modcert/errors.hpp"
#include "modcert/modularity.hpp"

namespace modcert {

namespace {

// Lexicographic order on subsets viewed as sorted vertex lists restricted to
// their symmetric difference: the set containing the smallest non-shared
// vertex comes first.
bool mask_before(std::uint32_t a, std::uint32_t b) {
  std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

std::uint32_t canonical_cut_mask(std::uint32_t s, std::uint32_t full) {
  std::uint32_t c = full & ~s;
  return mask_before(s, c) ? s : c;
}

// One running optimum of an exact fraction num/den (den > 0), tracking the
// canonical argmask. Comparison by 64-bit cross products.
struct Best {
  long long num = 0;
  long long den = 1;
  std::uint32_t mask = 0;
  bool initialized = false;

  void offer(long long n, long long d, std::uint32_t m, bool maximize) {
    if (!initialized) {
      num = n;
      den = d;
      mask = m;
      initialized = true;
      return;
    }
    long long lhs = n * den;
    long long rhs = num * d;
    bool better = maximize ? lhs > rhs : lhs < rhs;
    if (better) {
      num = n;
      den = d;
      mask = m;
    } else if (lhs == rhs && mask_before(m, mask)) {
      mask = m;
    }
  }
};

}  // namespace

OracleResult brute_force_cuts(const Graph& g) {
  int n = g.vertex_count();
  if (n > kOracleCutCap)
    fail(errc::too_large, "cut enumeration capped at n = " + std::to_string(kOracleCutCap));
  long long vol_v = g.volume();
  std::uint32_t full = n >= 32 ? 0xffffffffu : ((std::uint32_t(1) << n) - 1);

  std::vector<std::uint32_t> adj_mask(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) adj_mask[u] |= std::uint32_t(1) << v;

  // Vertex n-1 stays outside S, so each cut {S, S-bar} is visited once.
  Best best_cut, best_rcut, best_ncut, best_h;
  std::uint32_t s = 0;
  long long e_in = 0;
  long long vol_s = 0;
  int count = 0;
  std::uint64_t subsets = std::uint64_t(1) << (n - 1);
  for (std::uint64_t k = 1; k < subsets; ++k) {
    int flip = std::countr_zero(k);
    std::uint32_t bit = std::uint32_t(1) << flip;
    if (s & bit) {
      s ^= bit;
      e_in -= 2 * std::popcount(adj_mask[flip] & s);
      vol_s -= g.degree(flip);
      --count;
    } else {
      e_in += 2 * std::popcount(adj_mask[flip] & s);
      s ^= bit;
      vol_s += g.degree(flip);
      ++count;
    }
    // modularity numerator over the fixed denominator vol V
    long long q_num = e_in * vol_v - vol_s * vol_s;
    long long vol_sbar = vol_v - vol_s;
    long long e_out = vol_s - e_in;
    std::uint32_t canon = canonical_cut_mask(s, full);
    best_cut.offer(2 * q_num, vol_v * vol_v, canon, true);
    best_rcut.offer(q_num * n, vol_v * static_cast<long long>(count) * (n - count), canon, true);
    best_ncut.offer(q_num, vol_s * vol_sbar, canon, true);
    best_h.offer(e_out, std::min(vol_s, vol_sbar), canon, false);
  }

  OracleResult result;
  auto finish = [&](const Best& b) {
    return CutOptimum{Rational(b.num, b.den), VertexSet::from_mask(g, b.mask)};
  };
  result.q_cut = finish(best_cut);
  result.q_rcut = finish(best_rcut);
  result.q_ncut = finish(best_ncut);
  result.conductance = finish(best_h);
  if (n <= kOraclePartitionCap) result.multiway = brute_force_partitions(g);
  return result;
}

PartitionOptimum brute_force_partitions(const Graph& g) {
  int n = g.vertex_count();
  if (n > kOraclePartitionCap)
    fail(errc::too_large,
         "partition enumeration capped at n = " + std::to_string(kOraclePartitionCap));
  long long vol_v = g.volume();
  auto edges = g.edges();

  std::vector<int> assign(n, 0);
  std::vector<int> best_assign;
  long long best_total = 0;
  int best_k = 0;
  bool best_all_modules = false;
  bool have_best = false;

  std::vector<long long> part_vol, part_ein;
  auto evaluate = [&]() {
    int k = 0;
    for (int v = 0; v < n; ++v) k = std::max(k, assign[v] + 1);
    part_vol.assign(k, 0);
    part_ein.assign(k, 0);
    for (int v = 0; v < n; ++v) part_vol[assign[v]] += g.degree(v);
    for (const auto& [u, v] : edges)
      if (assign[u] == assign[v]) part_ein[assign[u]] += 2;
    long long total = 0;
    bool all_modules = true;
    for (int t = 0; t < k; ++t) {
      long long q_num = part_ein[t] * vol_v - part_vol[t] * part_vol[t];
      total += q_num;
      all_modules &= q_num > 0;
    }
    bool better = false;
    if (!have_best || total > best_total) {
      better = true;
    } else if (total == best_total) {
      if (k < best_k) better = true;
      else if (k == best_k && all_modules && !best_all_modules) better = true;
    }
    if (better) {
      best_assign = assign;
      best_total = total;
      best_k = k;
      best_all_modules = all_modules;
      have_best = true;
    }
  };

  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  while (true) {
    evaluate();
    int i = n - 1;
    for (; i >= 1; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, assign[j]);
      if (assign[i] <= prefix_max) break;
    }
    if (i == 0) break;
    ++assign[i];
    for (int j = i + 1; j < n; ++j) assign[j] = 0;
  }

  PartitionOptimum result;
  result.best_q = Rational(best_total, vol_v * vol_v);
  result.all_modules = best_all_modules;
  if (best_all_modules) result.module_count = best_k;
  std::vector<std::vector<int>> members(best_k);
  for (int v = 0; v < n; ++v) members[best_assign[v]].push_back(v);
  for (const auto& part : members) result.partition.emplace_back(g, part);
  return result;
}

namespace {

std::string describe(double claimed, const char* relation, double actual) {
  std::ostringstream os;
  os << claimed << ' ' << relation << ' ' << actual;
  return os.str();
}

}  // namespace

VerificationReport verify_bounds(const Graph& g, std::vector<BoundCertificate>& certificates,
                                 const OracleResult& oracle, double tol) {
  VerificationReport report;
  double q_ncut = oracle.q_ncut.value.to_double();
  double h_g = oracle.conductance.value.to_double();

  for (auto& cert : certificates) {
    VerificationLine line;
    line.name = cert.name;
    switch (cert.name) {
      case CertificateName::SimpleCheeger:
        if (cert.hypothesis_ok) {
          line.applicable = true;
          line.ok = *cert.lower_bound - tol <= q_ncut && q_ncut <= *cert.upper_bound + tol;
          line.note = describe(*cert.lower_bound, "<= q_ncut <=", *cert.upper_bound) +
                      ", oracle q_ncut = " + oracle.q_ncut.value.to_string();
        } else {
          line.note = "hypothesis failed (star), nothing to check";
        }
        break;
      case CertificateName::LaplacianCheeger:
        line.applicable = true;
        line.ok = *cert.lower_bound - tol <= h_g && h_g <= *cert.upper_bound + tol;
        line.note = describe(*cert.lower_bound, "<= h_G <=", *cert.upper_bound) +
                    ", oracle h_G = " + oracle.conductance.value.to_string();
        break;
      case CertificateName::PerturbationCheeger:
        if (cert.verdict == Verdict::Certified) {
          line.applicable = true;
          line.ok = *cert.lower_bound <= q_ncut + tol;
          line.note = describe(*cert.lower_bound, "<= q_ncut =", q_ncut);
        } else {
          line.note = "inconclusive certificate, nothing to check";
        }
        break;
      case CertificateName::ModuleCertA:
      case CertificateName::ModuleCertB:
      case CertificateName::AngleCorollary:
        if (cert.verdict == Verdict::Certified && cert.domain.has_value()) {
          line.applicable = true;
          Rational q = modularity(g, *cert.domain);
          line.ok = q.positive();
          line.note = "claimed Q(S) > 0, exact Q(S) = " + q.to_string();
        } else {
          line.note = "not certified, nothing to check";
        }
        break;
    }
    if (line.applicable) cert.verified_against_oracle = line.ok;
    report.all_ok &= line.ok;
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace modcert
