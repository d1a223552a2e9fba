#include "modcert/modularity.hpp"

#include <algorithm>
#include <stdexcept>

#include "modcert/errors.hpp"

namespace modcert {

Rational modularity(const Graph& g, const VertexSet& s) {
  long long vol_v = g.volume();
  long long vol_s = s.volume();
  long long e_in = internal_edge_ends(g, s);
  long long e_out = vol_s - e_in;
  Rational from_inside = Rational(e_in) - Rational(vol_s * vol_s, vol_v);
  Rational from_boundary =
      Rational(vol_s * (vol_v - vol_s), vol_v) - Rational(e_out);
  if (from_inside != from_boundary)
    throw std::logic_error("modularity closed forms disagree");
  return from_inside;
}

double partition_modularity(const Graph& g, std::span<const VertexSet> parts) {
  int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  for (const auto& part : parts) {
    for (int v : part.vertices()) {
      if (covered[v]) fail(errc::not_a_partition, "vertex " + std::to_string(v) + " repeated");
      covered[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) fail(errc::not_a_partition, "vertex " + std::to_string(v) + " uncovered");
  Rational sum = 0;
  for (const auto& part : parts) sum = sum + modularity(g, part);
  return (sum / Rational(g.volume())).to_double();
}

namespace {

void require_proper(const VertexSet& s) {
  if (s.empty() || s.is_full()) fail(errc::empty_side, "cut side must be a proper nonempty subset");
}

}  // namespace

Rational q_rel_exact(const Graph& g, const VertexSet& s) {
  require_proper(s);
  long long n = g.vertex_count();
  long long size_s = s.size();
  return modularity(g, s) * Rational(n, size_s * (n - size_s));
}

Rational q_norm_exact(const Graph& g, const VertexSet& s) {
  require_proper(s);
  long long vol_v = g.volume();
  long long vol_s = s.volume();
  return modularity(g, s) * Rational(vol_v, vol_s * (vol_v - vol_s));
}

Rational conductance_exact(const Graph& g, const VertexSet& s) {
  require_proper(s);
  long long vol_s = s.volume();
  long long e_out = boundary_edge_count(g, s);
  return Rational(e_out, std::min(vol_s, g.volume() - vol_s));
}

CutReport cut_functionals(const Graph& g, const VertexSet& s) {
  require_proper(s);
  CutReport report;
  report.set = s;
  report.modularity_q = modularity(g, s);
  report.q_rel = q_rel_exact(g, s).to_double();
  report.q_norm = q_norm_exact(g, s).to_double();
  report.conductance = conductance_exact(g, s).to_double();
  report.vol_s = s.volume();
  report.e_in = internal_edge_ends(g, s);
  report.e_out = report.vol_s - report.e_in;
  return report;
}

bool sandwich_check(const Graph& g, double q_cut, double q_rcut, double q_ncut) {
  constexpr double tol = 1e-12;
  if (q_cut <= tol) return true;  // no positive-modularity cut, chains vacuous
  double n = g.vertex_count();
  double d_max = g.max_degree();
  double vol_v = static_cast<double>(g.volume());
  bool rel_chain = 2.0 * q_rcut / (n * d_max) <= q_cut + tol && q_cut <= q_rcut / 2.0 + tol;
  bool norm_chain = 2.0 * q_ncut / vol_v <= q_cut + tol && q_cut <= q_ncut / 2.0 + tol;
  return rel_chain && norm_chain;
}

}  // namespace modcert
