#pragma once

#include <span>

#include "modcert/graph.hpp"
#include "modcert/rational.hpp"

namespace modcert {

/// All modularity and conductance functionals of one cut {S, S-bar}.
struct CutReport {
  VertexSet set;
  Rational modularity_q;  // Newman-Girvan Q(S), exact
  double q_rel = 0;       // Q(S) * n / (|S| |S-bar|)
  double q_norm = 0;      // Q(S) * vol V / (vol S * vol S-bar)
  double conductance = 0; // e_out / min(vol S, vol S-bar)
  long long e_in = 0;
  long long e_out = 0;
  long long vol_s = 0;
};

/// Newman-Girvan modularity Q(S) = e_in(S) - (vol S)^2 / vol V, exact.
/// Both closed forms are evaluated and must agree. Q(empty) = Q(V) = 0.
Rational modularity(const Graph& g, const VertexSet& s);

/// (1 / vol V) * sum of Q(S_i) over a partition of V. Exact arithmetic
/// internally, float result. Throws NotAPartition.
double partition_modularity(const Graph& g, std::span<const VertexSet> parts);

/// Exact rational counterparts used by the oracle and the cut report.
Rational q_rel_exact(const Graph& g, const VertexSet& s);
Rational q_norm_exact(const Graph& g, const VertexSet& s);
Rational conductance_exact(const Graph& g, const VertexSet& s);

/// Populates every CutReport field. Throws EmptySide on S in {empty, V}.
CutReport cut_functionals(const Graph& g, const VertexSet& s);

/// Checks both sandwich chains between the three exact cut optima:
///   2 q_rcut / (n d_max) <= q_cut <= q_rcut / 2
///   2 q_ncut / vol V     <= q_cut <= q_ncut / 2
/// The chains are only meaningful when the graph has a positive-modularity
/// cut; when q_cut <= 0 they hold vacuously and the check returns true.
bool sandwich_check(const Graph& g, double q_cut, double q_rcut, double q_ncut);

}  // namespace modcert
