#pragma once

#include <vector>

#include "modcert/sym_matrix.hpp"

namespace modcert {

/// Full eigendecomposition of a symmetric matrix, eigenvalues nonincreasing.
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // vectors[k] is unit, for values[k]
  std::vector<double> residuals;             // ||A v_k - values[k] v_k||_2

  double max_residual() const;
  double orthogonality_defect() const;  // max |v_i . v_j - delta_ij|

  int count_greater(double threshold) const;  // eigenvalues > threshold
  int count_less(double threshold) const;     // eigenvalues < threshold
  int count_within(double center, double tol) const;
};

/// Dense symmetric eigensolver: Householder tridiagonalization followed by
/// implicit-shift QL sweeps with accumulated rotations. Deterministic;
/// eigenvector signs are canonicalized (largest-magnitude entry positive,
/// ties broken by lowest index). Throws NoConvergence when a sweep cap is
/// hit and TooLarge above the size cap.
Spectrum eig_sym(const SymMatrix& m, double tol = 1e-12);

inline constexpr int kEigOrderCap = 2000;

}  // namespace modcert
