#include "modcert/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "modcert/errors.hpp"

namespace modcert {

double Spectrum::max_residual() const {
  double best = 0.0;
  for (double r : residuals) best = std::max(best, r);
  return best;
}

double Spectrum::orthogonality_defect() const {
  std::size_t k = vectors.size();
  double worst = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < vectors[a].size(); ++i) dot += vectors[a][i] * vectors[b][i];
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

int Spectrum::count_greater(double threshold) const {
  return static_cast<int>(std::count_if(values.begin(), values.end(),
                                        [&](double v) { return v > threshold; }));
}

int Spectrum::count_less(double threshold) const {
  return static_cast<int>(std::count_if(values.begin(), values.end(),
                                        [&](double v) { return v < threshold; }));
}

int Spectrum::count_within(double center, double tol) const {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [&](double v) {
    return std::abs(v - center) <= tol;
  }));
}

namespace {

// Householder reduction to tridiagonal form with accumulation of the
// orthogonal transform in a (columns become the tridiagonal eigenbasis).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          double gj = e[j] - hh * f;
          e[j] = gj;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + gj * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
        for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
      }
    }
    d[i] = at(i, i);
    at(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) {
      at(j, i) = 0.0;
      at(i, j) = 0.0;
    }
  }
}

// Implicit-shift QL on the tridiagonal (d, e), rotations applied to the
// columns of z. Returns false when the per-eigenvalue sweep cap is hit.
bool ql_implicit_shifts(std::vector<double>& d, std::vector<double>& e, int n,
                        std::vector<double>& z, int sweep_cap) {
  auto zt = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == sweep_cap) return false;
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = zt(k, i + 1);
            zt(k, i + 1) = s * zt(k, i) + c * f;
            zt(k, i) = c * zt(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  return true;
}

void canonicalize_sign(std::vector<double>& v) {
  int best = 0;
  double best_abs = std::abs(v[0]);
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (std::abs(v[k]) > best_abs) {
      best_abs = std::abs(v[k]);
      best = static_cast<int>(k);
    }
  }
  if (v[best] < 0.0)
    for (double& x : v) x = -x;
}

}  // namespace

Spectrum eig_sym(const SymMatrix& m, double tol) {
  (void)tol;  // absolute convergence is driven by machine epsilon splits
  int n = m.order();
  if (n > kEigOrderCap)
    fail(errc::too_large, "matrix order " + std::to_string(n) + " exceeds cap");

  Spectrum spec;
  if (n == 1) {
    spec.values = {m(0, 0)};
    spec.vectors = {{1.0}};
    spec.residuals = {0.0};
    return spec;
  }

  std::vector<double> a = m.data();
  std::vector<double> d(n, 0.0), e(n, 0.0);
  tridiagonalize(a, n, d, e);
  if (!ql_implicit_shifts(d, e, n, a, 50))
    fail(errc::no_convergence, "QL sweep cap reached at order " + std::to_string(n));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });

  spec.values.resize(n);
  spec.vectors.assign(n, std::vector<double>(n));
  spec.residuals.resize(n);
  for (int k = 0; k < n; ++k) {
    int col = order[k];
    spec.values[k] = d[col];
    auto& v = spec.vectors[k];
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      v[i] = a[static_cast<std::size_t>(i) * n + col];
      norm += v[i] * v[i];
    }
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    canonicalize_sign(v);
    auto mv = m.apply(v);
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      double diff = mv[i] - spec.values[k] * v[i];
      res += diff * diff;
    }
    spec.residuals[k] = std::sqrt(res);
  }
  return spec;
}

}  // namespace modcert
