#include "eulerflux/sbp.hpp"

#include <cmath>

namespace eulerflux {

namespace {

// Legendre P_n and P_n' by the three-term recurrence.
struct LegendreEval {
  double value;
  double derivative;
};

LegendreEval legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

SbpOperator build_lobatto_sbp(int degree) {
  if (degree < 1 || degree > 12)
    throw DegreeOutOfRange("Lobatto SBP degree must be in [1, 12]");
  const int n = degree + 1;
  SbpOperator op;
  op.degree = degree;
  op.nodes.resize(n);
  op.weights.resize(n);
  op.d.assign(static_cast<size_t>(n) * n, 0.0);

  op.nodes[0] = -1.0;
  op.nodes[n - 1] = 1.0;
  // interior nodes: roots of P'_p, Newton from Chebyshev-Lobatto guesses
  for (int i = 1; i < n - 1; ++i) {
    double x = -std::cos(M_PI * i / degree);
    for (int it = 0; it < 100; ++it) {
      // P'_p(x) = n(n+1)/... use d/dx P_p and its derivative via the ODE:
      // (1-x^2) P_p'' = 2x P_p' - p(p+1) P_p
      const LegendreEval e = legendre(degree, x);
      const double f = e.derivative;
      const double df =
          (2.0 * x * e.derivative - degree * (degree + 1.0) * e.value) /
          (1.0 - x * x);
      const double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    op.nodes[i] = x;
  }

  for (int i = 0; i < n; ++i) {
    const double pv = legendre(degree, op.nodes[i]).value;
    op.weights[i] = 2.0 / (degree * (degree + 1.0) * pv * pv);
  }

  // collocation derivative from barycentric weights
  std::vector<double> bary(n, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) bary[i] *= op.nodes[i] - op.nodes[j];
  for (int i = 0; i < n; ++i) bary[i] = 1.0 / bary[i];

  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dij = (bary[j] / bary[i]) / (op.nodes[i] - op.nodes[j]);
      op.d[static_cast<size_t>(i) * n + j] = dij;
      diag -= dij;
    }
    op.d[static_cast<size_t>(i) * n + i] = diag;
  }
  return op;
}

std::vector<double> TensorOperator2D::apply_dx(const std::vector<double>& u) const {
  const int m = n();
  std::vector<double> r(u.size(), 0.0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) r[j * m + i] += op.D(i, k) * u[j * m + k];
  return r;
}

std::vector<double> TensorOperator2D::apply_dy(const std::vector<double>& u) const {
  const int m = n();
  std::vector<double> r(u.size(), 0.0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) r[j * m + i] += op.D(j, k) * u[k * m + i];
  return r;
}

double TensorOperator2D::boundary_integral_x(const std::vector<double>& u) const {
  const int m = n();
  double acc = 0.0;
  for (int j = 0; j < m; ++j)
    acc += op.weights[j] * (u[j * m + (m - 1)] - u[j * m + 0]);
  return acc;
}

double TensorOperator2D::boundary_integral_y(const std::vector<double>& u) const {
  const int m = n();
  double acc = 0.0;
  for (int i = 0; i < m; ++i)
    acc += op.weights[i] * (u[(m - 1) * m + i] - u[0 * m + i]);
  return acc;
}

std::vector<double> SbpOperator::sbp_residual() const {
  const int m = n();
  std::vector<double> r(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double v = weights[i] * D(i, j) + D(j, i) * weights[j];
      if (i == j && i == 0) v += 1.0;
      if (i == j && i == m - 1) v -= 1.0;
      r[static_cast<size_t>(i) * m + j] = v;
    }
  return r;
}

}  // namespace eulerflux
