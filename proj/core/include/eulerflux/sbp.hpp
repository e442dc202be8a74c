#ifndef EULERFLUX_SBP_HPP
#define EULERFLUX_SBP_HPP

#include <vector>

#include "eulerflux/euler.hpp"

namespace eulerflux {

/// Diagonal-norm SBP operator built on Lobatto-Legendre nodes of the
/// reference element [-1, 1]. The boundary operator B is the 2x2 identity and
/// N = diag(-1, 1); since the nodes include the endpoints, R picks the first
/// and last nodal values and R^T B N R is diagonal.
struct SbpOperator {
  int degree{0};
  std::vector<double> nodes;    // p+1 Lobatto points
  std::vector<double> weights;  // diagonal mass matrix entries
  std::vector<double> d;        // (p+1)x(p+1) derivative matrix, row-major

  int n() const { return degree + 1; }
  double D(int i, int k) const { return d[static_cast<size_t>(i) * n() + k]; }

  /// Residual matrix M D + D^T M - R^T B N R, row-major.
  std::vector<double> sbp_residual() const;
};

/// Lobatto nodes/weights by Newton iteration on the derivative of the
/// Legendre polynomial, derivative matrix from the barycentric weights.
SbpOperator build_lobatto_sbp(int degree);

/// Tensor-product extension to the reference square; nodal grid is row-major
/// with x fastest (index j*n + i).
struct TensorOperator2D {
  SbpOperator op;

  int n() const { return op.n(); }
  std::vector<double> apply_dx(const std::vector<double>& u) const;
  std::vector<double> apply_dy(const std::vector<double>& u) const;
  double mass(int i, int j) const { return op.weights[i] * op.weights[j]; }
  /// Discrete surface integrals of u n_x and u n_y over the element boundary.
  double boundary_integral_x(const std::vector<double>& u) const;
  double boundary_integral_y(const std::vector<double>& u) const;
};

inline TensorOperator2D tensorize(const SbpOperator& op) { return {op}; }

}  // namespace eulerflux

#endif
