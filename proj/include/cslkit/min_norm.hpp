#pragma once

#include <Eigen/Dense>

#include "cslkit/interp.hpp"

namespace cslkit {

struct NumericInterpolant {
  Eigen::MatrixXd matrix;
  bool pattern_ok = false;
  double norm = 0.0;      ///< largest singular value of `matrix`
  double residual = 0.0;  ///< |Tx - y|
  double gap = 0.0;       ///< duality-gap bound at termination, in norm units
  int newton_steps = 0;
};

/// Minimum operator-norm T in Alg L with Tx = y for a nest L.
///
/// T is parametrized as T_0 + sum_k z_k N_k, with T_0 the greedy interpolant
/// and N_k an orthonormal basis of the pattern-supported matrices annihilating
/// x. The norm level t is driven down by a log-det barrier on
/// [[tI, T], [T^T, tI]] >= 0 until the gap bound drops below tol * t.
NumericInterpolant min_norm_interpolant(const Lattice& nest, const RVector& x, const RVector& y, double tol = 1e-9);

double operator_norm(const Eigen::MatrixXd& m);
Eigen::MatrixXd to_double(const RMatrix& m);
Eigen::VectorXd to_double(const RVector& v);

}  // namespace cslkit
