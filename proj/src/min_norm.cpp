#include "cslkit/min_norm.hpp"

#include <cmath>
#include <stdexcept>

namespace cslkit {

double operator_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

Eigen::MatrixXd to_double(const RMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

Eigen::VectorXd to_double(const RVector& v) {
  Eigen::VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v[i].get_d();
  return out;
}

namespace {

// Directions in the pattern that leave Tx unchanged: for each row, an
// orthonormal basis of the allowed entries orthogonal to x.
std::vector<Eigen::MatrixXd> null_directions(const SupportPattern& pattern, const Eigen::VectorXd& x) {
  const auto d = static_cast<Eigen::Index>(pattern.dimension());
  std::vector<Eigen::MatrixXd> dirs;
  for (Eigen::Index i = 0; i < d; ++i) {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < d; ++j)
      if (pattern.allows(static_cast<Index>(i), static_cast<Index>(j))) cols.push_back(j);
    const auto m = static_cast<Eigen::Index>(cols.size());
    Eigen::VectorXd a(m);
    for (Eigen::Index c = 0; c < m; ++c) a(c) = x(cols[c]);

    Eigen::MatrixXd basis;
    if (a.norm() == 0.0) {
      basis = Eigen::MatrixXd::Identity(m, m);
    } else {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
      Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
      basis = q.rightCols(m - 1);
    }
    for (Eigen::Index b = 0; b < basis.cols(); ++b) {
      Eigen::MatrixXd n = Eigen::MatrixXd::Zero(d, d);
      for (Eigen::Index c = 0; c < m; ++c) n(i, cols[c]) = basis(c, b);
      dirs.push_back(std::move(n));
    }
  }
  return dirs;
}

Eigen::MatrixXd lmi(double t, const Eigen::MatrixXd& T) {
  const auto d = T.rows();
  Eigen::MatrixXd m(2 * d, 2 * d);
  m << t * Eigen::MatrixXd::Identity(d, d), T, T.transpose(), t * Eigen::MatrixXd::Identity(d, d);
  return m;
}

Eigen::MatrixXd assemble(const Eigen::MatrixXd& t0, const std::vector<Eigen::MatrixXd>& dirs, const Eigen::VectorXd& z) {
  Eigen::MatrixXd T = t0;
  for (std::size_t k = 0; k < dirs.size(); ++k) T += z(static_cast<Eigen::Index>(k)) * dirs[k];
  return T;
}

}  // namespace

NumericInterpolant min_norm_interpolant(const Lattice& nest, const RVector& x, const RVector& y, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!is_nest(nest)) throw InvalidInput("min-norm interpolation requires a nest");
  const auto greedy = greedy_nest_interpolant(nest, x, y);  // throws on an infinite criterion

  const auto d = static_cast<Eigen::Index>(nest.dimension());
  const SupportPattern pattern = support_pattern(nest);
  const Eigen::VectorXd xd = to_double(x);
  const Eigen::VectorXd yd = to_double(y);

  NumericInterpolant out;
  if (greedy.norm_bound_sq == 0) {
    out.matrix = Eigen::MatrixXd::Zero(d, d);
    out.pattern_ok = true;
    return out;
  }

  // Work on T / s so the starting point has unit norm.
  const Eigen::MatrixXd t_greedy = to_double(greedy.matrix);
  const double scale = operator_norm(t_greedy);
  const Eigen::MatrixXd t0 = t_greedy / scale;
  const auto dirs = null_directions(pattern, xd);
  const auto nz = static_cast<Eigen::Index>(dirs.size());
  const Eigen::Index nv = nz + 1;  // (z, t)
  const double barrier_weight = static_cast<double>(2 * d);

  Eigen::VectorXd z = Eigen::VectorXd::Zero(nz);
  double t = 1.5;

  // d M / d v_k for each variable, as dense symmetric matrices
  std::vector<Eigen::MatrixXd> dm;
  dm.reserve(static_cast<std::size_t>(nv));
  for (const auto& n : dirs) dm.push_back(lmi(0.0, n));
  dm.push_back(Eigen::MatrixXd::Identity(2 * d, 2 * d));

  auto objective = [&](double tau, const Eigen::VectorXd& zz, double tt, bool& feasible) {
    Eigen::LLT<Eigen::MatrixXd> llt(lmi(tt, assemble(t0, dirs, zz)));
    feasible = llt.info() == Eigen::Success;
    if (!feasible) return 0.0;
    const Eigen::MatrixXd l = llt.matrixL();
    return tau * tt - 2.0 * l.diagonal().array().log().sum();
  };

  double tau = barrier_weight / t;
  const double target_gap = tol;
  for (int outer = 0; outer < 200; ++outer) {
    for (int inner = 0; inner < 100; ++inner) {
      const Eigen::MatrixXd m = lmi(t, assemble(t0, dirs, z));
      Eigen::LLT<Eigen::MatrixXd> llt(m);
      if (llt.info() != Eigen::Success) throw std::runtime_error("min-norm solver left the feasible region");
      const Eigen::MatrixXd w = llt.solve(Eigen::MatrixXd::Identity(2 * d, 2 * d));

      std::vector<Eigen::MatrixXd> wd(static_cast<std::size_t>(nv));
      Eigen::VectorXd grad(nv);
      for (Eigen::Index k = 0; k < nv; ++k) {
        wd[static_cast<std::size_t>(k)] = w * dm[static_cast<std::size_t>(k)];
        grad(k) = -wd[static_cast<std::size_t>(k)].trace();
      }
      grad(nz) += tau;
      Eigen::MatrixXd hess(nv, nv);
      for (Eigen::Index a = 0; a < nv; ++a)
        for (Eigen::Index b = a; b < nv; ++b) {
          const double h = wd[static_cast<std::size_t>(a)].cwiseProduct(wd[static_cast<std::size_t>(b)].transpose()).sum();
          hess(a, b) = h;
          hess(b, a) = h;
        }
      hess.diagonal().array() += 1e-14 * (1.0 + hess.diagonal().array().abs());
      const Eigen::VectorXd step = -hess.ldlt().solve(grad);
      const double decrement = -grad.dot(step);
      ++out.newton_steps;
      if (decrement < 1e-12) break;

      bool feasible = false;
      const double f0 = objective(tau, z, t, feasible);
      double alpha = 1.0;
      for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
        const Eigen::VectorXd zz = z + alpha * step.head(nz);
        const double tt = t + alpha * step(nz);
        const double f = objective(tau, zz, tt, feasible);
        if (feasible && f <= f0 - 0.25 * alpha * decrement) {
          z = zz;
          t = tt;
          break;
        }
      }
      if (alpha * std::sqrt(std::max(decrement, 0.0)) < 1e-13) break;
    }
    out.gap = barrier_weight / tau;
    if (out.gap <= target_gap * t) break;
    tau *= 8.0;
  }

  out.matrix = assemble(t0, dirs, z) * scale;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (!pattern.allows(static_cast<Index>(i), static_cast<Index>(j))) out.matrix(i, j) = 0.0;
  out.pattern_ok = true;
  out.norm = operator_norm(out.matrix);
  out.residual = (out.matrix * xd - yd).norm();
  out.gap *= scale;
  return out;
}

}  // namespace cslkit
