#include "cslkit/interp.hpp"

#include <stdexcept>

namespace cslkit {

namespace {

void check_dimension(const Lattice& lattice, const RVector& v, const char* name) {
  if (v.size() != lattice.dimension())
    throw InvalidInput(std::string("dimension mismatch: ") + name + " has " + std::to_string(v.size()) +
                       " entries, lattice has dimension " + std::to_string(lattice.dimension()));
}

bool is_zero(const RVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace

RMatrix RMatrix::identity(Index n) {
  RMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RVector RMatrix::apply(const RVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RVector out(rows_, Rational(0));
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
  RMatrix out(rows_, o.cols_);
  for (Index i = 0; i < rows_; ++i)
    for (Index k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (Index j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
    }
  return out;
}

bool RMatrix::respects(const SupportPattern& pattern) const {
  if (rows_ != pattern.dimension() || cols_ != pattern.dimension()) return false;
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && !pattern.allows(i, j)) return false;
  return true;
}

CoordSet support(const RVector& v) {
  std::vector<Index> s;
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return CoordSet(std::move(s));
}

Rational complement_norm_sq(const RVector& v, const CoordSet& s) {
  Rational total = 0;
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0 && !s.contains(i)) total += v[i] * v[i];
  return total;
}

RVector indicator(Index dimension, const CoordSet& s) {
  RVector v(dimension, Rational(0));
  for (Index i : s) v.at(i) = 1;
  return v;
}

LanceResult lance_sup(const Lattice& lattice, const RVector& x, const RVector& y) {
  check_dimension(lattice, x, "x");
  check_dimension(lattice, y, "y");
  LanceResult best;
  best.value_sq = -1;
  std::optional<CoordSet> infinite_at;
  for (const auto& e : lattice.members()) {
    const Rational nx = complement_norm_sq(x, e);
    const Rational ny = complement_norm_sq(y, e);
    if (nx == 0) {
      if (ny != 0) infinite_at = e;  // 0/0 reads as 0
      else if (best.value_sq < 0) best = {true, Rational(0), e};
      continue;
    }
    Rational ratio = ny / nx;
    if (ratio > best.value_sq) best = {true, std::move(ratio), e};
  }
  if (infinite_at) return {false, Rational(0), *infinite_at};
  return best;
}

bool in_orbit(const Lattice& lattice, const RVector& x, const RVector& y) { return lance_sup(lattice, x, y).finite; }

CoordSet orbit_space(const Lattice& lattice, const RVector& x) {
  check_dimension(lattice, x, "x");
  return e_hull(lattice, support(x));
}

RVector join_generator(const Lattice& lattice, const RVector& x1, const RVector& x2) {
  check_dimension(lattice, x2, "x2");
  const CoordSet p1 = orbit_space(lattice, x1);
  RVector x = x1;
  for (Index i = 0; i < x.size(); ++i)
    if (!p1.contains(i)) x[i] += x2[i];
  return x;
}

std::optional<RankOne> rank_one(const Lattice& lattice, const RVector& x, const RVector& y) {
  check_dimension(lattice, x, "x");
  check_dimension(lattice, y, "y");
  const Index d = lattice.dimension();
  if (is_zero(y)) return RankOne{std::nullopt, RVector(d, Rational(0)), RMatrix(d, d)};
  if (is_zero(x)) return std::nullopt;

  const CoordSet sy = support(y);
  const SupportPattern pattern = support_pattern(lattice);
  for (const auto& p : lattice.members()) {
    if (p.empty() || !sy.is_subset_of(p)) continue;
    const CoordSet minus = p_minus(lattice, p);
    const Rational xx = complement_norm_sq(x, minus);
    if (xx == 0) continue;
    RankOne r{p, RVector(d, Rational(0)), RMatrix(d, d)};
    for (Index j = 0; j < d; ++j)
      if (!minus.contains(j)) r.functional[j] = x[j] / xx;
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) r.op(i, j) = y[i] * r.functional[j];
    if (!r.op.respects(pattern) || r.op.apply(x) != y)
      throw std::logic_error("rank-one interpolant failed verification at " + p.str());
    return r;
  }
  return std::nullopt;
}

GreedyInterpolant greedy_nest_interpolant(const Lattice& nest, const RVector& x, const RVector& y) {
  if (!is_nest(nest)) throw InvalidInput("greedy interpolation requires a nest");
  const auto lance = lance_sup(nest, x, y);
  if (!lance.finite) throw InvalidInput("no interpolant: Lance criterion is infinite at " + lance.witness.str());

  const Index d = nest.dimension();
  const auto chain = nest_chain(nest);
  GreedyInterpolant g{RMatrix(d, d), false, Rational(0)};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const CoordSet delta = difference(chain[k], chain[k - 1]);
    Rational dy = 0;
    for (Index i : delta) dy += y[i] * y[i];
    if (dy == 0) continue;
    const Rational tail_x = complement_norm_sq(x, chain[k - 1]);
    for (Index i : delta) {
      if (y[i] == 0) continue;
      for (Index j = 0; j < d; ++j)
        if (!chain[k - 1].contains(j) && x[j] != 0) g.matrix(i, j) = y[i] * x[j] / tail_x;
    }
    g.norm_bound_sq += dy / tail_x;
  }
  g.pattern_ok = g.matrix.respects(support_pattern(nest));
  if (!g.pattern_ok || g.matrix.apply(x) != y) throw std::logic_error("greedy interpolant failed verification");
  return g;
}

OrbitOrder orbits_totally_ordered(const Lattice& lattice) {
  const auto& members = lattice.members();
  std::vector<CoordSet> orbits;
  orbits.reserve(members.size());
  for (const auto& p : members) {
    orbits.push_back(orbit_space(lattice, indicator(lattice.dimension(), p)));
    if (orbits.back() != p) throw std::logic_error("orbit of indicator differs from member " + p.str());
  }
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = i + 1; j < orbits.size(); ++j)
      if (!orbits[i].is_subset_of(orbits[j]) && !orbits[j].is_subset_of(orbits[i]))
        return {false, OrbitOrder::Witness{orbits[i], indicator(lattice.dimension(), members[i]), orbits[j],
                                           indicator(lattice.dimension(), members[j])}};
  return {true, std::nullopt};
}

bool is_positive_semidefinite(RMatrix m) {
  const Index n = m.rows();
  for (Index k = 0; k < n; ++k) {
    const Rational pivot = m(k, k);
    if (pivot < 0) return false;
    if (pivot == 0) {
      for (Index j = k + 1; j < n; ++j)
        if (m(k, j) != 0) return false;
      continue;
    }
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / pivot;
      for (Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

bool opnorm_sq_at_most(const RMatrix& t, const Rational& bound_sq) {
  RMatrix g = t.transpose() * t;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) g(i, j) = (i == j ? bound_sq : Rational(0)) - g(i, j);
  return is_positive_semidefinite(std::move(g));
}

Rational rayleigh_sq(const RMatrix& t, const RVector& u) {
  const Rational uu = norm_sq(u);
  if (uu == 0) throw std::invalid_argument("rayleigh_sq requires a non-zero vector");
  return norm_sq(t.apply(u)) / uu;
}

}  // namespace cslkit
