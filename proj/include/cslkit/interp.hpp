#pragma once

// Interpolation in Alg L for finite lattices: the Lance ratio
// sup_E |E^perp y| / |E^perp x|, orbit manifolds M_x, rank-one and greedy
// interpolants. Everything here is exact; comparisons use squared norms.

#include <optional>
#include <utility>

#include "cslkit/lattice.hpp"
#include "cslkit/rational.hpp"

namespace cslkit {

/// Dense row-major rational matrix.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  static RMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Rational& operator()(Index i, Index j) { return data_[i * cols_ + j]; }
  const Rational& operator()(Index i, Index j) const { return data_[i * cols_ + j]; }

  RVector apply(const RVector& v) const;
  RMatrix transpose() const;
  RMatrix operator*(const RMatrix& o) const;
  bool respects(const SupportPattern& pattern) const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Rational> data_;
};

CoordSet support(const RVector& v);
/// Squared norm of the part of v outside `s`, i.e. |S^perp v|^2.
Rational complement_norm_sq(const RVector& v, const CoordSet& s);
RVector indicator(Index dimension, const CoordSet& s);

struct LanceResult {
  bool finite = true;
  Rational value_sq;  ///< squared supremum; meaningful only when finite
  CoordSet witness;   ///< maximizing member, or a member with E^perp x = 0 != E^perp y
};

/// Exact Lance supremum. Finite maximizer ties go to the first member in
/// canonical order; the infinity witness is the last such member.
LanceResult lance_sup(const Lattice& lattice, const RVector& x, const RVector& y);

bool in_orbit(const Lattice& lattice, const RVector& x, const RVector& y);

/// M_x = {Tx : T in Alg L}, which in the diagonal model is the coordinate span
/// of e_hull(support(x)).
CoordSet orbit_space(const Lattice& lattice, const RVector& x);

/// x1 + P1^perp x2 with P1 = M_{x1}; its orbit is M_{x1} v M_{x2}.
RVector join_generator(const Lattice& lattice, const RVector& x1, const RVector& x2);

struct RankOne {
  std::optional<CoordSet> member;  ///< P with P_-^perp x != 0 and y in P; empty for y = 0
  RVector functional;              ///< P_-^perp x / |P_-^perp x|^2, so <x, w> = 1 (zero for y = 0)
  RMatrix op;                      ///< y w^T
};

std::optional<RankOne> rank_one(const Lattice& lattice, const RVector& x, const RVector& y);

struct GreedyInterpolant {
  RMatrix matrix;
  bool pattern_ok = false;
  Rational norm_bound_sq;  ///< sum_k |D_k y|^2 / |F_{k-1}^perp x|^2
};

/// T = sum_k (D_k y) w_k^T over the atoms D_k of a nest, with
/// w_k = F_{k-1}^perp x / |F_{k-1}^perp x|^2.
GreedyInterpolant greedy_nest_interpolant(const Lattice& nest, const RVector& x, const RVector& y);

struct OrbitOrder {
  bool total = true;
  struct Witness {
    CoordSet first;
    RVector first_generator;
    CoordSet second;
    RVector second_generator;
  };
  std::optional<Witness> witness;
};

OrbitOrder orbits_totally_ordered(const Lattice& lattice);

/// Exact test of |T|^2 <= bound_sq, i.e. bound_sq I - T^T T is positive semidefinite.
bool opnorm_sq_at_most(const RMatrix& t, const Rational& bound_sq);

/// |Tu|^2 / |u|^2, a lower bound on |T|^2 (u != 0).
Rational rayleigh_sq(const RMatrix& t, const RVector& u);

/// Exact PSD test by symmetric elimination.
bool is_positive_semidefinite(RMatrix m);

}  // namespace cslkit
