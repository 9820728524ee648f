#include "doctest.h"

#include <random>

#include "cslkit/interp.hpp"
#include "cslkit/min_norm.hpp"
#include "oracle.hpp"

using namespace cslkit;

namespace {

Lattice chain(Index d) {
  std::vector<CoordSet> m{{}};
  for (Index k = 1; k <= d; ++k) m.push_back(CoordSet::range(k));
  return Lattice(d, m);
}
Lattice diamond() { return Lattice(2, {{}, {0}, {1}, {0, 1}}); }

RVector v(std::initializer_list<int> xs) {
  RVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

RVector e(Index d, Index i) {
  RVector out(d, Rational(0));
  out[i] = 1;
  return out;
}

}  // namespace

TEST_CASE("lance_sup examples") {
  auto r = lance_sup(chain(3), v({1, 2, 3}), v({1, 2, 3}));
  CHECK(r.finite);
  CHECK(r.value_sq == 1);
  CHECK(r.witness == CoordSet{});

  r = lance_sup(chain(3), v({1, 1, 1}), v({0, 0, 1}));
  CHECK(r.finite);
  CHECK(r.value_sq == 1);
  CHECK(r.witness == CoordSet{0, 1});

  r = lance_sup(chain(3), v({1, 0, 0}), v({0, 0, 1}));
  CHECK_FALSE(r.finite);
  CHECK(r.witness == CoordSet{0, 1});

  CHECK_THROWS_AS(lance_sup(chain(3), v({1, 0}), v({0, 0, 1})), InvalidInput);
}

TEST_CASE("lance_sup degenerate x = 0") {
  auto r = lance_sup(chain(2), v({0, 0}), v({0, 0}));
  CHECK(r.finite);
  CHECK(r.value_sq == 0);
  CHECK_FALSE(lance_sup(chain(2), v({0, 0}), v({0, 1})).finite);
}

TEST_CASE("in_orbit examples") {
  CHECK(in_orbit(diamond(), v({1, 2}), v({0, 0})));
  CHECK_FALSE(in_orbit(chain(3), v({1, 0, 0}), v({0, 0, 1})));
  CHECK(in_orbit(diamond(), v({1, 0}), v({3, 0})));
}

TEST_CASE("orbit_space examples") {
  CHECK(orbit_space(chain(3), v({0, 0, 0})) == CoordSet{});
  CHECK(orbit_space(diamond(), e(2, 0)) == CoordSet{0});
  CHECK(orbit_space(chain(3), e(3, 2)) == CoordSet{0, 1, 2});
}

TEST_CASE("join_generator examples") {
  auto x = join_generator(diamond(), e(2, 0), e(2, 1));
  CHECK(x == v({1, 1}));
  CHECK(orbit_space(diamond(), x) == CoordSet{0, 1});
  CHECK(join_generator(diamond(), v({2, 0}), v({0, 0})) == v({2, 0}));
  x = join_generator(chain(3), e(3, 0), e(3, 2));
  CHECK(x == v({1, 0, 1}));
  CHECK(orbit_space(chain(3), x) == CoordSet{0, 1, 2});
}

TEST_CASE("rank_one examples") {
  auto r = rank_one(chain(2), e(2, 1), e(2, 0));
  REQUIRE(r.has_value());
  CHECK(r->member == CoordSet{0});
  RMatrix expected(2, 2);
  expected(0, 1) = 1;
  CHECK(r->op == expected);

  CHECK_FALSE(rank_one(diamond(), e(2, 0), e(2, 1)).has_value());

  // x need not lie in P_-^perp: only its component there must be non-zero
  r = rank_one(chain(2), v({1, 1}), v({0, 1}));
  REQUIRE(r.has_value());
  CHECK(r->member == CoordSet{0, 1});
  CHECK(r->functional == v({0, 1}));
  CHECK(r->op.apply(v({1, 1})) == v({0, 1}));

  r = rank_one(chain(3), v({1, 2, 3}), v({0, 0, 0}));
  REQUIRE(r.has_value());
  CHECK_FALSE(r->member.has_value());
  CHECK(r->op == RMatrix(3, 3));
}

TEST_CASE("greedy_nest_interpolant examples") {
  auto g = greedy_nest_interpolant(chain(2), v({1, 1}), v({1, 1}));
  RMatrix t(2, 2);
  t(0, 0) = Rational(1, 2);
  t(0, 1) = Rational(1, 2);
  t(1, 1) = 1;
  CHECK(g.matrix == t);
  CHECK(g.norm_bound_sq == Rational(3, 2));
  CHECK(g.pattern_ok);

  g = greedy_nest_interpolant(chain(2), v({1, 1}), v({0, 0}));
  CHECK(g.matrix == RMatrix(2, 2));
  CHECK(g.norm_bound_sq == 0);

  g = greedy_nest_interpolant(chain(2), v({1, 0}), v({1, 0}));
  RMatrix p(2, 2);
  p(0, 0) = 1;
  CHECK(g.matrix == p);
  CHECK(g.norm_bound_sq == 1);

  CHECK_THROWS_AS(greedy_nest_interpolant(diamond(), v({1, 1}), v({1, 1})), InvalidInput);
  CHECK_THROWS_AS(greedy_nest_interpolant(chain(3), v({1, 0, 0}), v({0, 0, 1})), InvalidInput);
}

TEST_CASE("orbits_totally_ordered examples") {
  CHECK(orbits_totally_ordered(chain(3)).total);
  auto d = orbits_totally_ordered(diamond());
  CHECK_FALSE(d.total);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->first == CoordSet{0});
  CHECK(d.witness->first_generator == e(2, 0));
  CHECK(d.witness->second == CoordSet{1});
  CHECK(d.witness->second_generator == e(2, 1));
  CHECK(orbits_totally_ordered(Lattice(2, {{}, {0, 1}})).total);
}

TEST_CASE("exact PSD and operator-norm checks") {
  RMatrix t(2, 2);
  t(0, 0) = 3;
  t(1, 1) = 4;
  CHECK(opnorm_sq_at_most(t, Rational(16)));
  CHECK_FALSE(opnorm_sq_at_most(t, Rational(15)));
  RMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 1;  // eigenvalues 3 and -1
  CHECK_FALSE(is_positive_semidefinite(s));
  CHECK(is_positive_semidefinite(RMatrix(3, 3)));
  CHECK(rayleigh_sq(t, v({0, 1})) == 16);
}

TEST_CASE("finite-interp agrees with brute force on every lattice of dimension <= 4") {
  std::size_t mismatches = 0;
  for (Index d = 1; d <= 4; ++d) {
    const auto vecs = oracle::small_vectors(d);
    std::vector<RVector> sample;
    for (std::size_t i = 0; i < vecs.size(); i += (d == 4 ? 5 : 1)) sample.push_back(vecs[i]);
    for (const auto& fam : oracle::all_lattices(d)) {
      const Lattice l = oracle::to_lattice(fam);
      for (const auto& x : sample) {
        if (oracle::to_mask(orbit_space(l, x)) != oracle::orbit(fam, x)) ++mismatches;
        for (const auto& y : sample) {
          if (in_orbit(l, x, y) != oracle::interpolable(fam, x, y)) ++mismatches;
          if (rank_one(l, x, y).has_value() != oracle::rank_one_exists(fam, x, y)) ++mismatches;
        }
      }
      CHECK(orbits_totally_ordered(l).total == oracle::is_chain(fam));
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("join_generator produces the join of orbits") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Index d = 1 + trial % 6;
    const Lattice l = oracle::to_lattice(oracle::random_family(rng, d));
    const auto x1 = oracle::random_vector(rng, d, 0.5);
    const auto x2 = oracle::random_vector(rng, d, 0.5);
    const auto x = join_generator(l, x1, x2);
    const auto joined = e_hull(l, unite(orbit_space(l, x1), orbit_space(l, x2)));
    CHECK(orbit_space(l, x) == joined);
    CHECK(orbit_space(l, x1).is_subset_of(orbit_space(l, x)));
  }
}

TEST_CASE("lower-bound law: every pattern interpolant has norm >= lance_sup") {
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 200; ++trial) {
    const Index d = 2 + trial % 5;
    const auto fam = oracle::random_family(rng, d);
    const Lattice l = oracle::to_lattice(fam);
    const auto x = oracle::random_vector(rng, d, 0.2);
    RVector y = x;
    // y = T x for a random pattern T, so the criterion is finite
    const auto pat = support_pattern(l);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (auto [i, j] : pat.pairs()) t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gauss(rng);
    const Eigen::VectorXd yd = t * to_double(x);
    for (Index i = 0; i < d; ++i) y[i] = Rational(yd(static_cast<Eigen::Index>(i)));
    const auto r = lance_sup(l, x, y);
    REQUIRE(r.finite);
    CHECK(operator_norm(t) >= std::sqrt(r.value_sq.get_d()) * (1 - 1e-9) - 1e-12);
  }
}

TEST_CASE("greedy sandwich on random nests") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Index d = 1 + trial % 7;
    const Lattice l = oracle::to_lattice(oracle::random_nest(rng, d));
    auto x = oracle::random_vector(rng, d, 0.3);
    const auto y = oracle::random_vector(rng, d, 0.3);
    if (!in_orbit(l, x, y)) continue;
    const auto r = lance_sup(l, x, y);
    const auto g = greedy_nest_interpolant(l, x, y);
    CHECK(g.matrix.apply(x) == y);
    CHECK(opnorm_sq_at_most(g.matrix, g.norm_bound_sq));
    if (r.value_sq > 0) {
      RVector u(d, Rational(0));
      for (Index i = 0; i < d; ++i)
        if (!r.witness.contains(i)) u[i] = x[i];
      CHECK(rayleigh_sq(g.matrix, u) >= r.value_sq);
    }
  }
}
