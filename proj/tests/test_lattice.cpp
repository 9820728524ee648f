#include "doctest.h"

#include <random>

#include "cslkit/lattice.hpp"
#include "cslkit/rational.hpp"
#include "oracle.hpp"

using namespace cslkit;

namespace {

Lattice chain3() { return Lattice(3, {{}, {0}, {0, 1}, {0, 1, 2}}); }
Lattice diamond() { return Lattice(2, {{}, {0}, {1}, {0, 1}}); }
Lattice trivial2() { return Lattice(2, {{}, {0, 1}}); }

std::vector<CoordSet> members_of(const Lattice& l) { return l.members(); }

}  // namespace

TEST_CASE("complete_lattice examples") {
  CHECK(members_of(complete_lattice({{0}}, 2).lattice) == std::vector<CoordSet>{{}, {0}, {0, 1}});
  CHECK(members_of(complete_lattice({{0}, {1}}, 2).lattice) == std::vector<CoordSet>{{}, {0}, {1}, {0, 1}});
  auto c = complete_lattice({{0, 1}, {1, 2}}, 3);
  CHECK(members_of(c.lattice) == std::vector<CoordSet>{{}, {1}, {0, 1}, {1, 2}, {0, 1, 2}});
  CHECK(c.added == std::vector<CoordSet>{{}, {1}, {0, 1, 2}});
  CHECK_THROWS_AS(complete_lattice({{0, 3}}, 3), InvalidInput);
}

TEST_CASE("complete_lattice matches the mask closure and is idempotent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Index d = 1 + trial % 6;
    std::uniform_int_distribution<oracle::Mask> subset(0, oracle::full_mask(d));
    std::vector<oracle::Mask> gens;
    std::vector<CoordSet> sets;
    for (int i = 0; i < 3; ++i) {
      gens.push_back(subset(rng));
      sets.push_back(oracle::to_set(gens.back()));
    }
    const auto closed = complete_lattice(sets, d).lattice;
    CHECK(closed == oracle::to_lattice(oracle::close_family(d, gens)));
    CHECK(complete_lattice(closed.members(), d).lattice == closed);
    CHECK(complete_lattice(closed.members(), d).added.empty());
  }
}

TEST_CASE("Lattice constructor rejects non-closed families") {
  CHECK_THROWS_AS(Lattice(2, {{}, {0}, {1}}), InvalidInput);
  CHECK_THROWS_AS(Lattice(2, {{0}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Lattice(3, {{}, {0, 1}, {1, 2}, {0, 1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Lattice(0, {{}}), InvalidInput);
}

TEST_CASE("atoms examples") {
  CHECK(atoms(trivial2()) == std::vector<Atom>{{{0, 1}}});
  CHECK(atoms(diamond()) == std::vector<Atom>{{{0}}, {{1}}});
  CHECK(atoms(chain3()) == std::vector<Atom>{{{0}}, {{1}}, {{2}}});
}

TEST_CASE("e_hull examples") {
  CHECK(e_hull(diamond(), {0}) == CoordSet{0});
  CHECK(e_hull(trivial2(), {0}) == CoordSet{0, 1});
  CHECK(e_hull(chain3(), {1, 2}) == CoordSet{0, 1, 2});
  CHECK(e_hull(chain3(), {}) == CoordSet{});
}

TEST_CASE("p_minus examples") {
  CHECK(p_minus(chain3(), {0, 1}) == CoordSet{0});
  CHECK(p_minus(diamond(), {0, 1}) == CoordSet{0, 1});
  CHECK(p_minus(diamond(), {0}) == CoordSet{1});
  CHECK_THROWS_AS(p_minus(chain3(), {1}), InvalidInput);
  CHECK_THROWS_AS(p_minus(chain3(), {}), InvalidInput);
}

TEST_CASE("is_nest examples") {
  CHECK(is_nest(chain3()));
  CHECK_FALSE(is_nest(diamond()));
  CHECK(is_nest(trivial2()));
}

TEST_CASE("hyperatomic generators") {
  auto h = is_hyperatomic(diamond());
  CHECK(h.hyperatomic);
  REQUIRE(h.generators.size() == 3);
  CHECK(h.generators.back().first == CoordSet{0, 1});
  CHECK(h.generators.back().second == std::vector<Atom>{{{0}}, {{1}}});

  auto c = is_hyperatomic(chain3());
  for (const auto& [p, gens] : c.generators) CHECK(gens.size() == 1);
}

TEST_CASE("independent_atoms examples") {
  CHECK(independent_atoms(chain3(), {{{0}}, {{1}}, {{2}}}) == std::vector<Atom>{{{2}}});
  CHECK(independent_atoms(diamond(), {{{0}}, {{1}}}) == std::vector<Atom>{{{0}}, {{1}}});
  CHECK(independent_atoms(chain3(), {{{0}}, {{1}}}) == std::vector<Atom>{{{1}}});
}

TEST_CASE("support_pattern examples") {
  using P = std::vector<std::pair<Index, Index>>;
  CHECK(support_pattern(trivial2()).pairs() == P{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(support_pattern(diamond()).pairs() == P{{0, 0}, {1, 1}});
  CHECK(support_pattern(Lattice(2, {{}, {0}, {0, 1}})).pairs() == P{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("nest predecessors") {
  CHECK(immediate_predecessor(chain3(), {0, 1, 2}) == CoordSet{0, 1});
  CHECK(immediate_predecessor(chain3(), {0}) == CoordSet{});
  CHECK_FALSE(immediate_predecessor(chain3(), {}).has_value());
  CHECK_THROWS_AS(nest_chain(diamond()), InvalidInput);
}

TEST_CASE("lattice-core agrees with brute force on every lattice of dimension <= 4") {
  std::size_t lattices = 0;
  for (Index d = 1; d <= 4; ++d) {
    for (const auto& fam : oracle::all_lattices(d)) {
      ++lattices;
      const Lattice l = oracle::to_lattice(fam);

      // atoms partition the index set and meet every member trivially
      std::set<oracle::Mask> got;
      oracle::Mask cover = 0;
      for (const auto& a : atoms(l)) {
        const auto m = oracle::to_mask(a.coords);
        CHECK((cover & m) == 0);
        cover |= m;
        got.insert(m);
      }
      CHECK(cover == oracle::full_mask(d));
      CHECK(got == oracle::atoms(fam));

      // e_hull: least member, monotone, idempotent, extensive
      for (oracle::Mask s = 0; s <= oracle::full_mask(d); ++s) {
        const auto h = e_hull(l, oracle::to_set(s));
        CHECK(oracle::to_mask(h) == oracle::hull(fam, s));
        CHECK(e_hull(l, h) == h);
        for (oracle::Mask t = s; t <= oracle::full_mask(d); ++t)
          if ((s & ~t) == 0) CHECK(h.is_subset_of(e_hull(l, oracle::to_set(t))));
      }

      for (oracle::Mask p : fam.members) {
        if (p == 0) continue;
        const auto pm = p_minus(l, oracle::to_set(p));
        CHECK(l.contains(pm));
        CHECK(oracle::to_mask(pm) == oracle::p_minus(fam, p));
      }

      const auto pat = support_pattern(l);
      CHECK(pat.is_reflexive());
      CHECK(pat.is_transitive());
      const auto brute = oracle::pattern(fam);
      for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) CHECK(pat.allows(i, j) == brute[i][j]);

      const auto h = is_hyperatomic(l);
      CHECK(h.hyperatomic);
      CHECK(h.generators.size() + 1 == fam.members.size());
      CHECK(is_nest(l) == oracle::is_chain(fam));
    }
  }
  CHECK(lattices == 1 + 4 + 29 + 355);
}
