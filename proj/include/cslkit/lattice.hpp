#pragma once

// Finite commutative subspace lattices in the diagonal model: every member is
// the coordinate subspace spanned by a subset of {0, ..., dimension-1}.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cslkit {

using Index = std::size_t;

/// Sorted, duplicate-free set of coordinates.
class CoordSet {
 public:
  CoordSet() = default;
  CoordSet(std::initializer_list<Index> coords);
  explicit CoordSet(std::vector<Index> coords);

  static CoordSet range(Index n);

  const std::vector<Index>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool contains(Index i) const;
  bool is_subset_of(const CoordSet& other) const;
  bool intersects(const CoordSet& other) const;

  friend CoordSet unite(const CoordSet& a, const CoordSet& b);
  friend CoordSet intersect(const CoordSet& a, const CoordSet& b);
  friend CoordSet difference(const CoordSet& a, const CoordSet& b);

  friend bool operator==(const CoordSet&, const CoordSet&) = default;

  std::string str() const;

 private:
  std::vector<Index> coords_;
};

/// Canonical member order: by size, then lexicographic.
struct CanonicalLess {
  bool operator()(const CoordSet& a, const CoordSet& b) const;
};

class Lattice {
 public:
  /// Validates that `members` contains the bounds and is closed under
  /// intersection and union; throws InvalidInput otherwise.
  Lattice(Index dimension, std::vector<CoordSet> members);

  Index dimension() const { return dimension_; }
  /// Members in canonical order; front() is the empty set, back() the full set.
  const std::vector<CoordSet>& members() const { return members_; }
  bool contains(const CoordSet& s) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Index dimension_;
  std::vector<CoordSet> members_;
};

struct Closure {
  Lattice lattice;
  std::vector<CoordSet> added;  ///< members not present in the input, canonical order
};

/// Smallest lattice containing `subsets`, the empty set and the full set.
Closure complete_lattice(const std::vector<CoordSet>& subsets, Index dimension);

struct Atom {
  CoordSet coords;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Classes of coordinates lying in exactly the same members, ordered by
/// smallest coordinate.
std::vector<Atom> atoms(const Lattice& lattice);

/// Least member containing `s`.
CoordSet e_hull(const Lattice& lattice, const CoordSet& s);

/// Join of all members that do not contain `p`. `p` must be a non-empty member.
CoordSet p_minus(const Lattice& lattice, const CoordSet& p);

bool is_nest(const Lattice& lattice);

/// Keeps the atoms that lie in no other listed atom's hull. The joint hull is
/// unchanged and the survivors are pairwise independent.
std::vector<Atom> independent_atoms(const Lattice& lattice, const std::vector<Atom>& list);

struct HyperatomicReport {
  bool hyperatomic = true;
  /// For each non-zero member, an independent atom list whose hull is the member.
  std::vector<std::pair<CoordSet, std::vector<Atom>>> generators;
};

HyperatomicReport is_hyperatomic(const Lattice& lattice);

/// Entries (row, column) that operators in Alg L may occupy.
class SupportPattern {
 public:
  explicit SupportPattern(Index dimension);

  Index dimension() const { return dimension_; }
  bool allows(Index row, Index col) const { return allowed_[row * dimension_ + col]; }
  void allow(Index row, Index col) { allowed_[row * dimension_ + col] = true; }
  std::vector<std::pair<Index, Index>> pairs() const;
  bool is_reflexive() const;
  bool is_transitive() const;

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

 private:
  Index dimension_;
  std::vector<bool> allowed_;
};

SupportPattern support_pattern(const Lattice& lattice);

/// Chain order of a nest: members strictly increasing by inclusion.
std::vector<CoordSet> nest_chain(const Lattice& lattice);

/// Largest member strictly below `p` in a nest, or nullopt for the empty set.
std::optional<CoordSet> immediate_predecessor(const Lattice& nest, const CoordSet& p);

}  // namespace cslkit
