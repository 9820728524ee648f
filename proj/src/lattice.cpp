#include "cslkit/lattice.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cslkit/rational.hpp"

namespace cslkit {

CoordSet::CoordSet(std::initializer_list<Index> coords) : CoordSet(std::vector<Index>(coords)) {}

CoordSet::CoordSet(std::vector<Index> coords) : coords_(std::move(coords)) {
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
}

CoordSet CoordSet::range(Index n) {
  std::vector<Index> all(n);
  for (Index i = 0; i < n; ++i) all[i] = i;
  CoordSet s;
  s.coords_ = std::move(all);
  return s;
}

bool CoordSet::contains(Index i) const { return std::binary_search(coords_.begin(), coords_.end(), i); }

bool CoordSet::is_subset_of(const CoordSet& other) const {
  return std::includes(other.coords_.begin(), other.coords_.end(), coords_.begin(), coords_.end());
}

bool CoordSet::intersects(const CoordSet& other) const {
  auto a = coords_.begin();
  auto b = other.coords_.begin();
  while (a != coords_.end() && b != other.coords_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

CoordSet unite(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.coords_));
  return out;
}

CoordSet intersect(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.coords_));
  return out;
}

CoordSet difference(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.coords_));
  return out;
}

std::string CoordSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << '}';
  return os.str();
}

bool CanonicalLess::operator()(const CoordSet& a, const CoordSet& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.coords() < b.coords();
}

// ---------------------------------------------------------------------------

Lattice::Lattice(Index dimension, std::vector<CoordSet> members) : dimension_(dimension) {
  if (dimension == 0) throw InvalidInput("lattice dimension must be positive");
  for (const auto& m : members)
    if (!m.empty() && m.coords().back() >= dimension)
      throw InvalidInput("member " + m.str() + " exceeds dimension " + std::to_string(dimension));
  std::sort(members.begin(), members.end(), CanonicalLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);

  if (members_.empty() || !members_.front().empty()) throw InvalidInput("lattice is missing the empty set");
  if (members_.back() != CoordSet::range(dimension)) throw InvalidInput("lattice is missing the full set");
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      const auto& a = members_[i];
      const auto& b = members_[j];
      if (!contains(unite(a, b)) || !contains(intersect(a, b)))
        throw InvalidInput("family is not closed: " + a.str() + " and " + b.str());
    }
}

bool Lattice::contains(const CoordSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s, CanonicalLess{});
}

Closure complete_lattice(const std::vector<CoordSet>& subsets, Index dimension) {
  if (dimension == 0) throw InvalidInput("lattice dimension must be positive");
  std::set<CoordSet, CanonicalLess> family;
  for (const auto& s : subsets) {
    if (!s.empty() && s.coords().back() >= dimension)
      throw InvalidInput("coordinate " + std::to_string(s.coords().back()) + " out of range for dimension " +
                         std::to_string(dimension));
    family.insert(s);
  }
  const std::set<CoordSet, CanonicalLess> input = family;
  family.insert(CoordSet{});
  family.insert(CoordSet::range(dimension));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CoordSet> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= family.insert(unite(snapshot[i], snapshot[j])).second;
        grew |= family.insert(intersect(snapshot[i], snapshot[j])).second;
      }
  }

  std::vector<CoordSet> added;
  for (const auto& m : family)
    if (!input.count(m)) added.push_back(m);
  return {Lattice(dimension, std::vector<CoordSet>(family.begin(), family.end())), std::move(added)};
}

std::vector<Atom> atoms(const Lattice& lattice) {
  const auto& members = lattice.members();
  std::map<std::vector<bool>, std::vector<Index>> classes;
  std::vector<std::vector<bool>> order;
  for (Index i = 0; i < lattice.dimension(); ++i) {
    std::vector<bool> signature(members.size());
    for (std::size_t m = 0; m < members.size(); ++m) signature[m] = members[m].contains(i);
    auto [it, fresh] = classes.try_emplace(signature);
    if (fresh) order.push_back(signature);
    it->second.push_back(i);
  }
  std::vector<Atom> out;
  out.reserve(order.size());
  for (const auto& sig : order) out.push_back(Atom{CoordSet(classes[sig])});
  return out;
}

CoordSet e_hull(const Lattice& lattice, const CoordSet& s) {
  CoordSet hull = lattice.members().back();
  for (const auto& m : lattice.members())
    if (s.is_subset_of(m)) hull = intersect(hull, m);
  return hull;
}

CoordSet p_minus(const Lattice& lattice, const CoordSet& p) {
  if (p.empty()) throw InvalidInput("p_minus requires a non-zero member");
  if (!lattice.contains(p)) throw InvalidInput(p.str() + " is not a member of the lattice");
  CoordSet join;
  for (const auto& f : lattice.members())
    if (!p.is_subset_of(f)) join = unite(join, f);
  return join;
}

bool is_nest(const Lattice& lattice) {
  const auto& m = lattice.members();
  // canonical order is by size, so a chain is increasing along it
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (!m[i].is_subset_of(m[i + 1])) return false;
  return true;
}

std::vector<Atom> independent_atoms(const Lattice& lattice, const std::vector<Atom>& list) {
  std::vector<CoordSet> hulls;
  hulls.reserve(list.size());
  for (const auto& a : list) hulls.push_back(e_hull(lattice, a.coords));

  std::vector<Atom> kept;
  for (std::size_t i = 0; i < list.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < list.size() && !dominated; ++j)
      dominated = j != i && list[i] != list[j] && list[i].coords.is_subset_of(hulls[j]);
    if (!dominated && std::find(kept.begin(), kept.end(), list[i]) == kept.end()) kept.push_back(list[i]);
  }
  return kept;
}

HyperatomicReport is_hyperatomic(const Lattice& lattice) {
  HyperatomicReport report;
  const auto all_atoms = atoms(lattice);
  for (const auto& p : lattice.members()) {
    if (p.empty()) continue;
    std::vector<Atom> inside;
    for (const auto& a : all_atoms)
      if (a.coords.is_subset_of(p)) inside.push_back(a);
    auto gens = independent_atoms(lattice, inside);
    CoordSet joined;
    for (const auto& a : gens) joined = unite(joined, a.coords);
    if (e_hull(lattice, joined) != p) throw std::logic_error("atom generators do not reproduce " + p.str());
    report.generators.emplace_back(p, std::move(gens));
  }
  return report;
}

// ---------------------------------------------------------------------------

SupportPattern::SupportPattern(Index dimension) : dimension_(dimension), allowed_(dimension * dimension, false) {}

std::vector<std::pair<Index, Index>> SupportPattern::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < dimension_; ++i)
    for (Index j = 0; j < dimension_; ++j)
      if (allows(i, j)) out.emplace_back(i, j);
  return out;
}

bool SupportPattern::is_reflexive() const {
  for (Index i = 0; i < dimension_; ++i)
    if (!allows(i, i)) return false;
  return true;
}

bool SupportPattern::is_transitive() const {
  for (Index i = 0; i < dimension_; ++i)
    for (Index j = 0; j < dimension_; ++j)
      if (allows(i, j))
        for (Index k = 0; k < dimension_; ++k)
          if (allows(j, k) && !allows(i, k)) return false;
  return true;
}

SupportPattern support_pattern(const Lattice& lattice) {
  SupportPattern pattern(lattice.dimension());
  for (Index j = 0; j < lattice.dimension(); ++j)
    for (Index i : e_hull(lattice, CoordSet{j})) pattern.allow(i, j);
  return pattern;
}

std::vector<CoordSet> nest_chain(const Lattice& lattice) {
  if (!is_nest(lattice)) throw InvalidInput("lattice is not a nest");
  return lattice.members();
}

std::optional<CoordSet> immediate_predecessor(const Lattice& nest, const CoordSet& p) {
  const auto chain = nest_chain(nest);
  auto it = std::find(chain.begin(), chain.end(), p);
  if (it == chain.end()) throw InvalidInput(p.str() + " is not a member of the lattice");
  if (it == chain.begin()) return std::nullopt;
  return *std::prev(it);
}

}  // namespace cslkit
