#pragma once

// Countable nests of diagonal projections with one-dimensional atoms 1, 2, ...
//
//   OmegaNest      0 = F_0 < F_1 < F_2 < ... < I,  F_n covers atoms 1..n, I = join of all F_n
//   OmegaStarNest  I = T_1 > T_2 > ... > 0,        T_k covers atoms k, k+1, ...

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cslkit {

enum class SymbolicKind { OmegaNest, OmegaStarNest };

std::string to_string(SymbolicKind kind);
SymbolicKind parse_symbolic_kind(const std::string& text);

struct NestElement {
  enum class Tag { Zero, Chain, Top };
  Tag tag = Tag::Zero;
  std::size_t index = 0;  ///< n for F_n (OmegaNest) or k for T_k (OmegaStarNest); Chain only

  static NestElement zero() { return {Tag::Zero, 0}; }
  static NestElement chain(std::size_t i) { return {Tag::Chain, i}; }
  static NestElement top() { return {Tag::Top, 0}; }
  friend bool operator==(const NestElement&, const NestElement&) = default;
};

class SymbolicNest {
 public:
  explicit SymbolicNest(SymbolicKind kind) : kind_(kind) {}

  SymbolicKind kind() const { return kind_; }

  /// Normalizes T_1 to I for OmegaStarNest; validates indices.
  NestElement normalize(NestElement e) const;
  std::string name(NestElement e) const;

  /// Strict chain order.
  bool less(NestElement a, NestElement b) const;

  std::optional<NestElement> immediate_predecessor(NestElement e) const;

  /// The single atom generating `e`, if a finite atom set generates it.
  std::optional<std::size_t> generating_atom(NestElement e) const;

  /// First `count` terms of a strictly ascending chain that never stabilizes,
  /// or empty when every ascending chain is eventually constant.
  std::vector<NestElement> non_stabilizing_chain(std::size_t count) const;

 private:
  SymbolicKind kind_;
};

struct SymbolicHyperatomic {
  bool hyperatomic = true;
  std::optional<NestElement> witness;  ///< element not generated by finitely many atoms
  std::string reason;
};

SymbolicHyperatomic is_hyperatomic(const SymbolicNest& nest);

}  // namespace cslkit
