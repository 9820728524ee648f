#include "cslkit/symbolic_nest.hpp"

#include "cslkit/rational.hpp"

namespace cslkit {

std::string to_string(SymbolicKind kind) { return kind == SymbolicKind::OmegaNest ? "omega" : "omega-star"; }

SymbolicKind parse_symbolic_kind(const std::string& text) {
  if (text == "omega" || text == "OmegaNest") return SymbolicKind::OmegaNest;
  if (text == "omega-star" || text == "OmegaStarNest") return SymbolicKind::OmegaStarNest;
  throw InvalidInput("unknown symbolic nest kind '" + text + "' (expected omega or omega-star)");
}

NestElement SymbolicNest::normalize(NestElement e) const {
  if (e.tag != NestElement::Tag::Chain) return NestElement{e.tag, 0};
  if (kind_ == SymbolicKind::OmegaNest) return e.index == 0 ? NestElement::zero() : e;
  if (e.index == 0) throw InvalidInput("T_k is indexed from k = 1");
  return e.index == 1 ? NestElement::top() : e;
}

std::string SymbolicNest::name(NestElement e) const {
  e = normalize(e);
  switch (e.tag) {
    case NestElement::Tag::Zero: return "0";
    case NestElement::Tag::Top: return "I";
    case NestElement::Tag::Chain:
      return (kind_ == SymbolicKind::OmegaNest ? "F_" : "T_") + std::to_string(e.index);
  }
  return {};
}

bool SymbolicNest::less(NestElement a, NestElement b) const {
  a = normalize(a);
  b = normalize(b);
  using T = NestElement::Tag;
  if (a == b) return false;
  if (a.tag == T::Zero || b.tag == T::Top) return true;
  if (b.tag == T::Zero || a.tag == T::Top) return false;
  return kind_ == SymbolicKind::OmegaNest ? a.index < b.index : a.index > b.index;
}

std::optional<NestElement> SymbolicNest::immediate_predecessor(NestElement e) const {
  e = normalize(e);
  using T = NestElement::Tag;
  if (e.tag == T::Zero) return std::nullopt;
  if (kind_ == SymbolicKind::OmegaNest) {
    if (e.tag == T::Top) return std::nullopt;  // I is the join of the F_n, none of which is maximal below I
    return e.index == 1 ? NestElement::zero() : NestElement::chain(e.index - 1);
  }
  return NestElement::chain(e.tag == T::Top ? 2 : e.index + 1);
}

std::optional<std::size_t> SymbolicNest::generating_atom(NestElement e) const {
  e = normalize(e);
  using T = NestElement::Tag;
  if (e.tag == T::Zero) return std::nullopt;
  if (kind_ == SymbolicKind::OmegaNest) {
    if (e.tag == T::Top) return std::nullopt;
    return e.index;  // F_n = E(atom n)
  }
  return e.tag == T::Top ? 1 : e.index;  // T_k = E(atom k)
}

std::vector<NestElement> SymbolicNest::non_stabilizing_chain(std::size_t count) const {
  std::vector<NestElement> out;
  if (kind_ != SymbolicKind::OmegaNest) return out;
  for (std::size_t n = 1; n <= count; ++n) out.push_back(NestElement::chain(n));
  return out;
}

SymbolicHyperatomic is_hyperatomic(const SymbolicNest& nest) {
  if (nest.kind() == SymbolicKind::OmegaNest)
    return {false, NestElement::top(),
            "I is the join of F_1 < F_2 < ... and has no immediate predecessor; any finite atom set lies in "
            "some F_n < I"};
  return {true, std::nullopt, "every non-zero T_k is generated by the single atom k"};
}

}  // namespace cslkit
