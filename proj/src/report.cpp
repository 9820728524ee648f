#include "cslkit/report.hpp"

#include <cstdio>
#include <sstream>

#include "cslkit/interp.hpp"
#include "cslkit/min_norm.hpp"

namespace cslkit {

namespace {

constexpr const char* kDecimalNote = "decimal fields render exact rationals at 12 significant digits";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string vec_str(const RVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

Json coords(const CoordSet& s) { return Json(s.coords()); }

Json rational_matrix(const RMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json decimal_matrix(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(fmt_double(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& os, const Json& rows) {
  for (const auto& row : rows) {
    os << "    [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].get<std::string>();
    os << "]\n";
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Report analyze(const ParsedLattice& parsed) {
  const Lattice& l = parsed.lattice;
  Report r;
  std::ostringstream os;
  auto& j = r.json;
  j["kind"] = "finite";
  j["dimension"] = l.dimension();
  j["member_count"] = l.members().size();
  j["members"] = lattice_to_json(l)["members"];
  Json added = Json::array();
  for (const auto& a : parsed.added) added.push_back(coords(a));
  j["closure_added"] = added;

  const bool nest = is_nest(l);
  const auto atom_list = atoms(l);
  const auto hyper = is_hyperatomic(l);
  const auto order = orbits_totally_ordered(l);

  Json atom_json = Json::array();
  for (const auto& a : atom_list) atom_json.push_back(coords(a.coords));
  j["nest"] = nest;
  j["atoms"] = atom_json;
  j["conditions"] = Json{{"hyperatomic", hyper.hyperatomic},
                         {"ascending_chains_stabilize", true},
                         {"immediate_predecessors", nest ? Json(true) : Json(nullptr)},
                         {"orbits_totally_ordered", order.total}};
  Json gens = Json::array();
  for (const auto& [p, list] : hyper.generators) {
    Json as = Json::array();
    for (const auto& a : list) as.push_back(coords(a.coords));
    gens.push_back(Json{{"member", coords(p)}, {"atoms", as}});
  }
  j["hyperatomic_generators"] = gens;

  os << "lattice: dimension " << l.dimension() << ", " << l.members().size() << " members\n";
  os << "  members:";
  for (const auto& m : l.members()) os << ' ' << m.str();
  os << '\n';
  if (!parsed.added.empty()) {
    os << "  added by closure:";
    for (const auto& a : parsed.added) os << ' ' << a.str();
    os << '\n';
  }
  os << "  atoms:";
  for (const auto& a : atom_list) os << ' ' << a.coords.str();
  os << '\n';
  os << "  nest: " << yes_no(nest) << '\n';
  os << "conditions:\n";
  os << "  hyperatomic: " << yes_no(hyper.hyperatomic) << '\n';
  os << "  ascending chains eventually constant: yes (finite lattice)\n";
  if (nest) os << "  every non-zero member has an immediate predecessor: yes\n";
  os << "  invariant manifolds totally ordered: " << yes_no(order.total) << '\n';
  os << "hyperatomic generators:\n";
  for (const auto& [p, list] : hyper.generators) {
    os << "  " << p.str() << " = E(";
    for (std::size_t i = 0; i < list.size(); ++i) os << (i ? ", " : "") << list[i].coords.str();
    os << ")\n";
  }

  if (nest) {
    Json table = Json::array();
    os << "predecessor table:\n";
    const auto chain = nest_chain(l);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (it->empty()) continue;
      const auto pred = immediate_predecessor(l, *it);
      table.push_back(Json{{"member", coords(*it)}, {"predecessor", coords(*pred)}});
      os << "  " << it->str() << " -> " << pred->str() << '\n';
    }
    j["predecessor_table"] = table;
  }

  Json ord{{"total", order.total}};
  os << "orbit order: " << (order.total ? "total" : "not total") << '\n';
  if (order.witness) {
    const auto& w = *order.witness;
    ord["witness"] = Json{{"first", coords(w.first)},
                          {"first_generator", vector_to_json(w.first_generator)},
                          {"second", coords(w.second)},
                          {"second_generator", vector_to_json(w.second_generator)}};
    os << "  witness: M_x = " << w.first.str() << " for x = " << vec_str(w.first_generator) << ", M_y = "
       << w.second.str() << " for y = " << vec_str(w.second_generator) << " are incomparable\n";
  }
  j["orbit_order"] = ord;
  r.text = os.str();
  return r;
}

Report analyze(const SymbolicNest& nest) {
  Report r;
  std::ostringstream os;
  auto& j = r.json;
  const bool omega = nest.kind() == SymbolicKind::OmegaNest;
  const auto hyper = is_hyperatomic(nest);
  j["kind"] = to_string(nest.kind());
  j["conditions"] = Json{{"hyperatomic", hyper.hyperatomic},
                         {"ascending_chains_stabilize", !omega},
                         {"immediate_predecessors", !omega},
                         {"orbits_totally_ordered", !omega}};
  j["hyperatomic_reason"] = hyper.reason;
  os << "symbolic nest: " << (omega ? "0 = F_0 < F_1 < F_2 < ... < I" : "I = T_1 > T_2 > ... > 0") << '\n';
  os << "conditions:\n";
  os << "  hyperatomic: " << yes_no(hyper.hyperatomic) << ", " << hyper.reason << '\n';

  if (hyper.witness) j["hyperatomic_witness"] = nest.name(*hyper.witness);

  Json chain = Json::array();
  for (const auto& e : nest.non_stabilizing_chain(5)) chain.push_back(nest.name(e));
  if (omega) {
    chain.push_back("...");
    j["non_stabilizing_chain"] = chain;
    os << "  ascending chains eventually constant: no, F_1 < F_2 < F_3 < F_4 < F_5 < ... never stabilizes\n";
    os << "      witness: I has no finite atom generator\n";
  } else {
    os << "  ascending chains eventually constant: yes, the complements form a well-ordered chain\n";
  }

  Json table = Json::array();
  std::vector<NestElement> sample;
  if (omega) {
    sample = {NestElement::top(), NestElement::chain(3), NestElement::chain(2), NestElement::chain(1)};
  } else {
    sample = {NestElement::top(), NestElement::chain(2), NestElement::chain(3), NestElement::chain(4)};
  }
  os << "  immediate predecessors: " << (omega ? "no" : "yes") << '\n';
  for (const auto& e : sample) {
    const auto pred = nest.immediate_predecessor(e);
    const auto gen = nest.generating_atom(e);
    table.push_back(Json{{"element", nest.name(e)},
                         {"predecessor", pred ? Json(nest.name(*pred)) : Json(nullptr)},
                         {"generating_atom", gen ? Json(*gen) : Json(nullptr)}});
    os << "      " << nest.name(e) << " -> " << (pred ? nest.name(*pred) : std::string("(none)"))
       << (gen ? ", generated by atom " + std::to_string(*gen) : std::string(", no finite generator")) << '\n';
  }
  j["predecessor_table"] = table;

  if (omega) {
    j["orbit_order"] = Json{{"total", false}, {"witness", "counterexample C: M_x and M_y are incomparable"}};
    os << "  invariant manifolds totally ordered: no, see `counterexample C` (and `B` for operator ranges)\n";
    os << "  invariant manifolds closed: no, see `counterexample A`\n";
  } else {
    j["orbit_order"] = Json{{"total", true}};
    os << "  invariant manifolds totally ordered: yes\n";
  }
  r.text = os.str();
  return r;
}

Report lance_report(const Lattice& lattice, const RVector& x, const RVector& y) {
  const auto res = lance_sup(lattice, x, y);
  Report r;
  std::ostringstream os;
  r.json["finite"] = res.finite;
  r.json["witness"] = coords(res.witness);
  if (res.finite) {
    r.json["value_squared"] = to_string(res.value_sq);
    r.json["value_squared_decimal"] = to_decimal(res.value_sq);
    os << "lance sup^2 = " << to_string(res.value_sq) << " (~" << to_decimal(res.value_sq) << "), attained at E = "
       << res.witness.str() << '\n';
  } else {
    r.json["value_squared"] = "inf";
    os << "lance sup = inf: E = " << res.witness.str() << " has E^perp x = 0 but E^perp y != 0 (no interpolant)\n";
  }
  r.text = os.str();
  return r;
}

Report orbit_report(const Lattice& lattice, const RVector& x) {
  const auto m = orbit_space(lattice, x);
  Report r;
  r.json["orbit"] = coords(m);
  r.text = "M_x = span of coordinates " + m.str() + "\n";
  return r;
}

Report rank_one_report(const Lattice& lattice, const RVector& x, const RVector& y) {
  const auto res = rank_one(lattice, x, y);
  Report r;
  std::ostringstream os;
  r.json["exists"] = res.has_value();
  if (res) {
    r.json["member"] = res->member ? coords(*res->member) : Json(nullptr);
    r.json["functional"] = vector_to_json(res->functional);
    r.json["operator"] = rational_matrix(res->op);
    if (res->member)
      os << "rank-one interpolant via P = " << res->member->str() << ", w = " << vec_str(res->functional) << '\n';
    else
      os << "y = 0: the zero operator interpolates\n";
    print_matrix(os, r.json["operator"]);
  } else {
    os << "no rank-one operator in Alg L maps x to y\n";
  }
  r.text = os.str();
  return r;
}

Report interpolate_report(const Lattice& lattice, const RVector& x, const RVector& y, double tol) {
  Report r = lance_report(lattice, x, y);
  std::ostringstream os;
  os << r.text;
  const auto lance = lance_sup(lattice, x, y);
  if (x == y) {
    r.json["identity_interpolates"] = true;
    os << "x = y: T = I interpolates\n";
  }
  if (!lance.finite) {
    r.json["interpolant"] = "none";
    os << "no interpolant\n";
    r.text = os.str();
    return r;
  }
  if (!is_nest(lattice)) {
    r.json["nest"] = false;
    os << "lattice is not a nest: greedy and min-norm interpolants need a nest\n";
    const auto ro = rank_one(lattice, x, y);
    if (ro) {
      r.json["rank_one"] = rational_matrix(ro->op);
      os << "rank-one interpolant:\n";
      print_matrix(os, r.json["rank_one"]);
    }
    r.text = os.str();
    return r;
  }

  const auto g = greedy_nest_interpolant(lattice, x, y);
  const auto mn = min_norm_interpolant(lattice, x, y, tol);
  const double greedy_norm = operator_norm(to_double(g.matrix));
  bool lower_ok = true;
  if (lance.value_sq > 0) {
    RVector u(x.size(), Rational(0));
    for (Index i = 0; i < x.size(); ++i)
      if (!lance.witness.contains(i)) u[i] = x[i];
    lower_ok = rayleigh_sq(g.matrix, u) >= lance.value_sq;
  }
  const bool upper_ok = opnorm_sq_at_most(g.matrix, g.norm_bound_sq);

  r.json["greedy"] = Json{{"matrix", rational_matrix(g.matrix)},
                          {"pattern_ok", g.pattern_ok},
                          {"norm_bound_squared", to_string(g.norm_bound_sq)},
                          {"norm_bound_squared_decimal", to_decimal(g.norm_bound_sq)},
                          {"operator_norm", fmt_double(greedy_norm)}};
  r.json["min_norm"] = Json{{"matrix", decimal_matrix(mn.matrix)},
                            {"pattern_ok", mn.pattern_ok},
                            {"operator_norm", fmt_double(mn.norm)},
                            {"residual", fmt_double(mn.residual)},
                            {"gap", fmt_double(mn.gap)}};
  r.json["sandwich"] = Json{{"lance_le_greedy_opnorm", lower_ok}, {"greedy_opnorm_le_bound", upper_ok}};

  os << "greedy interpolant (exact, Tx = y):\n";
  print_matrix(os, r.json["greedy"]["matrix"]);
  os << "  |T| ~ " << fmt_double(greedy_norm) << ", |T|^2 <= " << to_string(g.norm_bound_sq) << " (~"
     << to_decimal(g.norm_bound_sq) << ")\n";
  os << "  sandwich lance <= |T| <= bound: " << (lower_ok && upper_ok ? "verified exactly" : "FAILED") << '\n';
  os << "min-norm interpolant (numeric):\n";
  print_matrix(os, r.json["min_norm"]["matrix"]);
  os << "  |T| = " << fmt_double(mn.norm) << ", |Tx - y| = " << fmt_double(mn.residual) << '\n';
  r.text = os.str();
  return r;
}

}  // namespace cslkit
