#include "cslkit/lattice_io.hpp"

#include <fstream>
#include <sstream>

namespace cslkit {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << content;
  if (!out) throw InvalidInput("write failed for '" + path + "'");
}

ParsedLattice parse_lattice(const Json& doc, ClosureMode mode) {
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("members"))
    throw InvalidInput("lattice document needs 'dimension' and 'members'");
  const auto& dim = doc.at("dimension");
  if (!dim.is_number_integer() || dim.get<long long>() <= 0) throw InvalidInput("'dimension' must be a positive integer");
  const auto d = static_cast<Index>(dim.get<long long>());
  const auto& members = doc.at("members");
  if (!members.is_array()) throw InvalidInput("'members' must be an array of arrays");

  std::vector<CoordSet> family;
  for (const auto& m : members) {
    if (!m.is_array()) throw InvalidInput("'members' must be an array of arrays");
    std::vector<Index> coords;
    for (const auto& c : m) {
      if (!c.is_number_integer() || c.get<long long>() < 0)
        throw InvalidInput("member coordinates must be non-negative integers");
      coords.push_back(static_cast<Index>(c.get<long long>()));
    }
    family.emplace_back(std::move(coords));
  }

  Closure closed = complete_lattice(family, d);
  if (mode == ClosureMode::Strict && !closed.added.empty()) {
    std::string missing;
    for (const auto& a : closed.added) missing += (missing.empty() ? "" : ", ") + a.str();
    throw InvalidInput("family is not a complete lattice; missing members: " + missing);
  }
  return {std::move(closed.lattice), std::move(closed.added)};
}

ParsedLattice parse_lattice_text(const std::string& text, ClosureMode mode) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed lattice document: ") + e.what());
  }
  return parse_lattice(doc, mode);
}

ParsedLattice parse_lattice_file(const std::string& path, ClosureMode mode) {
  return parse_lattice_text(read_file(path), mode);
}

Json lattice_to_json(const Lattice& lattice) {
  Json members = Json::array();
  for (const auto& m : lattice.members()) members.push_back(m.coords());
  return Json{{"dimension", lattice.dimension()}, {"members", std::move(members)}};
}

std::string serialize_lattice(const Lattice& lattice) { return lattice_to_json(lattice).dump() + "\n"; }

RVector parse_vector(const std::string& text) {
  RVector v;
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') {
    Json arr;
    try {
      arr = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("malformed vector: ") + e.what());
    }
    for (const auto& e : arr) {
      if (e.is_string())
        v.push_back(parse_rational(e.get<std::string>()));
      else if (e.is_number_integer())
        v.push_back(parse_rational(e.dump()));
      else
        throw InvalidInput("vector entries must be integers or \"p/q\" strings");
    }
    return v;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw InvalidInput("empty vector");
  return v;
}

Json vector_to_json(const RVector& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(to_string(c));
  return arr;
}

}  // namespace cslkit
