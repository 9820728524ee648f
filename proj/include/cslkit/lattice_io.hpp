#pragma once

#include <string>
#include <vector>

#include "cslkit/certificate_io.hpp"
#include "cslkit/lattice.hpp"

namespace cslkit {

enum class ClosureMode {
  Auto,      ///< close the family, reporting added members
  Complete,  ///< close the family (explicitly requested)
  Strict,    ///< reject a non-closed family, listing the missing members
};

struct ParsedLattice {
  Lattice lattice;
  std::vector<CoordSet> added;
};

/// {"dimension": d, "members": [[...], ...]}
ParsedLattice parse_lattice(const Json& doc, ClosureMode mode);
ParsedLattice parse_lattice_text(const std::string& text, ClosureMode mode);
ParsedLattice parse_lattice_file(const std::string& path, ClosureMode mode);

/// Canonical form: coordinates ascending, members by (size, lexicographic).
Json lattice_to_json(const Lattice& lattice);
std::string serialize_lattice(const Lattice& lattice);

/// "1,1/2,0" or a JSON array of integers and "p/q" strings.
RVector parse_vector(const std::string& text);
Json vector_to_json(const RVector& v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cslkit
