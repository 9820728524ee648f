#pragma once

#include <string>

#include "cslkit/certificate_io.hpp"
#include "cslkit/lattice_io.hpp"
#include "cslkit/symbolic_nest.hpp"

namespace cslkit {

/// A report carries the machine-readable document and its text rendering.
/// Decimal strings are renderings of the exact values stored beside them.
struct Report {
  Json json;
  std::string text;
};

Report analyze(const ParsedLattice& parsed);
Report analyze(const SymbolicNest& nest);

Report lance_report(const Lattice& lattice, const RVector& x, const RVector& y);
Report orbit_report(const Lattice& lattice, const RVector& x);
Report rank_one_report(const Lattice& lattice, const RVector& x, const RVector& y);
Report interpolate_report(const Lattice& lattice, const RVector& x, const RVector& y, double tol);

}  // namespace cslkit
