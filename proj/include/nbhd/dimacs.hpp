#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nbhd/graph.hpp"

namespace nbhd {

// DIMACS .col: "c" comment lines, one "p edge <n> <m>" header and
// "e <u> <v>" lines with 1-based endpoints. Duplicate edges are dropped with
// a warning appended to `warnings` (when given).
Graph read_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph read_graph(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Canonical form: header, then edges with u < v in lexicographic order.
void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {});
void write_graph(const Graph& g, const std::string& path, const std::string& comment = {});

}  // namespace nbhd
