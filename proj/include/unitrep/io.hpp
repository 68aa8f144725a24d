#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "unitrep/graph.hpp"
#include "unitrep/instance.hpp"
#include "unitrep/pipeline.hpp"
#include "unitrep/proper_ext.hpp"

namespace unitrep {

// Text formats. Blank lines and everything after '#' are ignored.
//   graph:    "n m", then m lines "u v"
//   bounds:   lines "v lb ub" (unlisted vertices are unbounded), optional "order c0 c1 ..."
//   partial:  lines "v l r" (proper) or "v l" / "v l l+1" (unit)
//   rep:      lines "v l r"
// Numbers are exact rationals "p/q", integers or decimals. All readers throw ParseError.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Fills lbound/ubound/prescribed_order of an instance over g.
BoundRepInstance read_bounds(std::istream& in, Graph g);
void write_bounds(std::ostream& out, const BoundRepInstance& inst);

PartialProperRep read_partial_proper(std::istream& in, int n);
PartialUnitRep read_partial_unit(std::istream& in, int n);

void write_unit_rep(std::ostream& out, const UnitRep& rep);
void write_proper_rep(std::ostream& out, const ProperRep& rep);

// Opens a file for the readers above; throws InputError when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace unitrep
