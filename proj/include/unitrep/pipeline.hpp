#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitrep/boundrep.hpp"
#include "unitrep/graph.hpp"
#include "unitrep/rational.hpp"

namespace unitrep {

// Left endpoints of pre-drawn unit intervals; nullopt marks a free vertex.
using PartialUnitRep = std::vector<std::optional<Rational>>;

struct RepExtResult {
  bool feasible = false;
  UnitRep rep;
  std::vector<int> component_order;  // located components left to right, then unlocated ones
  ShiftStats stats;
  std::string reason;
};

// Throws InvalidPartial when the pre-drawn intervals do not represent the
// subgraph they induce. Infeasibility is reported in the result.
RepExtResult repext_unit(const Graph& g, const PartialUnitRep& partial, const SolveOptions& opts = {});

struct FptResult {
  BoundRepResult result;
  std::vector<int> order;        // the component order that succeeded
  std::int64_t component_solves = 0;
};

// Tries component orders in lexicographic order and returns the first that
// admits a representation. Prefixes that already fail are cut, as are
// repeated (placed set, E_prev) states and components identical to one
// already tried at the same depth.
FptResult boundrep_fpt(const BoundRepInstance& inst, const SolveOptions& opts = {});

}  // namespace unitrep
