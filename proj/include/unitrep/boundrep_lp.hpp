#pragma once

#include <span>
#include <vector>

#include "unitrep/difference_system.hpp"
#include "unitrep/graph.hpp"
#include "unitrep/ordering.hpp"

namespace unitrep {

// Linear order ◁ of a connected component: groups in `direction`, members of a
// group by ascending lbound, ties by ascending vertex id.
std::vector<int> order_with_bounds(const GroupPartition& groups, const ProperOrdering& ordering,
                                   Direction direction, std::span<const Bound> lbounds);

// Difference system over positions in ◁: variable i is the left endpoint of
// order[i]. `g` is the component graph; `lbounds` is indexed by its vertices.
// Full mode emits every pair; reduced mode only the rightmost non-neighbour
// and the leftmost neighbour of each vertex. Upper bounds are not encoded.
// Without E_prev and finite lbounds the first variable is pinned at `anchor`.
DifferenceSystem build_constraints(const Graph& g, std::span<const int> order, const Bound& e_prev,
                                   const Rational& eps, std::span<const Bound> lbounds, bool reduced,
                                   const Rational& anchor = Rational(0));

}  // namespace unitrep
