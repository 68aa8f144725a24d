#pragma once

#include <span>
#include <vector>

#include "unitrep/graph.hpp"
#include "unitrep/rational.hpp"

namespace unitrep {

// Obstruction digraph H of a unit representation: an arc i -> j when j blocks
// moving i left by eps. j is a left obstruction of i when they are
// non-adjacent and l_j + 1 + eps = l_i, a right obstruction when they are
// adjacent and l_i + 1 = l_j.
struct ObstructionDigraph {
  std::vector<std::vector<int>> left;   // left obstructions of each vertex
  std::vector<std::vector<int>> right;  // right obstructions of each vertex

  std::vector<int> successors(int v) const;
  bool acyclic() const;
  // Some directed cycle, empty when acyclic.
  std::vector<int> find_cycle() const;
  // Vertices with an oriented path to a tight vertex (l = lbound), which
  // therefore cannot move in any smaller representation.
  std::vector<bool> fixed(std::span<const Rational> left_pos, std::span<const Bound> lbounds) const;
};

ObstructionDigraph obstruction_digraph(std::span<const Rational> left, const Graph& g, const Rational& eps);

}  // namespace unitrep
