#pragma once

#include <optional>
#include <vector>

#include "unitrep/graph.hpp"
#include "unitrep/rational.hpp"

namespace unitrep {

struct BoundRepInstance {
  Graph graph;
  std::vector<Bound> lbound;  // -inf when absent
  std::vector<Bound> ubound;  // +inf when absent
  std::optional<std::vector<int>> prescribed_order;  // component indices, left to right

  static BoundRepInstance unbounded(Graph g);
  int size() const { return graph.size(); }
  // Throws InputError when sizes disagree or the order is not a permutation.
  void validate() const;
};

// Unit interval representation: vertex v occupies [left[v], left[v] + 1].
struct UnitRep {
  std::vector<Rational> left;

  Rational right(int v) const { return left[static_cast<std::size_t>(v)] + 1; }
  friend bool operator==(const UnitRep&, const UnitRep&) = default;
};

}  // namespace unitrep
