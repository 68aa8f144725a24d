#pragma once

#include <optional>
#include <vector>

#include "unitrep/rational.hpp"

namespace unitrep {

// Constraints x[to] >= x[from] + weight together with lower bounds x[i] >= source[i].
struct DifferenceSystem {
  struct Constraint {
    int from;
    int to;
    Rational weight;
  };

  int num_vars = 0;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> source;

  explicit DifferenceSystem(int n = 0) : num_vars(n), source(static_cast<std::size_t>(n)) {}
  void require(int to, int from, Rational weight) { constraints.push_back({from, to, std::move(weight)}); }
  void lower(int var, const Rational& b);
};

struct LeastSolution {
  bool feasible = false;
  // Pointwise least assignment; -inf for variables no lower bound reaches.
  std::vector<Bound> values;
  // When infeasible: the variables of a positive cycle, in constraint order.
  std::vector<int> cycle;
  long relaxations = 0;
};

// Longest-path relaxation to a fixpoint (Bellman-Ford in sweeps: constraints
// pointing to larger indices first, ascending, then the rest, descending).
LeastSolution least_solution(const DifferenceSystem& sys);

}  // namespace unitrep
