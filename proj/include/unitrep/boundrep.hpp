#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitrep/grid.hpp"
#include "unitrep/instance.hpp"
#include "unitrep/ordering.hpp"
#include "unitrep/shift_engine.hpp"

namespace unitrep {

enum class SolveMode { kLp, kShift };

const char* to_string(SolveMode m);

struct SolveOptions {
  SolveMode mode = SolveMode::kShift;
  // Defaults to compute_epsilon over all finite bounds in the mode's refinement.
  std::optional<GridSpec> grid;
  bool reduced_constraints = true;  // lp mode only
  ShiftTrace trace;                 // shift mode only
};

enum class SolveStatus { kFeasible, kInfeasible, kNotProperInterval };

struct ComponentSolution {
  bool feasible = false;
  int component = -1;
  Direction direction = Direction::kForward;
  std::vector<int> order;     // ◁ as global vertex ids
  std::vector<Rational> left;  // parallel to `order`
  Rational end;               // E_t = max left + 1
  ShiftStats stats;
  std::string reason;
};

struct BoundRepResult {
  SolveStatus status = SolveStatus::kInfeasible;
  UnitRep rep;  // complete when feasible
  std::vector<ComponentSolution> components;  // in solving order
  GridSpec grid;
  ShiftStats stats;
  std::string reason;
  int witness = -1;  // for kNotProperInterval

  bool feasible() const { return status == SolveStatus::kFeasible; }
};

// Per-instance state shared by the prescribed-order and FPT drivers.
class BoundRepSolver {
 public:
  BoundRepSolver(const BoundRepInstance& inst, SolveOptions opts);

  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<std::vector<int>>& components() const { return components_; }
  const GridSpec& grid() const { return grid_; }
  // Set when some component is not a proper interval graph.
  const std::optional<NotProperInterval>& not_proper() const { return not_proper_; }

  // One direction variant of component c placed after E_prev.
  ComponentSolution solve_variant(int c, Direction d, const Bound& e_prev) const;
  // Both variants; the feasible one with smaller E_t (forward on ties).
  ComponentSolution solve_component(int c, const Bound& e_prev) const;
  BoundRepResult solve(std::span<const int> order) const;

 private:
  struct Component {
    Graph graph;
    GroupPartition groups;
    ProperOrdering ordering;
  };

  const BoundRepInstance& inst_;
  SolveOptions opts_;
  GridSpec grid_;
  std::vector<std::vector<int>> components_;
  std::vector<Component> data_;
  std::optional<NotProperInterval> not_proper_;
  Rational anchor_;
};

// Where the first vertex of a component goes when nothing bounds it from
// below: 0, or far enough left that small upper bounds stay reachable
// (min finite ubound - 2n - 2, rounded down).
Rational anchor_position(const BoundRepInstance& inst);

// GridSpec used by default for the given mode.
GridSpec default_grid(const BoundRepInstance& inst, SolveMode mode);

// Requires a prescribed order unless the instance has at most one component.
BoundRepResult solve_boundrep_prescribed(const BoundRepInstance& inst, const SolveOptions& opts);

}  // namespace unitrep
