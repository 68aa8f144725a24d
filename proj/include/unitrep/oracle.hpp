#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unitrep/graph.hpp"
#include "unitrep/proper_ext.hpp"
#include "unitrep/rational.hpp"

namespace unitrep {

struct ValidityOptions {
  std::span<const Bound> lbound;  // empty: unchecked
  std::span<const Bound> ubound;  // empty: unchecked
  std::span<const int> order;     // left endpoints weakly increase along it
  std::optional<Rational> eps;    // non-edge gaps >= eps and grid membership
};

struct Verdict {
  bool geometry = true;
  bool bounds = true;
  bool ordering = true;
  bool grid = true;
  std::vector<std::string> failures;

  bool ok() const { return geometry && bounds && ordering && grid; }
};

// Naive all-pairs check of a unit representation [left[v], left[v] + 1].
Verdict check_valid(std::span<const Rational> left, const Graph& g, const ValidityOptions& opts = {});

// Naive all-pairs check of a proper representation.
Verdict check_valid_proper(std::span<const Interval> iv, const Graph& g);

// Order constraints for the brute-force searches: l_u <= l_v whenever
// rank[u] < rank[v]; equal ranks are unconstrained.
std::vector<int> ranks_of_order(std::span<const int> order, int n);
std::vector<int> ranks_of_groups(const GroupPartition& groups, std::span<const int> group_sequence, int n);

struct SearchWindow {
  Rational lo;
  Rational hi;
};

// [min finite lbound - n - 1, max finite lbound + n + 1]; needs a finite lbound.
SearchWindow default_window(std::span<const Bound> lbounds);

struct BruteForceOptions {
  bool propagate = true;  // bounds propagation between branching steps
  std::int64_t node_limit = 200'000'000;
};

// Coordinate-wise minimum over all eps-grid representations within the
// window respecting the ranks and lower bounds, or nullopt when there is none.
std::optional<std::vector<Rational>> brute_force_leftmost(const Graph& g, std::span<const int> rank,
                                                          std::span<const Bound> lbounds, const Rational& eps,
                                                          std::optional<SearchWindow> window = {},
                                                          BruteForceOptions opts = {});

// Some eps-grid representation within both bounds for some vertex order, or
// nullopt. Tries every permutation; meant for n <= 7.
std::optional<std::vector<Rational>> brute_force_feasible(const Graph& g, std::span<const Bound> lbounds,
                                                          std::span<const Bound> ubounds, const Rational& eps,
                                                          std::optional<SearchWindow> window = {});

// All eps-grid representations within the window (ranks and lower bounds).
std::vector<std::vector<Rational>> enumerate_representations(const Graph& g, std::span<const int> rank,
                                                             std::span<const Bound> lbounds, const Rational& eps,
                                                             const SearchWindow& window, std::size_t limit = 2'000'000);

std::vector<Rational> infimum(std::span<const std::vector<Rational>> reps);

struct PosetReport {
  std::size_t representations = 0;
  std::size_t non_minimal = 0;
  bool minimum_found = false;
  bool minimum_unshiftable = true;
  bool sinks_shiftable = true;
  bool acyclicity_checked = false;  // K >= n/2: acyclicity, sinks and chains checked
  bool acyclic = true;
  bool chains_reach_minimum = true;
  bool infimum_closed = true;
  std::vector<std::string> violations;

  bool ok() const {
    return minimum_found && minimum_unshiftable && sinks_shiftable && acyclic && chains_reach_minimum &&
           infimum_closed;
  }
};

// Poset checks on a tiny instance with eps = 1/K: the minimum admits no
// single eps left shift and pairwise infima stay valid. When K >= n/2 also:
// H is acyclic, every other representation has a shiftable sink in H
// restricted to where it differs from the minimum, and sink-shift chains end
// at the minimum.
PosetReport poset_properties(const Graph& g, std::span<const int> rank, std::span<const Bound> lbounds,
                             const Rational& eps, const SearchWindow& window);

}  // namespace unitrep
