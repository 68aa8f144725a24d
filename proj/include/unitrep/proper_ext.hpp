#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitrep/graph.hpp"
#include "unitrep/ordering.hpp"
#include "unitrep/rational.hpp"

namespace unitrep {

struct Interval {
  Rational left;
  Rational right;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Pre-drawn intervals; vertices without a value are free.
struct PartialProperRep {
  std::vector<std::optional<Interval>> intervals;

  explicit PartialProperRep(int n = 0) : intervals(static_cast<std::size_t>(n)) {}
  int predrawn_count() const;
};

struct ProperRep {
  std::vector<Interval> intervals;

  friend bool operator==(const ProperRep&, const ProperRep&) = default;
};

// Left-to-right classes of pre-drawn vertices; a class holds identical intervals.
struct PredrawnOrder {
  std::vector<std::vector<int>> classes;
};

// Throws InvalidPartial when the pre-drawn intervals are not a proper
// representation of the induced subgraph or identical intervals sit on
// vertices with different closed neighbourhoods.
PredrawnOrder predrawn_order(const Graph& g, const PartialProperRep& p);

// Empty string when `iv` is a proper interval representation of g, else the
// first problem found. Runs in O(n log n + m).
std::string proper_representation_error(const Graph& g, std::span<const Interval> iv);

enum class ExtendVerdict { kYes, kNo, kNotProperInterval };

enum class Violation {
  kNone,
  kNoCompatibleOrder,   // condition 1: neither < nor its reversal extends the pre-drawn order
  kNotConsecutive,      // condition 2: pre-drawn vertices of a component interleave with another
  kNoRoom,              // touching pre-drawn endpoints leave no room for the forced endpoints
};

const char* to_string(Violation v);

struct ComponentPlan {
  std::vector<int> vertices;  // sorted global ids
  bool located = false;
  Direction direction = Direction::kForward;
  std::vector<int> order;  // ◁ as global ids
};

struct ExtendReport {
  ExtendVerdict verdict = ExtendVerdict::kNo;
  Violation violation = Violation::kNone;
  int component = -1;  // offending component for kNo
  int witness = -1;    // for kNotProperInterval
  std::string reason;
  std::vector<ComponentPlan> components;
  std::optional<ProperRep> rep;  // set for kYes
};

ExtendReport extendible_proper(const Graph& g, const PartialProperRep& p);

// Throws Impossible when the partial representation does not extend.
ProperRep extend_proper(const Graph& g, const PartialProperRep& p);

}  // namespace unitrep
