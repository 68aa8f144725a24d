#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "unitrep/graph.hpp"

namespace unitrep {

enum class Direction { kForward, kReversed };

const char* to_string(Direction d);

// Left-to-right order of the groups of a connected proper interval graph.
// Unique up to reversal; members of a group are interchangeable.
struct ProperOrdering {
  std::vector<int> group_sequence;
  Direction direction = Direction::kForward;

  // Group indices left to right, taking `direction` into account.
  std::vector<int> sequence() const;
  ProperOrdering reversed() const;
  // One linear extension: groups in sequence(), members by ascending id.
  std::vector<int> linear_order(const GroupPartition& groups) const;
};

struct NotProperInterval {
  int witness = -1;
  std::string reason;
};

using OrderingResult = std::variant<ProperOrdering, NotProperInterval>;

// Requires g connected.
OrderingResult compute_proper_ordering(const Graph& g, const GroupPartition& groups);

// True iff every closed neighborhood is a contiguous block of `order`.
bool validate_ordering(const Graph& g, std::span<const int> order);

// First vertex whose closed neighborhood is not contiguous in `order`, or -1.
int first_nonconsecutive(const Graph& g, std::span<const int> order);

}  // namespace unitrep
