#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "unitrep/instance.hpp"

namespace unitrep {

// BoundRep instance built from a 3-Partition input: a path on 2 * A[i]
// vertices per number (bounds [1, k(M+2)]) and k+1 isolated anchors pinned
// at i(M+2). Path vertices come first, numbered consecutively per path.
struct Gadget {
  BoundRepInstance instance;
  int k = 0;
  std::int64_t M = 0;
  std::vector<std::int64_t> A;
  std::vector<std::vector<int>> paths;  // vertex ids of path i, in path order
  std::vector<int> anchors;             // anchor vertex ids, left to right
};

// Throws InvalidThreePartition unless |A| = 3k, M/4 < A[i] < M/2 and sum(A) = kM.
Gadget gen_gadget(int k, std::int64_t M, const std::vector<std::int64_t>& A);

// Triples of path indices (0-based), one per gap between consecutive
// anchors, each sorted. Throws DecodeError when a path leaves its gap or a
// gap does not hold a triple summing to M.
std::vector<std::array<int, 3>> decode_partition(const UnitRep& rep, const Gadget& gadget);

}  // namespace unitrep
