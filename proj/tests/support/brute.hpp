#pragma once

// Exhaustive helpers for tests. Nothing here calls into the solvers.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "unitrep/graph.hpp"
#include "unitrep/proper_ext.hpp"
#include "unitrep/rational.hpp"

namespace unitrep::brute {

// One graph per isomorphism class on n vertices (n <= 6).
std::vector<Graph> all_graphs(int n);
bool is_connected(const Graph& g);

// Some vertex order in which every closed neighbourhood is consecutive,
// found by trying all permutations.
bool has_consecutive_order(const Graph& g);

// Decides whether the partial proper representation extends, by trying
// every vertex order and every grouping of identical intervals and solving
// the resulting strict/non-strict difference system exactly. All pre-drawn
// endpoints must be multiples of 1/scale.
bool proper_extension_exists(const Graph& g, const PartialProperRep& p, std::int64_t scale);

// Exhaustive 3-Partition: does a partition into triples summing to M exist?
bool three_partition_exists(const std::vector<std::int64_t>& A, std::int64_t M);

// All inputs (sorted multisets) with |A| = 3k, M/4 < A_i < M/2, sum = kM.
std::vector<std::vector<std::int64_t>> three_partition_inputs(int k, std::int64_t M);

}  // namespace unitrep::brute

#include <random>

namespace unitrep::brute {

// Relabels the distinct endpoint values of `rep` by a random increasing map
// onto multiples of 1/2 in [0, 12] and keeps each vertex with probability
// `keep`. The result is a valid partial representation.
PartialProperRep remapped_partial(const ProperRep& rep, std::mt19937_64& rng, double keep);

// Independent random intervals on multiples of 1/2 in [0, 8]; callers filter
// for validity.
PartialProperRep random_partial(int n, std::mt19937_64& rng, double keep);

}  // namespace unitrep::brute
