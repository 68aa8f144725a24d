#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "unitrep/graph.hpp"
#include "unitrep/instance.hpp"
#include "unitrep/rational.hpp"

namespace unitrep {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]; independent of the standard library's distributions.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

struct StaircaseOptions {
  int components = 1;
  std::int64_t denominator = 4;  // steps are multiples of 1/denominator
  std::int64_t max_step = 4;     // in units of 1/denominator, at most denominator
  double twin_probability = 0.0; // chance that a step is zero
  bool shuffle = true;           // relabel vertices randomly
};

// A unit interval graph together with the representation it was drawn from.
struct RandomRep {
  Graph graph;
  std::vector<Rational> left;
};

// Left endpoints walk right in random steps; consecutive components are
// separated by a gap larger than 1.
RandomRep random_unit_rep(int n, Rng& rng, const StaircaseOptions& opts = {});

struct PlantedBoundsOptions {
  double lbound_probability = 0.5;
  double ubound_probability = 0.3;
  std::int64_t slack_denominator = 4;
  std::int64_t max_slack = 8;  // in units of 1/slack_denominator
};

// Bounds that the drawn representation satisfies, so the instance is
// feasible. The prescribed order lists components by their drawn position.
BoundRepInstance planted_bounds(const RandomRep& r, Rng& rng, const PlantedBoundsOptions& opts = {});

// Component indices (as in connected_components) ordered by leftmost endpoint.
std::vector<int> component_order_of(const Graph& g, const std::vector<Rational>& left);

}  // namespace unitrep
