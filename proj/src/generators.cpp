#include "unitrep/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace unitrep {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

RandomRep random_unit_rep(int n, Rng& rng, const StaircaseOptions& opts) {
  if (n < 0 || opts.components < 1 || opts.denominator < 1 || opts.max_step < 1 || opts.max_step > opts.denominator) {
    throw std::invalid_argument("bad staircase options");
  }
  const int comps = std::min(opts.components, std::max(n, 1));
  // Component boundaries: positions where a wide gap starts.
  std::vector<int> cuts;
  for (int i = 1; i < n; ++i) cuts.push_back(i);
  std::vector<bool> cut_before(static_cast<std::size_t>(n), false);
  for (int c = 1; c < comps && !cuts.empty(); ++c) {
    auto at = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(cuts.size()) - 1));
    cut_before[cuts[at]] = true;
    cuts.erase(cuts.begin() + static_cast<std::ptrdiff_t>(at));
  }
  std::vector<Rational> pos(static_cast<std::size_t>(n));
  Rational x(0);
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      std::int64_t step;
      if (cut_before[i]) {
        step = opts.denominator + uniform(rng, 1, opts.denominator);
      } else if (coin(rng, opts.twin_probability)) {
        step = 0;
      } else {
        step = uniform(rng, 1, opts.max_step);
      }
      x += Rational(BigInt(step), BigInt(opts.denominator));
    }
    pos[i] = x;
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  if (opts.shuffle) {
    for (int i = n - 1; i > 0; --i) std::swap(label[i], label[uniform(rng, 0, i)]);
  }
  RandomRep r;
  r.left.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r.left[label[i]] = pos[i];
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && pos[j] - pos[i] <= Rational(1); ++j) {
      edges.emplace_back(std::min(label[i], label[j]), std::max(label[i], label[j]));
    }
  }
  r.graph = Graph(n, edges);
  return r;
}

BoundRepInstance planted_bounds(const RandomRep& r, Rng& rng, const PlantedBoundsOptions& opts) {
  BoundRepInstance inst = BoundRepInstance::unbounded(r.graph);
  for (int v = 0; v < inst.size(); ++v) {
    if (coin(rng, opts.lbound_probability)) {
      inst.lbound[v] = r.left[v] - Rational(BigInt(uniform(rng, 0, opts.max_slack)), BigInt(opts.slack_denominator));
    }
    if (coin(rng, opts.ubound_probability)) {
      inst.ubound[v] = r.left[v] + Rational(BigInt(uniform(rng, 0, opts.max_slack)), BigInt(opts.slack_denominator));
    }
  }
  inst.prescribed_order = component_order_of(r.graph, r.left);
  return inst;
}

std::vector<int> component_order_of(const Graph& g, const std::vector<Rational>& left) {
  auto comps = connected_components(g);
  std::vector<Rational> lo;
  for (const auto& vs : comps) {
    Rational m = left[vs.front()];
    for (int v : vs) m = min(m, left[v]);
    lo.push_back(m);
  }
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lo[a] < lo[b]; });
  return order;
}

}  // namespace unitrep
