#include "unitrep/difference_system.hpp"

#include <algorithm>

namespace unitrep {

void DifferenceSystem::lower(int var, const Rational& b) {
  auto& s = source[static_cast<std::size_t>(var)];
  if (!s || *s < b) s = b;
}

LeastSolution least_solution(const DifferenceSystem& sys) {
  const int n = sys.num_vars;
  std::vector<const DifferenceSystem::Constraint*> forward, backward;
  for (const auto& c : sys.constraints) (c.from < c.to ? forward : backward).push_back(&c);
  std::stable_sort(forward.begin(), forward.end(), [](auto* a, auto* b) { return a->from < b->from; });
  std::stable_sort(backward.begin(), backward.end(), [](auto* a, auto* b) { return a->from > b->from; });

  std::vector<std::optional<Rational>> val = sys.source;
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  LeastSolution out;
  int last_changed = -1;
  Rational cand;
  auto relax = [&](const DifferenceSystem::Constraint* c) {
    const auto& from = val[c->from];
    if (!from) return false;
    ++out.relaxations;
    cand = *from;
    cand += c->weight;
    auto& to = val[c->to];
    if (to && !(*to < cand)) return false;
    to = cand;
    pred[c->to] = c->from;
    last_changed = c->to;
    return true;
  };

  for (int round = 0;; ++round) {
    bool changed = false;
    for (auto* c : forward) changed |= relax(c);
    for (auto* c : backward) changed |= relax(c);
    if (!changed) break;
    if (round >= n) {
      // A change in round n+1 proves a positive cycle on the predecessor chain.
      int v = last_changed;
      for (int i = 0; i < n; ++i) v = pred[v];
      std::vector<int> cyc{v};
      for (int u = pred[v]; u != v; u = pred[u]) cyc.push_back(u);
      std::reverse(cyc.begin(), cyc.end());
      out.cycle = std::move(cyc);
      out.feasible = false;
      return out;
    }
  }
  out.feasible = true;
  out.values.reserve(static_cast<std::size_t>(n));
  for (auto& v : val) out.values.push_back(v ? Bound(*v) : Bound::neg_inf());
  return out;
}

}  // namespace unitrep
