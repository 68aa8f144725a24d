#include "unitrep/instance.hpp"

#include <algorithm>
#include <string>

#include "unitrep/errors.hpp"

namespace unitrep {

BoundRepInstance BoundRepInstance::unbounded(Graph g) {
  BoundRepInstance inst;
  const auto n = static_cast<std::size_t>(g.size());
  inst.graph = std::move(g);
  inst.lbound.assign(n, Bound::neg_inf());
  inst.ubound.assign(n, Bound::pos_inf());
  return inst;
}

void BoundRepInstance::validate() const {
  const auto n = static_cast<std::size_t>(graph.size());
  if (lbound.size() != n || ubound.size() != n) throw InputError("bounds do not match the vertex count");
  for (std::size_t v = 0; v < n; ++v) {
    if (lbound[v].is_pos_inf()) throw InputError("lower bound +inf on vertex " + std::to_string(v));
    if (ubound[v].is_neg_inf()) throw InputError("upper bound -inf on vertex " + std::to_string(v));
  }
  if (prescribed_order) {
    const auto c = connected_components(graph).size();
    std::vector<int> sorted = *prescribed_order;
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == c;
    for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<int>(i);
    if (!ok) throw InputError("prescribed order must be a permutation of 0.." + std::to_string(c) + "-1");
  }
}

}  // namespace unitrep
