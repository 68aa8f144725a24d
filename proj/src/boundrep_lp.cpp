#include "unitrep/boundrep_lp.hpp"

#include <algorithm>

namespace unitrep {

std::vector<int> order_with_bounds(const GroupPartition& groups, const ProperOrdering& ordering,
                                   Direction direction, std::span<const Bound> lbounds) {
  ProperOrdering o = ordering;
  o.direction = direction;
  std::vector<int> out;
  for (int gid : o.sequence()) {
    std::vector<int> members = groups.groups[gid];
    std::stable_sort(members.begin(), members.end(), [&](int a, int b) { return lbounds[a] < lbounds[b]; });
    out.insert(out.end(), members.begin(), members.end());
  }
  return out;
}

DifferenceSystem build_constraints(const Graph& g, std::span<const int> order, const Bound& e_prev,
                                   const Rational& eps, std::span<const Bound> lbounds, bool reduced,
                                   const Rational& anchor) {
  const int k = static_cast<int>(order.size());
  DifferenceSystem sys(k);
  if (k == 0) return sys;
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;

  bool any_finite = false;
  for (int i = 0; i < k; ++i) {
    const Bound& b = lbounds[order[i]];
    if (b.is_finite()) {
      sys.lower(i, b.value());
      any_finite = true;
    }
  }
  if (e_prev.is_finite()) {
    sys.lower(0, e_prev.value() + eps);
  } else if (!any_finite) {
    sys.lower(0, anchor);
  }

  const Rational gap = Rational(1) + eps;
  for (int i = 0; i + 1 < k; ++i) sys.require(i + 1, i, Rational(0));

  // leftmost neighbour position of each vertex in ◁
  std::vector<int> first_nb(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    int lo = j;
    for (int w : g.neighbors(order[j])) lo = std::min(lo, pos[w]);
    first_nb[j] = lo;
  }
  for (int j = 1; j < k; ++j) {
    if (reduced) {
      int i = first_nb[j] - 1;  // rightmost non-neighbour before j
      if (i >= 0) sys.require(j, i, gap);
      if (i + 1 < j) sys.require(i + 1, j, Rational(-1));
    } else {
      for (int i = 0; i < j; ++i) {
        if (g.adjacent(order[i], order[j])) {
          sys.require(i, j, Rational(-1));
        } else {
          sys.require(j, i, gap);
        }
      }
    }
  }
  return sys;
}

}  // namespace unitrep
