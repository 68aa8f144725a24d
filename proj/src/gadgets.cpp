#include "unitrep/gadgets.hpp"

#include <algorithm>
#include <string>

#include "unitrep/errors.hpp"

namespace unitrep {

Gadget gen_gadget(int k, std::int64_t M, const std::vector<std::int64_t>& A) {
  if (k < 1) throw InvalidThreePartition("k must be positive");
  if (A.size() != static_cast<std::size_t>(3 * k)) {
    throw InvalidThreePartition("expected " + std::to_string(3 * k) + " numbers, got " + std::to_string(A.size()));
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!(4 * A[i] > M && 2 * A[i] < M)) {
      throw InvalidThreePartition("A[" + std::to_string(i) + "] = " + std::to_string(A[i]) +
                                  " is not strictly between M/4 and M/2");
    }
    sum += A[i];
  }
  if (sum != k * M) throw InvalidThreePartition("numbers sum to " + std::to_string(sum) + ", not kM");

  Gadget gd;
  gd.k = k;
  gd.M = M;
  gd.A = A;
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  for (std::int64_t a : A) {
    std::vector<int> path;
    for (std::int64_t j = 0; j < 2 * a; ++j) {
      if (j > 0) edges.emplace_back(next - 1, next);
      path.push_back(next++);
    }
    gd.paths.push_back(std::move(path));
  }
  for (int i = 0; i <= k; ++i) gd.anchors.push_back(next++);

  gd.instance.graph = Graph(next, edges);
  gd.instance.lbound.assign(static_cast<std::size_t>(next), Bound(Rational(1)));
  gd.instance.ubound.assign(static_cast<std::size_t>(next), Bound(Rational(BigInt(BigInt(k) * (M + 2)))));
  for (int i = 0; i <= k; ++i) {
    Rational at(BigInt(BigInt(i) * (M + 2)));
    gd.instance.lbound[gd.anchors[i]] = at;
    gd.instance.ubound[gd.anchors[i]] = at;
  }
  return gd;
}

std::vector<std::array<int, 3>> decode_partition(const UnitRep& rep, const Gadget& gadget) {
  if (rep.left.size() != static_cast<std::size_t>(gadget.instance.size())) {
    throw DecodeError("representation size does not match the gadget");
  }
  std::vector<std::vector<int>> gaps(static_cast<std::size_t>(gadget.k));
  for (std::size_t p = 0; p < gadget.paths.size(); ++p) {
    int gap = -1;
    for (int v : gadget.paths[p]) {
      int here = -1;
      for (int i = 0; i < gadget.k; ++i) {
        const Rational lo = rep.right(gadget.anchors[i]);
        const Rational hi = rep.left[gadget.anchors[i + 1]];
        if (lo < rep.left[v] && rep.right(v) < hi) here = i;
      }
      if (here < 0 || (gap >= 0 && here != gap)) {
        throw DecodeError("path " + std::to_string(p) + " is not inside a single gap");
      }
      gap = here;
    }
    gaps[gap].push_back(static_cast<int>(p));
  }
  std::vector<std::array<int, 3>> out;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    std::int64_t sum = 0;
    for (int p : gaps[i]) sum += gadget.A[p];
    if (gaps[i].size() != 3 || sum != gadget.M) {
      throw DecodeError("gap " + std::to_string(i) + " holds " + std::to_string(gaps[i].size()) +
                        " paths summing to " + std::to_string(sum));
    }
    out.push_back({gaps[i][0], gaps[i][1], gaps[i][2]});
  }
  return out;
}

}  // namespace unitrep
