#include "unitrep/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace unitrep {

const char* to_string(Direction d) { return d == Direction::kForward ? "forward" : "reversed"; }

std::vector<int> ProperOrdering::sequence() const {
  std::vector<int> s = group_sequence;
  if (direction == Direction::kReversed) std::reverse(s.begin(), s.end());
  return s;
}

ProperOrdering ProperOrdering::reversed() const {
  ProperOrdering r = *this;
  r.direction = direction == Direction::kForward ? Direction::kReversed : Direction::kForward;
  return r;
}

std::vector<int> ProperOrdering::linear_order(const GroupPartition& groups) const {
  std::vector<int> out;
  for (int gid : sequence()) {
    const auto& members = groups.groups[gid];
    out.insert(out.end(), members.begin(), members.end());
  }
  return out;
}

int first_nonconsecutive(const Graph& g, std::span<const int> order) {
  const int n = g.size();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (int v : order) {
    int lo = pos[v], hi = pos[v];
    for (int w : g.neighbors(v)) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    if (hi - lo != g.degree(v)) return v;
  }
  return -1;
}

bool validate_ordering(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.size()) return false;
  return first_nonconsecutive(g, order) < 0;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int s) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::vector<int> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// In a connected twin-free proper interval graph the minimum-degree vertex of
// the last BFS layer is an end of the (unique up to reversal) ordering.
int end_vertex(const Graph& q) {
  auto dist = bfs_distances(q, 0);
  int far = *std::max_element(dist.begin(), dist.end());
  int best = -1;
  for (int v = 0; v < q.size(); ++v) {
    if (dist[v] == far && (best < 0 || q.degree(v) < q.degree(best))) best = v;
  }
  return best;
}

// Layers from an end vertex are cliques and blocks of the ordering; inside a
// layer, vertices are ordered by leftmost neighbor, then rightmost neighbor.
std::vector<int> layered_order(const Graph& q, int start) {
  auto dist = bfs_distances(q, start);
  const int n = q.size();
  struct Key {
    int layer, prev, next, v;
  };
  std::vector<Key> keys;
  keys.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Key k{dist[v], 0, 0, v};
    for (int w : q.neighbors(v)) {
      if (dist[w] == dist[v] - 1) ++k.prev;
      if (dist[w] == dist[v] + 1) ++k.next;
    }
    keys.push_back(k);
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.layer != b.layer) return a.layer < b.layer;
    if (a.prev != b.prev) return a.prev > b.prev;
    if (a.next != b.next) return a.next < b.next;
    return a.v < b.v;
  });
  std::vector<int> order;
  order.reserve(keys.size());
  for (const Key& k : keys) order.push_back(k.v);
  return order;
}

}  // namespace

OrderingResult compute_proper_ordering(const Graph& g, const GroupPartition& groups) {
  if (g.size() == 0) return ProperOrdering{};
  Graph q = quotient(g, groups);
  auto reach = bfs_distances(q, 0);
  if (std::any_of(reach.begin(), reach.end(), [](int d) { return d < 0; })) {
    throw std::invalid_argument("compute_proper_ordering needs a connected graph");
  }
  std::vector<int> order = q.size() == 1 ? std::vector<int>{0} : layered_order(q, end_vertex(q));
  if (int bad = first_nonconsecutive(q, order); bad >= 0) {
    return NotProperInterval{groups.groups[bad].front(),
                             "closed neighborhood of vertex " + std::to_string(groups.groups[bad].front()) +
                                 " cannot be consecutive"};
  }
  return ProperOrdering{std::move(order), Direction::kForward};
}

}  // namespace unitrep
