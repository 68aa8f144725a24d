#include "unitrep/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace unitrep {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : adj_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  m_ = edges.size();
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < size(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::unordered_map<int, int> local;
  local.reserve(vertices.size() * 2);
  for (std::size_t i = 0; i < vertices.size(); ++i) local.emplace(vertices[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : neighbors(vertices[i])) {
      auto it = local.find(w);
      if (it != local.end() && static_cast<int>(i) < it->second) es.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return Graph(static_cast<int>(vertices.size()), es);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace {

bool same_closed_neighborhood(const Graph& g, int u, int v) {
  if (g.degree(u) != g.degree(v)) return false;
  if (u != v && !g.adjacent(u, v)) return false;
  // N[u] = N[v] with u ~ v iff N(u) \ {v} = N(v) \ {u}.
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && a[i] == v) { ++i; continue; }
    if (j < b.size() && b[j] == u) { ++j; continue; }
    if (i >= a.size() || j >= b.size() || a[i] != b[j]) return false;
    ++i;
    ++j;
  }
  return true;
}

std::uint64_t closed_fingerprint(const Graph& g, int v) {
  // Order-independent mix of N[v]; collisions are resolved by exact comparison.
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(static_cast<std::uint64_t>(v));
  for (int w : g.neighbors(v)) h += mix(static_cast<std::uint64_t>(w));
  return h;
}

}  // namespace

GroupPartition indistinguishable_groups(const Graph& g) {
  const int n = g.size();
  GroupPartition p;
  p.group_of.assign(static_cast<std::size_t>(n), -1);
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;  // fingerprint -> group ids
  for (int v = 0; v < n; ++v) {
    auto& candidates = buckets[closed_fingerprint(g, v)];
    int found = -1;
    for (int gid : candidates) {
      if (same_closed_neighborhood(g, p.groups[gid].front(), v)) {
        found = gid;
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(p.groups.size());
      p.groups.emplace_back();
      candidates.push_back(found);
    }
    p.groups[found].push_back(v);
    p.group_of[v] = found;
  }
  return p;
}

Graph quotient(const Graph& g, const GroupPartition& groups) {
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < groups.groups.size(); ++i) {
    const int rep = groups.groups[i].front();
    std::vector<int> nb;
    for (int w : g.neighbors(rep)) {
      int j = groups.group_of[w];
      if (static_cast<int>(i) < j) nb.push_back(j);
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (int j : nb) es.emplace_back(static_cast<int>(i), j);
  }
  return Graph(static_cast<int>(groups.groups.size()), es);
}

PrunedGraph prune(const Graph& g, std::span<const Bound> lbounds) {
  return prune(g, indistinguishable_groups(g), lbounds);
}

PrunedGraph prune(const Graph& g, const GroupPartition& groups, std::span<const Bound> lbounds) {
  PrunedGraph out;
  out.graph = quotient(g, groups);
  out.back_map = groups.groups;
  for (const auto& members : groups.groups) {
    int rep = members.front();
    for (int v : members) {
      if (lbounds[rep] < lbounds[v]) rep = v;
    }
    out.representative.push_back(rep);
    out.lbound.push_back(lbounds[rep]);
  }
  return out;
}

}  // namespace unitrep
