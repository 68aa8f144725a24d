#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "unitrep/rational.hpp"

namespace unitrep {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}
  // Throws std::invalid_argument on self-loops, duplicates or out-of-range ids.
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int size() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return m_; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

std::vector<std::vector<int>> connected_components(const Graph& g);

struct GroupPartition {
  std::vector<std::vector<int>> groups;  // each sorted; ordered by smallest member
  std::vector<int> group_of;
};

// Groups of vertices with equal closed neighborhoods.
GroupPartition indistinguishable_groups(const Graph& g);

// Graph on the groups: group i ~ group j iff their members are adjacent.
Graph quotient(const Graph& g, const GroupPartition& groups);

struct PrunedGraph {
  Graph graph;                              // vertex i stands for group i
  std::vector<Bound> lbound;                // max over the group
  std::vector<std::vector<int>> back_map;   // group -> original vertices
  std::vector<int> representative;          // smallest id attaining the max lbound
};

PrunedGraph prune(const Graph& g, std::span<const Bound> lbounds);
PrunedGraph prune(const Graph& g, const GroupPartition& groups, std::span<const Bound> lbounds);

}  // namespace unitrep
