#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "unitrep/graph.hpp"

using namespace unitrep;

namespace {

Graph make(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, edges); }

// The 8-vertex graph whose groups are {0,1,2} and {5,6}.
Graph figure8() {
  return make(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6},
                  {5, 7}, {6, 7}});
}

std::vector<int> closed(const Graph& g, int v) {
  std::vector<int> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(make(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(make(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(make(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Graph, AdjacencySymmetricAndSorted) {
  Graph g = make(4, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(Graph(3)), (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  EXPECT_EQ(connected_components(make(3, {{0, 1}, {1, 2}})), (std::vector<std::vector<int>>{{0, 1, 2}}));
  EXPECT_EQ(connected_components(make(4, {{0, 1}, {2, 3}})), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(connected_components(make(4, {{1, 3}, {0, 2}})), (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
}

TEST(Groups, Examples) {
  EXPECT_EQ(indistinguishable_groups(make(3, {{0, 1}, {0, 2}, {1, 2}})).groups.size(), 1u);
  EXPECT_EQ(indistinguishable_groups(make(3, {{0, 1}, {1, 2}})).groups.size(), 3u);
  auto gp = indistinguishable_groups(figure8());
  EXPECT_EQ(gp.groups, (std::vector<std::vector<int>>{{0, 1, 2}, {3}, {4}, {5, 6}, {7}}));
}

TEST(Groups, MatchClosedNeighbourhoodsOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : brute::all_graphs(n)) {
      auto gp = indistinguishable_groups(g);
      for (int u = 0; u < n; ++u) {
        EXPECT_TRUE(std::find(gp.groups[gp.group_of[u]].begin(), gp.groups[gp.group_of[u]].end(), u) !=
                    gp.groups[gp.group_of[u]].end());
        for (int v = 0; v < n; ++v) {
          EXPECT_EQ(gp.group_of[u] == gp.group_of[v], closed(g, u) == closed(g, v));
        }
      }
    }
  }
}

TEST(Prune, MaxAggregation) {
  Graph k3 = make(3, {{0, 1}, {0, 2}, {1, 2}});
  std::vector<Bound> lb{Rational(0), Rational(1, 2), Bound::neg_inf()};
  PrunedGraph p = prune(k3, lb);
  EXPECT_EQ(p.graph.size(), 1);
  EXPECT_EQ(p.lbound[0], Bound(Rational(1, 2)));
  EXPECT_EQ(p.representative[0], 1);
  EXPECT_EQ(p.back_map[0], (std::vector<int>{0, 1, 2}));
}

TEST(Prune, SingletonGroupsKeepGraph) {
  Graph path = make(4, {{0, 1}, {1, 2}, {2, 3}});
  std::vector<Bound> lb(4);
  PrunedGraph p = prune(path, lb);
  EXPECT_EQ(p.graph, path);
}

TEST(Prune, FigureGraphCollapsesToFiveVertices) {
  std::vector<Bound> lb(8);
  PrunedGraph p = prune(figure8(), lb);
  EXPECT_EQ(p.graph.size(), 5);
  EXPECT_EQ(p.graph, make(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}));
}

TEST(Prune, TwinFreeAndIdempotent) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : brute::all_graphs(n)) {
      std::vector<Bound> lb;
      for (int v = 0; v < n; ++v) lb.push_back(rng() % 3 ? Bound(Rational(static_cast<long>(rng() % 5))) : Bound());
      PrunedGraph p = prune(g, lb);
      for (int u = 0; u < p.graph.size(); ++u) {
        for (int v = u + 1; v < p.graph.size(); ++v) EXPECT_NE(closed(p.graph, u), closed(p.graph, v));
        Bound mx;
        for (int x : p.back_map[u]) mx = max(mx, lb[x]);
        EXPECT_EQ(p.lbound[u], mx);
      }
      PrunedGraph again = prune(p.graph, p.lbound);
      EXPECT_EQ(again.graph, p.graph);
      EXPECT_EQ(again.lbound, p.lbound);
    }
  }
}

TEST(Groups, SwappingTwinsIsAutomorphism) {
  for (const Graph& g : brute::all_graphs(5)) {
    auto gp = indistinguishable_groups(g);
    for (const auto& grp : gp.groups) {
      for (std::size_t i = 1; i < grp.size(); ++i) {
        int a = grp[0], b = grp[i];
        auto sw = [&](int x) { return x == a ? b : x == b ? a : x; };
        for (auto [x, y] : g.edges()) EXPECT_TRUE(g.adjacent(sw(x), sw(y)));
      }
    }
  }
}
