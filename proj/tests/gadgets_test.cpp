#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "brute.hpp"
#include "unitrep/errors.hpp"
#include "unitrep/gadgets.hpp"
#include "unitrep/oracle.hpp"
#include "unitrep/pipeline.hpp"

using namespace unitrep;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

int component_of(const BoundRepInstance& inst, int v) {
  auto comps = connected_components(inst.graph);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (std::find(comps[c].begin(), comps[c].end(), v) != comps[c].end()) return static_cast<int>(c);
  }
  return -1;
}

// Anchors and paths in the order of a known partition, one triple per gap.
std::vector<int> order_for(const Gadget& g, const std::vector<std::array<int, 3>>& triples) {
  std::vector<int> order{component_of(g.instance, g.anchors[0])};
  for (std::size_t t = 0; t < triples.size(); ++t) {
    for (int i : triples[t]) order.push_back(component_of(g.instance, g.paths[i][0]));
    order.push_back(component_of(g.instance, g.anchors[t + 1]));
  }
  return order;
}

}  // namespace

TEST(GenGadget, FigureInstance) {
  Gadget g = gen_gadget(2, 7, {2, 2, 2, 2, 3, 3});
  const auto& inst = g.instance;
  ASSERT_EQ(g.paths.size(), 6u);
  int p4 = 0, p6 = 0;
  for (const auto& p : g.paths) {
    if (p.size() == 4) ++p4;
    if (p.size() == 6) ++p6;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(inst.graph.adjacent(p[i], p[i + 1]));
    for (int v : p) {
      EXPECT_EQ(inst.lbound[v], Bound(q(1)));
      EXPECT_EQ(inst.ubound[v], Bound(q(18)));
    }
  }
  EXPECT_EQ(p4, 4);
  EXPECT_EQ(p6, 2);
  ASSERT_EQ(g.anchors.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    int a = g.anchors[i];
    EXPECT_EQ(inst.graph.degree(a), 0);
    EXPECT_EQ(inst.lbound[a], Bound(q(9 * i)));
    EXPECT_EQ(inst.ubound[a], Bound(q(9 * i)));
  }
  EXPECT_EQ(inst.size(), 28 + 3);
  EXPECT_EQ(inst.graph.edge_count(), 22u);
  // path vertices first, numbered consecutively
  EXPECT_EQ(g.paths[0], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(g.anchors[0], 28);
}

TEST(GenGadget, RejectsBadInput) {
  EXPECT_THROW(gen_gadget(2, 8, {4, 4, 2, 2, 2, 2}), InvalidThreePartition);  // A_i = M/2
  EXPECT_THROW(gen_gadget(2, 8, {3, 3, 3, 3, 2, 2}), InvalidThreePartition);  // A_i = M/4
  EXPECT_THROW(gen_gadget(2, 7, {2, 2, 2, 2, 3}), InvalidThreePartition);     // |A| != 3k
  EXPECT_THROW(gen_gadget(2, 7, {2, 2, 2, 3, 3, 3}), InvalidThreePartition);  // sum != kM
  EXPECT_THROW(gen_gadget(0, 7, {}), InvalidThreePartition);
}

TEST(GenGadget, SingleTriple) {
  Gadget g = gen_gadget(1, 3, {1, 1, 1});
  EXPECT_EQ(g.paths.size(), 3u);
  for (const auto& p : g.paths) EXPECT_EQ(p.size(), 2u);
  auto res = boundrep_fpt(g.instance);
  ASSERT_TRUE(res.result.feasible());
  auto triples = decode_partition(res.result.rep, g);
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0], (std::array<int, 3>{0, 1, 2}));
}

TEST(DecodePartition, FigurePartition) {
  Gadget g = gen_gadget(2, 7, {2, 2, 2, 2, 3, 3});
  std::vector<std::array<int, 3>> want{{0, 2, 5}, {1, 3, 4}};
  BoundRepInstance inst = g.instance;
  inst.prescribed_order = order_for(g, want);
  for (SolveMode m : {SolveMode::kLp, SolveMode::kShift}) {
    SolveOptions o;
    o.mode = m;
    auto res = solve_boundrep_prescribed(inst, o);
    ASSERT_TRUE(res.feasible()) << res.reason;
    EXPECT_EQ(decode_partition(res.rep, g), want);
  }
}

TEST(DecodePartition, RejectsCrowdedGap) {
  Gadget g = gen_gadget(2, 7, {2, 2, 2, 2, 3, 3});
  UnitRep rep;
  rep.left.assign(static_cast<std::size_t>(g.instance.size()), q(0));
  for (int i = 0; i < 3; ++i) rep.left[g.anchors[i]] = q(9 * i);
  // every path squeezed into the first gap
  Rational x = q(1);
  for (const auto& p : g.paths) {
    for (int v : p) {
      rep.left[v] = x;
      x += q(1, 4);
    }
  }
  EXPECT_THROW(decode_partition(rep, g), DecodeError);
  // a path straddling the middle anchor
  for (std::size_t i = 0; i < g.paths[0].size(); ++i) rep.left[g.paths[0][i]] = q(7) + q(static_cast<long>(i));
  EXPECT_THROW(decode_partition(rep, g), DecodeError);
}

TEST(Gadget, InfeasibleInstance) {
  const std::vector<std::int64_t> A{4, 4, 4, 4, 4, 6};
  EXPECT_FALSE(brute::three_partition_exists(A, 13));
  Gadget g = gen_gadget(2, 13, A);
  for (SolveMode m : {SolveMode::kLp, SolveMode::kShift}) {
    SolveOptions o;
    o.mode = m;
    EXPECT_FALSE(boundrep_fpt(g.instance, o).result.feasible());
  }
}

// Feasibility of the gadget matches 3-Partition; decoded triples sum to M;
// a path on 2A vertices spans at least A.
TEST(Gadget, RoundTripSmall) {
  int yes = 0, no = 0;
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t M = 3; M <= 16; ++M) {
      for (const auto& A : brute::three_partition_inputs(k, M)) {
        Gadget g = gen_gadget(k, M, A);
        bool expected = brute::three_partition_exists(A, M);
        auto res = boundrep_fpt(g.instance);
        ASSERT_EQ(res.result.feasible(), expected) << "k=" << k << " M=" << M;
        if (!expected) {
          ++no;
          continue;
        }
        ++yes;
        ValidityOptions vo{g.instance.lbound, g.instance.ubound, {}, res.result.grid.eps};
        EXPECT_TRUE(check_valid(res.result.rep.left, g.instance.graph, vo).ok());
        for (const auto& t : decode_partition(res.result.rep, g)) EXPECT_EQ(A[t[0]] + A[t[1]] + A[t[2]], M);
        for (std::size_t i = 0; i < g.paths.size(); ++i) {
          Rational lo = res.result.rep.left[g.paths[i][0]], hi = lo;
          for (int v : g.paths[i]) {
            lo = min(lo, res.result.rep.left[v]);
            hi = max(hi, res.result.rep.left[v]);
          }
          EXPECT_GE(hi + q(1) - lo, q(static_cast<long>(A[i])));
        }
      }
    }
  }
  EXPECT_GT(yes, 3);
  EXPECT_GT(no, 1);
}
