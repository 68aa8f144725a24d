#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "unitrep/errors.hpp"
#include "unitrep/oracle.hpp"
#include "unitrep/proper_ext.hpp"

using namespace unitrep;

namespace {

Graph make(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, edges); }

Interval iv(Rational l, Rational r) { return {std::move(l), std::move(r)}; }

void expect_extends(const Graph& g, const PartialProperRep& p, const ProperRep& rep) {
  EXPECT_TRUE(check_valid_proper(rep.intervals, g).ok());
  for (int v = 0; v < g.size(); ++v) {
    if (p.intervals[v]) {
      EXPECT_EQ(rep.intervals[v], *p.intervals[v]);
    }
  }
}

}  // namespace

TEST(PredrawnOrder, DisjointIntervals) {
  Graph g(2);
  PartialProperRep p(2);
  p.intervals[1] = iv(0, 1);
  p.intervals[0] = iv(5, 6);
  EXPECT_EQ(predrawn_order(g, p).classes, (std::vector<std::vector<int>>{{1}, {0}}));
}

TEST(PredrawnOrder, IdenticalTwinsIncomparable) {
  Graph g = make(2, {{0, 1}});
  PartialProperRep p(2);
  p.intervals[0] = iv(0, 1);
  p.intervals[1] = iv(0, 1);
  EXPECT_EQ(predrawn_order(g, p).classes, (std::vector<std::vector<int>>{{0, 1}}));
}

TEST(PredrawnOrder, IdenticalNonTwinsRejected) {
  Graph g = make(3, {{0, 1}, {1, 2}});
  PartialProperRep p(3);
  p.intervals[0] = iv(0, 1);
  p.intervals[1] = iv(0, 1);
  EXPECT_THROW(predrawn_order(g, p), InvalidPartial);
}

TEST(PredrawnOrder, ContradictingEdgesRejected) {
  Graph g = make(2, {{0, 1}});
  PartialProperRep p(2);
  p.intervals[0] = iv(0, 1);
  p.intervals[1] = iv(2, 3);
  EXPECT_THROW(predrawn_order(g, p), InvalidPartial);
  p.intervals[1] = iv(Rational(1, 2), Rational(1, 2) + 3);
  p.intervals[0] = iv(0, 5);
  EXPECT_THROW(predrawn_order(g, p), InvalidPartial);
}

TEST(ExtendProper, PathWithGap) {
  Graph g = make(3, {{0, 1}, {1, 2}});
  PartialProperRep p(3);
  p.intervals[0] = iv(0, 1);
  p.intervals[2] = iv(2, 3);
  ExtendReport r = extendible_proper(g, p);
  ASSERT_EQ(r.verdict, ExtendVerdict::kYes);
  expect_extends(g, p, *r.rep);
}

TEST(ExtendProper, SinglePredrawnVertex) {
  Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  for (int v = 0; v < 4; ++v) {
    PartialProperRep p(4);
    p.intervals[v] = iv(Rational(-7, 3), Rational(1, 5));
    ExtendReport r = extendible_proper(g, p);
    ASSERT_EQ(r.verdict, ExtendVerdict::kYes);
    expect_extends(g, p, *r.rep);
  }
}

TEST(ExtendProper, IncompatibleOrderIsConditionOne) {
  Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}});
  PartialProperRep p(4);
  p.intervals[0] = iv(0, 1);
  p.intervals[3] = iv(Rational(3, 2), Rational(5, 2));
  p.intervals[1] = iv(Rational(-1, 2), Rational(1, 2));
  ExtendReport r = extendible_proper(g, p);
  EXPECT_EQ(r.verdict, ExtendVerdict::kNo);
  EXPECT_EQ(r.violation, Violation::kNoCompatibleOrder);
  EXPECT_FALSE(brute::proper_extension_exists(g, p, 2));
  EXPECT_THROW(extend_proper(g, p), Impossible);
}

TEST(ExtendProper, InterleavedComponentsIsConditionTwo) {
  Graph g = make(4, {{0, 1}, {1, 2}});
  PartialProperRep p(4);
  p.intervals[0] = iv(0, 1);
  p.intervals[2] = iv(3, 4);
  p.intervals[3] = iv(Rational(3, 2), Rational(5, 2));
  ExtendReport r = extendible_proper(g, p);
  EXPECT_EQ(r.verdict, ExtendVerdict::kNo);
  EXPECT_EQ(r.violation, Violation::kNotConsecutive);
  EXPECT_FALSE(brute::proper_extension_exists(g, p, 2));
  p.intervals[3] = iv(5, 6);
  r = extendible_proper(g, p);
  ASSERT_EQ(r.verdict, ExtendVerdict::kYes);
  expect_extends(g, p, *r.rep);
}

// Touching pre-drawn intervals can leave no room for a forced endpoint.
TEST(ExtendProper, TouchingPredrawnNoRoom) {
  Graph g = make(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  PartialProperRep p(5);
  p.intervals[3] = iv(0, 1);
  p.intervals[4] = iv(1, 2);
  ExtendReport r = extendible_proper(g, p);
  EXPECT_EQ(r.verdict, ExtendVerdict::kNo);
  EXPECT_EQ(r.violation, Violation::kNoRoom);
  EXPECT_FALSE(brute::proper_extension_exists(g, p, 1));
}

TEST(ExtendProper, NotProperInterval) {
  Graph claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
  ExtendReport r = extendible_proper(claw, PartialProperRep(4));
  EXPECT_EQ(r.verdict, ExtendVerdict::kNotProperInterval);
  EXPECT_GE(r.witness, 0);
}

TEST(ExtendProper, NothingPredrawn) {
  Graph g = make(3, {{0, 1}, {1, 2}});
  PartialProperRep p(3);
  ProperRep rep = extend_proper(g, p);
  expect_extends(g, p, rep);
}

// Six vertices with edges 0-1, 1-2, 1-3, 2-3, 3-4, 4-5 and 1, 4 pre-drawn:
// the endpoints come out as l0 l1 r0 l2 l3 r1 r2 l4 r3 l5 r4 r5.
TEST(ExtendProper, FigureEndpointOrder) {
  Graph g = make(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  PartialProperRep p(6);
  p.intervals[1] = iv(1, 5);
  p.intervals[4] = iv(6, 10);
  ProperRep rep = extend_proper(g, p);
  expect_extends(g, p, rep);
  std::vector<std::pair<Rational, std::string>> ends;
  for (int v = 0; v < 6; ++v) {
    ends.emplace_back(rep.intervals[v].left, "l" + std::to_string(v));
    ends.emplace_back(rep.intervals[v].right, "r" + std::to_string(v));
  }
  std::sort(ends.begin(), ends.end());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (i > 0) {
      EXPECT_LT(ends[i - 1].first, ends[i].first);
    }
    names.push_back(ends[i].second);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"l0", "l1", "r0", "l2", "l3", "r1", "r2", "l4", "r3", "l5", "r4", "r5"}));
}

TEST(ExtendProper, FullyPredrawnUnchanged) {
  Graph g = make(3, {{0, 1}, {1, 2}});
  PartialProperRep p(3);
  p.intervals[0] = iv(0, 2);
  p.intervals[1] = iv(1, 3);
  p.intervals[2] = iv(Rational(5, 2), 4);
  ProperRep rep = extend_proper(g, p);
  EXPECT_EQ(rep.intervals, (std::vector<Interval>{iv(0, 2), iv(1, 3), iv(Rational(5, 2), 4)}));
}

TEST(ExtendProper, Deterministic) {
  Graph g = make(5, {{0, 1}, {1, 2}, {3, 4}});
  PartialProperRep p(5);
  p.intervals[1] = iv(3, 4);
  EXPECT_EQ(extend_proper(g, p), extend_proper(g, p));
}

TEST(ExtendProper, AgreesWithExhaustiveSearchUpToFive) {
  std::mt19937_64 rng(21);
  int yes = 0, no = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : brute::all_graphs(n)) {
      ExtendReport base = extendible_proper(g, PartialProperRep(n));
      if (base.verdict == ExtendVerdict::kNotProperInterval) {
        EXPECT_FALSE(brute::proper_extension_exists(g, PartialProperRep(n), 1));
        continue;
      }
      for (int trial = 0; trial < 30; ++trial) {
        PartialProperRep p = brute::remapped_partial(*base.rep, rng, 0.7);
        if (trial % 3 == 0) {
          // rejection-sample a valid random partial drawing
          for (int attempt = 0; attempt < 200; ++attempt) {
            p = brute::random_partial(n, rng, 0.6);
            try {
              predrawn_order(g, p);
              break;
            } catch (const InvalidPartial&) {
            }
          }
        }
        if (trial % 3 == 2) {
          auto moved = brute::random_partial(n, rng, 1.0);
          const auto v = rng() % n;
          p.intervals[v] = moved.intervals[v];
        }
        ExtendReport r;
        try {
          r = extendible_proper(g, p);
        } catch (const InvalidPartial&) {
          continue;
        }
        const bool exists = brute::proper_extension_exists(g, p, 2);
        ASSERT_EQ(r.verdict == ExtendVerdict::kYes, exists);
        if (exists) {
          ++yes;
          expect_extends(g, p, *r.rep);
        } else {
          ++no;
        }
      }
    }
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 5);
}
