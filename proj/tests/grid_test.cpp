#include <gtest/gtest.h>

#include <random>

#include "unitrep/errors.hpp"
#include "unitrep/grid.hpp"
#include "unitrep/oracle.hpp"

using namespace unitrep;

TEST(ComputeEpsilon, LcmOfDenominators) {
  std::vector<Rational> b{Rational(1, 2), Rational(1, 3)};
  GridSpec s = compute_epsilon(b, 5, GridMode::kLp);
  EXPECT_EQ(s.eps_prime, Rational(1, 6));
  EXPECT_EQ(s.eps, Rational(1, 30));
  EXPECT_EQ(s.K, 30);
}

TEST(ComputeEpsilon, NoBoundsMeansUnitEpsPrime) {
  GridSpec s = compute_epsilon(std::vector<Rational>{}, 7, GridMode::kLp);
  EXPECT_EQ(s.eps_prime, Rational(1));
  EXPECT_EQ(s.eps, Rational(1, 7));
}

TEST(ComputeEpsilon, ShiftModeRefinesBySquare) {
  std::vector<Rational> b{Rational(3), Rational(-2)};
  GridSpec s = compute_epsilon(b, 4, GridMode::kShift);
  EXPECT_EQ(s.eps_prime, Rational(1));
  EXPECT_EQ(s.eps, Rational(1, 16));
}

TEST(ComputeEpsilon, IgnoresInfiniteBounds) {
  std::vector<Bound> lb{Bound::neg_inf(), Rational(1, 4)};
  std::vector<Bound> ub{Bound::pos_inf(), Rational(5, 6)};
  GridSpec s = compute_epsilon(lb, ub, 2, GridMode::kLp);
  EXPECT_EQ(s.eps_prime, Rational(1, 12));
  EXPECT_EQ(s.eps, Rational(1, 24));
}

TEST(GridPoint, ExactConversion) {
  GridSpec s = GridSpec::from_k(1, 30);
  EXPECT_EQ(to_grid_point(Rational(7, 30), s), (GridPoint{0, 7}));
  EXPECT_EQ(to_grid_point(Rational(-5, 30), s), (GridPoint{-1, 25}));
  EXPECT_EQ(from_grid_point(GridPoint{-1, 25}, s), Rational(-1, 6));
  EXPECT_THROW(to_grid_point(Rational(1, 7), s), NotOnGrid);
}

TEST(GridPoint, RoundDown) {
  GridSpec s = GridSpec::from_k(1, 4);
  EXPECT_EQ(round_down_to(Rational(1, 3), s), (GridPoint{0, 1}));
  EXPECT_EQ(round_down_to(Rational(-1, 3), s), (GridPoint{-1, 2}));
  EXPECT_EQ(floor_ticks(Rational(-1, 3), 4), -2);
  EXPECT_EQ(ceil_ticks(Rational(-1, 3), 4), -1);
}

TEST(SnapToGrid, OnGridInputUnchanged) {
  GridSpec s = GridSpec::from_k(1, 4);
  std::vector<Rational> left{Rational(0), Rational(3, 4), Rational(2)};
  SnapResult r = snap_to_grid(left, s);
  EXPECT_EQ(r.left, left);
  for (const auto& x : r.left_shift) EXPECT_EQ(x, Rational(0));
  for (const auto& x : r.right_shift) EXPECT_EQ(x, Rational(0));
}

// Five intervals, eps' = 1 and eps = 1/5: left shifts (0,0,1/2,1/3,0) and
// right shifts (0,0,2eps,eps,0).
TEST(SnapToGrid, FigureInstance) {
  GridSpec s = GridSpec::from_k(1, 5);
  std::vector<Rational> left{Rational(0), Rational(2), Rational(5, 2), Rational(10, 3), Rational(5)};
  SnapResult r = snap_to_grid(left, s);
  EXPECT_EQ(r.left_shift, (std::vector<Rational>{0, 0, Rational(1, 2), Rational(1, 3), 0}));
  EXPECT_EQ(r.right_shift, (std::vector<Rational>{0, 0, Rational(2, 5), Rational(1, 5), 0}));
  EXPECT_EQ(r.left, (std::vector<Rational>{0, 2, Rational(12, 5), Rational(16, 5), 5}));
  std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}};
  Graph g(5, edges);
  EXPECT_TRUE(check_valid(left, g).ok());
  EXPECT_TRUE(check_valid(r.left, g, {.eps = s.eps}).ok());
}

TEST(SnapToGrid, RightShiftProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Rational> left;
    Rational x(0);
    for (int i = 0; i < n; ++i) {
      left.push_back(x);
      x += Rational(static_cast<long>(rng() % 13), 10);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (left[j] - left[i] <= Rational(1)) edges.emplace_back(i, j);
      }
    }
    Graph g(n, edges);
    GridSpec s = GridSpec::from_k(1, n);
    SnapResult r = snap_to_grid(left, s);
    ASSERT_TRUE(check_valid(r.left, g, {.eps = s.eps}).ok()) << trial;
    for (const auto& rs : r.right_shift) {
      EXPECT_TRUE(Rational(0) <= rs && rs < Rational(n) * s.eps);
    }
    // After the left shifts alone, touching pairs r_i = l_j keep or lose
    // contact according to adjacency.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || left[i] - r.left_shift[i] + 1 != left[j] - r.left_shift[j]) continue;
        EXPECT_EQ(r.right_shift[i] >= r.right_shift[j], g.adjacent(i, j));
      }
    }
  }
}
