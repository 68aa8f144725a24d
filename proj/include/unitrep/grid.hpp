#pragma once

#include <span>
#include <vector>

#include "unitrep/rational.hpp"

namespace unitrep {

enum class GridMode { kLp, kShift };

// The ε-grid: eps = 1/K divides eps_prime.
struct GridSpec {
  Rational eps_prime;
  Rational eps;
  BigInt K;

  static GridSpec from_k(const BigInt& eps_prime_den, const BigInt& K);
};

// Position alpha + beta * eps with 0 <= beta < K.
struct GridPoint {
  BigInt alpha;
  BigInt beta;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// eps_prime = 1 / lcm(denominators); eps = eps_prime / n (lp) or eps_prime / n^2 (shift).
GridSpec compute_epsilon(std::span<const Rational> bounds, int n, GridMode mode);

// Same, collecting the finite values among the given bounds.
GridSpec compute_epsilon(std::span<const Bound> lbounds, std::span<const Bound> ubounds, int n,
                         GridMode mode);

bool on_grid(const Rational& x, const BigInt& K);

// floor(x * K).
BigInt floor_ticks(const Rational& x, const BigInt& K);
BigInt ceil_ticks(const Rational& x, const BigInt& K);

// Exact conversion; throws NotOnGrid when x is not a multiple of eps.
GridPoint to_grid_point(const Rational& x, const GridSpec& spec);
Rational from_grid_point(const GridPoint& p, const GridSpec& spec);
// Largest grid value <= x.
GridPoint round_down_to(const Rational& x, const GridSpec& spec);

struct SnapResult {
  std::vector<Rational> left;
  std::vector<Rational> left_shift;   // LS: distance to the eps'-grid point below
  std::vector<Rational> right_shift;  // RS: rank of LS among distinct values, times eps
};

// Moves a valid unit representation (given by left endpoints) onto the ε-grid:
// every interval goes down to the eps'-grid and is then pushed right by a
// multiple of eps that preserves the relative order of the left shifts.
// Requires eps * (number of distinct left shifts) <= eps_prime. A representation
// already on the ε-grid is returned as is.
SnapResult snap_to_grid(std::span<const Rational> left, const GridSpec& spec);

}  // namespace unitrep
