#include "unitrep/grid.hpp"

#include <algorithm>
#include <stdexcept>

#include "unitrep/errors.hpp"

namespace unitrep {

GridSpec GridSpec::from_k(const BigInt& eps_prime_den, const BigInt& K) {
  if (eps_prime_den <= 0 || K <= 0 || K % eps_prime_den != 0) {
    throw std::invalid_argument("eps must divide eps_prime");
  }
  return GridSpec{Rational(BigInt(1), eps_prime_den), Rational(BigInt(1), K), K};
}

GridSpec compute_epsilon(std::span<const Rational> bounds, int n, GridMode mode) {
  if (n < 1) throw std::invalid_argument("compute_epsilon needs n >= 1");
  BigInt l = 1;
  for (const Rational& b : bounds) l = lcm(l, b.den());
  BigInt factor = n;
  if (mode == GridMode::kShift) factor *= n;
  return GridSpec::from_k(l, l * factor);
}

GridSpec compute_epsilon(std::span<const Bound> lbounds, std::span<const Bound> ubounds, int n,
                         GridMode mode) {
  std::vector<Rational> finite;
  for (auto list : {lbounds, ubounds}) {
    for (const Bound& b : list) {
      if (b.is_finite()) finite.push_back(b.value());
    }
  }
  return compute_epsilon(finite, n, mode);
}

bool on_grid(const Rational& x, const BigInt& K) {
  BigInt scaled = x.num() * K;
  return scaled % x.den() == 0;
}

BigInt floor_ticks(const Rational& x, const BigInt& K) { return floor_div(x.num() * K, x.den()); }

BigInt ceil_ticks(const Rational& x, const BigInt& K) { return ceil_div(x.num() * K, x.den()); }

namespace {

GridPoint from_ticks(const BigInt& ticks, const BigInt& K) {
  GridPoint p;
  p.alpha = floor_div(ticks, K);
  p.beta = ticks - p.alpha * K;
  return p;
}

}  // namespace

GridPoint to_grid_point(const Rational& x, const GridSpec& spec) {
  if (!on_grid(x, spec.K)) throw NotOnGrid(x.str() + " is not a multiple of " + spec.eps.str());
  return from_ticks(floor_ticks(x, spec.K), spec.K);
}

Rational from_grid_point(const GridPoint& p, const GridSpec& spec) {
  return Rational(p.alpha) + Rational(p.beta) * spec.eps;
}

GridPoint round_down_to(const Rational& x, const GridSpec& spec) {
  return from_ticks(floor_ticks(x, spec.K), spec.K);
}

SnapResult snap_to_grid(std::span<const Rational> left, const GridSpec& spec) {
  const BigInt kp = spec.eps_prime.den();
  SnapResult out;
  if (std::all_of(left.begin(), left.end(), [&](const Rational& x) { return on_grid(x, spec.K); })) {
    out.left.assign(left.begin(), left.end());
    out.left_shift.assign(left.size(), Rational(0));
    out.right_shift.assign(left.size(), Rational(0));
    return out;
  }
  out.left.reserve(left.size());
  std::vector<Rational> base;
  base.reserve(left.size());
  for (const Rational& x : left) {
    Rational b(floor_ticks(x, kp), kp);
    out.left_shift.push_back(x - b);
    base.push_back(std::move(b));
  }
  std::vector<Rational> distinct = out.left_shift;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (Rational(static_cast<long>(distinct.size()) - 1) * spec.eps >= spec.eps_prime) {
    throw std::invalid_argument("grid too coarse for snapping: refine eps");
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    auto rank = std::lower_bound(distinct.begin(), distinct.end(), out.left_shift[i]) - distinct.begin();
    Rational rs = Rational(static_cast<long>(rank)) * spec.eps;
    out.left.push_back(base[i] + rs);
    out.right_shift.push_back(std::move(rs));
  }
  return out;
}

}  // namespace unitrep
