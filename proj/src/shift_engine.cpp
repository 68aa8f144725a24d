#include "unitrep/shift_engine.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace unitrep {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

ShiftStats& ShiftStats::operator+=(const ShiftStats& o) {
  left_shifts += o.left_shifts;
  phase1_shifts += o.phase1_shifts;
  phase2_shifts += o.phase2_shifts;
  long_events += o.long_events;
  initially_fixed += o.initially_fixed;
  return *this;
}

ShiftProblem ShiftProblem::from_graph(const Graph& g, std::span<const int> order, std::span<const Bound> lbounds,
                                      const Rational& eps, std::int64_t cycle_n) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  ShiftProblem p;
  p.eps = eps;
  p.cycle_n = cycle_n;
  for (int i = 0; i < n; ++i) {
    int lo = i, hi = i;
    for (int w : g.neighbors(order[i])) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    p.first_nb.push_back(lo);
    p.last_nb.push_back(hi);
    p.lbound.push_back(lbounds[order[i]]);
  }
  return p;
}

PreprocessedBounds preprocess_bounds(std::span<const Bound> lbounds, std::int64_t delta_ticks) {
  const auto n = static_cast<long>(lbounds.size());
  PreprocessedBounds out;
  out.exact.resize(lbounds.size());
  out.floor_tick.assign(lbounds.size(), 0);
  out.ceil_tick.assign(lbounds.size(), 0);
  std::optional<BigInt> alpha_max;
  for (const Bound& b : lbounds) {
    if (!b.is_finite()) continue;
    BigInt a = b.value().floor();
    if (!alpha_max || *alpha_max < a) alpha_max = a;
  }
  if (!alpha_max) return out;
  out.translation = *alpha_max - n - 1;
  const BigInt K = delta_ticks;
  for (std::size_t i = 0; i < lbounds.size(); ++i) {
    if (!lbounds[i].is_finite()) continue;
    const Rational& b = lbounds[i].value();
    BigInt alpha = b.floor();
    Rational frac = b - Rational(alpha);
    if (alpha < out.translation) alpha = out.translation;
    Rational x = Rational(BigInt(alpha - out.translation)) + frac;
    out.floor_tick[i] = to_int64(floor_div(x.num() * K, x.den()));
    out.ceil_tick[i] = to_int64(ceil_div(x.num() * K, x.den()));
    out.exact[i] = std::move(x);
  }
  return out;
}

ShiftState::ShiftState(ShiftProblem problem, ShiftTrace trace)
    : problem_(std::move(problem)), trace_(std::move(trace)) {
  const int n = size();
  if (n == 0) return;
  if (problem_.cycle_n < n) throw std::invalid_argument("cycle too small for the component");
  K_ = problem_.cycle_n * problem_.cycle_n;
  const BigInt eps_ticks = problem_.eps.den();
  if (problem_.eps.num() != 1 || eps_ticks % BigInt(K_) != 0) {
    throw std::invalid_argument("eps must be 1/K with Δ a multiple of eps");
  }
  ratio_ = to_int64(eps_ticks / BigInt(K_));
  // Positions stay within (2n + 4) cycles of the translated origin.
  if (K_ > (std::int64_t{1} << 62) / (2 * n + 8)) throw std::overflow_error("instance too large for Δ ticks");

  pre_ = preprocess_bounds(problem_.lbound, K_);
  for (const auto& e : pre_.exact) stats_.long_events += e.has_value() ? 1 : 0;
  if (stats_.long_events == 0) throw std::invalid_argument("shift engine needs a finite lower bound");

  const auto& R = problem_.last_nb;
  // Layers b_0 = 0, b_{t+1} = R(b_t) + 1 are cliques; layer index is the integer part.
  std::vector<int> layer(static_cast<std::size_t>(n));
  std::vector<int> layer_start;
  for (int b = 0; b < n; b = R[b] + 1) layer_start.push_back(b);
  layer_start.push_back(n);
  for (std::size_t t = 0; t + 1 < layer_start.size(); ++t) {
    for (int i = layer_start[t]; i < layer_start[t + 1]; ++i) layer[i] = static_cast<int>(t);
  }
  // Fractional order: a vertex j of layer t+1 goes right before the first
  // vertex of layer t reaching it, or after everything placed so far.
  std::list<int> frac;
  std::vector<std::list<int>::iterator> where(static_cast<std::size_t>(n));
  for (int i = layer_start[0]; i < layer_start[1]; ++i) where[i] = frac.insert(frac.end(), i);
  for (std::size_t t = 0; t + 2 < layer_start.size(); ++t) {
    int m = layer_start[t];
    for (int j = layer_start[t + 1]; j < layer_start[t + 2]; ++j) {
      while (m < layer_start[t + 1] && R[m] < j) ++m;
      where[j] = frac.insert(m < layer_start[t + 1] ? where[m] : frac.end(), j);
    }
  }
  std::vector<std::int64_t> rank(static_cast<std::size_t>(n));
  {
    std::int64_t r = 0;
    for (int v : frac) rank[v] = r++;
  }
  pos_.resize(static_cast<std::size_t>(n));
  std::optional<std::int64_t> shift;
  for (int i = 0; i < n; ++i) {
    pos_[i] = layer[i] * K_ + rank[i] * problem_.cycle_n;
    if (pre_.exact[i]) shift = std::max(shift.value_or(pre_.ceil_tick[i] - pos_[i]), pre_.ceil_tick[i] - pos_[i]);
  }
  for (auto& p : pos_) p += *shift;

  fixed_.assign(static_cast<std::size_t>(n), false);
  exact_.resize(static_cast<std::size_t>(n));
  thr_left_.assign(static_cast<std::size_t>(n), 0);
  thr_right_.assign(static_cast<std::size_t>(n), 0);
  next_.assign(static_cast<std::size_t>(n), -1);
  prev_.assign(static_cast<std::size_t>(n), -1);

  std::vector<int> unfixed;
  for (int i = 0; i < n; ++i) {
    if (pre_.exact[i] && pre_.floor_tick[i] == pre_.ceil_tick[i] && pos_[i] == pre_.floor_tick[i]) continue;
    unfixed.push_back(i);
  }
  std::sort(unfixed.begin(), unfixed.end(), [&](int a, int b) { return beta(a) > beta(b); });
  ring_size_ = static_cast<int>(unfixed.size());
  for (std::size_t k = 0; k < unfixed.size(); ++k) {
    int a = unfixed[k];
    int b = unfixed[(k + 1) % unfixed.size()];
    next_[a] = b;
    prev_[b] = a;
  }
  for (int i = 0; i < n; ++i) {
    if (next_[i] < 0) {
      ++stats_.initially_fixed;
      fix(i, *pre_.exact[i]);
    }
  }
  // `fix` unlinks; vertices fixed here were never linked.
  ring_size_ = static_cast<int>(unfixed.size());
}

std::int64_t ShiftState::beta(int v) const { return mod(pos_[static_cast<std::size_t>(v)], K_); }

Rational ShiftState::translated(int v) const {
  if (fixed_[v]) return exact_[v];
  return Rational(BigInt(pos_[v]), BigInt(K_));
}

Rational ShiftState::position(int v) const { return translated(v) + Rational(pre_.translation); }

std::vector<Rational> ShiftState::positions() const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v = 0; v < size(); ++v) out.push_back(position(v));
  return out;
}

std::vector<int> ShiftState::ring() const {
  std::vector<int> out;
  int start = -1;
  for (int v = 0; v < size() && start < 0; ++v) {
    if (!fixed_[v]) start = v;
  }
  if (start < 0) return out;
  int v = start;
  do {
    out.push_back(v);
    v = next_[v];
  } while (v != start);
  return out;
}

void ShiftState::unlink(int v) {
  if (next_[v] < 0) return;
  next_[prev_[v]] = next_[v];
  prev_[next_[v]] = prev_[v];
  next_[v] = prev_[v] = -1;
  --ring_size_;
}

void ShiftState::fix(int v, Rational exact) {
  ++stats_.long_events;
  const BigInt K = K_;
  Rational right = exact + Rational(1) + problem_.eps;
  Rational left = exact - Rational(1);
  thr_left_[v] = to_int64(floor_div(right.num() * K, right.den()));
  thr_right_[v] = to_int64(floor_div(left.num() * K, left.den()));
  exact_[v] = std::move(exact);
  fixed_[v] = true;
  unlink(v);
}

bool ShiftState::left_shift(int v) { return shift(v, 0); }

bool ShiftState::shift(int v, int phase) {
  if (fixed_[v]) throw std::logic_error("left_shift of a fixed vertex");
  const int b = next_[v];
  // A lone vertex may wrap the whole cycle; with a single slot it still moves one.
  const std::int64_t k = b == v ? std::max<std::int64_t>(K_ - 1, 1) : mod(beta(v) - beta(b) - 1, K_);
  const std::int64_t cand = pos_[v] - k;
  const int lo = problem_.first_nb[v] - 1;
  const int hi = problem_.last_nb[v];
  bool strict = true;
  if (pre_.exact[v] && cand <= pre_.floor_tick[v]) strict = false;
  if (lo >= 0 && fixed_[lo] && cand <= thr_left_[lo]) strict = false;
  if (hi > v && fixed_[hi] && cand <= thr_right_[hi]) strict = false;

  ++stats_.left_shifts;
  if (phase == 1) ++stats_.phase1_shifts;
  if (phase == 2) ++stats_.phase2_shifts;
  std::optional<Rational> old;
  if (trace_) old = position(v);
  if (strict) {
    pos_[v] = cand;
  } else {
    Rational best = pre_.exact[v] ? *pre_.exact[v] : Rational(0);
    bool have = pre_.exact[v].has_value();
    auto consider = [&](Rational x) {
      if (!have || best < x) best = std::move(x);
      have = true;
    };
    if (lo >= 0 && fixed_[lo]) consider(exact_[lo] + Rational(1) + problem_.eps);
    if (hi > v && fixed_[hi]) consider(exact_[hi] - Rational(1));
    fix(v, std::move(best));
  }
  if (trace_) trace_(ShiftEvent{stats_.left_shifts, phase, v, *old, position(v), !strict});
  return !strict;
}

void ShiftState::run_phases() {
  if (ring_size_ == 0) return;
  const std::int64_t n = size();
  const std::int64_t cap = 64 * n * n + 1024;
  int s = -1;
  for (int v = 0; v < size() && s < 0; ++v) {
    if (!fixed_[v]) s = v;
  }
  // Phase 1: pack every unfixed β next to β_s, counter-clockwise.
  for (int cur = prev_[s]; cur != s;) {
    int nxt = prev_[cur];
    shift(cur, 1);
    cur = nxt;
  }
  // Phase 2: the front of the cluster jumps across the big gap until fixed.
  int cur = s;
  while (ring_size_ > 0) {
    int nxt = prev_[cur];
    shift(cur, 2);
    if (ring_size_ == 0) break;
    cur = nxt;
    if (stats_.left_shifts > cap) throw std::logic_error("shifting phases did not terminate");
  }
}

bool ShiftState::valid() const {
  const int n = size();
  const Rational gap = Rational(1) + problem_.eps;
  std::vector<Rational> x;
  for (int v = 0; v < n; ++v) x.push_back(translated(v));
  for (int i = 0; i < n; ++i) {
    if (pre_.exact[i] && x[i] < *pre_.exact[i]) return false;
    for (int j = i + 1; j < n; ++j) {
      if (x[j] < x[i]) return false;
      bool edge = j <= problem_.last_nb[i];
      if (edge && x[j] - x[i] > Rational(1)) return false;
      if (!edge && x[j] - x[i] < gap) return false;
    }
  }
  return true;
}

std::vector<Rational> expand_pruned(std::span<const Rational> pruned_left, std::span<const int> first_nb,
                                    std::span<const int> last_nb, const std::vector<std::vector<int>>& members,
                                    std::span<const Bound> lbounds, const Rational& eps) {
  std::size_t total = 0;
  for (const auto& m : members) total += m.size();
  std::vector<Rational> out(total);
  const Rational gap = Rational(1) + eps;
  for (std::size_t p = 0; p < members.size(); ++p) {
    std::optional<Rational> floor_term;
    if (first_nb[p] > 0) floor_term = pruned_left[first_nb[p] - 1] + gap;
    Rational reach = pruned_left[last_nb[p]] - Rational(1);
    if (!floor_term || *floor_term < reach) floor_term = std::move(reach);
    for (int v : members[p]) {
      const Bound& b = lbounds[v];
      out[v] = b.is_finite() && *floor_term < b.value() ? b.value() : *floor_term;
    }
  }
  return out;
}

}  // namespace unitrep
