#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "unitrep/graph.hpp"
#include "unitrep/rational.hpp"

namespace unitrep {

struct ShiftStats {
  std::int64_t left_shifts = 0;
  std::int64_t phase1_shifts = 0;
  std::int64_t phase2_shifts = 0;
  std::int64_t long_events = 0;  // preprocessing conversions and fixing events
  std::int64_t initially_fixed = 0;

  ShiftStats& operator+=(const ShiftStats& o);
};

struct ShiftEvent {
  std::int64_t step;
  int phase;  // 0: outside the phases, 1, 2
  int vertex;
  Rational old_left;
  Rational new_left;
  bool fixed;
};

using ShiftTrace = std::function<void(const ShiftEvent&)>;

// A pruned connected component, vertices numbered left to right.
struct ShiftProblem {
  std::vector<int> first_nb;  // leftmost neighbour (closed neighbourhood)
  std::vector<int> last_nb;   // rightmost neighbour
  std::vector<Bound> lbound;  // effective lower bounds, at least one finite
  Rational eps;
  std::int64_t cycle_n = 0;   // Δ = 1/cycle_n²; the cycle has cycle_n² slots

  // `order` lists the vertices of the twin-free connected graph `g` left to right.
  static ShiftProblem from_graph(const Graph& g, std::span<const int> order, std::span<const Bound> lbounds,
                                 const Rational& eps, std::int64_t cycle_n);
  int size() const { return static_cast<int>(first_nb.size()); }
};

struct PreprocessedBounds {
  BigInt translation;                          // C, subtracted from every bound
  std::vector<std::optional<Rational>> exact;  // clamped and translated
  std::vector<std::int64_t> floor_tick;        // Δ-grid round-down of `exact`
  std::vector<std::int64_t> ceil_tick;
};

// Clamps every finite bound to at least alpha_max - n - 1 (integer part) and
// translates by C = alpha_max - n - 1, caching Δ-grid roundings.
PreprocessedBounds preprocess_bounds(std::span<const Bound> lbounds, std::int64_t delta_ticks);

class ShiftState {
 public:
  // Preprocesses the bounds and builds the initial representation.
  explicit ShiftState(ShiftProblem problem, ShiftTrace trace = {});

  int size() const { return problem_.size(); }
  bool is_fixed(int v) const { return fixed_[static_cast<std::size_t>(v)]; }
  bool all_fixed() const { return ring_size_ == 0; }
  // Exact position in the caller's frame.
  Rational position(int v) const;
  std::vector<Rational> positions() const;
  // Translated Δ-grid coordinate of an unfixed vertex.
  std::int64_t ticks(int v) const { return pos_[static_cast<std::size_t>(v)]; }
  std::int64_t beta(int v) const;
  std::int64_t slots() const { return K_; }
  const ShiftStats& stats() const { return stats_; }
  const PreprocessedBounds& bounds() const { return pre_; }
  // Unfixed vertices in clockwise cycle order, starting at the ◁-minimal one.
  std::vector<int> ring() const;

  // One LeftShift of an unfixed vertex; returns true if it became fixed.
  bool left_shift(int v);
  void run_phases();

  // Exact check of the current representation (order, edges, gaps, bounds).
  bool valid() const;

 private:
  Rational translated(int v) const;
  void fix(int v, Rational exact);
  void unlink(int v);
  bool shift(int v, int phase);

  ShiftProblem problem_;
  ShiftTrace trace_;
  PreprocessedBounds pre_;
  std::int64_t K_ = 0;      // slots in the cycle
  std::int64_t ratio_ = 0;  // ε-ticks per Δ-tick
  std::vector<std::int64_t> pos_;
  std::vector<bool> fixed_;
  std::vector<Rational> exact_;  // translated exact position of fixed vertices
  std::vector<std::int64_t> thr_left_;   // floor_Δ(ℓ + 1 + ε) of fixed vertices
  std::vector<std::int64_t> thr_right_;  // floor_Δ(ℓ − 1) of fixed vertices
  std::vector<int> next_, prev_;         // clockwise / counter-clockwise in the ring
  int ring_size_ = 0;
  ShiftStats stats_;
};

// Left-most representation of the pruned component expanded to the full
// component. Pruned vertex p (left to right) stands for `members[p]`; members
// are local vertex ids indexing `lbounds` and the result.
std::vector<Rational> expand_pruned(std::span<const Rational> pruned_left, std::span<const int> first_nb,
                                    std::span<const int> last_nb, const std::vector<std::vector<int>>& members,
                                    std::span<const Bound> lbounds, const Rational& eps);

}  // namespace unitrep
