#include "unitrep/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "unitrep/grid.hpp"

namespace unitrep {

Verdict check_valid(std::span<const Rational> left, const Graph& g, const ValidityOptions& opts) {
  Verdict v;
  const int n = g.size();
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (v.failures.size() < 20) v.failures.push_back(std::move(msg));
  };
  if (static_cast<int>(left.size()) != n) {
    fail(v.geometry, "representation has " + std::to_string(left.size()) + " positions for " + std::to_string(n) +
                         " vertices");
    return v;
  }
  const Rational one(1);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Rational d = left[b] - left[a];
      if (d < Rational(0)) d = -d;
      bool edge = g.adjacent(a, b);
      if (edge && d > one) fail(v.geometry, "edge " + std::to_string(a) + "-" + std::to_string(b) + " not realized");
      if (!edge && d <= one) {
        fail(v.geometry, "non-edge " + std::to_string(a) + "-" + std::to_string(b) + " intersects");
      }
      if (!edge && opts.eps && d < one + *opts.eps) {
        fail(v.geometry, "non-edge " + std::to_string(a) + "-" + std::to_string(b) + " closer than 1 + eps");
      }
    }
  }
  for (int a = 0; a < n && !opts.lbound.empty(); ++a) {
    if (opts.lbound[a].is_finite() && left[a] < opts.lbound[a].value()) {
      fail(v.bounds, "vertex " + std::to_string(a) + " below its lower bound");
    }
  }
  for (int a = 0; a < n && !opts.ubound.empty(); ++a) {
    if (opts.ubound[a].is_finite() && opts.ubound[a].value() < left[a]) {
      fail(v.bounds, "vertex " + std::to_string(a) + " above its upper bound");
    }
  }
  for (std::size_t i = 0; i + 1 < opts.order.size(); ++i) {
    if (left[opts.order[i + 1]] < left[opts.order[i]]) {
      fail(v.ordering, "vertex " + std::to_string(opts.order[i + 1]) + " left of " + std::to_string(opts.order[i]));
    }
  }
  if (opts.eps) {
    const BigInt K = opts.eps->den();
    for (int a = 0; a < n; ++a) {
      if (opts.eps->num() != 1 || !on_grid(left[a], K)) {
        fail(v.grid, "vertex " + std::to_string(a) + " off the eps-grid");
      }
    }
  }
  return v;
}

Verdict check_valid_proper(std::span<const Interval> iv, const Graph& g) {
  Verdict v;
  const int n = g.size();
  auto fail = [&](std::string msg) {
    v.geometry = false;
    if (v.failures.size() < 20) v.failures.push_back(std::move(msg));
  };
  if (static_cast<int>(iv.size()) != n) {
    fail("representation size mismatch");
    return v;
  }
  for (int a = 0; a < n; ++a) {
    if (!(iv[a].left < iv[a].right)) fail("vertex " + std::to_string(a) + " has an empty interval");
    for (int b = a + 1; b < n; ++b) {
      bool meet = !(iv[a].right < iv[b].left) && !(iv[b].right < iv[a].left);
      if (meet != g.adjacent(a, b)) fail("pair " + std::to_string(a) + "-" + std::to_string(b) + " misrepresented");
      bool a_in_b = iv[b].left <= iv[a].left && iv[a].right <= iv[b].right;
      bool b_in_a = iv[a].left <= iv[b].left && iv[b].right <= iv[a].right;
      if ((a_in_b || b_in_a) && !(iv[a] == iv[b])) {
        fail("pair " + std::to_string(a) + "-" + std::to_string(b) + " properly nested");
      }
    }
  }
  return v;
}

std::vector<int> ranks_of_order(std::span<const int> order, int n) {
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

std::vector<int> ranks_of_groups(const GroupPartition& groups, std::span<const int> group_sequence, int n) {
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < group_sequence.size(); ++i) {
    for (int v : groups.groups[group_sequence[i]]) rank[v] = static_cast<int>(i);
  }
  return rank;
}

SearchWindow default_window(std::span<const Bound> lbounds) {
  std::optional<Rational> lo, hi;
  for (const Bound& b : lbounds) {
    if (!b.is_finite()) continue;
    if (!lo || b.value() < *lo) lo = b.value();
    if (!hi || *hi < b.value()) hi = b.value();
  }
  if (!lo) throw std::invalid_argument("search window needs a finite lower bound");
  const Rational pad(static_cast<long>(lbounds.size()) + 1);
  return {*lo - pad, *hi + pad};
}

namespace {

// Positions are integers in units of eps; 1 + eps is K + 1 of them.
struct GridSearch {
  const Graph& g;
  std::vector<int> rank;
  std::int64_t K;
  int n;
  bool propagate;
  std::int64_t limit;
  std::int64_t nodes = 0;

  bool pair_ok(int u, std::int64_t xu, int v, std::int64_t xv) const {
    if (g.adjacent(u, v)) {
      if (xu - xv > K || xv - xu > K) return false;
      if (rank[u] < rank[v] && xv < xu) return false;
      if (rank[v] < rank[u] && xu < xv) return false;
      return true;
    }
    if (rank[u] < rank[v]) return xv - xu >= K + 1;
    if (rank[v] < rank[u]) return xu - xv >= K + 1;
    return xv - xu >= K + 1 || xu - xv >= K + 1;
  }

  bool all_ok(const std::vector<std::int64_t>& x) const {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!pair_ok(u, x[u], v, x[v])) return false;
      }
    }
    return true;
  }

  bool tighten(std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      auto raise = [&](std::int64_t& x, std::int64_t y) {
        if (x < y) { x = y; changed = true; }
      };
      auto lower = [&](std::int64_t& x, std::int64_t y) {
        if (y < x) { x = y; changed = true; }
      };
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v) continue;
          bool adj = g.adjacent(u, v);
          if (adj) {
            raise(lo[u], lo[v] - K);
            lower(hi[u], hi[v] + K);
          }
          if (rank[u] < rank[v]) {
            std::int64_t gap = adj ? 0 : K + 1;
            raise(lo[v], lo[u] + gap);
            lower(hi[u], hi[v] - gap);
          }
        }
      }
      for (int u = 0; u < n; ++u) {
        if (lo[u] > hi[u]) return false;
      }
    }
    return true;
  }

  template <class Leaf>
  bool dfs(const std::vector<int>& branch, std::size_t d, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi,
           Leaf& leaf) {
    if (++nodes > limit) throw std::runtime_error("brute-force search exceeded its node limit");
    if (propagate && !tighten(lo, hi)) return false;
    if (d == branch.size()) return all_ok(lo) && leaf(lo);
    const int v = branch[d];
    for (std::int64_t x = lo[v]; x <= hi[v]; ++x) {
      bool ok = true;
      for (std::size_t e = 0; e < d && ok; ++e) ok = pair_ok(branch[e], lo[branch[e]], v, x);
      if (!ok) continue;
      auto lo2 = lo, hi2 = hi;
      lo2[v] = hi2[v] = x;
      if (dfs(branch, d + 1, std::move(lo2), std::move(hi2), leaf)) return true;
    }
    return false;
  }
};

std::int64_t eps_ticks(const Rational& eps) {
  if (eps.num() != 1) throw std::invalid_argument("eps must be 1/K");
  return to_int64(eps.den());
}

void initial_domains(std::span<const Bound> lbounds, std::span<const Bound> ubounds, const SearchWindow& w,
                     const BigInt& K, std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) {
  const std::size_t n = lbounds.size();
  lo.assign(n, to_int64(ceil_ticks(w.lo, K)));
  hi.assign(n, to_int64(floor_ticks(w.hi, K)));
  for (std::size_t v = 0; v < n; ++v) {
    if (lbounds[v].is_finite()) lo[v] = std::max(lo[v], to_int64(ceil_ticks(lbounds[v].value(), K)));
    if (!ubounds.empty() && ubounds[v].is_finite()) hi[v] = std::min(hi[v], to_int64(floor_ticks(ubounds[v].value(), K)));
  }
}

std::vector<Rational> to_rationals(const std::vector<std::int64_t>& x, std::int64_t K) {
  std::vector<Rational> out;
  for (auto t : x) out.emplace_back(BigInt(t), BigInt(K));
  return out;
}

std::vector<int> rank_order(const std::vector<int>& rank) {
  std::vector<int> order(rank.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
  return order;
}

}  // namespace

std::optional<std::vector<Rational>> brute_force_leftmost(const Graph& g, std::span<const int> rank,
                                                          std::span<const Bound> lbounds, const Rational& eps,
                                                          std::optional<SearchWindow> window, BruteForceOptions opts) {
  const int n = g.size();
  if (n == 0) return std::vector<Rational>{};
  const std::int64_t K = eps_ticks(eps);
  const SearchWindow w = window ? *window : default_window(lbounds);
  std::vector<std::int64_t> lo, hi;
  initial_domains(lbounds, {}, w, BigInt(K), lo, hi);
  GridSearch s{g, std::vector<int>(rank.begin(), rank.end()), K, n, opts.propagate, opts.node_limit};
  const std::vector<int> base = rank_order(s.rank);
  std::vector<std::int64_t> best(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> branch{v};
    for (int u : base) {
      if (u != v) branch.push_back(u);
    }
    std::optional<std::int64_t> found;
    auto leaf = [&](const std::vector<std::int64_t>& x) {
      found = x[v];
      return true;
    };
    s.dfs(branch, 0, lo, hi, leaf);
    if (!found) return std::nullopt;
    best[v] = *found;
  }
  if (!s.all_ok(best)) throw std::logic_error("coordinate-wise minimum is not a representation");
  return to_rationals(best, K);
}

std::optional<std::vector<Rational>> brute_force_feasible(const Graph& g, std::span<const Bound> lbounds,
                                                          std::span<const Bound> ubounds, const Rational& eps,
                                                          std::optional<SearchWindow> window) {
  const int n = g.size();
  if (n == 0) return std::vector<Rational>{};
  const std::int64_t K = eps_ticks(eps);
  SearchWindow w{Rational(0), Rational(n + 1)};
  if (window) {
    w = *window;
  } else {
    std::vector<Bound> all;
    for (auto list : {lbounds, ubounds}) {
      for (const Bound& b : list) {
        if (b.is_finite()) all.push_back(b);
      }
    }
    if (!all.empty()) {
      w = default_window(all);
      const Rational extra(n - static_cast<long>(all.size()));
      if (extra > Rational(0)) w = {w.lo - extra, w.hi + extra};
    }
  }
  std::vector<std::int64_t> lo, hi;
  initial_domains(lbounds, ubounds, w, BigInt(K), lo, hi);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<Rational>> out;
  do {
    GridSearch s{g, ranks_of_order(perm, n), K, n, true, 200'000'000};
    auto leaf = [&](const std::vector<std::int64_t>& x) {
      out = to_rationals(x, K);
      return true;
    };
    if (s.dfs(perm, 0, lo, hi, leaf)) return out;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<std::vector<Rational>> enumerate_representations(const Graph& g, std::span<const int> rank,
                                                             std::span<const Bound> lbounds, const Rational& eps,
                                                             const SearchWindow& window, std::size_t limit) {
  const int n = g.size();
  const std::int64_t K = eps_ticks(eps);
  std::vector<std::int64_t> lo, hi;
  initial_domains(lbounds, {}, window, BigInt(K), lo, hi);
  GridSearch s{g, std::vector<int>(rank.begin(), rank.end()), K, n, true, 1'000'000'000};
  std::vector<std::vector<Rational>> out;
  auto leaf = [&](const std::vector<std::int64_t>& x) {
    out.push_back(to_rationals(x, K));
    if (out.size() > limit) throw std::runtime_error("too many representations to enumerate");
    return false;
  };
  s.dfs(rank_order(s.rank), 0, lo, hi, leaf);
  return out;
}

std::vector<Rational> infimum(std::span<const std::vector<Rational>> reps) {
  if (reps.empty()) throw std::invalid_argument("infimum of an empty set");
  std::vector<Rational> out = reps.front();
  for (const auto& r : reps.subspan(1)) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (r[i] < out[i]) out[i] = r[i];
    }
  }
  return out;
}

namespace {

struct TickRep {
  std::vector<std::int64_t> x;
  friend bool operator==(const TickRep&, const TickRep&) = default;
  friend auto operator<=>(const TickRep&, const TickRep&) = default;
};

}  // namespace

PosetReport poset_properties(const Graph& g, std::span<const int> rank, std::span<const Bound> lbounds,
                             const Rational& eps, const SearchWindow& window) {
  PosetReport report;
  const int n = g.size();
  const std::int64_t K = eps_ticks(eps);
  auto note = [&](bool& flag, std::string msg) {
    flag = false;
    if (report.violations.size() < 20) report.violations.push_back(std::move(msg));
  };
  std::vector<std::int64_t> lo, hi;
  initial_domains(lbounds, {}, window, BigInt(K), lo, hi);
  GridSearch s{g, std::vector<int>(rank.begin(), rank.end()), K, n, true, 1'000'000'000};
  std::vector<TickRep> reps;
  auto leaf = [&](const std::vector<std::int64_t>& x) {
    reps.push_back({x});
    return false;
  };
  s.dfs(rank_order(s.rank), 0, lo, hi, leaf);
  std::sort(reps.begin(), reps.end());
  report.representations = reps.size();
  if (reps.empty()) return report;

  auto in_rep = [&](const std::vector<std::int64_t>& x) {
    for (int v = 0; v < n; ++v) {
      if (x[v] < lo[v]) return false;
    }
    return s.all_ok(x);
  };
  TickRep minimum = reps.front();
  for (const auto& r : reps) {
    for (int v = 0; v < n; ++v) minimum.x[v] = std::min(minimum.x[v], r.x[v]);
  }
  report.minimum_found = in_rep(minimum.x);
  if (!report.minimum_found) {
    report.violations.push_back("coordinate-wise minimum is not a representation");
    return report;
  }
  auto leftmost = brute_force_leftmost(g, rank, lbounds, eps, window);
  if (!leftmost || to_rationals(minimum.x, K) != *leftmost) {
    note(report.minimum_found, "brute-force left-most differs from the enumerated minimum");
  }

  // (a) the minimum admits no single left shift
  for (int v = 0; v < n; ++v) {
    auto y = minimum.x;
    --y[v];
    if (in_rep(y)) note(report.minimum_unshiftable, "minimum can shift vertex " + std::to_string(v));
  }

  // Obstruction arcs i -> j on ticks.
  auto successors = [&](const std::vector<std::int64_t>& x, int i) {
    std::vector<int> out;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (g.adjacent(i, j) ? x[i] + K == x[j] : x[j] + K + 1 == x[i]) out.push_back(j);
    }
    return out;
  };
  auto acyclic = [&](const std::vector<std::int64_t>& x) {
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      succ[i] = successors(x, i);
      for (int j : succ[i]) ++indeg[j];
    }
    std::vector<int> queue;
    for (int i = 0; i < n; ++i) {
      if (indeg[i] == 0) queue.push_back(i);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int j : succ[queue[h]]) {
        if (--indeg[j] == 0) queue.push_back(j);
      }
    }
    return static_cast<int>(queue.size()) == n;
  };
  // Sinks of H restricted to the vertices differing from the minimum.
  auto sinks = [&](const std::vector<std::int64_t>& x) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
      if (x[i] == minimum.x[i]) continue;
      auto succ = successors(x, i);
      if (std::none_of(succ.begin(), succ.end(), [&](int j) { return x[j] != minimum.x[j]; })) out.push_back(i);
    }
    return out;
  };

  // Sinks are only guaranteed where H is acyclic, i.e. for K >= n/2.
  report.acyclicity_checked = 2 * K >= n;
  for (const auto& r : reps) {
    if (r == minimum) continue;
    ++report.non_minimal;
  }
  for (const auto& r : reps) {
    if (!report.acyclicity_checked) break;
    if (!acyclic(r.x)) note(report.acyclic, "obstruction digraph has a cycle");
    if (r == minimum) continue;
    auto sk = sinks(r.x);
    if (sk.empty()) note(report.sinks_shiftable, "non-minimal representation without a sink");
    for (int i : sk) {
      auto y = r.x;
      --y[i];
      if (!in_rep(y)) note(report.sinks_shiftable, "sink " + std::to_string(i) + " cannot shift");
    }
  }

  // Sink-shift chains from a spread of starting points.
  const std::size_t stride = std::max<std::size_t>(1, reps.size() / 200);
  for (std::size_t k = 0; report.acyclicity_checked && k < reps.size(); k += stride) {
    auto x = reps[k].x;
    std::int64_t budget = 0;
    for (int v = 0; v < n; ++v) budget += x[v] - minimum.x[v];
    for (std::int64_t step = 0; step <= budget && x != minimum.x; ++step) {
      auto sk = sinks(x);
      if (sk.empty()) break;
      --x[sk.front()];
      if (!in_rep(x)) break;
    }
    if (x != minimum.x) note(report.chains_reach_minimum, "sink-shift chain stopped before the minimum");
  }

  // Pairwise infima of a spread of representations.
  for (std::size_t a = 0; a < reps.size(); a += stride) {
    for (std::size_t b = a; b < reps.size(); b += stride * 7 + 1) {
      std::vector<std::int64_t> m(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) m[v] = std::min(reps[a].x[v], reps[b].x[v]);
      if (!in_rep(m)) note(report.infimum_closed, "infimum of two representations is invalid");
    }
  }
  return report;
}

}  // namespace unitrep
