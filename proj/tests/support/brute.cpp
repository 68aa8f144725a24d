#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace unitrep::brute {

namespace {

std::uint32_t canonical_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::uint32_t best = mask;
  do {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) m |= 1U << index[perm[pairs[i].first]][perm[pairs[i].second]];
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    if (!seen.insert(canonical_mask(n, pairs, mask)).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(pairs[i]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < g.size(); ++u) {
      if (!seen[u] && g.adjacent(u, v)) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.size();
}

namespace {

bool consecutive(const Graph& g, const std::vector<int>& perm) {
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int k = i + 2; k < n; ++k) {
      if (!g.adjacent(perm[i], perm[k])) continue;
      for (int j = i + 1; j < k; ++j) {
        if (!g.adjacent(perm[i], perm[j]) || !g.adjacent(perm[j], perm[k])) return false;
      }
    }
  }
  return true;
}

// x_a - x_b <= c, with `strict` demanding <.
struct Weight {
  std::int64_t c;
  int strict;  // number of strict inequalities along the path, negated

  friend bool operator<(const Weight& a, const Weight& b) { return a.c != b.c ? a.c < b.c : a.strict < b.strict; }
  friend Weight operator+(const Weight& a, const Weight& b) { return {a.c + b.c, a.strict + b.strict}; }
};

// Variables: 0 = origin, then l_v, r_v. Returns false on a negative cycle.
bool feasible(int vars, const std::vector<std::tuple<int, int, Weight>>& cons) {
  std::vector<std::vector<std::optional<Weight>>> d(static_cast<std::size_t>(vars),
                                                    std::vector<std::optional<Weight>>(static_cast<std::size_t>(vars)));
  for (int i = 0; i < vars; ++i) d[i][i] = Weight{0, 0};
  for (const auto& [a, b, w] : cons) {
    // x_a - x_b <= w: edge b -> a
    if (!d[b][a] || w < *d[b][a]) d[b][a] = w;
  }
  for (int k = 0; k < vars; ++k) {
    for (int i = 0; i < vars; ++i) {
      if (!d[i][k]) continue;
      for (int j = 0; j < vars; ++j) {
        if (!d[k][j]) continue;
        Weight w = *d[i][k] + *d[k][j];
        if (!d[i][j] || w < *d[i][j]) d[i][j] = w;
      }
    }
  }
  for (int i = 0; i < vars; ++i) {
    if (*d[i][i] < Weight{0, 0}) return false;
  }
  return true;
}

}  // namespace

bool has_consecutive_order(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (consecutive(g, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool proper_extension_exists(const Graph& g, const PartialProperRep& p, std::int64_t scale) {
  const int n = g.size();
  auto L = [](int v) { return 1 + 2 * v; };
  auto R = [](int v) { return 2 + 2 * v; };
  std::vector<std::tuple<int, int, Weight>> base;
  const Weight le{0, 0}, lt{0, -1};
  for (int v = 0; v < n; ++v) {
    base.emplace_back(L(v), R(v), lt);  // l < r
    if (!p.intervals[v]) continue;
    for (auto [var, val] : {std::pair{L(v), p.intervals[v]->left}, std::pair{R(v), p.intervals[v]->right}}) {
      Rational scaled = val * Rational(scale);
      if (!scaled.is_integer()) throw std::invalid_argument("pre-drawn endpoint off the test grid");
      std::int64_t c = to_int64(scaled.num());
      base.emplace_back(var, 0, Weight{c, 0});
      base.emplace_back(0, var, Weight{-c, 0});
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (!consecutive(g, perm)) continue;
    for (std::uint32_t ties = 0; ties < (1U << std::max(0, n - 1)); ++ties) {
      auto cons = base;
      bool ok = true;
      for (int i = 0; i + 1 < n && ok; ++i) {
        int a = perm[i], b = perm[i + 1];
        if (ties >> i & 1U) {
          ok = g.adjacent(a, b);
          for (auto [x, y] : {std::pair{L(a), L(b)}, std::pair{L(b), L(a)}, std::pair{R(a), R(b)}, std::pair{R(b), R(a)}}) {
            cons.emplace_back(x, y, le);
          }
        } else {
          cons.emplace_back(L(a), L(b), lt);
          cons.emplace_back(R(a), R(b), lt);
        }
      }
      if (!ok) continue;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          int a = perm[i], b = perm[j];
          if (g.adjacent(a, b)) {
            cons.emplace_back(L(b), R(a), le);  // l_b <= r_a
          } else {
            cons.emplace_back(R(a), L(b), lt);  // r_a < l_b
          }
        }
      }
      if (feasible(2 * n + 1, cons)) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool three_partition_exists(const std::vector<std::int64_t>& A, std::int64_t M) {
  std::vector<bool> used(A.size(), false);
  std::function<bool()> go = [&]() {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) return true;
    std::size_t i = static_cast<std::size_t>(first - used.begin());
    used[i] = true;
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (std::size_t k = j + 1; k < A.size(); ++k) {
        if (used[k] || A[i] + A[j] + A[k] != M) continue;
        used[k] = true;
        if (go()) return true;
        used[k] = false;
      }
      used[j] = false;
    }
    used[i] = false;
    return false;
  };
  return A.size() % 3 == 0 && go();
}

std::vector<std::vector<std::int64_t>> three_partition_inputs(int k, std::int64_t M) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  const std::int64_t lo = M / 4 + 1, hi = (M - 1) / 2;
  std::function<void(std::int64_t, std::int64_t)> go = [&](std::int64_t from, std::int64_t left) {
    if (static_cast<int>(cur.size()) == 3 * k) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::int64_t a = from; a <= hi && a <= left; ++a) {
      if (4 * a <= M || 2 * a >= M) continue;
      cur.push_back(a);
      go(a, left - a);
      cur.pop_back();
    }
  };
  go(std::max<std::int64_t>(lo, 1), k * M);
  return out;
}

}  // namespace unitrep::brute

namespace unitrep::brute {

PartialProperRep remapped_partial(const ProperRep& rep, std::mt19937_64& rng, double keep) {
  std::vector<Rational> values;
  for (const auto& iv : rep.intervals) {
    values.push_back(iv.left);
    values.push_back(iv.right);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::int64_t> ticks(values.size());
  std::int64_t t = static_cast<std::int64_t>(rng() % 3);
  for (auto& x : ticks) {
    x = t;
    t += 1 + static_cast<std::int64_t>(rng() % 2);
  }
  auto image = [&](const Rational& v) {
    auto i = static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
    return Rational(BigInt(ticks[i]), BigInt(2));
  };
  PartialProperRep p(static_cast<int>(rep.intervals.size()));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t v = 0; v < rep.intervals.size(); ++v) {
    if (coin(rng) < keep) p.intervals[v] = Interval{image(rep.intervals[v].left), image(rep.intervals[v].right)};
  }
  return p;
}

PartialProperRep random_partial(int n, std::mt19937_64& rng, double keep) {
  PartialProperRep p(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int v = 0; v < n; ++v) {
    if (coin(rng) >= keep) continue;
    std::int64_t a = static_cast<std::int64_t>(rng() % 16);
    std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 4);
    p.intervals[v] = Interval{Rational(BigInt(a), BigInt(2)), Rational(BigInt(a + len), BigInt(2))};
  }
  return p;
}

}  // namespace unitrep::brute
