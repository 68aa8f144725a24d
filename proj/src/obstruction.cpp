#include "unitrep/obstruction.hpp"

#include <algorithm>

namespace unitrep {

std::vector<int> ObstructionDigraph::successors(int v) const {
  std::vector<int> out = left[v];
  out.insert(out.end(), right[v].begin(), right[v].end());
  return out;
}

std::vector<int> ObstructionDigraph::find_cycle() const {
  const int n = static_cast<int>(left.size());
  std::vector<int> state(static_cast<std::size_t>(n), 0), parent(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto succ = successors(v);
      if (idx == succ.size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = succ[idx++];
      if (state[w] == 1) {
        std::vector<int> cyc{w};
        for (int u = v; u != w; u = parent[u]) cyc.push_back(u);
        std::reverse(cyc.begin() + 1, cyc.end());
        return cyc;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

bool ObstructionDigraph::acyclic() const { return find_cycle().empty(); }

std::vector<bool> ObstructionDigraph::fixed(std::span<const Rational> left_pos, std::span<const Bound> lbounds) const {
  const int n = static_cast<int>(left.size());
  // Reverse reachability from tight vertices.
  std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int w : successors(v)) pred[w].push_back(v);
  }
  std::vector<bool> out(static_cast<std::size_t>(n), false);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (lbounds[v].is_finite() && lbounds[v].value() == left_pos[v]) {
      out[v] = true;
      queue.push_back(v);
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int u : pred[queue[h]]) {
      if (!out[u]) {
        out[u] = true;
        queue.push_back(u);
      }
    }
  }
  return out;
}

ObstructionDigraph obstruction_digraph(std::span<const Rational> left, const Graph& g, const Rational& eps) {
  const int n = g.size();
  ObstructionDigraph h;
  h.left.resize(static_cast<std::size_t>(n));
  h.right.resize(static_cast<std::size_t>(n));
  const Rational gap = Rational(1) + eps;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.adjacent(i, j)) {
        if (left[i] + Rational(1) == left[j]) h.right[i].push_back(j);
      } else if (left[j] + gap == left[i]) {
        h.left[i].push_back(j);
      }
    }
  }
  return h;
}

}  // namespace unitrep
