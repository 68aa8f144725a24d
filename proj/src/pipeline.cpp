#include "unitrep/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "unitrep/errors.hpp"

namespace unitrep {

RepExtResult repext_unit(const Graph& g, const PartialUnitRep& partial, const SolveOptions& opts) {
  const int n = g.size();
  if (static_cast<int>(partial.size()) != n) throw InvalidPartial("partial representation size mismatch");
  for (int u = 0; u < n; ++u) {
    if (!partial[u]) continue;
    for (int v = u + 1; v < n; ++v) {
      if (!partial[v]) continue;
      Rational d = *partial[u] - *partial[v];
      if (d < Rational(0)) d = -d;
      if ((d <= Rational(1)) != g.adjacent(u, v)) {
        throw InvalidPartial("pre-drawn intervals of " + std::to_string(u) + " and " + std::to_string(v) +
                             " contradict the graph");
      }
    }
  }

  BoundRepInstance inst = BoundRepInstance::unbounded(g);
  for (int v = 0; v < n; ++v) {
    if (partial[v]) inst.lbound[v] = inst.ubound[v] = *partial[v];
  }
  SolveOptions o = opts;
  if (!o.grid) o.grid = default_grid(inst, o.mode);
  BoundRepSolver solver(inst, o);

  RepExtResult res;
  if (solver.not_proper()) {
    res.reason = "graph is not a unit interval graph: " + solver.not_proper()->reason;
    return res;
  }

  struct Extent {
    Rational lo, hi;
    int comp;
  };
  std::vector<Extent> located;
  std::vector<int> unlocated;
  for (int c = 0; c < solver.component_count(); ++c) {
    std::optional<Extent> e;
    for (int v : solver.components()[c]) {
      if (!partial[v]) continue;
      if (!e) {
        e = Extent{*partial[v], *partial[v] + 1, c};
      } else {
        e->lo = min(e->lo, *partial[v]);
        e->hi = max(e->hi, *partial[v] + 1);
      }
    }
    if (e) {
      located.push_back(*e);
    } else {
      unlocated.push_back(c);
    }
  }
  std::sort(located.begin(), located.end(), [](const Extent& a, const Extent& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < located.size(); ++i) {
    if (located[i + 1].lo <= located[i].hi) {
      res.reason = "pre-drawn parts of components " + std::to_string(located[i].comp) + " and " +
                   std::to_string(located[i + 1].comp) + " interleave";
      return res;
    }
  }

  std::vector<int> order;
  for (const auto& e : located) order.push_back(e.comp);
  BoundRepResult br = solver.solve(order);
  res.stats = br.stats;
  if (!br.feasible()) {
    res.reason = br.reason;
    return res;
  }
  res.rep.left = br.rep.left;
  res.component_order = order;

  std::optional<Rational> cursor;
  for (const auto& sol : br.components) cursor = cursor ? max(*cursor, sol.end + 1) : sol.end + 1;
  for (int c : unlocated) {
    Rational start = cursor ? *cursor : Rational(0);
    ComponentSolution sol = solver.solve_component(c, Bound(start - o.grid->eps));
    res.stats += sol.stats;
    for (std::size_t i = 0; i < sol.order.size(); ++i) res.rep.left[sol.order[i]] = sol.left[i];
    cursor = sol.end + 1;
    res.component_order.push_back(c);
  }
  res.feasible = true;
  return res;
}

namespace {

struct FptSearch {
  const BoundRepInstance& inst;
  const BoundRepSolver& solver;
  std::vector<int> signature_class;  // components with equal class are interchangeable
  std::set<std::pair<std::vector<bool>, std::string>> failed;
  std::vector<int> prefix;
  std::vector<bool> used;
  std::int64_t solves = 0;

  bool run(const Bound& e_prev) {
    const int c = solver.component_count();
    if (static_cast<int>(prefix.size()) == c) return true;
    auto key = std::make_pair(used, e_prev.str());
    if (failed.count(key)) return false;
    std::set<int> tried;
    for (int comp = 0; comp < c; ++comp) {
      if (used[comp] || !tried.insert(signature_class[comp]).second) continue;
      ++solves;
      ComponentSolution sol = solver.solve_component(comp, e_prev);
      if (!sol.feasible) continue;
      Bound next(sol.end);
      used[comp] = true;
      prefix.push_back(comp);
      if (run(next)) return true;
      used[comp] = false;
      prefix.pop_back();
    }
    failed.insert(std::move(key));
    return false;
  }
};

std::vector<int> signature_classes(const BoundRepInstance& inst, const std::vector<std::vector<int>>& comps) {
  std::map<std::string, int> ids;
  std::vector<int> out;
  for (const auto& vs : comps) {
    std::string sig;
    Graph h = inst.graph.induced(vs);
    sig += std::to_string(vs.size()) + ";";
    for (auto [a, b] : h.edges()) sig += std::to_string(a) + "-" + std::to_string(b) + ",";
    sig += ";";
    for (int v : vs) sig += inst.lbound[v].str() + ":" + inst.ubound[v].str() + ",";
    out.push_back(ids.emplace(sig, static_cast<int>(ids.size())).first->second);
  }
  return out;
}

}  // namespace

FptResult boundrep_fpt(const BoundRepInstance& inst, const SolveOptions& opts) {
  inst.validate();
  BoundRepSolver solver(inst, opts);
  FptResult out;
  if (solver.not_proper()) {
    out.result = solver.solve({});
    return out;
  }
  FptSearch s{inst, solver, signature_classes(inst, solver.components()), {}, {}, {}, 0};
  s.used.assign(static_cast<std::size_t>(solver.component_count()), false);
  bool ok = s.run(Bound::neg_inf());
  out.component_solves = s.solves;
  if (!ok) {
    out.result.status = SolveStatus::kInfeasible;
    out.result.grid = solver.grid();
    out.result.reason = "no component order admits a representation";
    return out;
  }
  out.order = s.prefix;
  out.result = solver.solve(out.order);
  return out;
}

}  // namespace unitrep
