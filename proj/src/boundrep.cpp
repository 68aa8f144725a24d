#include "unitrep/boundrep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "unitrep/boundrep_lp.hpp"
#include "unitrep/errors.hpp"

namespace unitrep {

const char* to_string(SolveMode m) { return m == SolveMode::kLp ? "lp" : "shift"; }

GridSpec default_grid(const BoundRepInstance& inst, SolveMode mode) {
  return compute_epsilon(inst.lbound, inst.ubound, std::max(1, inst.size()),
                         mode == SolveMode::kLp ? GridMode::kLp : GridMode::kShift);
}

Rational anchor_position(const BoundRepInstance& inst) {
  Rational a(0);
  for (const Bound& b : inst.ubound) {
    if (!b.is_finite()) continue;
    Rational c(BigInt(b.value().floor() - 2 * inst.size() - 2));
    if (c < a) a = c;
  }
  return a;
}

BoundRepSolver::BoundRepSolver(const BoundRepInstance& inst, SolveOptions opts)
    : inst_(inst), opts_(std::move(opts)) {
  grid_ = opts_.grid ? *opts_.grid : default_grid(inst, opts_.mode);
  components_ = connected_components(inst.graph);
  anchor_ = anchor_position(inst);
  for (const auto& vs : components_) {
    Component c;
    c.graph = inst.graph.induced(vs);
    c.groups = indistinguishable_groups(c.graph);
    auto res = compute_proper_ordering(c.graph, c.groups);
    if (auto* bad = std::get_if<NotProperInterval>(&res)) {
      if (!not_proper_) {
        NotProperInterval global = *bad;
        global.witness = vs[bad->witness];
        global.reason = "closed neighborhood of vertex " + std::to_string(global.witness) + " cannot be consecutive";
        not_proper_ = global;
      }
    } else {
      c.ordering = std::get<ProperOrdering>(res);
    }
    data_.push_back(std::move(c));
  }
}

ComponentSolution BoundRepSolver::solve_variant(int c, Direction d, const Bound& e_prev) const {
  const auto& vs = components_[c];
  const Component& comp = data_[c];
  const int n = static_cast<int>(vs.size());
  ComponentSolution out;
  out.component = c;
  out.direction = d;

  std::vector<Bound> lb, ub;
  for (int v : vs) {
    lb.push_back(inst_.lbound[v]);
    ub.push_back(inst_.ubound[v]);
  }
  for (int i = 0; i < n; ++i) {
    if (ub[i] < lb[i]) {
      out.reason = "lower bound exceeds upper bound at vertex " + std::to_string(vs[i]);
      return out;
    }
  }
  std::vector<int> order = order_with_bounds(comp.groups, comp.ordering, d, lb);
  std::vector<Rational> local(static_cast<std::size_t>(n));

  if (opts_.mode == SolveMode::kLp) {
    DifferenceSystem sys =
        build_constraints(comp.graph, order, e_prev, grid_.eps, lb, opts_.reduced_constraints, anchor_);
    LeastSolution sol = least_solution(sys);
    if (!sol.feasible) {
      out.reason = "constraints contain a positive cycle";
      return out;
    }
    for (int i = 0; i < n; ++i) {
      if (!sol.values[i].is_finite()) throw std::logic_error("unanchored variable in least solution");
      local[order[i]] = sol.values[i].value();
    }
  } else {
    std::vector<Bound> eff = lb;
    if (e_prev.is_finite()) {
      Rational start = e_prev.value() + grid_.eps;
      for (auto& b : eff) b = max(b, Bound(start));
    } else if (std::none_of(lb.begin(), lb.end(), [](const Bound& b) { return b.is_finite(); })) {
      std::fill(eff.begin(), eff.end(), Bound(anchor_));
    }
    ProperOrdering o = comp.ordering;
    o.direction = d;
    std::vector<int> seq = o.sequence();
    PrunedGraph pruned = prune(comp.graph, comp.groups, eff);
    ShiftProblem problem = ShiftProblem::from_graph(pruned.graph, seq, pruned.lbound, grid_.eps, inst_.size());
    std::vector<int> first_nb = problem.first_nb;
    std::vector<int> last_nb = problem.last_nb;
    ShiftState state(std::move(problem), opts_.trace);
    state.run_phases();
    out.stats = state.stats();
    std::vector<std::vector<int>> members;
    for (int gid : seq) members.push_back(comp.groups.groups[gid]);
    local = expand_pruned(state.positions(), first_nb, last_nb, members, eff, grid_.eps);
  }

  for (int i = 0; i < n; ++i) {
    if (ub[i].is_finite() && ub[i].value() < local[i]) {
      out.reason = "upper bound of vertex " + std::to_string(vs[i]) + " violated by the left-most representation";
      return out;
    }
  }
  out.feasible = true;
  Rational last = local[order.back()];
  for (int i : order) {
    out.order.push_back(vs[i]);
    out.left.push_back(local[i]);
    last = max(last, local[i]);
  }
  out.end = last + Rational(1);
  return out;
}

ComponentSolution BoundRepSolver::solve_component(int c, const Bound& e_prev) const {
  if (not_proper_) throw std::logic_error("component is not a proper interval graph");
  ComponentSolution fwd = solve_variant(c, Direction::kForward, e_prev);
  if (data_[c].ordering.group_sequence.size() <= 1) return fwd;
  ComponentSolution rev = solve_variant(c, Direction::kReversed, e_prev);
  if (!fwd.feasible && !rev.feasible) {
    fwd.stats += rev.stats;
    fwd.reason = "forward: " + fwd.reason + "; reversed: " + rev.reason;
    return fwd;
  }
  ShiftStats total = fwd.stats;
  total += rev.stats;
  ComponentSolution best = !rev.feasible || (fwd.feasible && !(rev.end < fwd.end)) ? std::move(fwd) : std::move(rev);
  best.stats = total;
  return best;
}

BoundRepResult BoundRepSolver::solve(std::span<const int> order) const {
  BoundRepResult res;
  res.grid = grid_;
  if (not_proper_) {
    res.status = SolveStatus::kNotProperInterval;
    res.witness = not_proper_->witness;
    res.reason = not_proper_->reason;
    return res;
  }
  res.rep.left.assign(static_cast<std::size_t>(inst_.size()), Rational(0));
  Bound e_prev = Bound::neg_inf();
  for (int c : order) {
    ComponentSolution sol = solve_component(c, e_prev);
    res.stats += sol.stats;
    if (!sol.feasible) {
      res.status = SolveStatus::kInfeasible;
      res.reason = "component " + std::to_string(c) + ": " + sol.reason;
      res.components.push_back(std::move(sol));
      res.rep.left.clear();
      return res;
    }
    for (std::size_t i = 0; i < sol.order.size(); ++i) res.rep.left[sol.order[i]] = sol.left[i];
    e_prev = sol.end;
    res.components.push_back(std::move(sol));
  }
  res.status = SolveStatus::kFeasible;
  return res;
}

BoundRepResult solve_boundrep_prescribed(const BoundRepInstance& inst, const SolveOptions& opts) {
  inst.validate();
  BoundRepSolver solver(inst, opts);
  std::vector<int> order;
  if (inst.prescribed_order) {
    order = *inst.prescribed_order;
  } else if (solver.component_count() <= 1) {
    order.resize(static_cast<std::size_t>(solver.component_count()));
    std::iota(order.begin(), order.end(), 0);
  } else {
    throw InputError("instance with several components needs a prescribed order");
  }
  return solver.solve(order);
}

}  // namespace unitrep
