#include "unitrep/proper_ext.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "unitrep/errors.hpp"

namespace unitrep {

int PartialProperRep::predrawn_count() const {
  return static_cast<int>(std::count_if(intervals.begin(), intervals.end(), [](const auto& x) { return x.has_value(); }));
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "none";
    case Violation::kNoCompatibleOrder: return "condition 1";
    case Violation::kNotConsecutive: return "condition 2";
    case Violation::kNoRoom: return "no room";
  }
  return "?";
}

namespace {

bool lex_less(const Interval& a, const Interval& b) {
  if (a.left != b.left) return a.left < b.left;
  return a.right < b.right;
}

// Checks the intervals of `subset` against the subgraph of g they induce.
std::string subset_error(const Graph& g, std::span<const int> subset, const std::vector<const Interval*>& iv) {
  const auto name = [](int v) { return "vertex " + std::to_string(v); };
  for (int v : subset) {
    if (!(iv[v]->left < iv[v]->right)) return name(v) + " has an empty interval";
  }
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return lex_less(*iv[a], *iv[b]); });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const Interval& a = *iv[sorted[i]];
    const Interval& b = *iv[sorted[i + 1]];
    bool ok = a.left == b.left ? a.right == b.right : a.right < b.right;
    if (!ok) return name(sorted[i]) + " and " + name(sorted[i + 1]) + " are properly nested";
  }
  std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  const auto k = static_cast<int>(sorted.size());
  for (int i = 0; i < k; ++i) {
    const Interval& x = *iv[sorted[i]];
    // intervals meeting x form the block [s, t] of the sorted order
    int s = static_cast<int>(std::partition_point(sorted.begin(), sorted.end(),
                                                  [&](int v) { return iv[v]->right < x.left; }) -
                             sorted.begin());
    int t = static_cast<int>(std::partition_point(sorted.begin(), sorted.end(),
                                                  [&](int v) { return !(x.right < iv[v]->left); }) -
                             sorted.begin()) - 1;
    int count = 0;
    for (int w : g.neighbors(sorted[i])) {
      int j = index[w];
      if (j < 0) continue;
      if (j < s || j > t) return name(sorted[i]) + " and " + name(w) + " are adjacent but disjoint";
      ++count;
    }
    if (count != t - s) return name(sorted[i]) + " meets an interval of a non-neighbor";
  }
  return {};
}

struct Placement {
  std::vector<Interval> intervals;  // local ids
  std::vector<int> order;           // local ◁
};

enum class PlaceResult { kOk, kIncompatible, kNoRoom };

// Builds the representation of one component inside the open segment (a, b)
// for the given direction of its group sequence.
PlaceResult place_component(const Graph& cg, const GroupPartition& groups, const std::vector<int>& seq,
                            const std::vector<std::optional<Interval>>& pre, const Rational& a, const Rational& b,
                            Placement& out) {
  const int n = cg.size();
  std::vector<int> gpos(groups.groups.size());
  for (std::size_t i = 0; i < seq.size(); ++i) gpos[seq[i]] = static_cast<int>(i);
  std::vector<int> drawn;
  for (int v = 0; v < n; ++v) {
    if (pre[v]) drawn.push_back(v);
  }
  std::sort(drawn.begin(), drawn.end(), [&](int x, int y) { return lex_less(*pre[x], *pre[y]); });
  for (std::size_t i = 0; i + 1 < drawn.size(); ++i) {
    if (gpos[groups.group_of[drawn[i]]] > gpos[groups.group_of[drawn[i + 1]]]) return PlaceResult::kIncompatible;
  }

  // ◁ and the reduced vertex list: free twins copy a pre-drawn twin, free
  // groups collapse onto their first member, identical intervals onto one.
  std::vector<int> copy_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  out.order.clear();
  for (int gid : seq) {
    std::vector<int> members_drawn, members_free;
    for (int v : groups.groups[gid]) (pre[v] ? members_drawn : members_free).push_back(v);
    std::sort(members_drawn.begin(), members_drawn.end(), [&](int x, int y) { return lex_less(*pre[x], *pre[y]); });
    for (std::size_t i = 0; i < members_drawn.size(); ++i) {
      int v = members_drawn[i];
      if (i > 0 && *pre[v] == *pre[members_drawn[i - 1]]) {
        copy_of[v] = copy_of[members_drawn[i - 1]] >= 0 ? copy_of[members_drawn[i - 1]] : members_drawn[i - 1];
      } else {
        reps.push_back(v);
      }
    }
    int target = members_drawn.empty() ? members_free.front() : members_drawn.front();
    if (members_drawn.empty()) reps.push_back(target);
    for (int v : members_free) {
      if (v != target) copy_of[v] = target;
    }
    out.order.insert(out.order.end(), members_drawn.begin(), members_drawn.end());
    out.order.insert(out.order.end(), members_free.begin(), members_free.end());
  }

  const int k = static_cast<int>(reps.size());
  std::vector<int> ridx(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i) ridx[reps[i]] = i;
  std::vector<std::vector<int>> closing(static_cast<std::size_t>(k));  // R(i) -> i
  for (int i = 0; i < k; ++i) {
    int r = i;
    for (int w : cg.neighbors(reps[i])) r = std::max(r, ridx[w]);
    closing[r].push_back(i);
  }
  // Common endpoint order: r_i sits right before l_{R(i)+1}.
  struct Endpoint {
    int rep;
    bool right;
  };
  std::vector<Endpoint> seq_ep;
  seq_ep.reserve(static_cast<std::size_t>(2 * k));
  for (int t = 0; t < k; ++t) {
    seq_ep.push_back({t, false});
    for (int i : closing[t]) seq_ep.push_back({i, true});
  }
  std::vector<std::optional<Rational>> value(seq_ep.size());
  for (std::size_t e = 0; e < seq_ep.size(); ++e) {
    const auto& iv = pre[reps[seq_ep[e].rep]];
    if (iv) value[e] = seq_ep[e].right ? iv->right : iv->left;
  }
  // Free endpoints are spread evenly between their known neighbours.
  std::optional<Rational> last_known;
  std::size_t run_start = 0;
  for (std::size_t e = 0; e <= seq_ep.size(); ++e) {
    if (e < seq_ep.size() && !value[e]) continue;
    Rational lo = last_known ? *last_known : a;
    Rational hi = e < seq_ep.size() ? *value[e] : b;
    if (hi < lo) return PlaceResult::kNoRoom;
    const long m = static_cast<long>(e - run_start);
    for (long t = 1; t <= m; ++t) value[run_start + static_cast<std::size_t>(t) - 1] = lo + (hi - lo) * Rational(t) / Rational(m + 1);
    if (e < seq_ep.size()) last_known = value[e];
    run_start = e + 1;
  }
  out.intervals.assign(static_cast<std::size_t>(n), Interval{});
  for (std::size_t e = 0; e < seq_ep.size(); ++e) {
    Interval& iv = out.intervals[reps[seq_ep[e].rep]];
    (seq_ep[e].right ? iv.right : iv.left) = *value[e];
  }
  for (int v = 0; v < n; ++v) {
    if (copy_of[v] >= 0) out.intervals[v] = out.intervals[copy_of[v]];
  }
  if (!proper_representation_error(cg, out.intervals).empty()) return PlaceResult::kNoRoom;
  return PlaceResult::kOk;
}

}  // namespace

std::string proper_representation_error(const Graph& g, std::span<const Interval> iv) {
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<const Interval*> ptr;
  for (const auto& x : iv) ptr.push_back(&x);
  return subset_error(g, all, ptr);
}

PredrawnOrder predrawn_order(const Graph& g, const PartialProperRep& p) {
  if (static_cast<int>(p.intervals.size()) != g.size()) throw InvalidPartial("partial representation size mismatch");
  std::vector<int> drawn;
  std::vector<const Interval*> ptr(p.intervals.size(), nullptr);
  for (std::size_t v = 0; v < p.intervals.size(); ++v) {
    if (p.intervals[v]) {
      drawn.push_back(static_cast<int>(v));
      ptr[v] = &*p.intervals[v];
    }
  }
  if (std::string err = subset_error(g, drawn, ptr); !err.empty()) throw InvalidPartial(err);
  std::sort(drawn.begin(), drawn.end(), [&](int a, int b) { return lex_less(*ptr[a], *ptr[b]); });
  GroupPartition groups = indistinguishable_groups(g);
  PredrawnOrder out;
  for (std::size_t i = 0; i < drawn.size(); ++i) {
    int v = drawn[i];
    if (i > 0 && *ptr[v] == *ptr[drawn[i - 1]]) {
      if (groups.group_of[v] != groups.group_of[drawn[i - 1]]) {
        throw InvalidPartial("identical intervals on vertices " + std::to_string(drawn[i - 1]) + " and " +
                             std::to_string(v) + " with different closed neighborhoods");
      }
      out.classes.back().push_back(v);
    } else {
      out.classes.push_back({v});
    }
  }
  return out;
}

ExtendReport extendible_proper(const Graph& g, const PartialProperRep& p) {
  PredrawnOrder po = predrawn_order(g, p);
  ExtendReport report;
  const auto comps = connected_components(g);
  std::vector<int> comp_of(static_cast<std::size_t>(g.size()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  }

  struct Local {
    Graph graph;
    GroupPartition groups;
    ProperOrdering ordering;
    std::vector<std::optional<Interval>> pre;
  };
  std::vector<Local> local;
  for (const auto& vs : comps) {
    Local l;
    l.graph = g.induced(vs);
    l.groups = indistinguishable_groups(l.graph);
    auto res = compute_proper_ordering(l.graph, l.groups);
    if (auto* bad = std::get_if<NotProperInterval>(&res)) {
      report.verdict = ExtendVerdict::kNotProperInterval;
      report.witness = vs[bad->witness];
      report.component = comp_of[vs.front()];
      report.reason = "closed neighborhood of vertex " + std::to_string(report.witness) + " cannot be consecutive";
      return report;
    }
    l.ordering = std::get<ProperOrdering>(res);
    for (int v : vs) l.pre.push_back(p.intervals[v]);
    local.push_back(std::move(l));
  }

  // Condition 2: each component's pre-drawn classes form one block.
  std::vector<int> located;
  std::vector<bool> seen(comps.size(), false);
  for (const auto& cls : po.classes) {
    int c = comp_of[cls.front()];
    if (!located.empty() && located.back() == c) continue;
    if (seen[c]) {
      report.verdict = ExtendVerdict::kNo;
      report.violation = Violation::kNotConsecutive;
      report.component = c;
      report.reason = "pre-drawn vertices of component " + std::to_string(c) + " are not consecutive";
      return report;
    }
    seen[c] = true;
    located.push_back(c);
  }

  // Disjoint open segments: located components around their pre-drawn
  // extents, unlocated ones in unit slots further right.
  std::vector<std::pair<Rational, Rational>> segment(comps.size());
  std::vector<std::pair<Rational, Rational>> extent;
  for (int c : located) {
    std::optional<Rational> lo, hi;
    for (int v : comps[c]) {
      if (!p.intervals[v]) continue;
      if (!lo || p.intervals[v]->left < *lo) lo = p.intervals[v]->left;
      if (!hi || *hi < p.intervals[v]->right) hi = p.intervals[v]->right;
    }
    extent.emplace_back(*lo, *hi);
  }
  for (std::size_t i = 0; i < located.size(); ++i) {
    Rational a = i == 0 ? extent[i].first - Rational(1) : (extent[i - 1].second + extent[i].first) / Rational(2);
    Rational b = i + 1 == located.size() ? extent[i].second + Rational(1)
                                         : (extent[i].second + extent[i + 1].first) / Rational(2);
    segment[located[i]] = {a, b};
  }
  Rational base = located.empty() ? Rational(0) : extent.back().second + Rational(1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (seen[c]) continue;
    segment[c] = {base, base + Rational(1)};
    base += Rational(1);
  }

  ProperRep rep;
  rep.intervals.resize(static_cast<std::size_t>(g.size()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Local& l = local[c];
    ComponentPlan plan;
    plan.vertices = comps[c];
    plan.located = seen[c];
    Placement placed;
    PlaceResult result = PlaceResult::kIncompatible;
    for (Direction d : {Direction::kForward, Direction::kReversed}) {
      if (d == Direction::kReversed && l.ordering.group_sequence.size() <= 1) break;
      ProperOrdering o = l.ordering;
      o.direction = d;
      PlaceResult r = place_component(l.graph, l.groups, o.sequence(), l.pre, segment[c].first, segment[c].second, placed);
      if (r == PlaceResult::kOk) {
        plan.direction = d;
        result = r;
        break;
      }
      if (r == PlaceResult::kNoRoom) result = r;
    }
    if (result != PlaceResult::kOk) {
      report.verdict = ExtendVerdict::kNo;
      report.component = static_cast<int>(c);
      if (result == PlaceResult::kIncompatible) {
        report.violation = Violation::kNoCompatibleOrder;
        report.reason = "no ordering of component " + std::to_string(c) + " extends the pre-drawn order";
      } else {
        report.violation = Violation::kNoRoom;
        report.reason = "touching pre-drawn endpoints of component " + std::to_string(c) +
                        " leave no room for the endpoints forced between them";
      }
      report.components.clear();
      return report;
    }
    for (int v : placed.order) plan.order.push_back(comps[c][v]);
    for (std::size_t i = 0; i < comps[c].size(); ++i) rep.intervals[comps[c][i]] = placed.intervals[i];
    report.components.push_back(std::move(plan));
  }
  report.verdict = ExtendVerdict::kYes;
  report.rep = std::move(rep);
  return report;
}

ProperRep extend_proper(const Graph& g, const PartialProperRep& p) {
  ExtendReport r = extendible_proper(g, p);
  if (r.verdict != ExtendVerdict::kYes) throw Impossible(r.reason);
  return std::move(*r.rep);
}

}  // namespace unitrep
