#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "unitrep/boundrep.hpp"
#include "unitrep/errors.hpp"
#include "unitrep/gadgets.hpp"
#include "unitrep/generators.hpp"
#include "unitrep/grid.hpp"
#include "unitrep/io.hpp"
#include "unitrep/oracle.hpp"
#include "unitrep/ordering.hpp"
#include "unitrep/pipeline.hpp"
#include "unitrep/proper_ext.hpp"

namespace unitrep::cli {

namespace {

// Raised when a self-check or a cross-check between solvers fails.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_graph(in);
}

BoundRepInstance load_instance(const std::string& graph_path, const std::string& bounds_path) {
  Graph g = load_graph(graph_path);
  std::istringstream in(read_file(bounds_path));
  return read_bounds(in, std::move(g));
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw InputError("bad integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

void check_or_mismatch(const Verdict& v, const std::string& what) {
  if (v.ok()) return;
  std::string msg = what + " failed its validity check";
  if (!v.failures.empty()) msg += ": " + v.failures.front();
  throw Mismatch(msg);
}

int cmd_recognize(const std::string& graph_path, std::ostream& out) {
  Graph g = load_graph(graph_path);
  for (const auto& vs : connected_components(g)) {
    Graph h = g.induced(vs);
    auto res = compute_proper_ordering(h, indistinguishable_groups(h));
    if (auto* bad = std::get_if<NotProperInterval>(&res)) {
      out << "# not a proper interval graph\n";
      out << "# witness " << vs[bad->witness] << '\n';
      out << "# reason " << bad->reason << '\n';
      return kNegative;
    }
  }
  RepExtResult r = repext_unit(g, PartialUnitRep(static_cast<std::size_t>(g.size())));
  if (!r.feasible) throw Mismatch("recognized graph has no representation: " + r.reason);
  check_or_mismatch(check_valid(r.rep.left, g), "representation");
  out << "# proper interval graph\n";
  out << "# components " << r.component_order.size() << '\n';
  write_unit_rep(out, r.rep);
  return kOk;
}

int cmd_extend_proper(const std::string& graph_path, const std::string& partial_path, std::ostream& out) {
  Graph g = load_graph(graph_path);
  std::istringstream in(read_file(partial_path));
  PartialProperRep p = read_partial_proper(in, g.size());
  ExtendReport r = extendible_proper(g, p);
  switch (r.verdict) {
    case ExtendVerdict::kNotProperInterval:
      out << "# not a proper interval graph\n# witness " << r.witness << '\n';
      return kNegative;
    case ExtendVerdict::kNo:
      out << "# not extendible: " << to_string(r.violation) << '\n';
      out << "# component " << r.component << '\n';
      if (!r.reason.empty()) out << "# reason " << r.reason << '\n';
      return kNegative;
    case ExtendVerdict::kYes:
      break;
  }
  const ProperRep& rep = *r.rep;
  check_or_mismatch(check_valid_proper(rep.intervals, g), "extension");
  for (int v = 0; v < g.size(); ++v) {
    if (p.intervals[v] && !(*p.intervals[v] == rep.intervals[v])) throw Mismatch("extension moved a pre-drawn interval");
  }
  out << "# extendible\n";
  write_proper_rep(out, rep);
  return kOk;
}

SolveMode parse_mode(const std::string& m) { return m == "lp" ? SolveMode::kLp : SolveMode::kShift; }

int cmd_extend_unit(const std::string& graph_path, const std::string& partial_path, const std::string& mode,
                    std::ostream& out) {
  Graph g = load_graph(graph_path);
  std::istringstream in(read_file(partial_path));
  PartialUnitRep p = read_partial_unit(in, g.size());
  SolveOptions opts;
  opts.mode = parse_mode(mode);
  RepExtResult r = repext_unit(g, p, opts);
  if (!r.feasible) {
    out << "# not extendible\n# reason " << r.reason << '\n';
    return kNegative;
  }
  check_or_mismatch(check_valid(r.rep.left, g), "extension");
  for (int v = 0; v < g.size(); ++v) {
    if (p[v] && *p[v] != r.rep.left[v]) throw Mismatch("extension moved a pre-drawn interval");
  }
  out << "# extendible\n# component order " << join(r.component_order) << '\n';
  write_unit_rep(out, r.rep);
  return kOk;
}

struct BoundRepArgs {
  std::string graph, bounds, order, mode = "shift", gadget;
  bool fpt = false, grid = false, full = false;
};

struct Solved {
  BoundRepResult result;
  std::vector<int> order;
};

Solved solve_once(const BoundRepInstance& inst, const BoundRepArgs& a, SolveMode mode, const GridSpec& grid) {
  SolveOptions o;
  o.mode = mode;
  o.grid = grid;
  o.reduced_constraints = !a.full;
  if (a.fpt) {
    FptResult f = boundrep_fpt(inst, o);
    return {std::move(f.result), std::move(f.order)};
  }
  Solved s{solve_boundrep_prescribed(inst, o), {}};
  if (inst.prescribed_order) {
    s.order = *inst.prescribed_order;
  } else if (s.result.feasible()) {
    for (const auto& c : s.result.components) s.order.push_back(c.component);
  }
  return s;
}

Gadget load_gadget(const std::string& path) {
  std::istringstream in(read_file(path));
  std::int64_t k = 0, M = 0;
  if (!(in >> k >> M)) throw ParseError(path + ": expected 'k M a1 ... a3k'");
  std::vector<std::int64_t> A;
  for (std::int64_t a; in >> a;) A.push_back(a);
  return gen_gadget(static_cast<int>(k), M, A);
}

int cmd_boundrep(const BoundRepArgs& a, std::ostream& out, std::ostream& err) {
  BoundRepInstance inst = load_instance(a.graph, a.bounds);
  if (!a.order.empty()) {
    std::vector<int> order;
    for (auto c : parse_list(a.order)) order.push_back(static_cast<int>(c));
    inst.prescribed_order = order;
  }
  if (a.fpt) inst.prescribed_order.reset();
  inst.validate();

  Solved s;
  GridSpec grid;
  if (a.mode == "both") {
    grid = default_grid(inst, SolveMode::kShift);
    Solved lp = solve_once(inst, a, SolveMode::kLp, grid);
    s = solve_once(inst, a, SolveMode::kShift, grid);
    if (lp.result.status != s.result.status || lp.result.rep != s.result.rep || lp.order != s.order) {
      err << "lp and shift modes disagree\n";
      return kMismatch;
    }
  } else {
    grid = default_grid(inst, parse_mode(a.mode));
    s = solve_once(inst, a, parse_mode(a.mode), grid);
  }
  const BoundRepResult& r = s.result;
  if (r.status == SolveStatus::kNotProperInterval) {
    out << "# not a proper interval graph\n# witness " << r.witness << '\n';
    return kNegative;
  }
  if (!r.feasible()) {
    out << "# infeasible\n# reason " << r.reason << '\n';
    return kNegative;
  }
  ValidityOptions vo{inst.lbound, inst.ubound, {}, grid.eps};
  check_or_mismatch(check_valid(r.rep.left, inst.graph, vo), "representation");

  UnitRep rep = r.rep;
  if (a.grid) {
    rep.left = snap_to_grid(rep.left, grid).left;
    check_or_mismatch(check_valid(rep.left, inst.graph, vo), "snapped representation");
  }
  out << "# feasible\n";
  out << "# mode " << a.mode << "\n# eps " << grid.eps << '\n';
  out << "# component order " << join(s.order) << '\n';
  out << "# left_shifts " << r.stats.left_shifts << " long_events " << r.stats.long_events << '\n';
  if (!a.gadget.empty()) {
    Gadget gd = load_gadget(a.gadget);
    if (gd.instance.graph != inst.graph) throw InputError("gadget description does not match the graph");
    try {
      out << "# partition";
      for (const auto& t : decode_partition(rep, gd)) {
        out << " A" << t[0] + 1 << "+A" << t[1] + 1 << "+A" << t[2] + 1;
      }
      out << '\n';
    } catch (const DecodeError& e) {
      throw Mismatch(e.what());
    }
  }
  write_unit_rep(out, rep);
  return kOk;
}

int cmd_gen_gadget(std::int64_t k, std::int64_t M, const std::string& numbers, const std::string& prefix,
                   std::ostream& out) {
  std::vector<std::int64_t> A = parse_list(numbers);
  Gadget gd = gen_gadget(static_cast<int>(k), M, A);
  auto write = [&](const std::string& path, auto&& body) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    body(f);
    out << "# wrote " << path << '\n';
  };
  write(prefix + ".graph", [&](std::ostream& f) { write_graph(f, gd.instance.graph); });
  write(prefix + ".bounds", [&](std::ostream& f) { write_bounds(f, gd.instance); });
  write(prefix + ".meta", [&](std::ostream& f) {
    f << k << ' ' << M;
    for (auto x : A) f << ' ' << x;
    f << '\n';
  });
  return kOk;
}

nlohmann::json to_json(const std::vector<Rational>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(x.str());
  return arr;
}

int cmd_oracle(const std::string& graph_path, const std::string& bounds_path, const std::string& rep_path,
               const std::string& eps_text, std::ostream& out) {
  BoundRepInstance inst = load_instance(graph_path, bounds_path);
  inst.validate();
  std::optional<Rational> eps;
  if (!eps_text.empty()) eps = Rational::parse(eps_text);
  nlohmann::json j;
  if (!rep_path.empty()) {
    std::istringstream in(read_file(rep_path));
    PartialUnitRep p = read_partial_unit(in, inst.size());
    std::vector<Rational> left;
    for (int v = 0; v < inst.size(); ++v) {
      if (!p[v]) throw InputError("representation misses vertex " + std::to_string(v));
      left.push_back(*p[v]);
    }
    Verdict v = check_valid(left, inst.graph, {inst.lbound, inst.ubound, {}, eps});
    j["valid"] = v.ok();
    j["geometry"] = v.geometry;
    j["bounds"] = v.bounds;
    j["grid"] = v.grid;
    j["failures"] = v.failures;
    out << j.dump(2) << '\n';
    return v.ok() ? kOk : kNegative;
  }
  if (inst.size() > 8) throw InputError("brute-force search is limited to 8 vertices");
  GridSpec grid = default_grid(inst, SolveMode::kLp);
  if (eps) grid.eps = *eps;
  auto brute = brute_force_feasible(inst.graph, inst.lbound, inst.ubound, grid.eps);
  SolveOptions o;
  o.mode = SolveMode::kLp;
  o.grid = grid;
  FptResult solver = boundrep_fpt(inst, o);
  j["eps"] = grid.eps.str();
  j["feasible"] = brute.has_value();
  if (brute) j["representation"] = to_json(*brute);
  j["solver_feasible"] = solver.result.feasible();
  if (solver.result.feasible()) j["solver_representation"] = to_json(solver.result.rep.left);
  out << j.dump(2) << '\n';
  if (brute.has_value() != solver.result.feasible()) return kMismatch;
  return brute ? kOk : kNegative;
}

struct BenchArgs {
  std::string sizes = "250,500,1000,2000";
  std::string family = "all";
  std::uint64_t seed = 1;
  bool no_timing = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<std::int64_t> sizes = parse_list(a.sizes);
  std::vector<std::string> families;
  for (const char* f : {"random", "twins", "gadget"}) {
    if (a.family == "all" || a.family == f) families.emplace_back(f);
  }
  if (families.empty()) throw InputError("unknown family " + a.family);
  out << "family,n,components,left_shifts,phase1_shifts,phase2_shifts,long_events,wall_ms\n";
  for (const auto& family : families) {
    for (std::int64_t n : sizes) {
      if (n < 1) throw InputError("sizes must be positive");
      Rng rng(a.seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL) ^ std::hash<std::string>{}(family));
      BoundRepInstance inst;
      if (family == "gadget") {
        const int k = static_cast<int>(std::max<std::int64_t>(1, n / 15));
        std::vector<std::int64_t> A;
        std::vector<int> order;
        for (int t = 0; t < k; ++t) {
          A.insert(A.end(), {2, 2, 3});
          order.insert(order.end(), {3 * k + t, 3 * t, 3 * t + 1, 3 * t + 2});
        }
        order.push_back(4 * k);
        inst = gen_gadget(k, 7, A).instance;
        inst.prescribed_order = order;
      } else {
        StaircaseOptions so;
        so.denominator = 8;
        so.max_step = 8;
        so.twin_probability = family == "twins" ? 0.3 : 0.02;
        RandomRep rr = random_unit_rep(static_cast<int>(n), rng, so);
        PlantedBoundsOptions po;
        po.lbound_probability = 0.3;
        po.ubound_probability = 0.0;
        inst = planted_bounds(rr, rng, po);
      }
      auto t0 = std::chrono::steady_clock::now();
      BoundRepResult r = solve_boundrep_prescribed(inst, SolveOptions{});
      auto t1 = std::chrono::steady_clock::now();
      if (!r.feasible()) throw Mismatch(family + " instance of size " + std::to_string(n) + " reported infeasible");
      double ms = a.no_timing ? 0.0 : std::chrono::duration<double, std::milli>(t1 - t0).count();
      out << family << ',' << inst.size() << ',' << r.components.size() << ',' << r.stats.left_shifts << ','
          << r.stats.phase1_shifts << ',' << r.stats.phase2_shifts << ',' << r.stats.long_events << ','
          << std::fixed << std::setprecision(3) << ms << '\n';
    }
  }
  return kOk;
}

void write_svg(std::ostream& out, const UnitRep& rep) {
  const int n = static_cast<int>(rep.left.size());
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) { return rep.left[a] < rep.left[b]; });
  Rational lo = n ? rep.left[rows.front()] : Rational(0);
  Rational hi = n ? rep.left[rows.back()] + 1 : Rational(1);
  const double unit = 60.0, row = 16.0, pad = 10.0;
  auto x = [&](const Rational& r) { return pad + unit * (r - lo).raw().get_d(); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << x(hi) + pad << "\" height=\""
      << 2 * pad + row * n << "\" font-family=\"monospace\" font-size=\"10\">\n";
  for (int i = 0; i < n; ++i) {
    const int v = rows[i];
    const double y = pad + row * i;
    out << "  <rect x=\"" << x(rep.left[v]) << "\" y=\"" << y << "\" width=\"" << unit << "\" height=\"" << row - 4
        << "\" fill=\"#9cc3e6\" stroke=\"#1f4e79\"/>\n";
    out << "  <text x=\"" << x(rep.left[v]) + 3 << "\" y=\"" << y + row - 7 << "\">" << v << "</text>\n";
  }
  out << "</svg>\n";
}

int cmd_trace(const std::string& graph_path, const std::string& bounds_path, const std::string& order,
              const std::string& format, std::ostream& out) {
  BoundRepInstance inst = load_instance(graph_path, bounds_path);
  if (!order.empty()) {
    std::vector<int> o;
    for (auto c : parse_list(order)) o.push_back(static_cast<int>(c));
    inst.prescribed_order = o;
  }
  inst.validate();
  std::vector<std::pair<int, ShiftEvent>> events;
  int run = 0;
  std::int64_t last = -1;
  SolveOptions opts;
  if (format == "csv") {
    opts.trace = [&](const ShiftEvent& e) {
      if (e.step <= last) ++run;
      last = e.step;
      events.emplace_back(run, e);
    };
  }
  BoundRepResult r = solve_boundrep_prescribed(inst, opts);
  if (format == "csv") {
    out << "run,step,phase,vertex,old,new,fixed\n";
    for (const auto& [k, e] : events) {
      out << k << ',' << e.step << ',' << e.phase << ',' << e.vertex << ',' << e.old_left << ',' << e.new_left << ','
          << (e.fixed ? 1 : 0) << '\n';
    }
    return r.feasible() ? kOk : kNegative;
  }
  if (!r.feasible()) {
    out << "<!-- infeasible: " << r.reason << " -->\n";
    return kNegative;
  }
  write_svg(out, r.rep);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit interval representations with bounds and partial drawings", "unitrep"};
  app.require_subcommand(1);

  std::string graph, second, mode = "shift";
  auto* recognize = app.add_subcommand("recognize", "recognize a unit interval graph and draw it");
  recognize->add_option("graph", graph)->required();

  auto* extend_proper = app.add_subcommand("extend-proper", "extend a partial proper interval representation");
  extend_proper->add_option("graph", graph)->required();
  extend_proper->add_option("partial", second)->required();

  auto* extend_unit = app.add_subcommand("extend-unit", "extend a partial unit interval representation");
  extend_unit->add_option("graph", graph)->required();
  extend_unit->add_option("partial", second)->required();
  extend_unit->add_option("--mode", mode)->check(CLI::IsMember({"lp", "shift"}));

  BoundRepArgs br;
  auto* boundrep = app.add_subcommand("boundrep", "unit representation within per-vertex bounds");
  boundrep->add_option("graph", br.graph)->required();
  boundrep->add_option("bounds", br.bounds)->required();
  auto* order_opt = boundrep->add_option("--order", br.order, "component order, e.g. 2,0,1");
  boundrep->add_flag("--fpt", br.fpt, "try all component orders")->excludes(order_opt);
  boundrep->add_option("--mode", br.mode)->check(CLI::IsMember({"lp", "shift", "both"}));
  boundrep->add_flag("--grid", br.grid, "snap the output to the eps-grid");
  boundrep->add_flag("--full", br.full, "lp mode: use every pairwise constraint");
  boundrep->add_option("--gadget", br.gadget, "gadget description written by gen-gadget; decodes the partition");

  std::int64_t k = 0, M = 0;
  std::string numbers, prefix = "gadget";
  auto* gadget = app.add_subcommand("gen-gadget", "instance from a 3-Partition input");
  gadget->add_option("k", k)->required();
  gadget->add_option("M", M)->required();
  gadget->add_option("numbers", numbers, "a1,a2,...,a3k")->required();
  gadget->add_option("--out", prefix, "output prefix");

  std::string rep_path, eps_text;
  auto* oracle = app.add_subcommand("oracle", "check a representation or brute-force a small instance");
  oracle->add_option("graph", graph)->required();
  oracle->add_option("bounds", second)->required();
  oracle->add_option("--rep", rep_path, "representation to check");
  oracle->add_option("--eps", eps_text, "grid step");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "operation counts on generated instances (CSV)");
  bench->add_option("--sizes", ba.sizes);
  bench->add_option("--seed", ba.seed);
  bench->add_option("--family", ba.family)->check(CLI::IsMember({"all", "random", "twins", "gadget"}));
  bench->add_flag("--no-timing", ba.no_timing, "print 0 for wall time");

  std::string trace_order, format;
  auto* trace = app.add_subcommand("trace", "LeftShift trace (csv) or final drawing (svg)");
  trace->add_option("graph", graph)->required();
  trace->add_option("bounds", second)->required();
  trace->add_option("--order", trace_order);
  trace->add_option("--out", format)->required()->check(CLI::IsMember({"csv", "svg"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*recognize) return cmd_recognize(graph, out);
    if (*extend_proper) return cmd_extend_proper(graph, second, out);
    if (*extend_unit) return cmd_extend_unit(graph, second, mode, out);
    if (*boundrep) return cmd_boundrep(br, out, err);
    if (*gadget) return cmd_gen_gadget(k, M, numbers, prefix, out);
    if (*oracle) return cmd_oracle(graph, second, rep_path, eps_text, out);
    if (*bench) return cmd_bench(ba, out);
    if (*trace) return cmd_trace(graph, second, trace_order, format, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Mismatch& e) {
    err << "internal mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kInputError;
}

}  // namespace unitrep::cli
