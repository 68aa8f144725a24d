#include "unitrep/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "unitrep/errors.hpp"

namespace unitrep {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

long parse_int(const Line& line, const std::string& tok) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

int parse_vertex(const Line& line, const std::string& tok, int n) {
  long v = parse_int(line, tok);
  if (v < 0 || v >= n) fail(line, "vertex " + tok + " out of range");
  return static_cast<int>(v);
}

Rational parse_rational(const Line& line, const std::string& tok) {
  try {
    return Rational::parse(tok);
  } catch (const std::exception&) {
    fail(line, "expected a rational, got '" + tok + "'");
  }
}

Bound parse_bound(const Line& line, const std::string& tok) {
  try {
    return Bound::parse(tok);
  } catch (const std::exception&) {
    fail(line, "expected a bound, got '" + tok + "'");
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("empty graph file");
  const Line& head = lines.front();
  if (head.tokens.size() != 2) fail(head, "expected 'n m'");
  const long n = parse_int(head, head.tokens[0]);
  const long m = parse_int(head, head.tokens[1]);
  if (n < 0 || m < 0) fail(head, "negative size");
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) fail(l, "expected 'u v'");
    int u = parse_vertex(l, l.tokens[0], static_cast<int>(n));
    int v = parse_vertex(l, l.tokens[1], static_cast<int>(n));
    if (u == v) fail(l, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) fail(l, "duplicate edge");
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

BoundRepInstance read_bounds(std::istream& in, Graph g) {
  BoundRepInstance inst = BoundRepInstance::unbounded(std::move(g));
  const int n = inst.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const Line& l : tokenize(in)) {
    if (l.tokens.front() == "order") {
      if (inst.prescribed_order) fail(l, "second order line");
      std::vector<int> order;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) order.push_back(static_cast<int>(parse_int(l, l.tokens[i])));
      inst.prescribed_order = std::move(order);
      continue;
    }
    if (l.tokens.size() != 3) fail(l, "expected 'v lb ub'");
    int v = parse_vertex(l, l.tokens[0], n);
    if (seen[v]) fail(l, "vertex " + l.tokens[0] + " listed twice");
    seen[v] = true;
    inst.lbound[v] = parse_bound(l, l.tokens[1]);
    inst.ubound[v] = parse_bound(l, l.tokens[2]);
    if (inst.lbound[v].is_pos_inf() || inst.ubound[v].is_neg_inf()) fail(l, "bound on the wrong side");
  }
  return inst;
}

void write_bounds(std::ostream& out, const BoundRepInstance& inst) {
  for (int v = 0; v < inst.size(); ++v) {
    if (inst.lbound[v].is_neg_inf() && inst.ubound[v].is_pos_inf()) continue;
    out << v << ' ' << inst.lbound[v] << ' ' << inst.ubound[v] << '\n';
  }
  if (inst.prescribed_order) {
    out << "order";
    for (int c : *inst.prescribed_order) out << ' ' << c;
    out << '\n';
  }
}

PartialProperRep read_partial_proper(std::istream& in, int n) {
  PartialProperRep p(n);
  for (const Line& l : tokenize(in)) {
    if (l.tokens.size() != 3) fail(l, "expected 'v l r'");
    int v = parse_vertex(l, l.tokens[0], n);
    if (p.intervals[v]) fail(l, "vertex " + l.tokens[0] + " listed twice");
    Interval iv{parse_rational(l, l.tokens[1]), parse_rational(l, l.tokens[2])};
    if (!(iv.left < iv.right)) fail(l, "interval must have positive length");
    p.intervals[v] = iv;
  }
  return p;
}

PartialUnitRep read_partial_unit(std::istream& in, int n) {
  PartialUnitRep p(static_cast<std::size_t>(n));
  for (const Line& l : tokenize(in)) {
    if (l.tokens.size() != 2 && l.tokens.size() != 3) fail(l, "expected 'v l' or 'v l r'");
    int v = parse_vertex(l, l.tokens[0], n);
    if (p[v]) fail(l, "vertex " + l.tokens[0] + " listed twice");
    Rational left = parse_rational(l, l.tokens[1]);
    if (l.tokens.size() == 3 && parse_rational(l, l.tokens[2]) != left + 1) fail(l, "interval is not of unit length");
    p[v] = left;
  }
  return p;
}

void write_unit_rep(std::ostream& out, const UnitRep& rep) {
  for (std::size_t v = 0; v < rep.left.size(); ++v) out << v << ' ' << rep.left[v] << ' ' << rep.left[v] + 1 << '\n';
}

void write_proper_rep(std::ostream& out, const ProperRep& rep) {
  for (std::size_t v = 0; v < rep.intervals.size(); ++v) {
    out << v << ' ' << rep.intervals[v].left << ' ' << rep.intervals[v].right << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace unitrep
