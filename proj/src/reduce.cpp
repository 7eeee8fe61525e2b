#include "confred/reduce.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "confred/core.hpp"
#include "search_util.hpp"

namespace confred {

std::string to_string(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::Boben:
      return "boben";
    case ReductionMode::Martinetti:
      return "martinetti";
    case ReductionMode::General:
      return "general";
  }
  return "?";
}

ReductionMode parse_reduction_mode(const std::string& text) {
  if (text == "boben") return ReductionMode::Boben;
  if (text == "martinetti") return ReductionMode::Martinetti;
  if (text == "general") return ReductionMode::General;
  throw Error("unknown reduction mode '" + text + "' (expected boben, martinetti or general)");
}

namespace {

using detail::Geometry;

// Occurrence of a point q on a removed line (Q side), or of a line m through
// a removed point (M side).
struct Occurrence {
  int element;
  int parent;
};

// Which points/lines are removed.
struct Removal {
  std::vector<char> in_r;
  std::vector<char> in_n;

  Removal(const Geometry& g, const std::vector<int>& points, const std::vector<int>& lines)
      : in_r(static_cast<std::size_t>(g.num_points()), 0),
        in_n(static_cast<std::size_t>(g.num_lines()), 0) {
    for (int p : points) in_r[static_cast<std::size_t>(p)] = 1;
    for (int l : lines) in_n[static_cast<std::size_t>(l)] = 1;
  }
  bool r(int p) const { return in_r[static_cast<std::size_t>(p)] != 0; }
  bool n(int l) const { return in_n[static_cast<std::size_t>(l)] != 0; }
};

std::vector<Occurrence> q_occurrences(const Geometry& g, const Removal& rm,
                                      const std::vector<int>& lines) {
  std::vector<Occurrence> out;
  for (int l : lines) {
    for (int q : g.structure().line(l)) {
      if (!rm.r(q)) out.push_back({q, l});
    }
  }
  return out;
}

std::vector<Occurrence> m_occurrences(const Geometry& g, const Removal& rm,
                                      const std::vector<int>& points) {
  std::vector<Occurrence> out;
  for (int p : points) {
    for (int m : g.structure().lines_through(p)) {
      if (!rm.n(m)) out.push_back({m, p});
    }
  }
  return out;
}

// q may replace a removed point on m iff q is not already on m and q is not
// collinear with any surviving point of m except through a removed line.
bool compatible(const Geometry& g, const Removal& rm, int q, int m) {
  if (g.on(q, m)) return false;
  for (int x : g.structure().line(m)) {
    if (rm.r(x)) continue;
    const int shared = g.line_of(q, x);
    if (shared >= 0 && !rm.n(shared)) return false;
  }
  return true;
}

// Necessary conditions between two matched pairs; each rejected case puts
// two points on two common lines, or an incidence twice, in the result.
bool pair_consistent(const Geometry& g, const Removal& rm, int q1, int m1, int q2, int m2) {
  if (q1 == q2) {
    if (m1 == m2) return false;
    for (int y : g.structure().line(m1)) {
      if (!rm.r(y) && g.on(y, m2)) return false;
    }
    return true;
  }
  if (m1 == m2) {
    const int shared = g.line_of(q1, q2);
    return shared < 0 || rm.n(shared);
  }
  return !(g.on(q1, m2) && g.on(q2, m1));
}

// Builds the reduced structure. Survivors keep their relative order.
IncidenceStructure rewire(const IncidenceStructure& s, const Removal& rm,
                          const std::vector<Rewire>& assignment) {
  std::vector<int> point_index(static_cast<std::size_t>(s.num_points()), -1);
  int next = 0;
  for (int p = 0; p < s.num_points(); ++p) {
    if (!rm.r(p)) point_index[static_cast<std::size_t>(p)] = next++;
  }
  std::vector<std::vector<int>> gained(static_cast<std::size_t>(s.num_lines()));
  for (const auto& rw : assignment) gained[static_cast<std::size_t>(rw.m)].push_back(rw.q);
  std::vector<std::vector<int>> lines;
  for (int j = 0; j < s.num_lines(); ++j) {
    if (rm.n(j)) continue;
    std::vector<int> line;
    for (int p : s.line(j)) {
      if (!rm.r(p)) line.push_back(point_index[static_cast<std::size_t>(p)]);
    }
    for (int q : gained[static_cast<std::size_t>(j)]) {
      line.push_back(point_index[static_cast<std::size_t>(q)]);
    }
    lines.push_back(std::move(line));
  }
  return IncidenceStructure(next, std::move(lines));
}

// The rewired structure if it is an (r, k)-configuration.
std::optional<IncidenceStructure> checked_result(const IncidenceStructure& s, const ConfigParams& params,
                                                 const Removal& rm,
                                                 const std::vector<Rewire>& assignment) {
  try {
    auto out = rewire(s, rm, assignment);
    auto p = validate(out);
    if (p.r != params.r || p.k != params.k) return std::nullopt;
    return out;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Kuhn's augmenting-path check that the compatibility graph has a perfect
// matching; a cheap filter before enumerating matchings.
bool has_perfect_matching(const std::vector<std::vector<int>>& adj, std::size_t right_size) {
  std::vector<int> match_right(right_size, -1);
  std::vector<char> seen;
  std::function<bool(int)> try_left = [&](int u) -> bool {
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      if (match_right[static_cast<std::size_t>(w)] < 0 ||
          try_left(match_right[static_cast<std::size_t>(w)])) {
        match_right[static_cast<std::size_t>(w)] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < adj.size(); ++u) {
    seen.assign(right_size, 0);
    if (!try_left(static_cast<int>(u))) return false;
  }
  return true;
}

// Enumerates valid matchings for a fixed (R, N). `emit` returns false to stop;
// the function returns false iff it was stopped.
class Matcher {
 public:
  Matcher(const Geometry& g, const ConfigParams& params, const std::vector<int>& points,
          const std::vector<int>& lines)
      : g_(g), params_(params), rm_(g, points, lines) {
    qs_ = q_occurrences(g, rm_, lines);
    ms_ = m_occurrences(g, rm_, points);
  }

  bool run(const std::function<bool(std::vector<Rewire>)>& emit) {
    if (qs_.size() != ms_.size()) return true;
    adj_.assign(qs_.size(), {});
    for (std::size_t i = 0; i < qs_.size(); ++i) {
      for (std::size_t j = 0; j < ms_.size(); ++j) {
        if (compatible(g_, rm_, qs_[i].element, ms_[j].element)) {
          adj_[i].push_back(static_cast<int>(j));
        }
      }
      if (adj_[i].empty()) return true;
    }
    if (!has_perfect_matching(adj_, ms_.size())) return true;
    used_.assign(ms_.size(), 0);
    chosen_.assign(qs_.size(), -1);
    emit_ = &emit;
    return dfs(0);
  }

 private:
  bool dfs(std::size_t i) {
    if (i == qs_.size()) {
      std::vector<Rewire> assignment;
      assignment.reserve(qs_.size());
      for (std::size_t a = 0; a < qs_.size(); ++a) {
        const auto& mo = ms_[static_cast<std::size_t>(chosen_[a])];
        assignment.push_back({qs_[a].element, qs_[a].parent, mo.element, mo.parent});
      }
      if (!checked_result(g_.structure(), params_, rm_, assignment)) return true;
      return (*emit_)(std::move(assignment));
    }
    const int q = qs_[i].element;
    for (int j : adj_[i]) {
      if (used_[static_cast<std::size_t>(j)]) continue;
      const int m = ms_[static_cast<std::size_t>(j)].element;
      bool ok = true;
      for (std::size_t a = 0; a < i && ok; ++a) {
        ok = pair_consistent(g_, rm_, qs_[a].element,
                             ms_[static_cast<std::size_t>(chosen_[a])].element, q, m);
      }
      if (!ok) continue;
      used_[static_cast<std::size_t>(j)] = 1;
      chosen_[i] = j;
      if (!dfs(i + 1)) return false;
      used_[static_cast<std::size_t>(j)] = 0;
    }
    chosen_[i] = -1;
    return true;
  }

  const Geometry& g_;
  const ConfigParams& params_;
  Removal rm_;
  std::vector<Occurrence> qs_;
  std::vector<Occurrence> ms_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> used_;
  std::vector<int> chosen_;
  const std::function<bool(std::vector<Rewire>)>* emit_ = nullptr;
};

ConfigParams require_balanced(const IncidenceStructure& s) {
  auto params = validate(s);
  if (!params.balanced()) {
    throw UnbalancedInput("balanced reduction needs r == k, got " + params.label());
  }
  return params;
}

// Exhaustive search over N for a fixed R. Lines are added to N either because
// some point on N needs them (every line through q meeting its partner m must
// be removed) or freely once every such demand is met. N's smallest line is
// fixed per call so each N is reached from exactly one root.
class GeneralSearch {
 public:
  GeneralSearch(const Geometry& g, const ConfigParams& params, std::vector<int> points)
      : g_(g), params_(params), points_(std::move(points)) {
    in_r_.assign(static_cast<std::size_t>(g.num_points()), 0);
    for (int p : points_) in_r_[static_cast<std::size_t>(p)] = 1;
    std::set<int> through;
    for (int p : points_) {
      for (int m : g.structure().lines_through(p)) through.insert(m);
    }
    candidates_.assign(through.begin(), through.end());
    lines_needed_ = static_cast<std::size_t>(params.lines_per_step());
  }

  // Returns false when `emit` asked to stop.
  bool run(const std::function<bool(GeneralReduction)>& emit) {
    emit_ = &emit;
    for (int first = 0; first < g_.num_lines(); ++first) {
      first_ = first;
      visited_.clear();
      if (!explore({first})) return false;
    }
    return true;
  }

 private:
  // Lines that must be removed for q to replace a removed point on m.
  void demands(int q, int m, std::vector<int>& out) const {
    out.clear();
    for (int x : g_.structure().line(m)) {
      if (in_r_[static_cast<std::size_t>(x)]) continue;
      const int shared = g_.line_of(q, x);
      if (shared >= 0) out.push_back(shared);
    }
  }

  bool explore(std::vector<int> lines) {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    if (lines.size() > lines_needed_) return true;
    if (!visited_.insert(lines).second) return true;

    std::vector<char> in_n(static_cast<std::size_t>(g_.num_lines()), 0);
    for (int l : lines) in_n[static_cast<std::size_t>(l)] = 1;

    std::vector<int> need;
    int unsatisfied = -1;
    for (int l : lines) {
      for (int q : g_.structure().line(l)) {
        if (in_r_[static_cast<std::size_t>(q)]) continue;
        bool satisfied = false;
        for (int m : candidates_) {
          if (in_n[static_cast<std::size_t>(m)] || g_.on(q, m)) continue;
          demands(q, m, need);
          if (std::all_of(need.begin(), need.end(),
                          [&](int x) { return in_n[static_cast<std::size_t>(x)] != 0; })) {
            satisfied = true;
            break;
          }
        }
        if (!satisfied) {
          unsatisfied = q;
          break;
        }
      }
      if (unsatisfied >= 0) break;
    }

    if (unsatisfied >= 0) {
      for (int m : candidates_) {
        if (in_n[static_cast<std::size_t>(m)] || g_.on(unsatisfied, m)) continue;
        demands(unsatisfied, m, need);
        if (std::any_of(need.begin(), need.end(), [&](int x) { return x < first_; })) continue;
        std::vector<int> grown = lines;
        grown.insert(grown.end(), need.begin(), need.end());
        if (!explore(std::move(grown))) return false;
      }
      return true;
    }

    if (lines.size() == lines_needed_) {
      Matcher matcher(g_, params_, points_, lines);
      return matcher.run([&](std::vector<Rewire> assignment) {
        return (*emit_)(GeneralReduction{points_, lines, std::move(assignment)});
      });
    }
    for (int l = first_ + 1; l < g_.num_lines(); ++l) {
      if (in_n[static_cast<std::size_t>(l)]) continue;
      std::vector<int> grown = lines;
      grown.push_back(l);
      if (!explore(std::move(grown))) return false;
    }
    return true;
  }

  const Geometry& g_;
  const ConfigParams& params_;
  std::vector<int> points_;
  std::vector<char> in_r_;
  std::vector<int> candidates_;
  std::size_t lines_needed_ = 0;
  int first_ = 0;
  std::set<std::vector<int>> visited_;
  const std::function<bool(GeneralReduction)>* emit_ = nullptr;
};

void check_sorted_unique(const std::vector<int>& xs, int bound, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0 || xs[i] >= bound) {
      throw InvalidWitness(std::string(what) + " " + std::to_string(xs[i]) + " out of range");
    }
    if (i > 0 && xs[i - 1] >= xs[i]) {
      throw InvalidWitness(std::string(what) + "s must be distinct and sorted");
    }
  }
}

}  // namespace

std::vector<BalancedReduction> find_reductions_balanced(const IncidenceStructure& s,
                                                        ReductionMode mode,
                                                        const SearchOptions& options) {
  if (mode == ReductionMode::General) {
    throw Error("find_reductions_balanced: mode must be boben or martinetti");
  }
  const auto params = require_balanced(s);
  const Geometry g(s);
  auto work = [&](std::size_t unit, std::vector<BalancedReduction>& out, std::size_t cap) {
    const int p = static_cast<int>(unit);
    std::vector<int> lines;
    if (mode == ReductionMode::Martinetti) {
      lines = s.lines_through(p);
    } else {
      lines.resize(static_cast<std::size_t>(s.num_lines()));
      std::iota(lines.begin(), lines.end(), 0);
    }
    for (int l : lines) {
      Matcher matcher(g, params, {p}, {l});
      bool more = matcher.run([&](std::vector<Rewire> assignment) {
        BalancedReduction red{p, l, {}};
        for (const auto& rw : assignment) red.assignment.emplace_back(rw.q, rw.m);
        out.push_back(std::move(red));
        return cap == 0 || out.size() < cap;
      });
      if (!more) return;
    }
  };
  return detail::run_units<BalancedReduction>(static_cast<std::size_t>(s.num_points()),
                                              options.limit, options.threads, work);
}

std::vector<GeneralReduction> find_reductions_general(const IncidenceStructure& s,
                                                      const SearchOptions& options) {
  const auto params = validate(s);
  const Geometry g(s);
  const auto point_sets = detail::combinations(s.num_points(), params.points_per_step());
  auto work = [&](std::size_t unit, std::vector<GeneralReduction>& out, std::size_t cap) {
    GeneralSearch search(g, params, point_sets[unit]);
    search.run([&](GeneralReduction red) {
      out.push_back(std::move(red));
      return cap == 0 || out.size() < cap;
    });
  };
  return detail::run_units<GeneralReduction>(point_sets.size(), options.limit, options.threads,
                                             work);
}

IncidenceStructure apply_reduction_general(const IncidenceStructure& s,
                                           const GeneralReduction& reduction) {
  ConfigParams params;
  try {
    params = validate(s);
  } catch (const ValidationError& e) {
    throw InvalidWitness(std::string("input is not a configuration: ") + e.what());
  }
  if (static_cast<int>(reduction.points.size()) != params.points_per_step() ||
      static_cast<int>(reduction.lines.size()) != params.lines_per_step()) {
    throw InvalidWitness("a reduction of a " + params.label() + " removes " +
                         std::to_string(params.points_per_step()) + " point(s) and " +
                         std::to_string(params.lines_per_step()) + " line(s)");
  }
  check_sorted_unique(reduction.points, s.num_points(), "point");
  check_sorted_unique(reduction.lines, s.num_lines(), "line");

  const Geometry g(s);
  const Removal rm(g, reduction.points, reduction.lines);
  auto qs = q_occurrences(g, rm, reduction.lines);
  auto ms = m_occurrences(g, rm, reduction.points);
  std::multiset<std::pair<int, int>> want_q;
  std::multiset<std::pair<int, int>> want_m;
  for (const auto& o : qs) want_q.emplace(o.element, o.parent);
  for (const auto& o : ms) want_m.emplace(o.element, o.parent);
  std::multiset<std::pair<int, int>> got_q;
  std::multiset<std::pair<int, int>> got_m;
  for (const auto& rw : reduction.assignment) {
    got_q.emplace(rw.q, rw.from_line);
    got_m.emplace(rw.m, rw.from_point);
  }
  if (got_q != want_q || got_m != want_m) {
    throw InvalidWitness("assignment is not a bijection between the points on the removed lines "
                         "and the lines through the removed points");
  }
  for (const auto& rw : reduction.assignment) {
    if (!compatible(g, rm, rw.q, rw.m)) {
      throw InvalidWitness("point " + std::to_string(rw.q) + " cannot move onto line " +
                           std::to_string(rw.m) +
                           ": it is collinear with a surviving point of that line");
    }
  }
  IncidenceStructure out;
  try {
    out = rewire(s, rm, reduction.assignment);
  } catch (const StructureError& e) {
    throw InvalidWitness(std::string("rewiring fails: ") + e.what());
  }
  ConfigParams result;
  try {
    result = validate(out);
  } catch (const ValidationError& e) {
    throw InvalidWitness(std::string("result is not a configuration: ") + e.what());
  }
  if (result.r != params.r || result.k != params.k || result.d != params.d - 1) {
    throw InvalidWitness("result has parameters " + result.label());
  }
  return out;
}

GeneralReduction to_general(const BalancedReduction& reduction) {
  GeneralReduction out;
  out.points = {reduction.point};
  out.lines = {reduction.line};
  for (auto [q, m] : reduction.assignment) {
    out.assignment.push_back({q, reduction.line, m, reduction.point});
  }
  return out;
}

IncidenceStructure apply_reduction_balanced(const IncidenceStructure& s,
                                            const BalancedReduction& reduction) {
  auto params = validate(s);
  if (!params.balanced()) throw UnbalancedInput("balanced reduction needs r == k");
  if (reduction.point < 0 || reduction.point >= s.num_points() || reduction.line < 0 ||
      reduction.line >= s.num_lines()) {
    throw InvalidWitness("point or line out of range");
  }
  return apply_reduction_general(s, to_general(reduction));
}

bool is_irreducible(const IncidenceStructure& s, ReductionMode mode, unsigned threads) {
  SearchOptions options;
  options.limit = 1;
  options.threads = threads;
  if (mode == ReductionMode::General) return find_reductions_general(s, options).empty();
  return find_reductions_balanced(s, mode, options).empty();
}

}  // namespace confred
