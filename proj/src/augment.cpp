#include "confred/augment.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "confred/core.hpp"
#include "search_util.hpp"

namespace confred {

namespace {

using detail::Geometry;

// Common point of two lines, -1 when parallel.
class Meets {
 public:
  explicit Meets(const IncidenceStructure& s)
      : b_(s.num_lines()), meet_(static_cast<std::size_t>(b_) * static_cast<std::size_t>(b_), -1) {
    for (int p = 0; p < s.num_points(); ++p) {
      const auto through = s.lines_through(p);
      for (int m : through) {
        for (int n : through) {
          if (m != n) meet_[idx(m, n)] = p;
        }
      }
    }
  }
  int operator()(int m, int n) const { return meet_[idx(m, n)]; }

 private:
  std::size_t idx(int m, int n) const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(b_) + static_cast<std::size_t>(n);
  }
  int b_;
  std::vector<int> meet_;
};

// The two conditions between matched pairs (q1, m1), (q2, m2) of a balanced
// witness.
bool pair_ok(const Geometry& g, const Meets& meets, int q1, int m1, int q2, int m2) {
  if (q1 == q2 || m1 == m2) return false;
  const int line = g.line_of(q1, q2);
  if (line >= 0 && line != m1 && line != m2) return false;
  const int point = meets(m1, m2);
  return point < 0 || point == q1 || point == q2;
}

ConfigParams require_balanced_input(const IncidenceStructure& s) {
  auto params = validate(s);
  if (!params.balanced()) {
    throw UnbalancedInput("balanced augmentation needs r == k, got " + params.label());
  }
  return params;
}

IncidenceStructure build_balanced(const IncidenceStructure& s, const BalancedAugmentation& aug) {
  const int p = s.num_points();
  auto lines = s.lines();
  std::vector<int> fresh;
  for (std::size_t i = 0; i < aug.points.size(); ++i) {
    if (aug.post_swap && *aug.post_swap == i) {
      fresh.push_back(p);
      continue;
    }
    auto& line = lines[static_cast<std::size_t>(aug.lines[i])];
    std::replace(line.begin(), line.end(), aug.points[i], p);
    fresh.push_back(aug.points[i]);
  }
  lines.push_back(std::move(fresh));
  return IncidenceStructure(p + 1, std::move(lines));
}

bool applies(const IncidenceStructure& s, const ConfigParams& params, const BalancedAugmentation& aug) {
  try {
    auto p = validate(build_balanced(s, aug));
    return p.r == params.r && p.k == params.k;
  } catch (const Error&) {
    return false;
  }
}

// Depth-first search over incidence subsets in (line, point) order whose
// pairs all satisfy pair_ok. `first` fixes the smallest chosen index.
class SubsetSearch {
 public:
  SubsetSearch(const Geometry& g, const Meets& meets, const std::vector<Incidence>& incidences)
      : g_(g), meets_(meets), inc_(incidences) {}

  // Returns false when `visit` asked to stop.
  bool run(std::size_t first, std::size_t size, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    chosen_.assign(1, first);
    size_ = size;
    visit_ = &visit;
    return extend(first + 1);
  }

 private:
  bool extend(std::size_t from) {
    if (chosen_.size() == size_) return (*visit_)(chosen_);
    for (std::size_t x = from; x < inc_.size(); ++x) {
      if (!fits(x)) continue;
      chosen_.push_back(x);
      const bool more = extend(x + 1);
      chosen_.pop_back();
      if (!more) return false;
    }
    return true;
  }

  bool fits(std::size_t x) const {
    for (std::size_t y : chosen_) {
      if (!pair_ok(g_, meets_, inc_[x].point, inc_[x].line, inc_[y].point, inc_[y].line)) return false;
    }
    return true;
  }

  const Geometry& g_;
  const Meets& meets_;
  const std::vector<Incidence>& inc_;
  std::vector<std::size_t> chosen_;
  std::size_t size_ = 0;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
};

// Adds an untouched placeholder pair to a (k-1)-subset. Prefers one that
// satisfies the pair conditions with the rest; the result does not depend on
// the choice.
std::optional<BalancedAugmentation> with_placeholder(const Geometry& g, const Meets& meets,
                                                     const std::vector<Incidence>& inc,
                                                     const std::vector<std::size_t>& chosen) {
  std::optional<std::size_t> fallback;
  std::optional<std::size_t> pick;
  for (std::size_t x = 0; x < inc.size() && !pick; ++x) {
    bool distinct = true;
    bool good = true;
    for (std::size_t y : chosen) {
      if (inc[x].point == inc[y].point || inc[x].line == inc[y].line) {
        distinct = false;
        break;
      }
      if (!pair_ok(g, meets, inc[x].point, inc[x].line, inc[y].point, inc[y].line)) good = false;
    }
    if (!distinct) continue;
    if (good) pick = x;
    if (!fallback) fallback = x;
  }
  if (!pick) pick = fallback;
  if (!pick) return std::nullopt;
  std::vector<std::size_t> all = chosen;
  all.push_back(*pick);
  std::sort(all.begin(), all.end());
  BalancedAugmentation aug;
  for (std::size_t i = 0; i < all.size(); ++i) {
    aug.points.push_back(inc[all[i]].point);
    aug.lines.push_back(inc[all[i]].line);
    if (all[i] == *pick) aug.post_swap = i;
  }
  return aug;
}

}  // namespace

std::vector<BalancedAugmentation> find_augmentations_balanced(const IncidenceStructure& s,
                                                              const SearchOptions& options) {
  const auto params = require_balanced_input(s);
  const Geometry g(s);
  const Meets meets(s);
  const auto inc = s.incidences();
  const std::size_t n = inc.size();
  const auto k = static_cast<std::size_t>(params.k);
  // Units 0..n-1: plain witnesses by smallest index; n..2n-1: post-swapped.
  auto work = [&](std::size_t unit, std::vector<BalancedAugmentation>& out, std::size_t cap) {
    const bool swapped = unit >= n;
    const std::size_t first = swapped ? unit - n : unit;
    SubsetSearch search(g, meets, inc);
    search.run(first, swapped ? k - 1 : k, [&](const std::vector<std::size_t>& chosen) {
      std::optional<BalancedAugmentation> aug;
      if (swapped) {
        aug = with_placeholder(g, meets, inc, chosen);
      } else {
        aug = BalancedAugmentation{};
        for (std::size_t x : chosen) {
          aug->points.push_back(inc[x].point);
          aug->lines.push_back(inc[x].line);
        }
      }
      if (aug && applies(s, params, *aug)) out.push_back(std::move(*aug));
      return cap == 0 || out.size() < cap;
    });
  };
  return detail::run_units<BalancedAugmentation>(2 * n, options.limit, options.threads, work);
}

IncidenceStructure apply_augmentation_balanced(const IncidenceStructure& s,
                                               const BalancedAugmentation& aug) {
  ConfigParams params;
  try {
    params = require_balanced_input(s);
  } catch (const ValidationError& e) {
    throw InvalidWitness(std::string("input is not a configuration: ") + e.what());
  }
  const auto k = static_cast<std::size_t>(params.k);
  if (aug.points.size() != k || aug.lines.size() != k) {
    throw InvalidWitness("a balanced augmentation of a " + params.label() + " needs " +
                         std::to_string(k) + " matched pairs");
  }
  if (aug.post_swap && *aug.post_swap >= k) throw InvalidWitness("post_swap index out of range");
  for (std::size_t i = 0; i < k; ++i) {
    const int q = aug.points[i];
    const int m = aug.lines[i];
    if (q < 0 || q >= s.num_points() || m < 0 || m >= s.num_lines()) {
      throw InvalidWitness("pair " + std::to_string(i) + " out of range");
    }
    if (!s.incident(q, m)) {
      throw InvalidWitness("point " + std::to_string(q) + " is not on line " + std::to_string(m));
    }
  }
  const Geometry g(s);
  const Meets meets(s);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (aug.points[i] == aug.points[j] || aug.lines[i] == aug.lines[j]) {
        throw InvalidWitness("matched pairs " + std::to_string(i) + " and " + std::to_string(j) +
                             " repeat a point or a line");
      }
      if (aug.post_swap && (*aug.post_swap == i || *aug.post_swap == j)) continue;
      if (!pair_ok(g, meets, aug.points[i], aug.lines[i], aug.points[j], aug.lines[j])) {
        throw InvalidWitness("matched pairs " + std::to_string(i) + " and " + std::to_string(j) +
                             " violate the pair condition");
      }
    }
  }
  IncidenceStructure out = build_balanced(s, aug);
  ConfigParams result;
  try {
    result = validate(out);
  } catch (const ValidationError& e) {
    throw InvalidWitness(std::string("result is not a configuration: ") + e.what());
  }
  if (result.r != params.r || result.k != params.k) {
    throw InvalidWitness("result has parameters " + result.label());
  }
  return out;
}

std::vector<BalancedAugmentation> martinetti_augment(const IncidenceStructure& s,
                                                     const SearchOptions& options) {
  const auto params = require_balanced_input(s);
  if (params.k != 3) {
    throw Error("martinetti_augment needs a v_3 configuration, got " + params.label());
  }
  const Geometry g(s);
  const Meets meets(s);
  const auto inc = s.incidences();
  const int b = s.num_lines();
  auto work = [&](std::size_t unit, std::vector<BalancedAugmentation>& out, std::size_t cap) {
    const int l1 = static_cast<int>(unit);
    for (int l2 = l1 + 1; l2 < b; ++l2) {
      if (meets(l1, l2) >= 0) continue;
      for (int a1 : s.line(l1)) {
        for (int a2 : s.line(l2)) {
          if (g.line_of(a1, a2) >= 0) continue;
          // Placeholder: a third pair distinct from both, preferably one that
          // satisfies the pair conditions.
          std::optional<Incidence> pick;
          std::optional<Incidence> fallback;
          for (const auto& x : inc) {
            if (x.point == a1 || x.point == a2 || x.line == l1 || x.line == l2) continue;
            if (!fallback) fallback = x;
            if (pair_ok(g, meets, x.point, x.line, a1, l1) && pair_ok(g, meets, x.point, x.line, a2, l2)) {
              pick = x;
              break;
            }
          }
          if (!pick) pick = fallback;
          if (!pick) continue;
          BalancedAugmentation aug{{a1, a2, pick->point}, {l1, l2, pick->line}, std::size_t{2}};
          if (!applies(s, params, aug)) continue;
          out.push_back(std::move(aug));
          if (cap && out.size() >= cap) return;
        }
      }
    }
  };
  return detail::run_units<BalancedAugmentation>(static_cast<std::size_t>(b), options.limit,
                                                 options.threads, work);
}

BalancedReduction inverse_reduction(const IncidenceStructure& s, const BalancedAugmentation& aug) {
  BalancedReduction red;
  red.point = s.num_points();
  red.line = s.num_lines();
  for (std::size_t i = 0; i < aug.points.size(); ++i) {
    if (aug.post_swap && *aug.post_swap == i) continue;
    red.assignment.emplace_back(aug.points[i], aug.lines[i]);
  }
  return red;
}

std::vector<Incidence> created_incidences(const IncidenceStructure& s, const BalancedAugmentation& aug) {
  const int p = s.num_points();
  const int l = s.num_lines();
  std::vector<Incidence> out;
  for (std::size_t i = 0; i < aug.points.size(); ++i) {
    if (aug.post_swap && *aug.post_swap == i) {
      out.push_back({p, l});
    } else {
      out.push_back({p, aug.lines[i]});
      out.push_back({aug.points[i], l});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct PartIndex {
  std::vector<int> line_part;
  std::vector<int> point_part;
};

ConfigParams params_for_witness(const IncidenceStructure& s) {
  try {
    return validate(s);
  } catch (const ValidationError& e) {
    throw InvalidWitness(std::string("input is not a configuration: ") + e.what());
  }
}

std::vector<int> partition_owner(const std::vector<std::vector<std::size_t>>& parts, std::size_t total,
                                 std::size_t count, std::size_t size, const char* what) {
  if (parts.size() != count) {
    throw InvalidWitness("expected " + std::to_string(count) + " " + what + "s, got " +
                         std::to_string(parts.size()));
  }
  std::vector<int> owner(total, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != size) {
      throw InvalidWitness(std::string(what) + " " + std::to_string(i) + " must have " +
                           std::to_string(size) + " members");
    }
    for (std::size_t x : parts[i]) {
      if (x >= total) throw InvalidWitness(std::string(what) + " index out of range");
      if (owner[x] >= 0) {
        throw InvalidWitness("incidence " + std::to_string(x) + " is in two " + what + "s");
      }
      owner[x] = static_cast<int>(i);
    }
  }
  return owner;
}

// Checks the shape of the witness and returns which part each incidence of
// F belongs to.
PartIndex check_shape(const IncidenceStructure& s, const ConfigParams& params,
                      const GeneralAugmentation& aug) {
  const auto total = static_cast<std::size_t>(params.r) * static_cast<std::size_t>(params.k) /
                     static_cast<std::size_t>(params.gcd_rk());
  if (aug.incidences.size() != total) {
    throw InvalidWitness("F must have " + std::to_string(total) + " incidences, got " +
                         std::to_string(aug.incidences.size()));
  }
  std::set<Incidence> seen;
  for (const auto& x : aug.incidences) {
    if (x.point < 0 || x.point >= s.num_points() || x.line < 0 || x.line >= s.num_lines()) {
      throw InvalidWitness("incidence out of range");
    }
    if (!s.incident(x.point, x.line)) {
      throw InvalidWitness("point " + std::to_string(x.point) + " is not on line " +
                           std::to_string(x.line));
    }
    if (!seen.insert(x).second) throw InvalidWitness("F repeats an incidence");
  }
  PartIndex idx;
  idx.line_part = partition_owner(aug.line_parts, total, static_cast<std::size_t>(params.lines_per_step()),
                                  static_cast<std::size_t>(params.k), "line part");
  idx.point_part = partition_owner(aug.point_parts, total,
                                   static_cast<std::size_t>(params.points_per_step()),
                                   static_cast<std::size_t>(params.r), "point part");
  return idx;
}

IncidenceStructure build_general(const IncidenceStructure& s, const GeneralAugmentation& aug,
                                 const PartIndex& idx) {
  const int v = s.num_points();
  auto lines = s.lines();
  std::vector<std::vector<int>> fresh(aug.line_parts.size());
  for (std::size_t x = 0; x < aug.incidences.size(); ++x) {
    const auto [q, m] = aug.incidences[x];
    auto& line = lines[static_cast<std::size_t>(m)];
    std::replace(line.begin(), line.end(), q, v + idx.point_part[x]);
    fresh[static_cast<std::size_t>(idx.line_part[x])].push_back(q);
  }
  for (auto& line : fresh) lines.push_back(std::move(line));
  return IncidenceStructure(v + static_cast<int>(aug.point_parts.size()), std::move(lines));
}

// Search state for general augmentations. Incidences are decided in
// (line, point) order: skipped, or put into F with a line part and a point
// part. Part labels are handed out in order of first use, so every witness is
// reached once. The pair and dual conditions become obligations on later
// incidences and are checked as soon as they can no longer be met.
class GeneralAugmentSearch {
 public:
  GeneralAugmentSearch(const IncidenceStructure& s, const ConfigParams& params, const Geometry& g,
                       const Meets& meets)
      : s_(s),
        g_(g),
        meets_(meets),
        inc_(s.incidences()),
        k_(params.k),
        r_(params.r),
        num_line_parts_(params.lines_per_step()),
        num_point_parts_(params.points_per_step()),
        total_(static_cast<std::size_t>(params.lines_per_step() * params.k)),
        line_part_of_(inc_.size(), -1),
        point_part_of_(inc_.size(), -1),
        line_members_(static_cast<std::size_t>(num_line_parts_)),
        point_members_(static_cast<std::size_t>(num_point_parts_)),
        point_pairs_(static_cast<std::size_t>(s.num_points()) * static_cast<std::size_t>(s.num_points()), 0),
        line_pairs_(static_cast<std::size_t>(s.num_lines()) * static_cast<std::size_t>(s.num_lines()), 0),
        index_of_(static_cast<std::size_t>(s.num_points()) * static_cast<std::size_t>(s.num_lines()), -1) {
    for (std::size_t x = 0; x < inc_.size(); ++x) {
      index_of_[flat(inc_[x].point, inc_[x].line)] = static_cast<int>(x);
    }
  }

  // Every witness whose smallest incidence is `first`.
  bool run(std::size_t first, const std::function<bool(GeneralAugmentation)>& emit) {
    emit_ = &emit;
    if (inc_.size() - first < total_) return true;
    put(first, 0, 0);
    const bool more = !feasible(first + 1) || decide(first + 1);
    take_back(first);
    return more;
  }

 private:
  std::size_t flat(int p, int l) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(s_.num_lines()) + static_cast<std::size_t>(l);
  }
  std::size_t pp(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(s_.num_points()) + static_cast<std::size_t>(b);
  }
  std::size_t ll(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(s_.num_lines()) + static_cast<std::size_t>(b);
  }
  int index(int p, int l) const { return index_of_[flat(p, l)]; }
  bool in_f(int p, int l) const {
    const int x = index(p, l);
    return x >= 0 && line_part_of_[static_cast<std::size_t>(x)] >= 0;
  }

  bool fits(std::size_t x, int j, int i) const {
    const int q = inc_[x].point;
    const int m = inc_[x].line;
    const auto& lm = line_members_[static_cast<std::size_t>(j)];
    if (static_cast<int>(lm.size()) >= k_) return false;
    for (std::size_t y : lm) {
      const int q2 = inc_[y].point;
      if (q2 == q || point_pairs_[pp(q, q2)]) return false;
    }
    const auto& pm = point_members_[static_cast<std::size_t>(i)];
    if (static_cast<int>(pm.size()) >= r_) return false;
    for (std::size_t y : pm) {
      const int m2 = inc_[y].line;
      if (m2 == m || line_pairs_[ll(m, m2)]) return false;
    }
    return true;
  }

  void put(std::size_t x, int j, int i) {
    const int q = inc_[x].point;
    const int m = inc_[x].line;
    for (std::size_t y : line_members_[static_cast<std::size_t>(j)]) {
      point_pairs_[pp(q, inc_[y].point)] = 1;
      point_pairs_[pp(inc_[y].point, q)] = 1;
    }
    for (std::size_t y : point_members_[static_cast<std::size_t>(i)]) {
      line_pairs_[ll(m, inc_[y].line)] = 1;
      line_pairs_[ll(inc_[y].line, m)] = 1;
    }
    line_members_[static_cast<std::size_t>(j)].push_back(x);
    point_members_[static_cast<std::size_t>(i)].push_back(x);
    line_part_of_[x] = j;
    point_part_of_[x] = i;
    f_.push_back(x);
  }

  void take_back(std::size_t x) {
    const auto j = static_cast<std::size_t>(line_part_of_[x]);
    const auto i = static_cast<std::size_t>(point_part_of_[x]);
    line_members_[j].pop_back();
    point_members_[i].pop_back();
    const int q = inc_[x].point;
    const int m = inc_[x].line;
    for (std::size_t y : line_members_[j]) {
      point_pairs_[pp(q, inc_[y].point)] = 0;
      point_pairs_[pp(inc_[y].point, q)] = 0;
    }
    for (std::size_t y : point_members_[i]) {
      line_pairs_[ll(m, inc_[y].line)] = 0;
      line_pairs_[ll(inc_[y].line, m)] = 0;
    }
    line_part_of_[x] = -1;
    point_part_of_[x] = -1;
    f_.pop_back();
  }

  // Whether the open obligations can still be met using incidences from
  // `next` on, and enough incidences remain to fill F.
  bool feasible(std::size_t next) {
    const std::size_t missing = total_ - f_.size();
    if (inc_.size() - next < missing) return false;
    auto open = [&](int p, int l) {
      const int x = index(p, l);
      return x >= 0 && static_cast<std::size_t>(x) >= next;
    };
    pending_lines_.clear();
    pending_points_.clear();
    for (const auto& part : line_members_) {
      for (std::size_t a = 0; a < part.size(); ++a) {
        for (std::size_t c = a + 1; c < part.size(); ++c) {
          const int q1 = inc_[part[a]].point;
          const int q2 = inc_[part[c]].point;
          const int line = g_.line_of(q1, q2);
          if (line < 0 || in_f(q1, line) || in_f(q2, line)) continue;
          if (!open(q1, line) && !open(q2, line)) return false;
          pending_lines_.push_back(line);
        }
      }
    }
    for (const auto& part : point_members_) {
      for (std::size_t a = 0; a < part.size(); ++a) {
        for (std::size_t c = a + 1; c < part.size(); ++c) {
          const int m1 = inc_[part[a]].line;
          const int m2 = inc_[part[c]].line;
          const int y = meets_(m1, m2);
          if (y < 0 || in_f(y, m1) || in_f(y, m2)) continue;
          if (!open(y, m1) && !open(y, m2)) return false;
          pending_points_.push_back(y);
        }
      }
    }
    // One incidence serves obligations on a single line and a single point.
    auto distinct = [](std::vector<int>& xs) {
      std::sort(xs.begin(), xs.end());
      return static_cast<std::size_t>(std::unique(xs.begin(), xs.end()) - xs.begin());
    };
    return distinct(pending_lines_) <= missing && distinct(pending_points_) <= missing;
  }

  bool decide(std::size_t x) {
    if (f_.size() == total_) return emit();
    if (x >= inc_.size()) return true;
    int line_parts_used = 0;
    while (line_parts_used < num_line_parts_ && !line_members_[static_cast<std::size_t>(line_parts_used)].empty()) {
      ++line_parts_used;
    }
    int point_parts_used = 0;
    while (point_parts_used < num_point_parts_ &&
           !point_members_[static_cast<std::size_t>(point_parts_used)].empty()) {
      ++point_parts_used;
    }
    const int j_end = std::min(line_parts_used + 1, num_line_parts_);
    const int i_end = std::min(point_parts_used + 1, num_point_parts_);
    for (int j = 0; j < j_end; ++j) {
      for (int i = 0; i < i_end; ++i) {
        if (!fits(x, j, i)) continue;
        put(x, j, i);
        const bool more = !feasible(x + 1) || decide(x + 1);
        take_back(x);
        if (!more) return false;
      }
    }
    return !feasible(x + 1) || decide(x + 1);
  }

  bool emit() {
    GeneralAugmentation aug;
    std::vector<std::size_t> position(inc_.size());
    for (std::size_t n = 0; n < f_.size(); ++n) {
      position[f_[n]] = n;
      aug.incidences.push_back(inc_[f_[n]]);
    }
    for (const auto& part : line_members_) {
      std::vector<std::size_t> mapped;
      for (std::size_t x : part) mapped.push_back(position[x]);
      aug.line_parts.push_back(std::move(mapped));
    }
    for (const auto& part : point_members_) {
      std::vector<std::size_t> mapped;
      for (std::size_t x : part) mapped.push_back(position[x]);
      aug.point_parts.push_back(std::move(mapped));
    }
    try {
      apply_augmentation_general(s_, aug);
    } catch (const InvalidWitness&) {
      return true;
    }
    return (*emit_)(std::move(aug));
  }

  const IncidenceStructure& s_;
  const Geometry& g_;
  const Meets& meets_;
  std::vector<Incidence> inc_;
  int k_;
  int r_;
  int num_line_parts_;
  int num_point_parts_;
  std::size_t total_;
  std::vector<int> line_part_of_;
  std::vector<int> point_part_of_;
  std::vector<std::vector<std::size_t>> line_members_;
  std::vector<std::vector<std::size_t>> point_members_;
  std::vector<char> point_pairs_;
  std::vector<char> line_pairs_;
  std::vector<int> index_of_;
  std::vector<std::size_t> f_;
  std::vector<int> pending_lines_;
  std::vector<int> pending_points_;
  const std::function<bool(GeneralAugmentation)>* emit_ = nullptr;
};
}  // namespace

std::vector<GeneralAugmentation> find_augmentations_general(const IncidenceStructure& s,
                                                            const SearchOptions& options) {
  const auto params = validate(s);
  const Geometry g(s);
  const Meets meets(s);
  const auto units = s.incidences().size();
  auto work = [&](std::size_t unit, std::vector<GeneralAugmentation>& out, std::size_t cap) {
    GeneralAugmentSearch search(s, params, g, meets);
    search.run(unit, [&](GeneralAugmentation aug) {
      out.push_back(std::move(aug));
      return cap == 0 || out.size() < cap;
    });
  };
  return detail::run_units<GeneralAugmentation>(units, options.limit, options.threads, work);
}

IncidenceStructure rewire_augmentation_general(const IncidenceStructure& s,
                                               const GeneralAugmentation& aug) {
  const auto params = params_for_witness(s);
  const auto idx = check_shape(s, params, aug);
  try {
    return build_general(s, aug, idx);
  } catch (const StructureError& e) {
    throw InvalidWitness(std::string("rewiring fails: ") + e.what());
  }
}

IncidenceStructure apply_augmentation_general(const IncidenceStructure& s,
                                              const GeneralAugmentation& aug) {
  const auto params = params_for_witness(s);
  const auto idx = check_shape(s, params, aug);
  const Geometry g(s);
  const Meets meets(s);
  std::set<Incidence> f(aug.incidences.begin(), aug.incidences.end());
  auto in_f = [&](int p, int l) { return f.count({p, l}) > 0; };
  for (std::size_t j = 0; j < aug.line_parts.size(); ++j) {
    const auto& part = aug.line_parts[j];
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t c = a + 1; c < part.size(); ++c) {
        const int q1 = aug.incidences[part[a]].point;
        const int q2 = aug.incidences[part[c]].point;
        if (q1 == q2) {
          throw InvalidWitness("line part " + std::to_string(j) + " repeats point " + std::to_string(q1));
        }
        const int line = g.line_of(q1, q2);
        if (line >= 0 && !in_f(q1, line) && !in_f(q2, line)) {
          throw InvalidWitness("points " + std::to_string(q1) + " and " + std::to_string(q2) +
                               " of line part " + std::to_string(j) + " stay collinear on line " +
                               std::to_string(line));
        }
      }
    }
  }
  for (std::size_t i = 0; i < aug.point_parts.size(); ++i) {
    const auto& part = aug.point_parts[i];
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t c = a + 1; c < part.size(); ++c) {
        const int m1 = aug.incidences[part[a]].line;
        const int m2 = aug.incidences[part[c]].line;
        if (m1 == m2) {
          throw InvalidWitness("point part " + std::to_string(i) + " repeats line " + std::to_string(m1));
        }
        const int y = meets(m1, m2);
        if (y >= 0 && !in_f(y, m1) && !in_f(y, m2)) {
          throw InvalidWitness("lines " + std::to_string(m1) + " and " + std::to_string(m2) +
                               " of point part " + std::to_string(i) + " keep their common point " +
                               std::to_string(y));
        }
      }
    }
  }
  IncidenceStructure out;
  try {
    out = build_general(s, aug, idx);
  } catch (const StructureError& e) {
    throw InvalidWitness(std::string("rewiring fails: ") + e.what());
  }
  ConfigParams result;
  try {
    result = validate(out);
  } catch (const ValidationError& e) {
    throw InvalidWitness(std::string("result is not a configuration: ") + e.what());
  }
  if (result.r != params.r || result.k != params.k || result.d != params.d + 1) {
    throw InvalidWitness("result has parameters " + result.label());
  }
  return out;
}

GeneralReduction inverse_reduction(const IncidenceStructure& s, const GeneralAugmentation& aug) {
  const int v = s.num_points();
  const int b = s.num_lines();
  std::vector<int> line_part(aug.incidences.size(), -1);
  std::vector<int> point_part(aug.incidences.size(), -1);
  for (std::size_t j = 0; j < aug.line_parts.size(); ++j) {
    for (std::size_t x : aug.line_parts[j]) line_part.at(x) = static_cast<int>(j);
  }
  for (std::size_t i = 0; i < aug.point_parts.size(); ++i) {
    for (std::size_t x : aug.point_parts[i]) point_part.at(x) = static_cast<int>(i);
  }
  GeneralReduction red;
  for (std::size_t i = 0; i < aug.point_parts.size(); ++i) red.points.push_back(v + static_cast<int>(i));
  for (std::size_t j = 0; j < aug.line_parts.size(); ++j) red.lines.push_back(b + static_cast<int>(j));
  for (std::size_t x = 0; x < aug.incidences.size(); ++x) {
    const auto [q, m] = aug.incidences[x];
    red.assignment.push_back({q, b + line_part[x], m, v + point_part[x]});
  }
  std::sort(red.assignment.begin(), red.assignment.end());
  return red;
}

GeneralAugmentation to_general(const BalancedAugmentation& aug) {
  if (aug.post_swap) throw Error("a post-swapped balanced witness has no general form");
  GeneralAugmentation out;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < aug.points.size(); ++i) {
    out.incidences.push_back({aug.points[i], aug.lines[i]});
    all.push_back(i);
  }
  out.line_parts = {all};
  out.point_parts = {all};
  return out;
}

std::vector<Incidence> created_incidences(const IncidenceStructure& s, const GeneralAugmentation& aug) {
  const auto red = inverse_reduction(s, aug);
  std::vector<Incidence> out;
  for (const auto& rw : red.assignment) {
    out.push_back({rw.from_point, rw.m});
    out.push_back({rw.q, rw.from_line});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace confred
