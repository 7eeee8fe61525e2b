#include "confred/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "confred/core.hpp"

namespace confred {

std::string CanonicalForm::hex_digest() const {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes_) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

// Ordered partition of the Levi vertices. `order` lists vertices cell by cell;
// `cell[v]` is the position where v's cell starts, which doubles as a
// label-independent cell name.
struct Partition {
  std::vector<int> order;
  std::vector<int> cell;
};

class Labeler {
 public:
  explicit Labeler(const IncidenceStructure& s) : s_(s), graph_(levi_graph(s)) {}

  CanonicalLabeling run() {
    Partition root;
    const int n = graph_.num_vertices();
    root.order.resize(static_cast<std::size_t>(n));
    std::iota(root.order.begin(), root.order.end(), 0);
    root.cell.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      root.cell[static_cast<std::size_t>(u)] = graph_.is_point(u) ? 0 : graph_.num_points;
    }
    search(std::move(root));

    CanonicalLabeling out;
    std::string bytes;
    auto put = [&bytes](int x) {
      bytes.push_back(static_cast<char>(x & 0xff));
      bytes.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    put(s_.num_points());
    put(s_.num_lines());
    for (const auto& line : best_lines_) {
      put(static_cast<int>(line.size()));
      for (int p : line) put(p);
    }
    out.form = CanonicalForm(std::move(bytes));
    out.point_map = best_point_map_;
    out.line_map = best_line_map_;
    return out;
  }

 private:
  void refine(Partition& part) const {
    const int n = graph_.num_vertices();
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    while (true) {
      for (int u = 0; u < n; ++u) {
        auto& sig = signature[static_cast<std::size_t>(u)];
        sig.clear();
        for (int w : graph_.adjacency[static_cast<std::size_t>(u)]) {
          sig.push_back(part.cell[static_cast<std::size_t>(w)]);
        }
        std::sort(sig.begin(), sig.end());
      }
      auto key_less = [&](int a, int b) {
        const int ca = part.cell[static_cast<std::size_t>(a)];
        const int cb = part.cell[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb;
        return signature[static_cast<std::size_t>(a)] < signature[static_cast<std::size_t>(b)];
      };
      std::stable_sort(part.order.begin(), part.order.end(), key_less);
      bool split = false;
      std::vector<int> new_cell(static_cast<std::size_t>(n));
      int start = 0;
      for (int i = 0; i < n; ++i) {
        const int u = part.order[static_cast<std::size_t>(i)];
        if (i > 0) {
          const int prev = part.order[static_cast<std::size_t>(i - 1)];
          if (key_less(prev, u)) {
            if (part.cell[static_cast<std::size_t>(prev)] == part.cell[static_cast<std::size_t>(u)]) {
              split = true;
            }
            start = i;
          }
        }
        new_cell[static_cast<std::size_t>(u)] = start;
      }
      part.cell = std::move(new_cell);
      if (!split) return;
    }
  }

  void search(Partition part) {
    refine(part);
    const int n = graph_.num_vertices();
    // Target cell: first non-singleton cell.
    int target = -1;
    int target_end = -1;
    for (int i = 0; i < n;) {
      const int c = part.cell[static_cast<std::size_t>(part.order[static_cast<std::size_t>(i)])];
      int j = i + 1;
      while (j < n && part.cell[static_cast<std::size_t>(part.order[static_cast<std::size_t>(j)])] == c) ++j;
      if (j - i > 1) {
        target = i;
        target_end = j;
        break;
      }
      i = j;
    }
    if (target < 0) {
      leaf(part);
      return;
    }
    const std::vector<int> members(part.order.begin() + target, part.order.begin() + target_end);
    std::vector<int> tried;
    for (int u : members) {
      if (!tried.empty() && same_orbit_as_tried(u, tried)) continue;
      tried.push_back(u);
      Partition child = part;
      auto it = std::find(child.order.begin() + target, child.order.begin() + target_end, u);
      std::rotate(child.order.begin() + target, it, it + 1);
      for (int i = target + 1; i < target_end; ++i) {
        child.cell[static_cast<std::size_t>(child.order[static_cast<std::size_t>(i)])] = target + 1;
      }
      path_.push_back(u);
      search(std::move(child));
      path_.pop_back();
    }
  }

  // True when some known automorphism fixing the current path maps an
  // explored sibling to u; its subtree then only repeats known leaves.
  bool same_orbit_as_tried(int u, const std::vector<int>& tried) const {
    const int n = graph_.num_vertices();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int x : path_) fixes = fixes && gamma[static_cast<std::size_t>(x)] == x;
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n; ++x) {
        const int a = find(x);
        const int b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    if (!any) return false;
    const int root = find(u);
    for (int w : tried) {
      if (find(w) == root) return true;
    }
    return false;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    if (automorphisms_.size() >= kMaxAutomorphisms) return;
    std::vector<int> gamma(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) gamma[static_cast<std::size_t>(from[i])] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  void leaf(const Partition& part) {
    const int v = s_.num_points();
    const int n = graph_.num_vertices();
    std::vector<int> point_map(static_cast<std::size_t>(v));
    std::vector<int> line_map(static_cast<std::size_t>(s_.num_lines()));
    for (int i = 0; i < n; ++i) {
      const int u = part.order[static_cast<std::size_t>(i)];
      if (graph_.is_point(u)) {
        point_map[static_cast<std::size_t>(u)] = i;
      } else {
        line_map[static_cast<std::size_t>(u - v)] = i - v;
      }
    }
    std::vector<std::vector<int>> lines(static_cast<std::size_t>(s_.num_lines()));
    for (int j = 0; j < s_.num_lines(); ++j) {
      auto& target = lines[static_cast<std::size_t>(line_map[static_cast<std::size_t>(j)])];
      for (int p : s_.line(j)) target.push_back(point_map[static_cast<std::size_t>(p)]);
      std::sort(target.begin(), target.end());
    }
    if (!have_best_) {
      first_lines_ = lines;
      first_order_ = part.order;
    } else if (lines == first_lines_) {
      record_automorphism(first_order_, part.order);
    } else if (lines == best_lines_) {
      record_automorphism(best_order_, part.order);
    }
    if (!have_best_ || lines < best_lines_) {
      have_best_ = true;
      best_order_ = part.order;
      best_lines_ = std::move(lines);
      best_point_map_ = std::move(point_map);
      best_line_map_ = std::move(line_map);
    }
  }

  static constexpr std::size_t kMaxAutomorphisms = 256;

  const IncidenceStructure& s_;
  LeviGraph graph_;
  std::vector<int> path_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<std::vector<int>> first_lines_;
  std::vector<int> first_order_;
  std::vector<int> best_order_;
  bool have_best_ = false;
  std::vector<std::vector<int>> best_lines_;
  std::vector<int> best_point_map_;
  std::vector<int> best_line_map_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const IncidenceStructure& s) { return Labeler(s).run(); }

CanonicalForm canonical_form(const IncidenceStructure& s) { return canonical_labeling(s).form; }

IncidenceStructure canonical_structure(const IncidenceStructure& s) {
  const auto labeling = canonical_labeling(s);
  return s.relabeled(labeling.point_map, labeling.line_map);
}

bool are_isomorphic(const IncidenceStructure& s, const IncidenceStructure& t) {
  if (s.num_points() != t.num_points() || s.num_lines() != t.num_lines()) return false;
  return canonical_form(s) == canonical_form(t);
}

}  // namespace confred
