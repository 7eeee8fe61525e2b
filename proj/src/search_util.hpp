#pragma once

// Internal helpers shared by the search modules.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

#include "confred/core.hpp"
#include "confred/structure.hpp"

namespace confred::detail {

/// Constant-time incidence and collinearity lookups for a partial linear space.
class Geometry {
 public:
  explicit Geometry(const IncidenceStructure& s)
      : s_(&s),
        v_(s.num_points()),
        b_(s.num_lines()),
        on_(static_cast<std::size_t>(v_) * static_cast<std::size_t>(b_), 0),
        line_of_(static_cast<std::size_t>(v_) * static_cast<std::size_t>(v_), -1) {
    for (int j = 0; j < b_; ++j) {
      const auto& line = s.line(j);
      for (int p : line) on_[idx_on(p, j)] = 1;
      for (int p : line) {
        for (int q : line) {
          if (p != q) line_of_[idx_pp(p, q)] = j;
        }
      }
    }
  }

  const IncidenceStructure& structure() const { return *s_; }
  int num_points() const { return v_; }
  int num_lines() const { return b_; }
  bool on(int p, int j) const { return on_[idx_on(p, j)] != 0; }
  /// Line through p and q, -1 when they are not collinear (or p == q).
  int line_of(int p, int q) const { return line_of_[idx_pp(p, q)]; }

 private:
  std::size_t idx_on(int p, int j) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(b_) + static_cast<std::size_t>(j);
  }
  std::size_t idx_pp(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(v_) + static_cast<std::size_t>(q);
  }

  const IncidenceStructure* s_;
  int v_;
  int b_;
  std::vector<char> on_;
  std::vector<int> line_of_;
};

/// Runs `work(unit, out, cap)` for unit = 0..units-1 on `threads` workers.
/// `work` appends at most `cap` witnesses (cap == 0: unlimited) and returns.
/// Results are concatenated in unit order and truncated to `limit`, so the
/// output does not depend on the thread count.
template <class Witness, class Work>
std::vector<Witness> run_units(std::size_t units, std::size_t limit, unsigned threads, Work work) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                                         std::max<std::size_t>(units, 1))));
  std::vector<std::vector<std::pair<std::size_t, Witness>>> found(workers);
  auto run = [&](unsigned worker) {
    auto& mine = found[worker];
    std::vector<Witness> batch;
    for (std::size_t unit = worker; unit < units; unit += workers) {
      std::size_t cap = 0;
      if (limit) {
        if (mine.size() >= limit) break;
        cap = limit - mine.size();
      }
      batch.clear();
      work(unit, batch, cap);
      for (auto& w : batch) mine.emplace_back(unit, std::move(w));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::pair<std::size_t, Witness>> merged;
  for (auto& part : found) {
    for (auto& item : part) merged.push_back(std::move(item));
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Witness> out;
  for (auto& item : merged) {
    if (limit && out.size() >= limit) break;
    out.push_back(std::move(item.second));
  }
  return out;
}

/// All size-`choose` subsets of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int choose) {
  std::vector<std::vector<int>> out;
  if (choose < 0 || choose > n) return out;
  std::vector<int> current(static_cast<std::size_t>(choose));
  for (int i = 0; i < choose; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int i = choose - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - choose + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < choose; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace confred::detail
