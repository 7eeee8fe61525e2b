#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "confred/errors.hpp"

namespace confred {

/// A point-line incidence, (point, line).
struct Incidence {
  int point;
  int line;

  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Points are 0..v-1; every line is a strictly increasing list of points.
///
/// The constructor only checks structural well-formedness (range, no repeated
/// point on a line, no two identical lines). Uniformity, regularity and
/// partial linearity are checked by validate(). Values are immutable.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(int num_points, std::vector<std::vector<int>> lines);

  int num_points() const { return num_points_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  std::size_t num_incidences() const;

  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& line(int j) const { return lines_[static_cast<std::size_t>(j)]; }
  /// Sorted indices of the lines through point p.
  const std::vector<int>& lines_through(int p) const {
    return point_index_[static_cast<std::size_t>(p)];
  }
  bool incident(int p, int j) const;

  /// Every incidence, ordered by (line, point).
  std::vector<Incidence> incidences() const;

  /// Relabel: point p becomes point_map[p], line j becomes line_map[j].
  IncidenceStructure relabeled(const std::vector<int>& point_map,
                               const std::vector<int>& line_map) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.num_points_ == b.num_points_ && a.lines_ == b.lines_;
  }

 private:
  int num_points_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<int>> point_index_;
};

}  // namespace confred
