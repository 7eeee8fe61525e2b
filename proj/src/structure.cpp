#include "confred/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace confred {

ValidationError ValidationError::not_uniform(int line, int size, int expected) {
  ValidationError e(Kind::NotUniform,
                    "NotUniform: line " + std::to_string(line) + " has " + std::to_string(size) +
                        " points, expected " + std::to_string(expected));
  e.element_ = line;
  return e;
}

ValidationError ValidationError::not_regular(int point, int degree, int expected) {
  ValidationError e(Kind::NotRegular,
                    "NotRegular: point " + std::to_string(point) + " is on " +
                        std::to_string(degree) + " lines, expected " + std::to_string(expected));
  e.element_ = point;
  return e;
}

ValidationError ValidationError::not_linear(int p, int q, std::vector<int> lines) {
  std::string what = "NotLinear: points " + std::to_string(p) + " and " + std::to_string(q) +
                     " share lines";
  for (int j : lines) what += " " + std::to_string(j);
  ValidationError e(Kind::NotLinear, std::move(what));
  e.p_ = p;
  e.q_ = q;
  e.lines_ = std::move(lines);
  return e;
}

ParseError::ParseError(std::string file, int line, std::string reason)
    : Error(file + ":" + std::to_string(line) + ": " + reason),
      file_(std::move(file)),
      line_(line),
      reason_(std::move(reason)) {}

IncidenceStructure::IncidenceStructure(int num_points, std::vector<std::vector<int>> lines)
    : num_points_(num_points), lines_(std::move(lines)) {
  if (num_points_ < 0) throw StructureError("negative point count");
  point_index_.assign(static_cast<std::size_t>(num_points_), {});
  for (std::size_t j = 0; j < lines_.size(); ++j) {
    auto& line = lines_[j];
    std::sort(line.begin(), line.end());
    for (std::size_t i = 0; i < line.size(); ++i) {
      int p = line[i];
      if (p < 0 || p >= num_points_) {
        throw StructureError("line " + std::to_string(j) + ": point " + std::to_string(p) +
                             " out of range [0, " + std::to_string(num_points_) + ")");
      }
      if (i > 0 && line[i - 1] == p) {
        throw StructureError("line " + std::to_string(j) + ": point " + std::to_string(p) +
                             " repeated");
      }
      point_index_[static_cast<std::size_t>(p)].push_back(static_cast<int>(j));
    }
  }
  std::set<std::vector<int>> seen;
  for (std::size_t j = 0; j < lines_.size(); ++j) {
    if (!seen.insert(lines_[j]).second) {
      throw StructureError("line " + std::to_string(j) + " duplicates an earlier line");
    }
  }
}

std::size_t IncidenceStructure::num_incidences() const {
  std::size_t n = 0;
  for (const auto& line : lines_) n += line.size();
  return n;
}

bool IncidenceStructure::incident(int p, int j) const {
  const auto& line = lines_[static_cast<std::size_t>(j)];
  return std::binary_search(line.begin(), line.end(), p);
}

std::vector<Incidence> IncidenceStructure::incidences() const {
  std::vector<Incidence> out;
  out.reserve(num_incidences());
  for (std::size_t j = 0; j < lines_.size(); ++j) {
    for (int p : lines_[j]) out.push_back({p, static_cast<int>(j)});
  }
  return out;
}

IncidenceStructure IncidenceStructure::relabeled(const std::vector<int>& point_map,
                                                 const std::vector<int>& line_map) const {
  std::vector<std::vector<int>> out(lines_.size());
  for (std::size_t j = 0; j < lines_.size(); ++j) {
    auto& target = out[static_cast<std::size_t>(line_map[j])];
    for (int p : lines_[j]) target.push_back(point_map[static_cast<std::size_t>(p)]);
  }
  return IncidenceStructure(num_points_, std::move(out));
}

}  // namespace confred
