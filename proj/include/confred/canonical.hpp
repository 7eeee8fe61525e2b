#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "confred/structure.hpp"

namespace confred {

/// Isomorphism-invariant encoding of an incidence structure. Points and lines
/// are never interchanged, so a structure and its dual get different forms
/// unless they are isomorphic as point-line structures.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  /// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
  std::string hex_digest() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> point_map;  // original point -> canonical point
  std::vector<int> line_map;   // original line -> canonical line
};

/// Computes a canonical labeling by individualization and refinement on the
/// Levi graph with points and lines coloured apart.
CanonicalLabeling canonical_labeling(const IncidenceStructure& s);

CanonicalForm canonical_form(const IncidenceStructure& s);

/// The structure relabelled into canonical order.
IncidenceStructure canonical_structure(const IncidenceStructure& s);

bool are_isomorphic(const IncidenceStructure& s, const IncidenceStructure& t);

}  // namespace confred
