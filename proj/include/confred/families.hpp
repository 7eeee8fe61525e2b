#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confred/structure.hpp"

namespace confred {

/// Lines {b + i mod v : b in base} for i = 0..v-1. Throws FamilyError when
/// the result is not a configuration.
IncidenceStructure cyclic(int v, const std::vector<int>& base);

/// Affine plane of prime order n. Point (x, y) has index x*n + y. Lines are
/// listed by parallel class: the n verticals x = c first, then for each
/// slope s = 0..n-1 the lines y = s*x + c.
IncidenceStructure affine_plane(int n);

/// Projective closure of affine_plane(n): the n+1 points at infinity get
/// indices n^2 .. n^2+n (one per parallel class, in class order) and the line
/// at infinity is last.
IncidenceStructure projective_plane(int n);

/// TD_1(k, n) from the affine plane of prime order n: keep the points on the
/// first k vertical lines (group g = points g*n .. g*n+n-1) and restrict the
/// n^2 non-vertical lines to them.
IncidenceStructure transversal_design(int k, int n);

/// Groups of transversal_design(k, n), group g = {g*n, ..., g*n + n - 1}.
std::vector<std::vector<int>> transversal_design_groups(int k, int n);

/// fano | moebius_kantor | pappus | desargues.
IncidenceStructure named(const std::string& name);

/// Parsed family selector used by the CLI:
///   cyclic:<v>:<b0>,<b1>,...   affine:<n>   projective:<n>   td:<k>:<n>
///   named:<name>  (or just <name>)
struct FamilySpec {
  enum class Tag { Cyclic, Affine, Projective, TransversalDesign, Named };

  Tag tag = Tag::Named;
  int v = 0;
  std::vector<int> base;
  int n = 0;
  int k = 0;
  std::string name;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
  IncidenceStructure build() const;
};

bool is_prime(int n);

}  // namespace confred
