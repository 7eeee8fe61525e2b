#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "confred/structure.hpp"

namespace confred {

enum class ReductionMode {
  Boben,       // remove any point p and any line l (balanced only)
  Martinetti,  // Boben restricted to p on l (balanced only)
  General,     // remove k/gcd(r,k) points and r/gcd(r,k) lines
};

std::string to_string(ReductionMode mode);
/// "boben" | "martinetti" | "general". Throws Error otherwise.
ReductionMode parse_reduction_mode(const std::string& text);

/// Witness for removing point `point` and line `line` from a balanced
/// configuration: each (q, m) in `assignment` puts q, a point of `line`
/// other than `point`, in the place of `point` on m, a line through `point`
/// other than `line`.
struct BalancedReduction {
  int point = -1;
  int line = -1;
  std::vector<std::pair<int, int>> assignment;

  friend bool operator==(const BalancedReduction&, const BalancedReduction&) = default;
};

/// One matched pair of a general reduction: q leaves the removed line
/// `from_line` and replaces the removed point `from_point` on line m.
struct Rewire {
  int q = -1;
  int from_line = -1;
  int m = -1;
  int from_point = -1;

  friend auto operator<=>(const Rewire&, const Rewire&) = default;
};

/// Witness for removing the point set `points` (R) and line set `lines` (N).
/// `assignment` is a bijection between the occurrences (q, l), l in N, q not
/// in R, and the occurrences (m, p), p in R, m not in N.
struct GeneralReduction {
  std::vector<int> points;
  std::vector<int> lines;
  std::vector<Rewire> assignment;

  friend bool operator==(const GeneralReduction&, const GeneralReduction&) = default;
};

struct SearchOptions {
  /// Maximum number of witnesses to return; 0 means all.
  std::size_t limit = 1;
  /// Worker threads. Output order does not depend on this.
  unsigned threads = 1;
};

/// Witnesses ordered by (point, line, matching order). Throws UnbalancedInput
/// when r != k and ValidationError when s is not a configuration.
std::vector<BalancedReduction> find_reductions_balanced(const IncidenceStructure& s,
                                                        ReductionMode mode,
                                                        const SearchOptions& options = {});

/// Removes the point and line; points above `point` and lines above `line`
/// shift down by one. Throws InvalidWitness.
IncidenceStructure apply_reduction_balanced(const IncidenceStructure& s,
                                            const BalancedReduction& reduction);

/// Exhaustive search over point sets R and line sets N of the sizes fixed by
/// (r, k). For r == k this finds exactly the Boben reductions.
std::vector<GeneralReduction> find_reductions_general(const IncidenceStructure& s,
                                                      const SearchOptions& options = {});

/// Removes R and N, relabelling the survivors densely in their old order.
/// Throws InvalidWitness.
IncidenceStructure apply_reduction_general(const IncidenceStructure& s,
                                           const GeneralReduction& reduction);

/// The same witness in general form.
GeneralReduction to_general(const BalancedReduction& reduction);

/// True iff no reduction of the given kind exists.
bool is_irreducible(const IncidenceStructure& s, ReductionMode mode, unsigned threads = 1);

}  // namespace confred
