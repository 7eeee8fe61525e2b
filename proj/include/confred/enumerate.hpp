#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confred/canonical.hpp"
#include "confred/structure.hpp"

namespace confred {

struct CellKey {
  int d = 0;
  int r = 0;
  int k = 0;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct CensusEntry {
  /// Representative in canonical labelling.
  IncidenceStructure structure;
  std::optional<bool> martinetti_irreducible;
  std::optional<bool> boben_irreducible;
  std::optional<bool> general_irreducible;
};

using CensusCell = std::map<CanonicalForm, CensusEntry>;

struct Census {
  std::map<CellKey, CensusCell> cells;

  std::size_t count(int d, int r, int k) const;
  std::size_t total() const;
  /// Adds s (relabelled canonically) unless its form is present. Returns true
  /// when it was new.
  bool insert(const IncidenceStructure& s);
};

/// Orderly generation of all (d, r, k)-configurations for every admissible
/// d <= d_max, one per isomorphism class. Independent of the reduction and
/// augmentation code. Meant for small cases (r = k = 3, d <= 11). Empty
/// cells are kept so counts of zero show up.
Census enumerate_exhaustive(int r, int k, int d_max, unsigned threads = 1);

struct ClosureOptions {
  unsigned threads = 1;
  /// Also use post-swapped balanced witnesses (the inverse of Martinetti-type
  /// reductions with the point on the line).
  bool post_swaps = true;
};

/// Breadth-first augmentation from the seeds up to d_max, deduplicated by
/// canonical form. Seeds must share (r, k). Seeds above d_max are ignored.
Census augmentation_closure(const std::vector<IncidenceStructure>& seeds, int d_max,
                            const ClosureOptions& options = {});

/// Fills the irreducibility flags of every entry by exhaustive search.
void compute_flags(Census& census, unsigned threads = 1);

struct CensusDiffItem {
  CellKey cell;
  CanonicalForm form;
  IncidenceStructure structure;
};

struct CensusDiff {
  std::vector<CensusDiffItem> only_a;
  std::vector<CensusDiffItem> only_b;

  bool empty() const { return only_a.empty() && only_b.empty(); }
};

CensusDiff census_diff(const Census& a, const Census& b);

/// One cfg file per form, d<d>_r<r>_k<k>_<digest>.cfg, plus index.tsv with
/// the flags. Creates the directory.
void save_census(const Census& census, const std::filesystem::path& dir);

/// Reads a directory written by save_census. Throws ParseError.
Census load_census(const std::filesystem::path& dir);

}  // namespace confred
