#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "confred/reduce.hpp"
#include "confred/structure.hpp"

namespace confred {

/// Witness for adding one point p and one line l to a balanced configuration.
/// f(points[i]) = lines[i]; each points[i] lies on lines[i].
///
/// Applying replaces every incidence (points[i], lines[i]) by (p, lines[i]) and
/// (points[i], l). With `post_swap = i` the pair i is swapped back afterwards:
/// (p, lines[i]) and (points[i], l) become (points[i], lines[i]) and (p, l),
/// so the new point lies on the new line and pair i is left untouched.
struct BalancedAugmentation {
  std::vector<int> points;
  std::vector<int> lines;
  std::optional<std::size_t> post_swap;

  friend bool operator==(const BalancedAugmentation&, const BalancedAugmentation&) = default;
};

/// Witnesses without a post swap first (k incidences, ordered by (line,
/// point)), then those with one (k-1 rewired incidences plus an untouched
/// placeholder pair). Every returned witness applies cleanly.
/// Throws UnbalancedInput when r != k.
std::vector<BalancedAugmentation> find_augmentations_balanced(const IncidenceStructure& s,
                                                              const SearchOptions& options = {});

/// New point gets index v, new line index b. Throws InvalidWitness.
IncidenceStructure apply_augmentation_balanced(const IncidenceStructure& s,
                                               const BalancedAugmentation& augmentation);

/// Martinetti's construction for v_3 configurations: for parallel lines
/// {a,b,c}, {a',b',c'} with a, a' not collinear, a new point p and lines
/// {p,b,c}, {p,b',c'}, {p,a,a'}. Returned as balanced witnesses whose third
/// pair is post-swapped.
std::vector<BalancedAugmentation> martinetti_augment(const IncidenceStructure& s,
                                                     const SearchOptions& options = {});

/// The reduction of apply_augmentation_balanced(s, augmentation) that gives s
/// back exactly.
BalancedReduction inverse_reduction(const IncidenceStructure& s,
                                    const BalancedAugmentation& augmentation);

/// Witness for the general augmentation that adds k/gcd(r,k) points and
/// r/gcd(r,k) lines. `incidences` is the set F of rewired incidences (q, m);
/// F may use a point or a line more than once. Each line part (k indices into
/// F) becomes a new line through its q's; each point part (r indices) becomes
/// a new point on its m's.
struct GeneralAugmentation {
  std::vector<Incidence> incidences;
  std::vector<std::vector<std::size_t>> line_parts;
  std::vector<std::vector<std::size_t>> point_parts;

  friend bool operator==(const GeneralAugmentation&, const GeneralAugmentation&) = default;
};

/// Exhaustive search, deterministic order. Every returned witness applies
/// cleanly.
std::vector<GeneralAugmentation> find_augmentations_general(const IncidenceStructure& s,
                                                            const SearchOptions& options = {});

/// Performs the rewiring without checking the result: point part i becomes
/// point v+i, line part j becomes line b+j. Throws InvalidWitness only for a
/// malformed witness.
IncidenceStructure rewire_augmentation_general(const IncidenceStructure& s,
                                               const GeneralAugmentation& augmentation);

/// rewire_augmentation_general plus the witness conditions and validation of
/// the result. Throws InvalidWitness.
IncidenceStructure apply_augmentation_general(const IncidenceStructure& s,
                                              const GeneralAugmentation& augmentation);

/// The reduction of the augmented structure that gives s back exactly.
GeneralReduction inverse_reduction(const IncidenceStructure& s,
                                   const GeneralAugmentation& augmentation);

/// A balanced witness without post swap in general form.
GeneralAugmentation to_general(const BalancedAugmentation& augmentation);

/// Incidences created by an augmentation, in the augmented structure's labels.
/// Used as the preferred swaps for repair_connectivity.
std::vector<Incidence> created_incidences(const IncidenceStructure& s,
                                          const BalancedAugmentation& augmentation);
std::vector<Incidence> created_incidences(const IncidenceStructure& s,
                                          const GeneralAugmentation& augmentation);

}  // namespace confred
