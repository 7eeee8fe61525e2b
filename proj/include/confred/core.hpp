#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confred/structure.hpp"

namespace confred {

/// Parameters of a (v_r, b_k)-configuration together with the reduced
/// parameter d and the point/line deficiencies.
struct ConfigParams {
  int v = 0;
  int b = 0;
  int r = 0;
  int k = 0;
  int d = 0;
  int delta_p = 0;
  int delta_l = 0;

  bool balanced() const { return r == k; }
  int gcd_rk() const;
  /// Points removed (added) by one reduction (augmentation) step: k/gcd(r,k).
  int points_per_step() const { return k / gcd_rk(); }
  /// Lines removed (added) by one step: r/gcd(r,k).
  int lines_per_step() const { return r / gcd_rk(); }

  /// "7_3" for balanced, "(9_4,12_3)" otherwise.
  std::string label() const;

  friend bool operator==(const ConfigParams&, const ConfigParams&) = default;
};

/// Checks that s is a configuration: all lines of one size k >= 2, all points
/// on r >= 2 lines, any two points on at most one line.
/// Throws ValidationError naming the first offending element.
ConfigParams validate(const IncidenceStructure& s);

/// Like validate() but returns nullopt instead of throwing.
std::optional<ConfigParams> try_validate(const IncidenceStructure& s);

/// d = v*gcd(r,k)/k. Throws ParameterError unless v*r == b*k.
int reduced_parameters(int v, int b, int r, int k);

/// True iff d >= gcd(r,k)*(r(k-1)+1)/k.
bool admissible(int d, int r, int k);

/// Full parameter set of a (d, r, k)-configuration: v = dk/gcd, b = dr/gcd.
ConfigParams params_from_reduced(int d, int r, int k);

/// Bipartite point/line incidence graph. Vertices 0..v-1 are points, v..v+b-1
/// are lines.
struct LeviGraph {
  int num_points = 0;
  int num_lines = 0;
  std::vector<std::vector<int>> adjacency;

  int num_vertices() const { return num_points + num_lines; }
  bool is_point(int vertex) const { return vertex < num_points; }
};

LeviGraph levi_graph(const IncidenceStructure& s);

/// Length of the shortest cycle, nullopt for a forest.
std::optional<int> girth(const LeviGraph& g);

struct Component {
  std::vector<int> points;
  std::vector<int> lines;
};

/// Connected components of the Levi graph, ordered by their smallest vertex.
std::vector<Component> connected_components(const IncidenceStructure& s);

/// Merges components by swapping incidence pairs (p,m), (p',m') that lie in
/// different components into (p,m'), (p',m). Swaps drawn from `preferred`
/// are tried first. Swaps that would break partial linearity are skipped.
/// A connected input is returned unchanged.
IncidenceStructure repair_connectivity(const IncidenceStructure& s,
                                       const std::vector<Incidence>& preferred = {});

/// Every line through both p and q. Defined on raw structures.
std::vector<int> common_lines(const IncidenceStructure& s, int p, int q);

}  // namespace confred
