#pragma once

#include <optional>
#include <string>
#include <utility>

#include "confred/core.hpp"
#include "confred/structure.hpp"

namespace confred {

enum class Verdict { Irreducible, Reducible, Unknown };

std::string to_string(Verdict verdict);

/// Irreducible when the point deficiency is below k - (r+k)/gcd(r,k) or the
/// line deficiency is below r - (r+k)/gcd(r,k).
Verdict criterion_small_deficiency(const ConfigParams& params);

/// For a resolvable TD_1(k, n): Irreducible when k >= (k+n)/gcd(n,k) + 1.
Verdict criterion_td(int k, int n);

/// Reducible when b >= 1 + r + r(k-1)(r-1) + r(r-1)^2(k-1)^2.
Verdict criterion_large(const ConfigParams& params);

/// The right-hand side of criterion_large.
long long large_threshold(int r, int k);

struct ClassifyOptions {
  /// Run the exhaustive searches.
  bool search = true;
  unsigned threads = 1;
  /// (k, n) when the input is known to be the generator's TD_1(k, n).
  std::optional<std::pair<int, int>> td;
};

struct AnalysisReport {
  ConfigParams params;
  std::optional<int> girth;
  int components = 0;
  Verdict small_deficiency = Verdict::Unknown;
  Verdict large = Verdict::Unknown;
  std::optional<Verdict> td;
  // Search verdicts; unset when not searched or not applicable (the balanced
  // modes on unbalanced input).
  std::optional<bool> martinetti_irreducible;
  std::optional<bool> boben_irreducible;
  std::optional<bool> general_irreducible;
  /// False when a criterion contradicts a search verdict.
  bool consistent = true;
};

/// Throws ValidationError when s is not a configuration.
AnalysisReport classify(const IncidenceStructure& s, const ClassifyOptions& options = {});

std::string report_json(const AnalysisReport& report, int indent = 2);
std::string report_text(const AnalysisReport& report);

}  // namespace confred
