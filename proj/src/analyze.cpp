#include "confred/analyze.hpp"

#include <numeric>
#include <sstream>

#include "confred/reduce.hpp"
#include "json.hpp"

namespace confred {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Irreducible:
      return "irreducible";
    case Verdict::Reducible:
      return "reducible";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

Verdict criterion_small_deficiency(const ConfigParams& params) {
  const int bound = (params.r + params.k) / params.gcd_rk();
  if (params.delta_p < params.k - bound || params.delta_l < params.r - bound) {
    return Verdict::Irreducible;
  }
  return Verdict::Unknown;
}

Verdict criterion_td(int k, int n) {
  if (k < 2 || n < 2) throw ParameterError("criterion_td needs k, n >= 2");
  const int g = std::gcd(n, k);
  return k >= (k + n) / g + 1 ? Verdict::Irreducible : Verdict::Unknown;
}

long long large_threshold(int r, int k) {
  const long long rr = r;
  const long long kk = k;
  return 1 + rr + rr * (kk - 1) * (rr - 1) + rr * (rr - 1) * (rr - 1) * (kk - 1) * (kk - 1);
}

Verdict criterion_large(const ConfigParams& params) {
  return params.b >= large_threshold(params.r, params.k) ? Verdict::Reducible : Verdict::Unknown;
}

AnalysisReport classify(const IncidenceStructure& s, const ClassifyOptions& options) {
  AnalysisReport report;
  report.params = validate(s);
  report.girth = girth(levi_graph(s));
  report.components = static_cast<int>(connected_components(s).size());
  report.small_deficiency = criterion_small_deficiency(report.params);
  report.large = criterion_large(report.params);
  if (options.td) report.td = criterion_td(options.td->first, options.td->second);
  if (!options.search) return report;

  if (report.params.balanced()) {
    report.martinetti_irreducible = is_irreducible(s, ReductionMode::Martinetti, options.threads);
    report.boben_irreducible = is_irreducible(s, ReductionMode::Boben, options.threads);
    // For r == k the general reduction is the Boben reduction.
    report.general_irreducible = report.boben_irreducible;
  } else {
    report.general_irreducible = is_irreducible(s, ReductionMode::General, options.threads);
  }
  const bool irreducible = *report.general_irreducible;
  if (report.small_deficiency == Verdict::Irreducible && !irreducible) report.consistent = false;
  if (report.td == Verdict::Irreducible && !irreducible) report.consistent = false;
  if (report.large == Verdict::Reducible && irreducible) report.consistent = false;
  return report;
}

namespace {

nlohmann::json optional_bool(const std::optional<bool>& value) {
  if (!value) return nullptr;
  return *value;
}

}  // namespace

std::string report_json(const AnalysisReport& report, int indent) {
  const auto& p = report.params;
  nlohmann::json j;
  j["label"] = p.label();
  j["params"] = {{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"d", p.d}};
  j["deficiency"] = {{"point", p.delta_p}, {"line", p.delta_l}};
  j["girth"] = report.girth ? nlohmann::json(*report.girth) : nlohmann::json(nullptr);
  j["components"] = report.components;
  j["criteria"] = {{"small_deficiency", to_string(report.small_deficiency)},
                   {"large", to_string(report.large)},
                   {"td", report.td ? nlohmann::json(to_string(*report.td)) : nlohmann::json(nullptr)}};
  j["search"] = {{"martinetti_irreducible", optional_bool(report.martinetti_irreducible)},
                 {"boben_irreducible", optional_bool(report.boben_irreducible)},
                 {"general_irreducible", optional_bool(report.general_irreducible)}};
  j["consistent"] = report.consistent;
  return j.dump(indent);
}

std::string report_text(const AnalysisReport& report) {
  const auto& p = report.params;
  auto yes_no = [](const std::optional<bool>& value) -> std::string {
    if (!value) return "-";
    return *value ? "irreducible" : "reducible";
  };
  std::ostringstream out;
  out << "configuration     " << p.label() << " d=" << p.d << " r=" << p.r << " k=" << p.k << "\n";
  out << "deficiency        point " << p.delta_p << ", line " << p.delta_l << "\n";
  out << "girth             " << (report.girth ? std::to_string(*report.girth) : "none") << "\n";
  out << "components        " << report.components << "\n";
  out << "small deficiency  " << to_string(report.small_deficiency) << "\n";
  out << "large             " << to_string(report.large) << "\n";
  if (report.td) out << "transversal       " << to_string(*report.td) << "\n";
  out << "martinetti        " << yes_no(report.martinetti_irreducible) << "\n";
  out << "boben             " << yes_no(report.boben_irreducible) << "\n";
  out << "general           " << yes_no(report.general_irreducible) << "\n";
  out << "consistent        " << (report.consistent ? "yes" : "NO") << "\n";
  return out.str();
}

}  // namespace confred
