#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "confred/analyze.hpp"
#include "confred/augment.hpp"
#include "confred/canonical.hpp"
#include "confred/core.hpp"
#include "confred/enumerate.hpp"
#include "confred/errors.hpp"
#include "confred/families.hpp"
#include "confred/io.hpp"
#include "confred/reduce.hpp"

namespace fs = std::filesystem;
using namespace confred;

namespace {

// Thrown for answers of the form "the property does not hold".
struct PropertyFails {
  std::string message;
};

std::string describe(const BalancedReduction& w) {
  std::ostringstream out;
  out << "point " << w.point << " line " << w.line << " assignment";
  for (auto [q, m] : w.assignment) out << " " << q << "->" << m;
  return out.str();
}

std::string describe(const GeneralReduction& w) {
  std::ostringstream out;
  out << "points";
  for (int p : w.points) out << " " << p;
  out << " lines";
  for (int l : w.lines) out << " " << l;
  out << " assignment";
  for (const auto& rw : w.assignment) {
    out << " " << rw.q << "@" << rw.from_line << "->" << rw.m << "@" << rw.from_point;
  }
  return out.str();
}

std::string describe(const BalancedAugmentation& w) {
  std::ostringstream out;
  out << "pairs";
  for (std::size_t i = 0; i < w.points.size(); ++i) out << " " << w.points[i] << "/" << w.lines[i];
  if (w.post_swap) out << " post_swap " << *w.post_swap;
  return out.str();
}

std::string describe(const GeneralAugmentation& w) {
  std::ostringstream out;
  out << "F";
  for (const auto& x : w.incidences) out << " " << x.point << "/" << x.line;
  auto parts = [&](const char* name, const std::vector<std::vector<std::size_t>>& ps) {
    out << " " << name;
    for (const auto& part : ps) {
      out << " {";
      for (std::size_t i = 0; i < part.size(); ++i) out << (i ? "," : "") << part[i];
      out << "}";
    }
  };
  parts("line_parts", w.line_parts);
  parts("point_parts", w.point_parts);
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// Writes each structure whose canonical form is new; returns how many.
class DistinctWriter {
 public:
  DistinctWriter(std::string dir, std::string prefix) : dir_(std::move(dir)), prefix_(std::move(prefix)) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }
  bool add(const IncidenceStructure& s, const std::string& comment) {
    auto form = canonical_form(s);
    if (!seen_.insert(form).second) return false;
    if (!dir_.empty()) {
      const auto path = fs::path(dir_) / (prefix_ + form.hex_digest() + ".cfg");
      save_cfg(path, s, comment);
      std::cout << "wrote " << path.string() << "\n";
    }
    return true;
  }
  std::size_t count() const { return seen_.size(); }

 private:
  std::string dir_;
  std::string prefix_;
  std::set<CanonicalForm> seen_;
};

int cmd_validate(const std::string& file) {
  const auto s = read_cfg(file);
  try {
    const auto p = validate(s);
    std::cout << p.label() << " d=" << p.d << " δp=" << p.delta_p << " δl=" << p.delta_l << "\n";
    return 0;
  } catch (const ValidationError& e) {
    throw PropertyFails{std::string("not a configuration: ") + e.what()};
  }
}

int cmd_analyze(const std::string& file, bool no_search, bool json, const std::string& td, unsigned threads) {
  const auto s = read_cfg(file);
  ClassifyOptions options;
  options.search = !no_search;
  options.threads = threads;
  if (!td.empty()) {
    const auto spec = FamilySpec::parse("td:" + td);
    options.td = std::make_pair(spec.k, spec.n);
  }
  const auto report = classify(s, options);
  std::cout << (json ? report_json(report) + "\n" : report_text(report));
  return report.consistent ? 0 : 1;
}

int cmd_generate(const std::string& spec_text, const std::string& out) {
  const auto spec = FamilySpec::parse(spec_text);
  const auto s = spec.build();
  write_output(out, to_cfg_string(s, spec.to_string()));
  return 0;
}

int cmd_reduce(const std::string& file, const std::string& mode_text, std::size_t count, const std::string& out_dir,
               unsigned threads) {
  const auto s = read_cfg(file);
  const auto mode = parse_reduction_mode(mode_text);
  SearchOptions options{count, threads};
  DistinctWriter writer(out_dir, "red_");
  std::size_t found = 0;
  if (mode == ReductionMode::General) {
    for (const auto& w : find_reductions_general(s, options)) {
      ++found;
      std::cout << describe(w) << "\n";
      writer.add(apply_reduction_general(s, w), describe(w));
    }
  } else {
    for (const auto& w : find_reductions_balanced(s, mode, options)) {
      ++found;
      std::cout << describe(w) << "\n";
      writer.add(apply_reduction_balanced(s, w), describe(w));
    }
  }
  if (!found) throw PropertyFails{"no " + to_string(mode) + " reduction"};
  std::cout << found << " witness(es), " << writer.count() << " distinct result(s)\n";
  return 0;
}

int cmd_augment(const std::string& file, const std::string& mode, std::size_t count, bool connect,
                const std::string& out_dir, unsigned threads) {
  const auto s = read_cfg(file);
  const auto params = validate(s);
  SearchOptions options{count, threads};
  DistinctWriter writer(out_dir, "aug_");
  std::size_t found = 0;
  auto finish = [&](IncidenceStructure result, const std::vector<Incidence>& created, const std::string& text) {
    if (connect) result = repair_connectivity(result, created);
    std::cout << text << "\n";
    writer.add(result, text);
  };
  if (mode == "general" || (mode == "balanced" && !params.balanced())) {
    for (const auto& w : find_augmentations_general(s, options)) {
      ++found;
      finish(apply_augmentation_general(s, w), created_incidences(s, w), describe(w));
    }
  } else if (mode == "balanced" || mode == "martinetti") {
    const auto witnesses =
        mode == "martinetti" ? martinetti_augment(s, options) : find_augmentations_balanced(s, options);
    for (const auto& w : witnesses) {
      ++found;
      finish(apply_augmentation_balanced(s, w), created_incidences(s, w), describe(w));
    }
  } else {
    throw CLI::ValidationError("--mode", "expected balanced, general or martinetti");
  }
  if (!found) throw PropertyFails{"not augmentable (" + mode + ")"};
  std::cout << found << " witness(es), " << writer.count() << " distinct result(s)\n";
  return 0;
}

int cmd_irreducible(const std::string& file, const std::string& mode_text, unsigned threads) {
  const auto s = read_cfg(file);
  const auto mode = parse_reduction_mode(mode_text);
  SearchOptions options{1, threads};
  if (mode == ReductionMode::General) {
    auto found = find_reductions_general(s, options);
    if (found.empty()) {
      std::cout << "irreducible\n";
      return 0;
    }
    std::cout << "reducible\n" << describe(found.front()) << "\n";
    return 1;
  }
  auto found = find_reductions_balanced(s, mode, options);
  if (found.empty()) {
    std::cout << "irreducible\n";
    return 0;
  }
  std::cout << "reducible\n" << describe(found.front()) << "\n";
  return 1;
}

int cmd_enumerate(int r, int k, int max_d, const std::string& method, const std::vector<std::string>& seeds,
                  const std::string& out_dir, bool flags, unsigned threads) {
  Census census;
  if (method == "oracle") {
    census = enumerate_exhaustive(r, k, max_d, threads);
  } else if (method == "closure") {
    if (seeds.empty()) throw CLI::ValidationError("--seeds", "closure needs at least one seed");
    std::vector<IncidenceStructure> structures;
    for (const auto& f : seeds) {
      structures.push_back(read_cfg(f));
      const auto p = validate(structures.back());
      if (p.r != r || p.k != k) throw Error("seed " + f + " is a " + p.label() + ", not an (r,k) = (" +
                                            std::to_string(r) + "," + std::to_string(k) + ") configuration");
    }
    ClosureOptions options;
    options.threads = threads;
    census = augmentation_closure(structures, max_d, options);
  } else {
    throw CLI::ValidationError("--method", "expected oracle or closure");
  }
  if (flags) compute_flags(census, threads);
  for (const auto& [key, cell] : census.cells) {
    std::cout << "d=" << key.d << " r=" << key.r << " k=" << key.k << " forms=" << cell.size();
    if (flags) {
      int m = 0;
      int b = 0;
      int g = 0;
      for (const auto& [form, entry] : cell) {
        m += entry.martinetti_irreducible.value_or(false);
        b += entry.boben_irreducible.value_or(false);
        g += entry.general_irreducible.value_or(false);
      }
      if (key.r == key.k) {
        std::cout << " martinetti_irreducible=" << m << " boben_irreducible=" << b;
      } else {
        std::cout << " general_irreducible=" << g;
      }
    }
    std::cout << "\n";
  }
  if (!out_dir.empty()) save_census(census, out_dir);
  return 0;
}

int cmd_census_diff(const std::string& a, const std::string& b) {
  const auto diff = census_diff(load_census(a), load_census(b));
  auto show = [](const char* side, const std::vector<CensusDiffItem>& items) {
    for (const auto& item : items) {
      std::cout << side << " d=" << item.cell.d << " r=" << item.cell.r << " k=" << item.cell.k << " "
                << item.form.hex_digest() << "\n";
    }
  };
  show("only-a", diff.only_a);
  show("only-b", diff.only_b);
  if (!diff.empty()) throw PropertyFails{"censuses differ"};
  std::cout << "identical\n";
  return 0;
}

int cmd_levi(const std::string& file, const std::string& out) {
  write_output(out, levi_dot(read_cfg(file)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"confred: reductions and augmentations of combinatorial configurations"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for searches")->check(CLI::Range(1u, 256u));

  std::string file;
  std::string out;
  std::string reduce_mode;
  std::string augment_mode;
  std::string irreducible_mode;
  std::string method;
  std::size_t count = 1;
  bool flag_a = false;
  bool flag_b = false;
  std::string text;

  auto* validate_cmd = app.add_subcommand("validate", "Check that a cfg file is a configuration");
  validate_cmd->add_option("file", file)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Parameters, criteria and search verdicts");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_flag("--no-search", flag_a, "Skip the exhaustive searches");
  analyze_cmd->add_flag("--json", flag_b, "JSON report");
  analyze_cmd->add_option("--td", text, "Input is the generator's TD_1(k,n), given as k:n");

  auto* generate_cmd = app.add_subcommand("generate", "Build a family member");
  generate_cmd->add_option("spec", text, "cyclic:v:b0,b1,.. | affine:n | projective:n | td:k:n | named:name")
      ->required();
  generate_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Search reductions and write the results");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--mode", reduce_mode, "boben | martinetti | general")->default_val("boben");
  reduce_cmd->add_option("--count", count, "Witnesses to report, 0 for all")->default_val(1);
  reduce_cmd->add_option("--out", out, "Directory for the reduced configurations");

  auto* augment_cmd = app.add_subcommand("augment", "Search augmentations and write the results");
  augment_cmd->add_option("file", file)->required();
  augment_cmd->add_option("--mode", augment_mode, "balanced | general | martinetti")->default_val("balanced");
  augment_cmd->add_option("--count", count, "Witnesses to use, 0 for all")->default_val(1);
  augment_cmd->add_flag("--connect", flag_a, "Repair disconnected results by swapping incidences");
  augment_cmd->add_option("--out", out, "Directory for the augmented configurations");

  auto* irreducible_cmd = app.add_subcommand("irreducible", "Exit 0 iff no reduction exists");
  irreducible_cmd->add_option("file", file)->required();
  irreducible_cmd->add_option("--mode", irreducible_mode, "boben | martinetti | general")->default_val("boben");

  int r = 3;
  int k = 3;
  int max_d = 10;
  std::vector<std::string> seeds;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Census of (r,k)-configurations");
  enumerate_cmd->add_option("--r", r)->default_val(3);
  enumerate_cmd->add_option("--k", k)->default_val(3);
  enumerate_cmd->add_option("--max-d", max_d)->default_val(10);
  enumerate_cmd->add_option("--method", method, "oracle | closure")->default_val("oracle");
  enumerate_cmd->add_option("--seeds", seeds, "Seed cfg files for closure");
  enumerate_cmd->add_option("--out", out, "Census directory");
  enumerate_cmd->add_flag("--flags", flag_a, "Compute irreducibility flags");

  std::string second;
  auto* diff_cmd = app.add_subcommand("census-diff", "Compare two census directories");
  diff_cmd->add_option("a", file)->required();
  diff_cmd->add_option("b", second)->required();

  auto* levi_cmd = app.add_subcommand("levi", "Levi graph in DOT");
  levi_cmd->add_option("file", file)->required();
  levi_cmd->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*analyze_cmd) return cmd_analyze(file, flag_a, flag_b, text, threads);
    if (*generate_cmd) return cmd_generate(text, out);
    if (*reduce_cmd) return cmd_reduce(file, reduce_mode, count, out, threads);
    if (*augment_cmd) return cmd_augment(file, augment_mode, count, flag_a, out, threads);
    if (*irreducible_cmd) return cmd_irreducible(file, irreducible_mode, threads);
    if (*enumerate_cmd) return cmd_enumerate(r, k, max_d, method, seeds, out, flag_a, threads);
    if (*diff_cmd) return cmd_census_diff(file, second);
    if (*levi_cmd) return cmd_levi(file, out);
  } catch (const PropertyFails& e) {
    std::cout << e.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
