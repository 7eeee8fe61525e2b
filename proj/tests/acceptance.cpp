// Acceptance suite: one PASS/FAIL line per criterion.
//
//   confred_acceptance [--expect-fail N]...
//
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "confred/analyze.hpp"
#include "confred/augment.hpp"
#include "confred/canonical.hpp"
#include "confred/core.hpp"
#include "confred/enumerate.hpp"
#include "confred/errors.hpp"
#include "confred/families.hpp"
#include "confred/reduce.hpp"
#include "test_util.hpp"

using namespace confred;

namespace {

// Time limits in seconds.
constexpr double kBobenCensusLimit = 10.0;
constexpr double kCensusLimit = 60.0;
constexpr double kLargeLimit = 30.0;
constexpr int kRoundTrips = 100;
constexpr unsigned kSeed = 20261019;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const Census& census() {
  static const Census c = enumerate_exhaustive(3, 3, 10);
  return c;
}

std::vector<const CensusEntry*> census_entries() {
  std::vector<const CensusEntry*> out;
  for (const auto& [key, cell] : census().cells) {
    for (const auto& [form, entry] : cell) out.push_back(&entry);
  }
  return out;
}

bool same_form(const IncidenceStructure& a, const IncidenceStructure& b) { return are_isomorphic(a, b); }

void criterion1(Result& r) {
  auto start = Clock::now();
  std::vector<IncidenceStructure> irreducible;
  for (const auto* e : census_entries()) {
    if (is_irreducible(e->structure, ReductionMode::Boben)) irreducible.push_back(e->structure);
  }
  double t = seconds_since(start);
  r.detail << "boben-irreducible " << irreducible.size() << " of " << census().total() << ", " << t << " s";
  r.check(census().total() == 15, "census has 15 forms");
  r.check(irreducible.size() == 2, "exactly two irreducible");
  bool fano = false, pappus = false;
  for (const auto& s : irreducible) {
    fano = fano || same_form(s, named("fano"));
    pappus = pappus || same_form(s, named("pappus"));
  }
  r.check(fano && pappus, "they are Fano and Pappus");
  r.check(t < kBobenCensusLimit, "runtime");
}

void criterion2(Result& r) {
  std::map<int, int> per_d;
  std::vector<IncidenceStructure> irreducible;
  for (const auto& [key, cell] : census().cells) {
    per_d[key.d] = 0;
    for (const auto& [form, entry] : cell) {
      if (is_irreducible(entry.structure, ReductionMode::Martinetti)) {
        ++per_d[key.d];
        irreducible.push_back(entry.structure);
      }
    }
  }
  r.detail << "martinetti-irreducible per d:";
  for (auto [d, n] : per_d) r.detail << " " << d << ":" << n;
  r.check(per_d == std::map<int, int>{{7, 1}, {8, 1}, {9, 2}, {10, 4}}, "counts 1,1,2,4");
  for (const auto& [name, s] :
       std::vector<std::pair<std::string, IncidenceStructure>>{{"cyclic(7)", cyclic(7, {0, 1, 3})},
                                                               {"cyclic(8)", cyclic(8, {0, 1, 3})},
                                                               {"cyclic(9)", cyclic(9, {0, 1, 3})},
                                                               {"pappus", named("pappus")},
                                                               {"cyclic(10)", cyclic(10, {0, 1, 3})},
                                                               {"desargues", named("desargues")}}) {
    bool found = false;
    for (const auto& t : irreducible) found = found || same_form(s, t);
    r.check(found, name + " in the list");
  }
}

void criterion3(Result& r) {
  auto ag = testutil::worked_affine_plane();
  auto aug = testutil::worked_augmentation();
  IncidenceStructure raw = rewire_augmentation_general(ag, aug);
  bool lines_match =
      testutil::sorted_lines(raw) == testutil::sorted_lines(IncidenceStructure(12, testutil::worked_augmented_lines()));
  r.detail << "16 lines reproduced: " << (lines_match ? "yes" : "no");
  r.check(lines_match, "16 lines reproduced");

  auto params = try_validate(raw);
  if (!params) {
    try {
      validate(raw);
    } catch (const ValidationError& e) {
      r.detail << "; result is not a configuration: " << e.what();
    }
  }
  r.check(params.has_value(), "result is a (12_4,16_3) configuration");

  bool back = false;
  try {
    for (const auto& w : find_reductions_general(raw, SearchOptions{0, 1})) {
      if (same_form(apply_reduction_general(raw, w), ag)) {
        back = true;
        break;
      }
    }
  } catch (const Error& e) {
    r.detail << "; general reduction: " << e.what();
  }
  r.check(back, "general reduction returns the affine plane");
}

void criterion4(Result& r) {
  auto start = Clock::now();
  auto oracle = enumerate_exhaustive(3, 3, 10);
  std::vector<std::size_t> counts;
  for (int d = 7; d <= 10; ++d) counts.push_back(oracle.count(d, 3, 3));
  r.detail << "oracle counts " << counts[0] << "," << counts[1] << "," << counts[2] << "," << counts[3];
  r.check(counts == std::vector<std::size_t>{1, 1, 3, 10}, "oracle counts 1,1,3,10");

  auto both = augmentation_closure({named("fano"), named("pappus")}, 10);
  r.check(census_diff(both, oracle).empty(), "closure from Fano and Pappus equals the oracle");

  auto diff = census_diff(augmentation_closure({named("fano")}, 10), oracle);
  r.detail << "; closure from Fano misses " << diff.only_b.size();
  r.check(diff.only_a.empty() && diff.only_b.size() == 1 && same_form(diff.only_b[0].structure, named("pappus")),
          "closure from Fano misses exactly Pappus");
  double t = seconds_since(start);
  r.detail << "; " << t << " s";
  r.check(t < kCensusLimit, "runtime");
}

// True when the structure has some reduction of its natural kind.
bool reducible(const IncidenceStructure& s) {
  auto p = validate(s);
  return !is_irreducible(s, p.balanced() ? ReductionMode::Boben : ReductionMode::General);
}

void criterion5(Result& r) {
  std::vector<std::pair<std::string, IncidenceStructure>> items;
  for (const auto* e : census_entries()) items.push_back({"census " + validate(e->structure).label(), e->structure});
  for (int v = 3; v <= 12; ++v) items.push_back({"cycle " + std::to_string(v), cyclic(v, {0, 1})});
  for (int v = 7; v <= 12; ++v) items.push_back({"cyclic " + std::to_string(v), cyclic(v, {0, 1, 3})});
  items.push_back({"affine 2", affine_plane(2)});
  items.push_back({"affine 3", affine_plane(3)});
  items.push_back({"projective 2", projective_plane(2)});
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 3}, {3, 5}, {2, 7}}) {
    items.push_back({"td " + std::to_string(k) + ":" + std::to_string(n), transversal_design(k, n)});
  }

  int checked = 0, fired = 0, contradictions = 0;
  for (const auto& [name, s] : items) {
    auto p = validate(s);
    if (p.d > 12 || p.k > 5) continue;
    ++checked;
    bool small = criterion_small_deficiency(p) == Verdict::Irreducible;
    bool large = criterion_large(p) == Verdict::Reducible;
    if (!small && !large) continue;
    ++fired;
    bool red = reducible(s);
    if ((small && red) || (large && !red)) {
      ++contradictions;
      r.detail << " contradiction on " << name << ";";
    }
  }
  r.detail << checked << " structures, " << fired << " with a criterion firing, " << contradictions
           << " contradictions";
  r.check(contradictions == 0, "zero contradictions");
  r.check(fired > 0, "some criterion fired");
}

void criterion6(Result& r) {
  auto mk = named("moebius_kantor");
  auto p = validate(mk);
  r.check(p.delta_p == 1 && p.k - (p.r + p.k) / p.gcd_rk() == 1, "delta equals the bound");
  auto found = find_reductions_balanced(mk, ReductionMode::Boben, SearchOptions{0, 1});
  r.detail << found.size() << " reductions";
  r.check(!found.empty(), "reducible");
  bool all_fano = true;
  for (const auto& w : found) all_fano = all_fano && same_form(apply_reduction_balanced(mk, w), named("fano"));
  r.check(all_fano, "every reduction yields Fano");
}

void criterion7(Result& r) {
  bool irr = is_irreducible(transversal_design(3, 3), ReductionMode::General);
  auto found = find_reductions_general(transversal_design(2, 3));
  r.detail << "TD(3,3) irreducible: " << (irr ? "yes" : "no") << "; TD(2,3) reductions found: " << found.size();
  r.check(irr, "TD(3,3) irreducible");
  r.check(!found.empty(), "TD(2,3) reducible");
  if (!found.empty()) {
    r.check(try_validate(apply_reduction_general(transversal_design(2, 3), found[0])).has_value(),
            "TD(2,3) reduction is a configuration");
  }
}

void criterion8(Result& r) {
  std::mt19937 rng(kSeed);
  auto entries = census_entries();
  int exact = 0, isomorphic = 0;
  for (int i = 0; i < kRoundTrips; ++i) {
    const auto& s = entries[rng() % entries.size()]->structure;
    auto witnesses = find_augmentations_balanced(s, SearchOptions{0, 1});
    const auto& w = witnesses[rng() % witnesses.size()];
    auto up = apply_augmentation_balanced(s, w);
    if (apply_reduction_balanced(up, inverse_reduction(s, w)) == s) ++exact;
    // Independently of the inverse: some reduction found by search gives s back.
    auto form = canonical_form(s);
    for (const auto& red : find_reductions_balanced(up, ReductionMode::Boben, SearchOptions{0, 1})) {
      if (canonical_form(apply_reduction_balanced(up, red)) == form) {
        ++isomorphic;
        break;
      }
    }
  }
  r.detail << kRoundTrips << " pairs, inverse exact " << exact << ", search isomorphic " << isomorphic;
  r.check(exact == kRoundTrips, "inverse reduction exact");
  r.check(isomorphic == kRoundTrips, "searched reduction isomorphic");
}

void criterion9(Result& r) {
  bool pg3 = find_augmentations_balanced(projective_plane(3)).empty();
  int augmentable = 0;
  for (const auto* e : census_entries()) augmentable += find_augmentations_balanced(e->structure).empty() ? 0 : 1;
  r.detail << "PG(2,3) augmentations: " << (pg3 ? "none" : "some") << "; augmentable census forms " << augmentable
           << " of " << census().total();
  r.check(pg3, "PG(2,3) not augmentable");
  r.check(augmentable == static_cast<int>(census().total()), "every census form augmentable");
}

void criterion10(Result& r) {
  auto start = Clock::now();
  auto s = cyclic(64, {0, 1, 3});
  auto found = find_reductions_balanced(s, ReductionMode::Boben);
  bool ok = !found.empty() && try_validate(apply_reduction_balanced(s, found[0])).has_value();
  double t = seconds_since(start);
  r.detail << "64_3 reducible: " << (ok ? "yes" : "no") << ", " << t << " s";
  r.check(criterion_large(validate(s)) == Verdict::Reducible, "criterion fires");
  r.check(ok, "reduction found");
  r.check(t < kLargeLimit, "runtime");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: confred_acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<void(Result&)>>> criteria = {
      {"Boben irreducible v_3 are Fano and Pappus", criterion1},
      {"Martinetti irreducible v_3 list", criterion2},
      {"worked general augmentation of AG(2,3)", criterion3},
      {"census counts and closure", criterion4},
      {"criteria agree with search", criterion5},
      {"Moebius-Kantor sharpness", criterion6},
      {"transversal design reducibility", criterion7},
      {"augment then reduce round trip", criterion8},
      {"PG(2,3) not augmentable, v_3 augmentable", criterion9},
      {"64_3 is reducible", criterion10},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i + 1);
    Result r;
    try {
      criteria[i].second(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail << " [exception: " << e.what() << "]";
    }
    if (!r.pass) failed.insert(n);
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
              << r.detail.str() << ")";
    if (!r.pass && expected.count(n)) std::cout << " [expected]";
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria passed" << std::endl;
  if (failed != expected) {
    for (int n : expected) {
      if (!failed.count(n)) std::cout << "criterion " << n << " was expected to fail but passed" << std::endl;
    }
    return 1;
  }
  return 0;
}
