#include "confred/augment.hpp"

#include <set>

#include "confred/canonical.hpp"
#include "confred/core.hpp"
#include "confred/families.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace confred;

namespace {

SearchOptions all() { return SearchOptions{0, 1}; }

}  // namespace

TEST_CASE("every augmentation of Fano is Moebius-Kantor") {
  auto fano = named("fano");
  auto found = find_augmentations_balanced(fano, all());
  REQUIRE_FALSE(found.empty());
  for (const auto& w : found) {
    auto out = apply_augmentation_balanced(fano, w);
    CHECK(are_isomorphic(out, named("moebius_kantor")));
    CHECK(apply_reduction_balanced(out, inverse_reduction(fano, w)) == fano);
  }
}

TEST_CASE("a triangle witness on Fano") {
  // Lines 0 = {0,1,3}, 1 = {1,2,4}, 6 = {0,2,6}: the triangle 0, 1, 2 with
  // f(1) = line 0, f(2) = line 1, f(0) = line 6.
  auto fano = named("fano");
  BalancedAugmentation w{{1, 2, 0}, {0, 1, 6}, std::nullopt};
  auto out = apply_augmentation_balanced(fano, w);
  CHECK(validate(out).label() == "8_3");
  CHECK(out.line(7) == std::vector<int>{0, 1, 2});
}

TEST_CASE("pair condition violations are rejected") {
  auto fano = named("fano");
  // 0 and 1 share line 0 but f(0) and f(1) are other lines.
  BalancedAugmentation w{{0, 1, 2}, {6, 1, 2}, std::nullopt};
  CHECK_THROWS_AS(apply_augmentation_balanced(fano, w), InvalidWitness);
  // A point that is not on its image line.
  BalancedAugmentation off{{0, 1, 2}, {1, 0, 6}, std::nullopt};
  CHECK_THROWS_AS(apply_augmentation_balanced(fano, off), InvalidWitness);
  CHECK_THROWS_AS(apply_augmentation_balanced(fano, BalancedAugmentation{{0}, {0}, std::nullopt}), InvalidWitness);
}

TEST_CASE("post swap puts the new point on the new line") {
  auto mk = named("moebius_kantor");
  auto found = martinetti_augment(mk, all());
  REQUIRE_FALSE(found.empty());
  for (const auto& w : found) {
    REQUIRE(w.post_swap.has_value());
    auto out = apply_augmentation_balanced(mk, w);
    CHECK(validate(out).label() == "9_3");
    CHECK(out.incident(mk.num_points(), mk.num_lines()));
    // The two parallel lines keep two of their points and gain p.
    CHECK(out.line(w.lines[0]).size() == 3);
    CHECK(out.incident(mk.num_points(), w.lines[0]));
    CHECK(out.incident(mk.num_points(), w.lines[1]));
    // The new line is {p, a, a'}.
    CHECK(out.line(mk.num_lines()) ==
          std::vector<int>{std::min(w.points[0], w.points[1]), std::max(w.points[0], w.points[1]), mk.num_points()});
    CHECK(apply_reduction_balanced(out, inverse_reduction(mk, w)) == mk);
  }
  CHECK(martinetti_augment(named("fano"), all()).empty());
  CHECK_THROWS_AS(martinetti_augment(projective_plane(3)), Error);
}

TEST_CASE("not augmentable and augmentable 4-configurations") {
  CHECK(find_augmentations_balanced(projective_plane(3), all()).empty());
  // Difference set {0,1,4,6} mod 14: a 14_4 with deficiency one.
  auto s = cyclic(14, {0, 1, 4, 6});
  CHECK(validate(s).delta_p == 1);
  auto found = find_augmentations_balanced(s);
  REQUIRE(found.size() == 1);
  CHECK(validate(apply_augmentation_balanced(s, found[0])).label() == "15_4");
}

TEST_CASE("balanced witnesses match general witnesses for r == k") {
  for (const auto& s : {named("fano"), named("moebius_kantor"), named("pappus")}) {
    std::vector<GeneralAugmentation> from_balanced;
    for (const auto& w : find_augmentations_balanced(s, all())) {
      if (w.post_swap) continue;
      from_balanced.push_back(to_general(w));
      CHECK(apply_augmentation_general(s, from_balanced.back()) == apply_augmentation_balanced(s, w));
    }
    CHECK(find_augmentations_general(s, all()) == from_balanced);
  }
}

TEST_CASE("general augmentation of the affine plane") {
  auto ag = affine_plane(3);
  auto found = find_augmentations_general(ag, SearchOptions{3, 1});
  REQUIRE(found.size() == 3);
  for (const auto& w : found) {
    auto out = apply_augmentation_general(ag, w);
    auto p = validate(out);
    CHECK(p.label() == "(12_4,16_3)");
    CHECK(p.d == 4);
    CHECK(apply_reduction_general(out, inverse_reduction(ag, w)) == ag);
  }
}

TEST_CASE("the worked example rewires to the printed lines") {
  auto ag = testutil::worked_affine_plane();
  auto aug = testutil::worked_augmentation();
  auto raw = rewire_augmentation_general(ag, aug);
  CHECK(testutil::sorted_lines(raw) == testutil::sorted_lines(IncidenceStructure(12, testutil::worked_augmented_lines())));
  // New lines l1..l4 come last, in part order.
  CHECK(raw.line(12) == std::vector<int>{0, 2, 6});
  CHECK(raw.line(15) == std::vector<int>{0, 1, 8});
  // The printed result is not a configuration: points 1 and 9 (0 and 8 here)
  // lie on {p3,1,9} and on l4 = {1,2,9}.
  try {
    validate(raw);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::NotLinear);
    CHECK(e.p() == 0);
    CHECK(e.q() == 8);
  }
  CHECK_THROWS_AS(apply_augmentation_general(ag, aug), InvalidWitness);
}

TEST_CASE("malformed general witnesses") {
  auto ag = affine_plane(3);
  auto w = find_augmentations_general(ag).front();
  auto missing = w;
  missing.incidences.pop_back();
  CHECK_THROWS_AS(rewire_augmentation_general(ag, missing), InvalidWitness);
  auto twice = w;
  twice.line_parts[0][0] = twice.line_parts[1][0];
  CHECK_THROWS_AS(rewire_augmentation_general(ag, twice), InvalidWitness);
  auto off = w;
  off.incidences[0] = {0, 1};
  CHECK_THROWS_AS(apply_augmentation_general(ag, off), InvalidWitness);
}

TEST_CASE("created incidences are incidences of the result") {
  auto fano = named("fano");
  for (const auto& w : find_augmentations_balanced(fano, SearchOptions{5, 1})) {
    auto out = apply_augmentation_balanced(fano, w);
    for (auto [p, l] : created_incidences(fano, w)) CHECK(out.incident(p, l));
  }
  auto ag = affine_plane(3);
  auto w = find_augmentations_general(ag).front();
  auto out = apply_augmentation_general(ag, w);
  auto created = created_incidences(ag, w);
  CHECK(created.size() == 24);
  for (auto [p, l] : created) CHECK(out.incident(p, l));
}
