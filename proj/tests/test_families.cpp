#include "confred/families.hpp"

#include "confred/canonical.hpp"
#include "confred/core.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace confred;

TEST_CASE("cyclic") {
  CHECK(validate(cyclic(7, {0, 1, 3})).label() == "7_3");
  CHECK(validate(cyclic(8, {0, 1, 3})).label() == "8_3");
  CHECK_THROWS_AS(cyclic(7, {0, 1, 2}), FamilyError);
  CHECK_THROWS_AS(cyclic(7, {0, 7}), FamilyError);
  for (int v = 7; v <= 40; ++v) CHECK(validate(cyclic(v, {0, 1, 3})).d == v);
}

TEST_CASE("planes") {
  auto ag = affine_plane(3);
  CHECK(validate(ag).label() == "(9_4,12_3)");
  CHECK(are_isomorphic(ag, testutil::worked_affine_plane()));
  CHECK(are_isomorphic(projective_plane(2), named("fano")));
  auto pg = validate(projective_plane(3));
  CHECK(pg.label() == "13_4");
  CHECK(pg.delta_p == 0);
  CHECK(pg.delta_l == 0);
  CHECK(validate(affine_plane(5)).label() == "(25_6,30_5)");
  CHECK_THROWS_AS(affine_plane(4), FamilyError);
}

TEST_CASE("transversal designs") {
  CHECK(are_isomorphic(transversal_design(3, 3), named("pappus")));
  CHECK(validate(transversal_design(2, 3)).label() == "(6_3,9_2)");
  CHECK(validate(transversal_design(3, 5)).label() == "(15_5,25_3)");
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 5}, {4, 5}, {5, 5}}) {
    auto td = transversal_design(k, n);
    auto groups = transversal_design_groups(k, n);
    for (const auto& group : groups) {
      for (int j = 0; j < td.num_lines(); ++j) {
        int shared = 0;
        for (int p : group) shared += td.incident(p, j);
        CHECK(shared == 1);
      }
    }
  }
  CHECK_THROWS_AS(transversal_design(4, 3), FamilyError);
}

TEST_CASE("named configurations") {
  auto d = validate(named("desargues"));
  CHECK(d.label() == "10_3");
  auto p = validate(named("pappus"));
  CHECK(p.label() == "9_3");
  CHECK(p.delta_p == 2);
  auto mk = validate(named("moebius_kantor"));
  CHECK(mk.label() == "8_3");
  CHECK(mk.delta_p == 1);
  CHECK_THROWS_AS(named("nope"), FamilyError);
}

TEST_CASE("Desargues by hand") {
  // Point i is the i-th duad of {0..4} in lexicographic order: 01 02 03 04 12
  // 13 14 23 24 34. The triad {0,1,2} holds duads 01, 02, 12.
  auto s = named("desargues");
  CHECK(s.line(0) == std::vector<int>{0, 1, 4});
  // Duads 01 and 23 are disjoint: no common triad.
  CHECK(common_lines(s, 0, 7).empty());
  // Duads 01 and 12 span {0,1,2}: exactly one common triad.
  CHECK(common_lines(s, 0, 4).size() == 1);
}

TEST_CASE("family specs") {
  CHECK(FamilySpec::parse("cyclic:7:0,1,3").build() == named("fano"));
  CHECK(FamilySpec::parse("affine:3").build() == affine_plane(3));
  CHECK(FamilySpec::parse("td:3:3").to_string() == "td:3:3");
  CHECK(FamilySpec::parse("pappus").to_string() == "named:pappus");
  CHECK(FamilySpec::parse("named:desargues").build() == named("desargues"));
  CHECK_THROWS_AS(FamilySpec::parse("cyclic:x:0"), FamilyError);
  CHECK_THROWS_AS(FamilySpec::parse("foo:1"), FamilyError);
}
