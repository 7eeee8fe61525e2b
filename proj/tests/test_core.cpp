#include "confred/core.hpp"

#include "confred/families.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace confred;

TEST_CASE("validate Fano") {
  auto p = validate(cyclic(7, {0, 1, 3}));
  CHECK(p.v == 7);
  CHECK(p.b == 7);
  CHECK(p.r == 3);
  CHECK(p.k == 3);
  CHECK(p.d == 7);
  CHECK(p.delta_p == 0);
  CHECK(p.delta_l == 0);
  CHECK(p.label() == "7_3");
}

TEST_CASE("validate the worked affine plane") {
  auto p = validate(testutil::worked_affine_plane());
  CHECK(p.v == 9);
  CHECK(p.b == 12);
  CHECK(p.r == 4);
  CHECK(p.k == 3);
  CHECK(p.d == 3);
  CHECK(p.delta_p == 0);
  CHECK(p.delta_l == 2);
  CHECK(p.label() == "(9_4,12_3)");
}

TEST_CASE("validate reports the offending element") {
  SUBCASE("not linear") {
    // 3-uniform, 2-regular, but points 0 and 1 share lines 0 and 1.
    IncidenceStructure s(6, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}, {3, 4, 5}});
    try {
      validate(s);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationError::Kind::NotLinear);
      CHECK(e.p() == 0);
      CHECK(e.q() == 1);
      CHECK(e.lines() == std::vector<int>{0, 1});
    }
  }
  SUBCASE("not uniform") {
    IncidenceStructure s(4, {{0, 1, 2}, {0, 3}});
    try {
      validate(s);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationError::Kind::NotUniform);
      CHECK(e.element() == 1);
    }
  }
  SUBCASE("not regular") {
    IncidenceStructure s(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    try {
      validate(s);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationError::Kind::NotRegular);
    }
  }
  CHECK_FALSE(try_validate(IncidenceStructure(3, {{0, 1, 2}})).has_value());
}

TEST_CASE("reduced parameters") {
  CHECK(reduced_parameters(9, 12, 4, 3) == 3);
  CHECK(reduced_parameters(7, 7, 3, 3) == 7);
  CHECK(reduced_parameters(6, 9, 3, 2) == 3);
  CHECK_THROWS_AS(reduced_parameters(7, 8, 3, 3), ParameterError);
}

TEST_CASE("admissible") {
  CHECK(admissible(7, 3, 3));
  CHECK_FALSE(admissible(6, 3, 3));
  CHECK(admissible(3, 4, 3));
  CHECK_FALSE(admissible(2, 4, 3));
  auto p = params_from_reduced(3, 4, 3);
  CHECK(p.v == 9);
  CHECK(p.b == 12);
}

TEST_CASE("girth against a brute-force oracle") {
  CHECK(girth(levi_graph(named("fano"))) == 6);
  CHECK(girth(levi_graph(named("pappus"))) == 6);
  CHECK_FALSE(girth(levi_graph(IncidenceStructure(3, {{0, 1, 2}}))).has_value());
  for (const auto& s : {named("fano"), named("pappus"), named("desargues"), named("moebius_kantor"),
                        affine_plane(3), transversal_design(2, 3), cyclic(6, {0, 1}),
                        IncidenceStructure(4, {{0, 1}, {0, 1, 2}}), IncidenceStructure(5, {{0, 1}, {2, 3}})}) {
    const int expected = testutil::brute_force_girth(s);
    const auto got = girth(levi_graph(s));
    if (expected < 0) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(*got == expected);
    }
  }
  // The hexagon K_{3,3} minus a perfect matching is a 6-cycle: girth 6 as well.
  CHECK(girth(levi_graph(cyclic(3, {0, 1}))) == 6);
  // Two points on two common lines give a 4-cycle.
  CHECK(girth(levi_graph(IncidenceStructure(4, {{0, 1}, {0, 1, 2}}))) == 4);
}

TEST_CASE("connected components") {
  CHECK(connected_components(named("fano")).size() == 1);
  CHECK(connected_components(named("pappus")).size() == 1);
  auto two = testutil::disjoint_union(named("fano"), named("fano"));
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].points.size() == 7);
  CHECK(comps[1].lines.size() == 7);
}

TEST_CASE("repair connectivity") {
  auto fano = named("fano");
  CHECK(repair_connectivity(fano) == fano);

  auto two = testutil::disjoint_union(fano, fano);
  auto fixed = repair_connectivity(two, two.incidences());
  CHECK(connected_components(fixed).size() == 1);
  CHECK(validate(fixed) == validate(two));

  auto three = testutil::disjoint_union(two, fano);
  auto fixed3 = repair_connectivity(three);
  CHECK(connected_components(fixed3).size() == 1);
  CHECK(validate(fixed3) == validate(three));
}

TEST_CASE("common lines") {
  auto fano = cyclic(7, {0, 1, 3});
  auto lines = common_lines(fano, 0, 1);
  REQUIRE(lines.size() == 1);
  CHECK(fano.line(lines[0]) == std::vector<int>{0, 1, 3});

  // Pappus is AG(2,3) minus the vertical class: points 0 and 1 (same column)
  // share no line.
  CHECK(common_lines(named("pappus"), 0, 1).empty());

  IncidenceStructure bad(4, {{0, 1}, {0, 1, 2}});
  CHECK(common_lines(bad, 0, 1).size() == 2);
}

TEST_CASE("valid configurations have girth at least six, and conversely") {
  for (const auto& s : {named("fano"), named("moebius_kantor"), named("pappus"), named("desargues"),
                        affine_plane(3), projective_plane(3), transversal_design(3, 5)}) {
    auto p = validate(s);
    CHECK(*girth(levi_graph(s)) >= 6);
    CHECK(p.d * p.k / p.gcd_rk() == p.v);
    CHECK(p.d * p.r / p.gcd_rk() == p.b);
  }
  // A biregular structure with girth 4 fails.
  IncidenceStructure s(6, {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}, {3, 4, 5}});
  CHECK(*girth(levi_graph(s)) == 4);
  CHECK_FALSE(try_validate(s).has_value());
}
