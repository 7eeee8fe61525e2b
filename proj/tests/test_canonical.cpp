#include "confred/canonical.hpp"

#include <random>

#include "confred/families.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace confred;

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(7);
  auto fano = named("fano");
  for (int i = 0; i < 50; ++i) CHECK(are_isomorphic(fano, testutil::random_relabel(fano, rng)));
}

TEST_CASE("distinct structures get distinct forms") {
  CHECK_FALSE(are_isomorphic(named("fano"), named("moebius_kantor")));
  CHECK(are_isomorphic(projective_plane(2), named("fano")));
  // The three 9_3 configurations: Pappus and two cyclic-type ones found by
  // the census; here cyclic(9) and Pappus differ.
  CHECK_FALSE(are_isomorphic(cyclic(9, {0, 1, 3}), named("pappus")));
}

TEST_CASE("points and lines are never exchanged") {
  // Both Levi graphs are a path on five vertices; b is the dual of a.
  IncidenceStructure a(3, {{0, 1}, {0, 2}});
  IncidenceStructure b(2, {{0, 1}, {0}, {1}});
  CHECK_FALSE(are_isomorphic(a, b));
}

TEST_CASE("canonical labelling maps into the canonical structure") {
  std::mt19937 rng(11);
  auto s = named("desargues");
  auto t = testutil::random_relabel(s, rng);
  auto ls = canonical_labeling(s);
  auto lt = canonical_labeling(t);
  CHECK(ls.form == lt.form);
  CHECK(s.relabeled(ls.point_map, ls.line_map) == t.relabeled(lt.point_map, lt.line_map));
  CHECK(canonical_structure(s) == canonical_structure(t));
  CHECK(ls.form.hex_digest().size() == 16);
}
