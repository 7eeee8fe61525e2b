#include "confred/io.hpp"

#include <sstream>

#include "confred/families.hpp"
#include "doctest.h"

using namespace confred;

TEST_CASE("cfg round trip") {
  for (const auto& s : {named("fano"), named("pappus"), named("desargues"), affine_plane(3), projective_plane(3),
                        transversal_design(2, 3)}) {
    CHECK(parse_cfg_string(to_cfg_string(s, "a comment\nover two lines")) == s);
  }
}

TEST_CASE("cfg text format") {
  auto s = parse_cfg_string("# Fano\n7 7\n0 1 3\n1 2 4\n2 3 5\n\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n");
  CHECK(s == named("fano"));
  CHECK(to_cfg_string(IncidenceStructure(3, {{0, 1}, {1, 2}})) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("parse errors carry file, line and reason") {
  auto expect = [](const std::string& text, int line) {
    try {
      parse_cfg_string(text, "t.cfg");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.file() == "t.cfg");
      CHECK(e.line() == line);
      CHECK_FALSE(e.reason().empty());
    }
  };
  expect("3 1\n0 x\n", 2);
  expect("3\n", 1);
  expect("3 1\n0 5\n", 2);
  expect("3 1\n0 0\n", 2);
  expect("3 1\n0 1\n1 2\n", 3);
  expect("3 2\n0 1\n", 1);
  expect("# only a comment\n", 1);
  CHECK_THROWS_AS(read_cfg("/nonexistent/file.cfg"), ParseError);
}

TEST_CASE("levi dot output is stable") {
  auto dot = levi_dot(IncidenceStructure(2, {{0, 1}}));
  CHECK(dot == "graph levi {\n  p0 [shape=circle];\n  p1 [shape=circle];\n  l0 [shape=box];\n"
               "  p0 -- l0;\n  p1 -- l0;\n}\n");
}
