// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "mapspec.hpp"
#include "support/helpers.hpp"

using namespace plconj;
using namespace plconj::cli;
using testing::pl;
using testing::q;

TEST_CASE("inline breakpoints and families") {
  CHECK(parse_map("0:0 1/2:1 1:0") == pl("0:0 1/2:1 1:0"));
  CHECK(parse_map("tent(3/2)") == pl("0:0 1/2:3/4 1:0"));
  CHECK(parse_map("tent(2)") == pl("0:0 1/2:1 1:0"));
  CHECK(parse_map("scaled-tent(1/4)") == pl("0:0 1/2:1/4 1:0"));
  CHECK(parse_map("identity") == PLMap::identity());
  CHECK(parse_map("constant(1/3)") == PLMap::constant(q("1/3")));
  CHECK(parse_map("  tent ( 1 )\n") == pl("0:0 1/2:1/2 1:0"));
  CHECK(parse_map("conjugate(tent(2), 0:0 1/2:1/3 1:1)") == pl("0:0 1/6:1/3 1/3:1 2/3:1/3 1:0"));
  CHECK(same_function(parse_map("conjugate(identity, 0:1 1:0)"), PLMap::identity()));
}

TEST_CASE("syntax errors carry positions and expectations") {
  try {
    parse_mapspec("tent(1/2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
    CHECK(e.expected() == std::vector<std::string>{"')'"});
  }
  try {
    parse_mapspec("0:0\n1/2 1:0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
    CHECK(e.expected() == std::vector<std::string>{"':'"});
  }
  try {
    parse_mapspec("wobble(1)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 1);
    CHECK(e.expected().size() == 6);
    CHECK(std::string(e.what()).find("found 'wobble'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_mapspec(""), ParseError);
  CHECK_THROWS_AS(parse_mapspec("tent(0.5)"), ParseError);
  CHECK_THROWS_AS(parse_mapspec("identity identity"), ParseError);
  CHECK_THROWS_AS(parse_mapspec("conjugate(identity identity)"), ParseError);
}

TEST_CASE("semantic errors") {
  try {
    parse_mapspec("0:0 1:0 1/2:1");
    FAIL("expected a semantic error");
  } catch (const SemanticError& e) {
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()).find("breakpoints not increasing") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_mapspec("tent(5/2)"), SemanticError);
  CHECK_THROWS_AS(parse_mapspec("tent(0)"), SemanticError);
  CHECK_THROWS_AS(parse_mapspec("constant(3/2)"), SemanticError);
  CHECK_THROWS_AS(parse_mapspec("scaled-tent(2)"), SemanticError);
  CHECK_THROWS_AS(parse_mapspec("0:0 1/2:3/2 1:0"), SemanticError);
  CHECK_THROWS_AS(parse_mapspec("0:0 1/2:1"), SemanticError);
  CHECK_THROWS_AS(parse_mapspec("0:0 1/2:1/0 1:0"), SemanticError);
  CHECK_THROWS_AS(parse_mapspec("conjugate(identity, tent(2))"), SemanticError);
  CHECK_NOTHROW(parse_mapspec("constant(0)"));
  CHECK_NOTHROW(parse_mapspec("constant(1)"));
}

TEST_CASE("printing") {
  CHECK(print(parse_mapspec("0:0  2/4:1 1:0")) == "0:0 1/2:1 1:0");
  CHECK(print(parse_mapspec("conjugate( tent(4/2),0:0 1/2:1/3 1:1)")) ==
        "conjugate(tent(2), 0:0 1/2:1/3 1:1)");
}

namespace {

std::string random_spec_text(oracle::Generator& gen, int level) {
  switch (gen.next(level > 0 ? 6 : 5)) {
    case 0: return "tent(" + Rational(1 + static_cast<std::int64_t>(gen.next(8)), 4).to_string() + ")";
    case 1: return "scaled-tent(" + Rational(1 + static_cast<std::int64_t>(gen.next(4)), 4).to_string() + ")";
    case 2: return "identity";
    case 3: return "constant(" + gen.point(6).to_string() + ")";
    case 4: return PLMap::from_points(gen.map(3, 6)).to_string();
    default: {
      const PLMap h = PLMap::from_points(gen.homeo(3, 6));
      return "conjugate(" + random_spec_text(gen, level - 1) + ", " + h.to_string() + ")";
    }
  }
}

}  // namespace

TEST_CASE("property: print round trips") {
  oracle::Generator gen(0x5eed0501);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text = random_spec_text(gen, 2);
    CAPTURE(text);
    const MapSpec spec = parse_mapspec(text);
    const std::string printed = print(spec);
    CHECK(parse_mapspec(printed) == spec);
    CHECK(print(parse_mapspec(printed)) == printed);
    CHECK(parse_map(printed) == elaborate(spec));
  }
}
