// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "plconj/errors.hpp"
#include "plconj/pl_map.hpp"
#include "support/helpers.hpp"

using namespace plconj;
using testing::pl;
using testing::q;
using testing::set_of;

namespace {

std::vector<Rational> grid(std::int64_t n) {
  std::vector<Rational> out;
  for (std::int64_t k = 0; k <= n; ++k) out.emplace_back(k, n);
  return out;
}

PLHomeo random_homeo(oracle::Generator& gen) {
  return PLHomeo::from_map(PLMap::from_points(gen.homeo(6, 12)));
}

RationalSet image(const PLHomeo& h, const RationalSet& s) {
  RationalSet out;
  for (const auto& x : s) out.insert(h(x));
  return out;
}

}  // namespace

TEST_CASE("text form") {
  const PLMap f = pl("0:0 1/2:1 1:0");
  CHECK(f.to_string() == "0:0 1/2:1 1:0");
  CHECK(pl(" 0:0\n 2/4:1   1:0 ") == f);
  CHECK(pl(f.to_string()) == f);
  CHECK_THROWS_AS(pl("0:0 1/2 1:0"), DomainError);
  CHECK_THROWS_AS(pl("0:0 1/2:1"), DomainError);
  CHECK_THROWS_AS(pl("1/4:0 1:0"), DomainError);
  CHECK_THROWS_AS(pl("0:0 1/2:3/2 1:0"), DomainError);
  CHECK_THROWS_AS(pl("0:0 1/2:1 1/2:0 1:0"), DomainError);
  CHECK_THROWS_AS(pl("0:0"), DomainError);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(testing::tent(), q("1/3")) == q("2/3"));
  CHECK(evaluate(PLMap::identity(), q("7/13")) == q("7/13"));
  CHECK(evaluate(PLMap::constant(q("2/9")), q("5/11")) == q("2/9"));
  CHECK_THROWS_AS(evaluate(testing::tent(), q("3/2")), DomainError);
}

TEST_CASE("compose and iterate") {
  const PLMap t = testing::tent();
  CHECK(same_function(compose(PLMap::identity(), t), t));
  CHECK(compose(t, t) == pl("0:0 1/4:1 1/2:0 3/4:1 1:0"));
  CHECK(compose(PLMap::constant(q("1/3")), t) == PLMap::constant(q("1/3")));
  CHECK(iterate(t, 1) == t);
  CHECK(iterate(t, 2) == pl("0:0 1/4:1 1/2:0 3/4:1 1:0"));
  const PLMap g2 = iterate(testing::quarter_tent(), 2);
  CHECK(evaluate(g2, q("1/2")) == q("1/8"));
  CHECK(g2.function().max_value() == q("1/8"));
  CHECK(iterate(t, 10).pieces() == 1024);
  CHECK_THROWS_AS(iterate(t, 12, 2000), BudgetExceeded);
}

TEST_CASE("preimages and fixed sets") {
  CHECK(preimage_set(testing::tent(), q("1/2")).to_string() == "1/4;3/4");
  CHECK(preimage_set(PLMap::constant(q("1/3")), q("1/3")).to_string() == "0..1");
  CHECK(preimage_set(testing::quarter_tent(), q("1/2")).empty());
  CHECK(fixed_set(testing::tent(), 1).to_string() == "0;2/3");
  CHECK(fixed_set(testing::tent(), 2).to_string() == "0;2/5;2/3;4/5");
  CHECK(fixed_set(PLMap::identity(), 1).to_string() == "0..1");
  CHECK(fixed_set(pl("0:0 1/4:1/4 1/2:1/8 3/4:3/4 1:1"), 1).to_string() == "0..1/4;3/4..1");
}

TEST_CASE("sharp extrema and plateaus") {
  const PLMap plateau = pl("0:0 1/4:1/2 3/4:1/2 1:0");
  CHECK(sharp_extrema(testing::tent()) == set_of("0 1/2 1"));
  CHECK(sharp_extrema(PLMap::identity()) == set_of("0 1"));
  CHECK(sharp_extrema(plateau) == set_of("0 1/4 3/4 1"));
  CHECK(sharp_extrema(pl("0:0 1/4:1/4 1/2:1/4 3/4:1/4 1:1")) == set_of("0 1/4 3/4 1"));
  CHECK(sharp_extrema(pl("0:0 1/3:1/3 2/3:2/3 1:1")) == set_of("0 1"));
  CHECK(plateau_values(testing::tent()).empty());
  CHECK(plateau_values(PLMap::constant(q("1/3"))) == set_of("1/3"));
  CHECK(plateau_values(plateau) == set_of("1/2"));
}

TEST_CASE("homeomorphisms and conjugation") {
  CHECK_THROWS_AS(PLHomeo::from_map(testing::tent()), ShapeError);
  CHECK_THROWS_AS(PLHomeo::from_map(pl("0:0 1/2:1/2 1:1/2")), ShapeError);
  const PLHomeo r = PLHomeo::reflection();
  CHECK(r.orientation() == Orientation::decreasing);
  CHECK(PLHomeo::identity().orientation() == Orientation::increasing);
  CHECK(same_function(conjugate_map(PLHomeo::identity(), testing::tent()), testing::tent()));
  // R ∘ tent ∘ R = 1 - tent: the domain symmetry does not survive the flip of values.
  CHECK(conjugate_map(r, testing::tent()) == pl("0:1 1/2:0 1:1"));
  CHECK(same_function(conjugate_map(r, pl("0:1/2 1/2:1/4 1:1/2")), pl("0:1/2 1/2:3/4 1:1/2")));
  CHECK(same_function(conjugate_map(r, testing::below_diagonal()), testing::above_diagonal()));
  const PLHomeo h = PLHomeo::from_map(pl("0:0 1/2:1/3 1:1"));
  CHECK(same_function(h.inverse().map(), pl("0:0 1/3:1/2 1:1")));
  CHECK(conjugate_map(h, testing::tent()) == pl("0:0 1/6:1/3 1/3:1 2/3:1/3 1:0"));
}

TEST_CASE("orbit order patterns") {
  const OrderMatrix id = orbit_order_pattern(PLMap::identity(), q("1/3"), 5);
  for (std::size_t m = 0; m < 5; ++m) {
    for (std::size_t n = 0; n < 5; ++n) CHECK_FALSE(id(m, n));
  }
  const OrderMatrix down = orbit_order_pattern(testing::below_diagonal(), q("1/2"), 3);
  for (std::size_t m = 0; m < 3; ++m) {
    for (std::size_t n = 0; n < 3; ++n) CHECK(down(m, n) == (m > n));
  }
  CHECK(down.to_string() == "0 0 0\n1 0 0\n1 1 0\n");
}

TEST_CASE("kneading prefixes") {
  CHECK(kneading_prefix(testing::tent(), 4) == "R,L,L,L");
  CHECK(kneading_prefix(pl("0:0 1/3:1 1:0"), 4) == "R,L,L,L");
  CHECK(kneading_prefix(pl("0:0 1/2:3/4 1:0"), 4) == "R,L,R,R");
  CHECK(kneading_prefix(pl("0:0 1/2:1/2 1:0"), 2) == "C,C");
  CHECK_THROWS_AS(kneading_prefix(PLMap::identity(), 4), ShapeError);
  CHECK_THROWS_AS(kneading_prefix(pl("0:0 1/4:1/2 3/4:1/2 1:0"), 4), ShapeError);
  CHECK_THROWS_AS(kneading_prefix(pl("0:0 1/4:1 1/2:0 3/4:1 1:0"), 4), ShapeError);
}

TEST_CASE("property: compose is associative and iterate matches repeated evaluation") {
  oracle::Generator gen(0x5eed0101);
  for (int trial = 0; trial < 60; ++trial) {
    const PLMap f = PLMap::from_points(gen.map(4, 10));
    const PLMap g = PLMap::from_points(gen.map(4, 10));
    const PLMap h = PLMap::from_points(gen.map(4, 10));
    const PLMap left = compose(f, compose(g, h));
    const PLMap right = compose(compose(f, g), h);
    CHECK(same_function(left, right));
    const PLMap f3 = iterate(f, 3);
    for (const auto& x : grid(60)) {
      CHECK(evaluate(left, x) == oracle::eval(f.breakpoints(), oracle::eval(g.breakpoints(), oracle::eval(h.breakpoints(), x))));
      CHECK(evaluate(f3, x) == oracle::iterate_eval(f.breakpoints(), x, 3));
    }
  }
}

TEST_CASE("property: preimages and fixed sets agree with the oracles") {
  oracle::Generator gen(0x5eed0102);
  for (int trial = 0; trial < 80; ++trial) {
    const PLMap f = PLMap::from_points(gen.map(5, 12));
    const auto& pts = f.breakpoints();
    for (const auto& y : grid(12)) {
      const ClosedSet1D pre = preimage_set(f, y);
      CHECK(acc_points(pre) == testing::set_of(oracle::preimage_acc(pts, y)));
      for (const auto& c : pre.components()) {
        CHECK(evaluate(f, c.lo) == y);
        CHECK(evaluate(f, c.hi) == y);
      }
      for (const auto& x : grid(48)) {
        if (evaluate(f, x) == y) CHECK(pre.contains(x));
      }
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      const ClosedSet1D fix = fixed_set(f, n);
      CHECK(acc_points(fix) == testing::set_of(oracle::fixed_acc(pts, n)));
      for (const auto& x : grid(48)) {
        CHECK(fix.contains(x) == (oracle::iterate_eval(pts, x, n) == x));
      }
    }
    CHECK(sharp_extrema(f) == testing::set_of(oracle::sharp_extrema(pts)));
    CHECK(plateau_values(f) == testing::set_of(oracle::plateau_values(pts)));
  }
}

TEST_CASE("property: extrema, plateaus and periodic points are conjugacy invariant") {
  oracle::Generator gen(0x5eed0103);
  for (int trial = 0; trial < 60; ++trial) {
    const PLMap f = PLMap::from_points(gen.map(5, 12));
    const PLHomeo h = random_homeo(gen);
    const PLMap g = conjugate_map(h, f);
    CHECK(sharp_extrema(g) == image(h, sharp_extrema(f)));
    CHECK(plateau_values(g) == image(h, plateau_values(f)));
    for (std::size_t n = 1; n <= 2; ++n) {
      CHECK(acc_points(fixed_set(g, n)) == image(h, acc_points(fixed_set(f, n))));
    }
    const Rational x = gen.point(24);
    CHECK(orbit_order_pattern(f, x, 12) == orbit_order_pattern(g, h(x), 12));
  }
}
