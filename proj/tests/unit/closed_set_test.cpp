// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "plconj/closed_set.hpp"
#include "plconj/errors.hpp"
#include "support/helpers.hpp"

using plconj::ClosedSet1D;
using plconj::Interval;
using plconj::Rational;
using testing::q;
using testing::set_of;

TEST_CASE("normalize merges touching and overlapping intervals") {
  CHECK(ClosedSet1D::normalize({{q("0"), q("1/2")}, {q("1/2"), q("1")}}).to_string() == "0..1");
  CHECK(ClosedSet1D::normalize({{q("1/4"), q("1/4")}}).to_string() == "1/4");
  CHECK(ClosedSet1D::normalize({{q("0"), q("1/4")}, {q("1/8"), q("3/8")}}).to_string() == "0..3/8");
  CHECK(ClosedSet1D::normalize({}).to_string().empty());
}

TEST_CASE("normalize rejects bad intervals") {
  CHECK_THROWS_AS(ClosedSet1D::normalize({{q("1/2"), q("1/4")}}), plconj::DomainError);
  CHECK_THROWS_AS(ClosedSet1D::normalize({{q("-1/2"), q("1/4")}}), plconj::DomainError);
  CHECK_THROWS_AS(ClosedSet1D::normalize({{q("1/2"), q("3/2")}}), plconj::DomainError);
}

TEST_CASE("text form round trips") {
  for (const char* text : {"0..1/4;1/2;3/4..1", "1/3", "", "0..1"}) {
    CAPTURE(text);
    CHECK(ClosedSet1D::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(ClosedSet1D::parse("1/2..1/4"), plconj::DomainError);
  CHECK_THROWS_AS(ClosedSet1D::parse("0..x"), plconj::DomainError);
}

TEST_CASE("accessible points") {
  CHECK(plconj::acc_points(ClosedSet1D::parse("0..1")) == set_of("0 1"));
  CHECK(plconj::acc_points(ClosedSet1D::parse("1/2")) == set_of("1/2"));
  CHECK(plconj::acc_points(ClosedSet1D::parse("0..1/4;1/2;3/4..1")) == set_of("0 1/4 1/2 3/4 1"));
  CHECK(plconj::acc_points(ClosedSet1D{}).empty());
}

TEST_CASE("rational set operations") {
  plconj::RationalSet s = set_of("1/2 0 1 1/2");
  CHECK(s.to_string() == "0 1/2 1");
  CHECK(s.index_of(q("1/2")) == 1);
  CHECK(s.index_of(q("1/3")) == s.size());
  s.insert(q("1/4"));
  CHECK(s == set_of("0 1/4 1/2 1"));
  CHECK(set_of("0 1").is_subset_of(s));
  CHECK_FALSE(set_of("0 1/3").is_subset_of(s));
  CHECK(s.minus(set_of("0 1")) == set_of("1/4 1/2"));
  s.merge(set_of("1/8 1"));
  CHECK(s == set_of("0 1/8 1/4 1/2 1"));
}

namespace {

std::vector<Interval> random_intervals(oracle::Generator& gen) {
  std::vector<Interval> raw;
  const auto count = gen.next(5);
  for (std::uint64_t i = 0; i < count; ++i) {
    Rational a = gen.point(16);
    Rational b = gen.next(3) == 0 ? a : gen.point(16);
    if (b < a) std::swap(a, b);
    raw.push_back({a, b});
  }
  return raw;
}

}  // namespace

TEST_CASE("property: normalize is idempotent and order-insensitive") {
  oracle::Generator gen(0x5eed0001);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Interval> raw = random_intervals(gen);
    const ClosedSet1D once = ClosedSet1D::normalize(raw);
    CHECK(ClosedSet1D::normalize(once.components()) == once);
    std::reverse(raw.begin(), raw.end());
    CHECK(ClosedSet1D::normalize(raw) == once);
    // Membership agrees with the raw union on a grid.
    for (int k = 0; k <= 32; ++k) {
      const Rational x(k, 32);
      const bool in_raw = std::any_of(raw.begin(), raw.end(),
                                      [&](const Interval& iv) { return iv.lo <= x && x <= iv.hi; });
      CHECK(once.contains(x) == in_raw);
    }
  }
}

TEST_CASE("property: accessible points lie in the set and count endpoints") {
  oracle::Generator gen(0x5eed0002);
  for (int trial = 0; trial < 300; ++trial) {
    const ClosedSet1D f = ClosedSet1D::normalize(random_intervals(gen));
    const plconj::RationalSet acc = plconj::acc_points(f);
    for (const auto& x : acc) CHECK(f.contains(x));
    const auto& comps = f.components();
    const bool any_point =
        std::any_of(comps.begin(), comps.end(), [](const Interval& iv) { return iv.is_point(); });
    CHECK(acc.size() <= 2 * comps.size());
    CHECK((acc.size() == 2 * comps.size()) == !any_point);
  }
}
