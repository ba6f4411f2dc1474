// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/pl_map.hpp"

#include <cctype>

#include "plconj/errors.hpp"

namespace plconj {

PLMap PLMap::from_points(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw DomainError("a map needs at least the breakpoints at 0 and 1");
  if (points.front().x != Rational(0) || points.back().x != Rational(1)) {
    throw DomainError("breakpoints must start at x = 0 and end at x = 1");
  }
  for (const auto& p : points) {
    if (p.y < Rational(0) || p.y > Rational(1)) {
      throw DomainError("value " + p.y.to_string() + " at x = " + p.x.to_string() +
                        " leaves [0,1]");
    }
  }
  return PLMap(PLFunction::from_points(std::move(points)));
}

PLMap PLMap::from_function(PLFunction function) {
  return from_points(function.points());
}

PLMap PLMap::parse(std::string_view text) {
  std::vector<Breakpoint> pts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view token = text.substr(i, j - i);
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw DomainError("breakpoint '" + std::string(token) + "' is not of the form x:y");
    }
    pts.push_back({Rational::parse(token.substr(0, colon)), Rational::parse(token.substr(colon + 1))});
    i = j;
  }
  return from_points(std::move(pts));
}

PLMap PLMap::identity() { return from_points({{0, 0}, {1, 1}}); }

PLMap PLMap::constant(const Rational& c) { return from_points({{0, c}, {1, c}}); }

std::string PLMap::to_string() const {
  std::string out;
  for (const auto& p : breakpoints()) {
    if (!out.empty()) out += ' ';
    out += p.x.to_string() + ":" + p.y.to_string();
  }
  return out;
}

bool same_function(const PLMap& f, const PLMap& g) {
  return f.function().simplified() == g.function().simplified();
}

Rational evaluate(const PLMap& f, const Rational& x) { return f(x); }

PLMap compose(const PLMap& f, const PLMap& g, std::size_t piece_budget) {
  return PLMap::from_function(compose(f.function(), g.function(), piece_budget));
}

PLMap iterate(const PLMap& f, std::size_t n, std::size_t piece_budget) {
  if (n == 0) throw DomainError("iterate: n must be positive");
  PLFunction result = f.function().simplified();
  if (result.pieces() > piece_budget) throw BudgetExceeded(result.pieces(), piece_budget);
  for (std::size_t k = 1; k < n; ++k) result = compose(f.function(), result, piece_budget);
  return PLMap::from_function(std::move(result));
}

ClosedSet1D preimage_set(const PLMap& f, const Rational& y) {
  return ClosedSet1D::normalize(f.function().level_set(y));
}

ClosedSet1D fixed_set(const PLMap& f, std::size_t n, std::size_t piece_budget) {
  return ClosedSet1D::normalize(iterate(f, n, piece_budget).function().fixed_points());
}

RationalSet sharp_extrema(const PLMap& f) {
  std::vector<Rational> out{Rational(0), Rational(1)};
  const auto& fn = f.function();
  for (std::size_t i = 1; i < fn.pieces(); ++i) {
    const int sl = fn.slope(i - 1).sign();
    const int sr = fn.slope(i).sign();
    const bool left_max = sl > 0 && sr <= 0;
    const bool right_max = sl >= 0 && sr < 0;
    const bool left_min = sl < 0 && sr >= 0;
    const bool right_min = sl <= 0 && sr > 0;
    if (left_max || right_max || left_min || right_min) out.push_back(fn.points()[i].x);
  }
  return RationalSet(std::move(out));
}

RationalSet plateau_values(const PLMap& f) {
  std::vector<Rational> out;
  const auto& pts = f.breakpoints();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].y == pts[i + 1].y) out.push_back(pts[i].y);
  }
  return RationalSet(std::move(out));
}

PLHomeo PLHomeo::from_map(PLMap map) {
  const auto& fn = map.function();
  if (fn.strictly_increasing() && fn.points().front().y == Rational(0) &&
      fn.points().back().y == Rational(1)) {
    return PLHomeo(std::move(map), Orientation::increasing);
  }
  if (fn.strictly_decreasing() && fn.points().front().y == Rational(1) &&
      fn.points().back().y == Rational(0)) {
    return PLHomeo(std::move(map), Orientation::decreasing);
  }
  throw ShapeError("not a homeomorphism of [0,1]: " + map.to_string());
}

PLHomeo PLHomeo::identity() { return from_map(PLMap::identity()); }

PLHomeo PLHomeo::reflection() { return from_map(PLMap::from_points({{0, 1}, {1, 0}})); }

PLHomeo PLHomeo::inverse() const {
  return PLHomeo(PLMap::from_function(map_.function().inverse()), orientation_);
}

PLMap conjugate_map(const PLHomeo& h, const PLMap& f, std::size_t piece_budget) {
  const PLMap f_hinv = compose(f, h.inverse().map(), piece_budget);
  return compose(h.map(), f_hinv, piece_budget);
}

std::string OrderMatrix::to_string() const {
  std::string out;
  for (std::size_t m = 0; m < size_; ++m) {
    for (std::size_t n = 0; n < size_; ++n) {
      if (n) out += ' ';
      out += (*this)(m, n) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

OrderMatrix orbit_order_pattern(const PLMap& f, const Rational& x, std::size_t length) {
  if (length == 0) throw DomainError("orbit_order_pattern: length must be positive");
  std::vector<Rational> orbit;
  orbit.reserve(length);
  orbit.push_back(x);
  while (orbit.size() < length) orbit.push_back(f(orbit.back()));
  OrderMatrix out(length);
  for (std::size_t m = 0; m < length; ++m) {
    for (std::size_t n = 0; n < length; ++n) out.set(m, n, orbit[m] < orbit[n]);
  }
  return out;
}

std::string kneading_prefix(const PLMap& f, std::size_t length) {
  const PLFunction fn = f.function().simplified();
  std::size_t turn = 0;
  for (std::size_t i = 0; i < fn.pieces(); ++i) {
    const int s = fn.slope(i).sign();
    if (s == 0) throw ShapeError("kneading_prefix: map has a flat piece");
    if (s < 0 && turn == 0) turn = i;
    if (s > 0 && turn != 0) throw ShapeError("kneading_prefix: map is not unimodal");
  }
  if (turn == 0) throw ShapeError("kneading_prefix: map has no interior maximum");
  const Rational c = fn.points()[turn].x;
  std::string out;
  Rational x = c;
  for (std::size_t k = 0; k < length; ++k) {
    x = fn(x);
    if (k) out += ',';
    out += x < c ? 'L' : (c < x ? 'R' : 'C');
  }
  return out;
}

}  // namespace plconj
