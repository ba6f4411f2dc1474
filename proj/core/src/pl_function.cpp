// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/pl_function.hpp"

#include <algorithm>

#include "plconj/errors.hpp"

namespace plconj {

namespace {

// Components of {x : d(x) = 0} for the PL function with values d[i] at xs[i].
std::vector<Interval> zero_set(const std::vector<Breakpoint>& pts,
                               const std::vector<Rational>& d) {
  std::vector<Interval> out;
  auto push = [&out](const Rational& lo, const Rational& hi) {
    if (!out.empty() && lo <= out.back().hi) {
      if (out.back().hi < hi) out.back().hi = hi;
    } else {
      out.push_back({lo, hi});
    }
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const int s0 = d[i].sign();
    const int s1 = d[i + 1].sign();
    if (s0 == 0 && s1 == 0) {
      push(pts[i].x, pts[i + 1].x);
    } else if (s0 == 0) {
      push(pts[i].x, pts[i].x);
    } else if (s1 == 0) {
      push(pts[i + 1].x, pts[i + 1].x);
    } else if (s0 != s1) {
      const Rational x = pts[i].x + d[i] / (d[i] - d[i + 1]) * (pts[i + 1].x - pts[i].x);
      push(x, x);
    }
  }
  return out;
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

}  // namespace

PLFunction PLFunction::from_points(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw DomainError("a piecewise-linear function needs two breakpoints");
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i].x < points[i + 1].x)) {
      throw DomainError("breakpoints not strictly increasing at x = " + points[i + 1].x.to_string());
    }
  }
  return PLFunction(std::move(points));
}

PLFunction PLFunction::linear(const Rational& lo, const Rational& hi, const Rational& y_lo,
                              const Rational& y_hi) {
  return from_points({{lo, y_lo}, {hi, y_hi}});
}

std::size_t PLFunction::piece_of(const Rational& x) const {
  // Index i of the piece [x_i, x_{i+1}] containing x.
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  std::size_t i = static_cast<std::size_t>(it - points_.begin());
  i = i == 0 ? 0 : i - 1;
  return std::min(i, pieces() - 1);
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x < lo() || x > hi()) {
    throw DomainError("x = " + x.to_string() + " outside [" + lo().to_string() + "," +
                      hi().to_string() + "]");
  }
  const std::size_t i = piece_of(x);
  const auto& a = points_[i];
  const auto& b = points_[i + 1];
  if (x == a.x) return a.y;
  if (x == b.x) return b.y;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Rational PLFunction::slope(std::size_t piece) const {
  const auto& a = points_[piece];
  const auto& b = points_[piece + 1];
  return (b.y - a.y) / (b.x - a.x);
}

Rational PLFunction::min_value() const {
  return std::min_element(points_.begin(), points_.end(),
                          [](const Breakpoint& a, const Breakpoint& b) { return a.y < b.y; })
      ->y;
}

Rational PLFunction::max_value() const {
  return std::max_element(points_.begin(), points_.end(),
                          [](const Breakpoint& a, const Breakpoint& b) { return a.y < b.y; })
      ->y;
}

bool PLFunction::is_constant() const {
  return std::all_of(points_.begin(), points_.end(),
                     [this](const Breakpoint& p) { return p.y == points_.front().y; });
}

bool PLFunction::strictly_increasing() const {
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (!(points_[i].y < points_[i + 1].y)) return false;
  }
  return true;
}

bool PLFunction::strictly_decreasing() const {
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (!(points_[i + 1].y < points_[i].y)) return false;
  }
  return true;
}

bool PLFunction::is_identity() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const Breakpoint& p) { return p.x == p.y; });
}

PLFunction PLFunction::simplified() const {
  std::vector<Breakpoint> out;
  out.reserve(points_.size());
  out.push_back(points_.front());
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    if (!collinear(out.back(), points_[i], points_[i + 1])) out.push_back(points_[i]);
  }
  out.push_back(points_.back());
  return PLFunction(std::move(out));
}

PLFunction PLFunction::restricted(const Rational& a, const Rational& b) const {
  if (!(a < b) || a < lo() || b > hi()) {
    throw DomainError("bad restriction [" + a.to_string() + "," + b.to_string() + "]");
  }
  std::vector<Breakpoint> out;
  out.push_back({a, (*this)(a)});
  for (const auto& p : points_) {
    if (a < p.x && p.x < b) out.push_back(p);
  }
  out.push_back({b, (*this)(b)});
  return PLFunction(std::move(out));
}

PLFunction PLFunction::inverse() const {
  std::vector<Breakpoint> out;
  out.reserve(points_.size());
  if (strictly_increasing()) {
    for (const auto& p : points_) out.push_back({p.y, p.x});
  } else if (strictly_decreasing()) {
    for (auto it = points_.rbegin(); it != points_.rend(); ++it) out.push_back({it->y, it->x});
  } else {
    throw ShapeError("inverse of a function that is not strictly monotone");
  }
  return PLFunction(std::move(out));
}

std::vector<Interval> PLFunction::level_set(const Rational& y) const {
  std::vector<Rational> d;
  d.reserve(points_.size());
  for (const auto& p : points_) d.push_back(p.y - y);
  return zero_set(points_, d);
}

std::vector<Interval> PLFunction::fixed_points() const {
  std::vector<Rational> d;
  d.reserve(points_.size());
  for (const auto& p : points_) d.push_back(p.y - p.x);
  return zero_set(points_, d);
}

PLFunction compose(const PLFunction& outer, const PLFunction& inner, std::size_t budget) {
  if (inner.min_value() < outer.lo() || inner.max_value() > outer.hi()) {
    throw DomainError("composition: inner range leaves the outer domain");
  }
  const auto& ip = inner.points();
  const auto& op = outer.points();
  std::vector<Breakpoint> out;
  out.reserve(ip.size() + op.size());
  out.push_back({ip.front().x, outer(ip.front().y)});
  for (std::size_t i = 0; i + 1 < ip.size(); ++i) {
    const auto& a = ip[i];
    const auto& b = ip[i + 1];
    if (a.y != b.y) {
      // Outer breakpoints strictly between the two inner values, in x order.
      const Rational& ylo = a.y < b.y ? a.y : b.y;
      const Rational& yhi = a.y < b.y ? b.y : a.y;
      auto first = std::upper_bound(op.begin(), op.end(), ylo,
                                    [](const Rational& v, const Breakpoint& p) { return v < p.x; });
      auto last = std::lower_bound(op.begin(), op.end(), yhi,
                                   [](const Breakpoint& p, const Rational& v) { return p.x < v; });
      const Rational scale = (b.x - a.x) / (b.y - a.y);
      if (a.y < b.y) {
        for (auto it = first; it != last; ++it) out.push_back({a.x + (it->x - a.y) * scale, it->y});
      } else {
        for (auto it = std::make_reverse_iterator(last); it != std::make_reverse_iterator(first);
             ++it) {
          out.push_back({a.x + (it->x - a.y) * scale, it->y});
        }
      }
    }
    out.push_back({b.x, outer(b.y)});
  }
  PLFunction result = PLFunction(std::move(out)).simplified();
  if (result.pieces() > budget) throw BudgetExceeded(result.pieces(), budget);
  return result;
}

PLFunction concatenate(const std::vector<PLFunction>& parts) {
  if (parts.empty()) throw DomainError("concatenate: no parts");
  std::vector<Breakpoint> out = parts.front().points();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& pts = parts[k].points();
    if (pts.front() != out.back()) {
      throw DomainError("concatenate: parts do not abut at x = " + pts.front().x.to_string());
    }
    out.insert(out.end(), pts.begin() + 1, pts.end());
  }
  return PLFunction::from_points(std::move(out));
}

Rational sup_distance(const PLFunction& a, const PLFunction& b) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw DomainError("sup_distance: domains differ");
  std::vector<Rational> xs;
  xs.reserve(a.points().size() + b.points().size());
  for (const auto& p : a.points()) xs.push_back(p.x);
  for (const auto& p : b.points()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Rational best(0);
  for (const auto& x : xs) {
    const Rational d = (a(x) - b(x)).abs();
    if (best < d) best = d;
  }
  return best;
}

}  // namespace plconj
