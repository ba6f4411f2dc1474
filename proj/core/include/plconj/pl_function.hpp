// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "plconj/closed_set.hpp"
#include "plconj/rational.hpp"

namespace plconj {

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function on a closed interval [lo, hi] with
/// lo < hi, given by its breakpoints. Values are unrestricted.
///
/// This is the workhorse behind PLMap: restrictions of a map to a gap,
/// inverse branches and witness pieces are all PLFunctions.
class PLFunction {
 public:
  /// Requires at least two points with strictly increasing x.
  static PLFunction from_points(std::vector<Breakpoint> points);
  /// The affine function on [lo, hi] through (lo, y_lo) and (hi, y_hi).
  static PLFunction linear(const Rational& lo, const Rational& hi, const Rational& y_lo,
                           const Rational& y_hi);

  const Rational& lo() const { return points_.front().x; }
  const Rational& hi() const { return points_.back().x; }
  const std::vector<Breakpoint>& points() const { return points_; }
  std::size_t pieces() const { return points_.size() - 1; }

  /// Throws DomainError outside [lo, hi].
  Rational operator()(const Rational& x) const;

  Rational slope(std::size_t piece) const;
  Rational min_value() const;
  Rational max_value() const;

  bool is_constant() const;
  bool strictly_increasing() const;
  bool strictly_decreasing() const;
  bool is_identity() const;

  /// Same function with collinear interior breakpoints removed.
  PLFunction simplified() const;
  /// Restriction to [a, b] with lo <= a < b <= hi.
  PLFunction restricted(const Rational& a, const Rational& b) const;
  /// Inverse of a strictly monotone function; throws ShapeError otherwise.
  PLFunction inverse() const;

  /// Canonical components of {x : f(x) = y}.
  std::vector<Interval> level_set(const Rational& y) const;
  /// Canonical components of {x : f(x) = x}.
  std::vector<Interval> fixed_points() const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;
  friend PLFunction compose(const PLFunction& outer, const PLFunction& inner, std::size_t budget);

 private:
  explicit PLFunction(std::vector<Breakpoint> points) : points_(std::move(points)) {}

  std::size_t piece_of(const Rational& x) const;

  std::vector<Breakpoint> points_;
};

/// outer ∘ inner. The range of `inner` must lie in the domain of `outer`.
/// Throws BudgetExceeded when the simplified result has more than `budget`
/// pieces.
PLFunction compose(const PLFunction& outer, const PLFunction& inner, std::size_t budget);

/// Glues functions on consecutive, abutting domains into one. Adjacent parts
/// must agree at the shared endpoint.
PLFunction concatenate(const std::vector<PLFunction>& parts);

/// Exact sup-norm of a - b over their common domain.
Rational sup_distance(const PLFunction& a, const PLFunction& b);

}  // namespace plconj
