// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "plconj/closed_set.hpp"
#include "plconj/pl_function.hpp"
#include "plconj/rational.hpp"

namespace plconj {

inline constexpr std::size_t kDefaultPieceBudget = 100000;

/// Continuous piecewise-linear self-map of [0,1] with rational breakpoints.
///
/// Breakpoints start at x = 0, end at x = 1, increase strictly in x and have
/// values in [0,1]. The breakpoint list is kept as given; operations that
/// build new maps (compose, iterate, ...) return simplified lists.
///
/// Text form: whitespace-separated "x:y" pairs, e.g. "0:0 1/2:1 1:0".
class PLMap {
 public:
  /// Throws DomainError when the breakpoints violate the invariants above.
  static PLMap from_points(std::vector<Breakpoint> points);
  static PLMap from_function(PLFunction function);
  static PLMap parse(std::string_view text);

  static PLMap identity();
  static PLMap constant(const Rational& c);

  const std::vector<Breakpoint>& breakpoints() const { return function_.points(); }
  const PLFunction& function() const { return function_; }
  std::size_t pieces() const { return function_.pieces(); }

  Rational operator()(const Rational& x) const { return function_(x); }

  std::string to_string() const;

  /// Representation equality (same breakpoint list).
  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  explicit PLMap(PLFunction function) : function_(std::move(function)) {}

  PLFunction function_;
};

/// True when both maps are the same function of x.
bool same_function(const PLMap& f, const PLMap& g);

Rational evaluate(const PLMap& f, const Rational& x);

/// f ∘ g.
PLMap compose(const PLMap& f, const PLMap& g, std::size_t piece_budget = kDefaultPieceBudget);

/// f^n for n >= 1.
PLMap iterate(const PLMap& f, std::size_t n, std::size_t piece_budget = kDefaultPieceBudget);

/// Exact f^{-1}(y).
ClosedSet1D preimage_set(const PLMap& f, const Rational& y);

/// Exact Fix(f^n).
ClosedSet1D fixed_set(const PLMap& f, std::size_t n,
                      std::size_t piece_budget = kDefaultPieceBudget);

/// {0, 1} together with every left/right sharp local maximum and minimum.
///
/// A breakpoint z with left slope sl and right slope sr is
///   left sharp max   if sl > 0 and sr <= 0,
///   right sharp max  if sl >= 0 and sr < 0,
///   left sharp min   if sl < 0 and sr >= 0,
///   right sharp min  if sl <= 0 and sr > 0.
/// A point with zero slope on both sides is none of these.
RationalSet sharp_extrema(const PLMap& f);

/// Levels of the constant pieces: exactly the y whose preimage contains an
/// interval.
RationalSet plateau_values(const PLMap& f);

enum class Orientation { increasing, decreasing };

/// Piecewise-linear homeomorphism of [0,1].
class PLHomeo {
 public:
  /// Throws ShapeError unless `map` is strictly monotone with {h(0), h(1)} = {0, 1}.
  static PLHomeo from_map(PLMap map);
  static PLHomeo identity();
  /// x ↦ 1 - x.
  static PLHomeo reflection();

  const PLMap& map() const { return map_; }
  Orientation orientation() const { return orientation_; }
  PLHomeo inverse() const;

  Rational operator()(const Rational& x) const { return map_(x); }

 private:
  PLHomeo(PLMap map, Orientation orientation) : map_(std::move(map)), orientation_(orientation) {}

  PLMap map_;
  Orientation orientation_;
};

/// h ∘ f ∘ h^{-1}.
PLMap conjugate_map(const PLHomeo& h, const PLMap& f,
                    std::size_t piece_budget = kDefaultPieceBudget);

/// K x K comparison matrix of the orbit points f^0(x), ..., f^{K-1}(x):
/// entry (m, n) is f^m(x) < f^n(x).
class OrderMatrix {
 public:
  explicit OrderMatrix(std::size_t size) : size_(size), entries_(size * size, false) {}

  std::size_t size() const { return size_; }
  bool operator()(std::size_t m, std::size_t n) const { return entries_[m * size_ + n]; }
  void set(std::size_t m, std::size_t n, bool value) { entries_[m * size_ + n] = value; }

  /// Rows of space-separated 0/1 digits, one row per line.
  std::string to_string() const;

  friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<bool> entries_;
};

OrderMatrix orbit_order_pattern(const PLMap& f, const Rational& x, std::size_t length);

/// Itinerary of f(c), f^2(c), ..., f^L(c) for the turning point c of a
/// unimodal map, as "R,L,C,..." (right of c, left of c, at c). The map must
/// have increasing pieces followed by decreasing pieces, with no flat piece;
/// anything else raises ShapeError.
std::string kneading_prefix(const PLMap& f, std::size_t length);

}  // namespace plconj
