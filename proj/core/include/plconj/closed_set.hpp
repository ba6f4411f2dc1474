// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "plconj/rational.hpp"

namespace plconj {

/// Finite set of rationals kept as a sorted vector without duplicates.
class RationalSet {
 public:
  using const_iterator = std::vector<Rational>::const_iterator;

  RationalSet() = default;
  RationalSet(std::initializer_list<Rational> values);
  explicit RationalSet(std::vector<Rational> values);

  void insert(const Rational& value);
  /// Union with another set.
  void merge(const RationalSet& other);

  bool contains(const Rational& value) const;
  /// Position of `value` in sorted order, or size() when absent.
  std::size_t index_of(const Rational& value) const;

  bool is_subset_of(const RationalSet& other) const;
  /// Elements of *this that are not in `other`.
  RationalSet minus(const RationalSet& other) const;

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& front() const { return values_.front(); }
  const Rational& back() const { return values_.back(); }
  const_iterator begin() const { return values_.begin(); }
  const_iterator end() const { return values_.end(); }
  const std::vector<Rational>& values() const { return values_; }

  /// Space-separated rationals.
  std::string to_string() const;

  friend bool operator==(const RationalSet&, const RationalSet&) = default;

 private:
  std::vector<Rational> values_;
};

/// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals in [0,1], in canonical form: components
/// sorted, pairwise disjoint and non-touching.
class ClosedSet1D {
 public:
  ClosedSet1D() = default;

  /// Canonical form of the union of `raw`. Throws DomainError when an
  /// interval leaves [0,1] or has lo > hi.
  static ClosedSet1D normalize(std::vector<Interval> raw);

  /// Parses the ';'-separated "lo..hi" / "pt" form. Empty text is the empty set.
  static ClosedSet1D parse(std::string_view text);

  const std::vector<Interval>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  bool contains(const Rational& x) const;

  std::string to_string() const;

  friend bool operator==(const ClosedSet1D&, const ClosedSet1D&) = default;

 private:
  std::vector<Interval> components_;
};

/// Points of F that bound an open interval of R \ F: exactly the component
/// endpoints of the canonical form.
RationalSet acc_points(const ClosedSet1D& set);

}  // namespace plconj
