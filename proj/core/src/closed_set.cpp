// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/closed_set.hpp"

#include <algorithm>
#include <iterator>

#include "plconj/errors.hpp"

namespace plconj {

RationalSet::RationalSet(std::initializer_list<Rational> values)
    : RationalSet(std::vector<Rational>(values)) {}

RationalSet::RationalSet(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

void RationalSet::insert(const Rational& value) {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) values_.insert(it, value);
}

void RationalSet::merge(const RationalSet& other) {
  std::vector<Rational> out;
  out.reserve(values_.size() + other.values_.size());
  std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                 std::back_inserter(out));
  values_ = std::move(out);
}

bool RationalSet::contains(const Rational& value) const {
  return std::binary_search(values_.begin(), values_.end(), value);
}

std::size_t RationalSet::index_of(const Rational& value) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) return values_.size();
  return static_cast<std::size_t>(it - values_.begin());
}

bool RationalSet::is_subset_of(const RationalSet& other) const {
  return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                       values_.end());
}

RationalSet RationalSet::minus(const RationalSet& other) const {
  RationalSet out;
  std::set_difference(values_.begin(), values_.end(), other.values_.begin(),
                      other.values_.end(), std::back_inserter(out.values_));
  return out;
}

std::string RationalSet::to_string() const {
  std::string out;
  for (const auto& v : values_) {
    if (!out.empty()) out += ' ';
    out += v.to_string();
  }
  return out;
}

ClosedSet1D ClosedSet1D::normalize(std::vector<Interval> raw) {
  const Rational zero(0);
  const Rational one(1);
  for (const auto& iv : raw) {
    if (iv.hi < iv.lo) {
      throw DomainError("interval [" + iv.lo.to_string() + "," + iv.hi.to_string() +
                        "] has lo > hi");
    }
    if (iv.lo < zero || iv.hi > one) {
      throw DomainError("interval [" + iv.lo.to_string() + "," + iv.hi.to_string() +
                        "] leaves [0,1]");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  ClosedSet1D out;
  for (auto& iv : raw) {
    if (!out.components_.empty() && iv.lo <= out.components_.back().hi) {
      auto& last = out.components_.back();
      if (last.hi < iv.hi) last.hi = std::move(iv.hi);
    } else {
      out.components_.push_back(std::move(iv));
    }
  }
  return out;
}

ClosedSet1D ClosedSet1D::parse(std::string_view text) {
  std::vector<Interval> raw;
  while (!text.empty()) {
    const auto semi = text.find(';');
    std::string_view item = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      const Rational p = Rational::parse(item);
      raw.push_back({p, p});
    } else {
      raw.push_back({Rational::parse(item.substr(0, dots)), Rational::parse(item.substr(dots + 2))});
    }
  }
  return normalize(std::move(raw));
}

bool ClosedSet1D::contains(const Rational& x) const {
  auto it = std::upper_bound(components_.begin(), components_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == components_.begin()) return false;
  --it;
  return x <= it->hi;
}

std::string ClosedSet1D::to_string() const {
  std::string out;
  for (const auto& iv : components_) {
    if (!out.empty()) out += ';';
    out += iv.is_point() ? iv.lo.to_string() : iv.lo.to_string() + ".." + iv.hi.to_string();
  }
  return out;
}

RationalSet acc_points(const ClosedSet1D& set) {
  std::vector<Rational> pts;
  pts.reserve(2 * set.components().size());
  for (const auto& iv : set.components()) {
    pts.push_back(iv.lo);
    if (!iv.is_point()) pts.push_back(iv.hi);
  }
  return RationalSet(std::move(pts));
}

}  // namespace plconj
