// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference computations that work directly on breakpoint lists
// and share no algorithmic code with the library, plus seeded generators for
// the property tests.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plconj/pl_map.hpp"

namespace oracle {

using plconj::Breakpoint;
using plconj::Rational;
using Points = std::vector<Breakpoint>;
using Values = std::vector<Rational>;

Rational eval(const Points& f, const Rational& x);
Rational iterate_eval(const Points& f, const Rational& x, std::size_t n);

/// Sorted, deduplicated copy.
Values sorted(Values v);

/// M_f by probing f just left and right of every breakpoint.
Values sharp_extrema(const Points& f);
Values plateau_values(const Points& f);

/// Endpoints of the components of f^{-1}(y), solved piece by piece.
Values preimage_acc(const Points& f, const Rational& y);

/// True when f(x) = y holds on a whole interval around some point.
bool preimage_has_interval(const Points& f, const Rational& y);

/// Endpoints of the components of Fix(f^n), by enumerating itineraries of
/// length n through the pieces of f.
Values fixed_acc(const Points& f, std::size_t n);

/// S_1..S_depth recomputed from scratch each round (no worklist, no early stop).
std::vector<Values> stages(const Points& f, std::size_t period_bound, std::size_t depth);

/// entry[m][n] = x_m < x_n along the orbit.
std::vector<std::vector<bool>> order_pattern(const Points& f, const Rational& x, std::size_t length);

/// Increasing homeomorphism with fixed points j/k (j = 0..k), one gap per
/// label: 'A' above the diagonal, 'B' below, 'I' identity. `variant` selects
/// one of two different realizations of the same labels.
Points monotone_with_labels(const std::string& labels, int variant);

/// All label strings over {A,B,I} of the given length with no "II".
std::vector<std::string> label_strings(std::size_t length);

/// Hand-picked maps with constant, decreasing and periodic gaps whose
/// closures stabilize at period bound 2, in text form.
std::vector<std::string> stabilizing_specimens();

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng_);
  }

  /// Random PL map with at most `max_pieces` pieces on the grid 1/denominator.
  Points map(std::size_t max_pieces, std::int64_t denominator);
  /// Random increasing PL homeomorphism with at most `max_pieces` pieces.
  Points homeo(std::size_t max_pieces, std::int64_t denominator);
  Rational point(std::int64_t denominator);

 private:
  Values grid_subset(std::size_t interior, std::int64_t denominator);

  std::mt19937_64 rng_;
};

}  // namespace oracle
