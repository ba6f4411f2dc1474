// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plconj/analysis.hpp"
#include "plconj/errors.hpp"
#include "plconj/pl_function.hpp"
#include "plconj/pl_map.hpp"

namespace plconj {

inline constexpr std::size_t kDefaultWitnessDepth = 8;

/// Finite monotone bijection between two sets of rationals, as pairs sorted by
/// the first coordinate.
struct Matching {
  std::vector<std::pair<Rational, Rational>> pairs;

  std::optional<Rational> image_of(const Rational& x) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// The witness did not reach the requested tolerance.
class WitnessDepthExceeded : public Error {
 public:
  WitnessDepthExceeded(const std::string& what, Rational defect)
      : Error(what), defect_(std::move(defect)) {}
  const Rational& defect() const { return defect_; }

 private:
  Rational defect_;
};

/// Back-and-forth matching for two increasing, fixed-point-free interval
/// maps with the same diagonal sign. F lives on [a, b], G on [a', b']; seeds
/// must lie in the open intervals.
///
/// The first seed pair anchors one fundamental domain on each side. Seeds are
/// then consumed alternately from A and B: each is pushed into the anchored
/// fundamental domain along its orbit and matched with the first unmatched
/// seed of the other side that falls in the order-correct slot (or with the
/// interpolated point of that slot if no seed does). The result contains the
/// endpoints and the orbit segments F^j(x) <-> G^j(y), |j| <= depth, of every
/// matched pair.
///
/// Throws PreconditionError if F or G is not of that shape or the signs differ.
Matching back_and_forth_extend(const PLFunction& f_branch, const PLFunction& g_branch,
                               const std::vector<Rational>& seeds_a,
                               const std::vector<Rational>& seeds_b, std::size_t depth);

/// Increasing PL h on dom(F) with h ∘ F = G ∘ h exactly on every fundamental
/// domain reached, and |h F - G h| <= 2^-depth on the two end pieces.
/// Identity pairs give the linear map.
PLFunction conjugate_on_gap(const PLFunction& f_branch, const PLFunction& g_branch,
                            std::size_t depth, std::size_t piece_budget = kDefaultPieceBudget);

struct Witness {
  PLHomeo homeo;
  Rational defect;
};

/// Sup-norm of h ∘ f - g ∘ h, exact.
Rational conjugacy_defect(const PLHomeo& h, const PLMap& f, const PLMap& g,
                          std::size_t piece_budget = kDefaultPieceBudget);

/// Builds a PL homeomorphism through the order matching of the two
/// stabilized closures. Gap pieces are transported along graph components
/// from one representative per component (a cycle node or the constant sink).
/// `a` and `b` must already have passed the compatibility check for the
/// requested orientation. Throws WitnessDepthExceeded when the exact defect
/// exceeds `tolerance`.
Witness build_witness(const SystemAnalysis& a, const SystemAnalysis& b, Orientation orientation,
                      std::size_t witness_depth, const Rational& tolerance,
                      std::size_t piece_budget = kDefaultPieceBudget);

}  // namespace plconj
