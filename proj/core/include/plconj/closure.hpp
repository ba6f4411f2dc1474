// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plconj/closed_set.hpp"
#include "plconj/pl_map.hpp"

namespace plconj {

inline constexpr std::size_t kDefaultPeriodBound = 8;
inline constexpr std::size_t kDefaultMaxDepth = 16;

struct StageStatus {
  enum class Kind { stabilized, truncated };
  Kind kind;
  /// stabilized: S_index == S_{index+1}; truncated: last computed stage.
  std::size_t index;

  friend bool operator==(const StageStatus&, const StageStatus&) = default;
};

/// The chain S_1 ⊆ S_2 ⊆ ... of finite approximations of the exceptional set.
class StageFamily {
 public:
  StageFamily(std::vector<RationalSet> stages, std::size_t period_bound, StageStatus status);

  std::size_t depth() const { return stages_.size(); }
  std::size_t period_bound() const { return period_bound_; }
  const StageStatus& status() const { return status_; }
  bool stabilized() const { return status_.kind == StageStatus::Kind::stabilized; }

  /// S_i for i >= 1. Past the last computed stage of a stabilized family this
  /// is the final set; for a truncated family it throws PreconditionError.
  const RationalSet& stage(std::size_t i) const;
  const std::vector<RationalSet>& stages() const { return stages_; }
  const RationalSet& final_set() const { return stages_.back(); }

  /// 1-based index of the first stage containing x, or 0 if none does.
  std::size_t first_stage_of(const Rational& x) const;

  /// One "stage i: ..." line per stage, then "status: stabilized-at i" or
  /// "status: truncated-at k".
  std::string to_string() const;

  friend bool operator==(const StageFamily&, const StageFamily&) = default;

 private:
  std::vector<RationalSet> stages_;
  std::size_t period_bound_;
  StageStatus status_;
};

/// S_1 = M_f ∪ plateau values ∪ Acc(Fix(f^n)) for n = 1..N.
RationalSet initial_stage(const PLMap& f, std::size_t period_bound,
                          std::size_t piece_budget = kDefaultPieceBudget);

/// S ∪ f(S) ∪ ⋃_{y ∈ S} Acc(f^{-1}(y)).
RationalSet next_stage(const PLMap& f, const RationalSet& stage);

/// Stages S_1..S_d until two consecutive stages agree or d = max_depth.
/// Each round only processes the points that entered in the previous round.
/// A stage with more than piece_budget points raises BudgetExceeded.
StageFamily closure(const PLMap& f, std::size_t period_bound = kDefaultPeriodBound,
                    std::size_t max_depth = kDefaultMaxDepth,
                    std::size_t piece_budget = kDefaultPieceBudget);

/// Open interval (lo, hi).
struct Gap {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo < x && x < hi; }
  std::string to_string() const { return "(" + lo.to_string() + "," + hi.to_string() + ")"; }
  friend bool operator==(const Gap&, const Gap&) = default;
};

using GapList = std::vector<Gap>;

/// Open gaps between consecutive elements of `points`, which must contain 0
/// and 1 (DomainError otherwise).
GapList complementary_intervals(const RationalSet& points);

}  // namespace plconj
