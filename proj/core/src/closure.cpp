// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/closure.hpp"

#include "plconj/errors.hpp"

namespace plconj {

namespace {

// f(y) and Acc(f^{-1}(y)) for every y in `points`.
RationalSet successors(const PLMap& f, const RationalSet& points) {
  std::vector<Rational> out;
  out.reserve(points.size() * 3);
  for (const auto& y : points) {
    out.push_back(f(y));
    for (const auto& iv : f.function().level_set(y)) {
      out.push_back(iv.lo);
      if (!iv.is_point()) out.push_back(iv.hi);
    }
  }
  return RationalSet(std::move(out));
}

}  // namespace

StageFamily::StageFamily(std::vector<RationalSet> stages, std::size_t period_bound,
                         StageStatus status)
    : stages_(std::move(stages)), period_bound_(period_bound), status_(status) {
  if (stages_.empty()) throw PreconditionError("a stage family needs at least one stage");
}

const RationalSet& StageFamily::stage(std::size_t i) const {
  if (i == 0) throw DomainError("stages are numbered from 1");
  if (i <= stages_.size()) return stages_[i - 1];
  if (!stabilized()) {
    throw PreconditionError("stage " + std::to_string(i) + " beyond truncation at " +
                            std::to_string(stages_.size()));
  }
  return stages_.back();
}

std::size_t StageFamily::first_stage_of(const Rational& x) const {
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (stages_[i].contains(x)) return i + 1;
  }
  return 0;
}

std::string StageFamily::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    out += "stage " + std::to_string(i + 1) + ": " + stages_[i].to_string() + "\n";
  }
  out += status_.kind == StageStatus::Kind::stabilized ? "status: stabilized-at "
                                                       : "status: truncated-at ";
  out += std::to_string(status_.index) + "\n";
  return out;
}

RationalSet initial_stage(const PLMap& f, std::size_t period_bound, std::size_t piece_budget) {
  if (period_bound == 0) throw DomainError("period bound must be positive");
  RationalSet out = sharp_extrema(f);
  out.merge(plateau_values(f));
  PLFunction power = f.function().simplified();
  for (std::size_t n = 1; n <= period_bound; ++n) {
    if (n > 1) power = compose(f.function(), power, piece_budget);
    out.merge(acc_points(ClosedSet1D::normalize(power.fixed_points())));
  }
  return out;
}

RationalSet next_stage(const PLMap& f, const RationalSet& stage) {
  RationalSet out = successors(f, stage);
  out.merge(stage);
  return out;
}

StageFamily closure(const PLMap& f, std::size_t period_bound, std::size_t max_depth,
                    std::size_t piece_budget) {
  if (max_depth == 0) throw DomainError("closure depth must be positive");
  std::vector<RationalSet> stages;
  stages.push_back(initial_stage(f, period_bound, piece_budget));
  RationalSet frontier = stages.back();
  while (stages.size() < max_depth) {
    RationalSet fresh = successors(f, frontier).minus(stages.back());
    if (fresh.empty()) {
      const std::size_t at = stages.size();
      return StageFamily(std::move(stages), period_bound, {StageStatus::Kind::stabilized, at});
    }
    RationalSet next = stages.back();
    next.merge(fresh);
    if (next.size() > piece_budget) throw BudgetExceeded(next.size(), piece_budget, "stage points");
    stages.push_back(std::move(next));
    frontier = std::move(fresh);
  }
  const std::size_t depth = stages.size();
  return StageFamily(std::move(stages), period_bound, {StageStatus::Kind::truncated, depth});
}

GapList complementary_intervals(const RationalSet& points) {
  if (!points.contains(Rational(0)) || !points.contains(Rational(1))) {
    throw DomainError("complementary_intervals: set must contain 0 and 1");
  }
  if (points.front() < Rational(0) || points.back() > Rational(1)) {
    throw DomainError("complementary_intervals: set leaves [0,1]");
  }
  GapList out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) out.push_back({points[i], points[i + 1]});
  return out;
}

}  // namespace plconj
