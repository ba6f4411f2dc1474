// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "plconj/closure.hpp"
#include "plconj/pl_map.hpp"
#include "plconj/structure.hpp"

namespace plconj {

/// A map together with its stabilized closure and gap graph.
struct SystemAnalysis {
  PLMap map;
  StageFamily stages;
  IntervalGraph graph;
};

/// Computes closure and graph; throws PreconditionError when the closure is
/// still truncated at `max_depth`.
SystemAnalysis analyze(const PLMap& f, std::size_t period_bound = kDefaultPeriodBound,
                       std::size_t max_depth = kDefaultMaxDepth,
                       std::size_t piece_budget = kDefaultPieceBudget);

/// x ↦ 1 - x applied to a point set.
RationalSet reflect(const RationalSet& s);
/// R ∘ f ∘ R with R(x) = 1 - x, built directly from the breakpoints.
PLMap reflect(const PLMap& f);
StageFamily reflect(const StageFamily& stages);
/// Graph of R ∘ f ∘ R: gaps re-indexed in reversed order, constant values
/// reflected, monotonicity kinds kept, diagonal signs swapped.
IntervalGraph reflect(const IntervalGraph& g);
SystemAnalysis reflect(const SystemAnalysis& a);

}  // namespace plconj
