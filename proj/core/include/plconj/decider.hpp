// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "plconj/analysis.hpp"
#include "plconj/witness.hpp"

namespace plconj {

enum class Mode { preserve, any };
enum class OrderMode { preserve, reverse };

std::string to_string(Mode mode);

/// The unique order-preserving (or order-reversing) bijection A -> B, or
/// nullopt when the sizes differ.
std::optional<Matching> order_bijection(const RationalSet& a, const RationalSet& b,
                                        OrderMode mode);

struct Distinguished {
  std::size_t stage;
  std::string reason;
};

struct Consistent {
  std::size_t depth;
};

using CompareResult = std::variant<Distinguished, Consistent>;

struct CompareOptions {
  std::size_t period_bound = kDefaultPeriodBound;
  std::size_t depth = kDefaultMaxDepth;
  Mode mode = Mode::preserve;
  std::size_t piece_budget = kDefaultPieceBudget;
};

/// Stage-by-stage comparison. A Distinguished result is a proof of
/// non-conjugacy (for the orientation mode); Consistent proves nothing.
CompareResult stagewise_compare(const PLMap& f, const PLMap& g, const CompareOptions& options = {});

/// Same on precomputed stages (same period bound on both sides).
CompareResult stagewise_compare(const PLMap& f, const StageFamily& sf, const PLMap& g,
                                const StageFamily& sg, Mode mode);

struct ConjugateOutcome {
  PLHomeo witness;
  Rational defect;
  std::size_t period_bound;
};

struct NonConjugateOutcome {
  std::size_t stage;
  std::string reason;
};

struct UndistinguishedOutcome {
  std::size_t depth;
};

struct Verdict {
  Mode mode;
  std::variant<ConjugateOutcome, NonConjugateOutcome, UndistinguishedOutcome> outcome;

  bool conjugate() const { return std::holds_alternative<ConjugateOutcome>(outcome); }
  bool non_conjugate() const { return std::holds_alternative<NonConjugateOutcome>(outcome); }

  /// Line-oriented text report: outcome, mode, then qualifier/witness/defect
  /// or stage/certificate or depth.
  std::string report() const;
};

struct DecideOptions {
  std::size_t period_bound = kDefaultPeriodBound;
  std::size_t max_depth = kDefaultMaxDepth;
  Mode mode = Mode::preserve;
  Rational tolerance = Rational(1, 256);
  std::size_t witness_depth = kDefaultWitnessDepth;
  std::size_t piece_budget = kDefaultPieceBudget;
};

/// Full decision for maps whose closures both stabilize (PreconditionError
/// otherwise). Conjugate verdicts hold modulo the period bound.
Verdict decide_finite(const PLMap& f, const PLMap& g, const DecideOptions& options = {});
Verdict decide_finite(const SystemAnalysis& a, const SystemAnalysis& b,
                      const DecideOptions& options = {});

/// decide_finite when both closures stabilize; otherwise the stagewise
/// comparison, reported as NonConjugate or Undistinguished.
Verdict decide(const PLMap& f, const PLMap& g, const DecideOptions& options = {});

/// Why the stabilized structures of a and b (same orientation) are not
/// isomorphic as labeled structures, or nullopt when they are.
std::optional<std::string> structure_mismatch(const SystemAnalysis& a, const SystemAnalysis& b);

}  // namespace plconj
