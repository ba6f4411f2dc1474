// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plconj/closure.hpp"
#include "plconj/pl_map.hpp"

namespace plconj {

/// Finite truncation of the countable structure (C_f, <=, f): the last
/// computed stage as a sorted universe, the stage at which each element
/// first appeared, and f as a partial function on universe positions.
struct TruncatedStructure {
  std::vector<Rational> universe;
  std::vector<std::size_t> stage_index;
  std::vector<std::optional<std::size_t>> image;
  std::size_t period_bound = 0;

  friend bool operator==(const TruncatedStructure&, const TruncatedStructure&) = default;
};

TruncatedStructure build_structure(const PLMap& f, const StageFamily& stages);

enum class EdgeKind { constant, increasing, decreasing };

/// Outgoing edge of a gap: either f is constant on it (value in C_f) or it
/// maps the gap monotonically onto the gap `target`.
struct GapEdge {
  EdgeKind kind = EdgeKind::constant;
  std::size_t target = 0;
  Rational value;

  bool injective() const { return kind != EdgeKind::constant; }
  friend bool operator==(const GapEdge&, const GapEdge&) = default;
};

/// Behaviour of the return map f^n on a gap lying on an oriented cycle.
enum class CycleFlag { pointwise_fixed, free_above, free_below };

struct CycleMark {
  std::size_t period = 0;
  CycleFlag flag = CycleFlag::pointwise_fixed;

  friend bool operator==(const CycleMark&, const CycleMark&) = default;
};

/// The labeled directed graph on the gaps of a stabilized closure.
struct IntervalGraph {
  RationalSet points;
  GapList nodes;
  std::vector<GapEdge> edges;
  std::vector<std::optional<CycleMark>> cycles;
  std::size_t period_bound = 0;

  /// Nodes whose injective edge points at `node`.
  std::vector<std::size_t> preimage_nodes(std::size_t node) const;
  /// Connected component id per node of the symmetrized graph.
  std::vector<std::size_t> component_ids() const;

  friend bool operator==(const IntervalGraph&, const IntervalGraph&) = default;
};

/// f restricted to the closure of `gap`.
PLFunction branch(const PLMap& f, const Gap& gap);

/// f^n restricted to the closure of a cycle node, composed branch by branch.
PLFunction cycle_return_map(const PLMap& f, const IntervalGraph& graph, std::size_t node,
                            std::size_t piece_budget = kDefaultPieceBudget);

/// Requires a stabilized family (PreconditionError otherwise). Throws
/// InvariantViolation if some gap is neither a constant nor an injective
/// branch, and PreconditionError if a cycle longer than the period bound
/// breaks the fixed / fixed-point-free dichotomy.
IntervalGraph build_graph(const PLMap& f, const StageFamily& stages,
                          std::size_t piece_budget = kDefaultPieceBudget);

/// Deterministic ASCII encoding. Field order:
///   "plconj-structure 1", "period-bound N", "size n", then one line per
///   universe element "<rational> <first stage> <image position or ->".
std::string canonical_encode(const TruncatedStructure& s);

/// Deterministic ASCII encoding. Field order:
///   "plconj-graph 1", "period-bound N", "nodes n", then one line per gap
///   "<index> <lo> <hi> <const v | inc t | dec t>[ cycle <period> <fixed|above|below>]".
std::string canonical_encode(const IntervalGraph& g);

/// Graphviz digraph; gap nodes are named "(lo,hi)", constant values get box nodes.
std::string export_dot(const IntervalGraph& g);

std::string to_string(EdgeKind kind);
std::string to_string(CycleFlag flag);

}  // namespace plconj
