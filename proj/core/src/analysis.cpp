// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/analysis.hpp"

#include <algorithm>

#include "plconj/errors.hpp"

namespace plconj {

SystemAnalysis analyze(const PLMap& f, std::size_t period_bound, std::size_t max_depth,
                       std::size_t piece_budget) {
  StageFamily stages = closure(f, period_bound, max_depth, piece_budget);
  if (!stages.stabilized()) {
    throw PreconditionError("closure of " + f.to_string() + " is truncated at depth " +
                            std::to_string(stages.status().index) + " (period bound " +
                            std::to_string(period_bound) + ")");
  }
  IntervalGraph graph = build_graph(f, stages, piece_budget);
  return {f, std::move(stages), std::move(graph)};
}

RationalSet reflect(const RationalSet& s) {
  std::vector<Rational> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(Rational(1) - x);
  return RationalSet(std::move(out));
}

PLMap reflect(const PLMap& f) {
  std::vector<Breakpoint> out;
  const auto& pts = f.breakpoints();
  out.reserve(pts.size());
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    out.push_back({Rational(1) - it->x, Rational(1) - it->y});
  }
  return PLMap::from_points(std::move(out));
}

StageFamily reflect(const StageFamily& stages) {
  std::vector<RationalSet> out;
  out.reserve(stages.depth());
  for (const auto& s : stages.stages()) out.push_back(reflect(s));
  return StageFamily(std::move(out), stages.period_bound(), stages.status());
}

IntervalGraph reflect(const IntervalGraph& g) {
  const std::size_t n = g.nodes.size();
  IntervalGraph out;
  out.points = reflect(g.points);
  out.period_bound = g.period_bound;
  out.nodes.resize(n);
  out.edges.resize(n);
  out.cycles.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = n - 1 - k;
    out.nodes[r] = {Rational(1) - g.nodes[k].hi, Rational(1) - g.nodes[k].lo};
    GapEdge e = g.edges[k];
    if (e.injective()) {
      e.target = n - 1 - e.target;
    } else {
      e.value = Rational(1) - e.value;
    }
    out.edges[r] = e;
    if (g.cycles[k]) {
      CycleMark cm = *g.cycles[k];
      if (cm.flag == CycleFlag::free_above) {
        cm.flag = CycleFlag::free_below;
      } else if (cm.flag == CycleFlag::free_below) {
        cm.flag = CycleFlag::free_above;
      }
      out.cycles[r] = cm;
    }
  }
  return out;
}

SystemAnalysis reflect(const SystemAnalysis& a) {
  return {reflect(a.map), reflect(a.stages), reflect(a.graph)};
}

}  // namespace plconj
