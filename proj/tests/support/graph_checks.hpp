// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "plconj/structure.hpp"

namespace testing {

// Structural checks on a stabilized graph; returns the number of violations.
inline int graph_violations(const plconj::PLMap& f, const plconj::IntervalGraph& g) {
  using namespace plconj;
  int bad = 0;
  const std::size_t n = g.nodes.size();
  if (n + 1 != g.points.size()) ++bad;
  for (std::size_t k = 0; k < n; ++k) {
    const Gap& gap = g.nodes[k];
    const GapEdge& e = g.edges[k];
    const Rational a = f(gap.lo);
    const Rational b = f(gap.hi);
    const Rational m = f(midpoint(gap.lo, gap.hi));
    if (e.kind == EdgeKind::constant) {
      if (!(a == e.value && b == e.value && m == e.value) || !g.points.contains(e.value)) ++bad;
      continue;
    }
    const Gap& t = g.nodes[e.target];
    const bool inc = a == t.lo && b == t.hi;
    const bool dec = a == t.hi && b == t.lo;
    if (e.kind == EdgeKind::increasing ? !inc : !dec) ++bad;
    if (!(t.lo < m && m < t.hi)) ++bad;
  }
  // f^{-1}(J) is the union of the gaps whose injective edge lands on J.
  for (std::size_t j = 0; j < n; ++j) {
    const Gap& target = g.nodes[j];
    for (int s = 1; s <= 3; ++s) {
      const Rational y = target.lo + (target.hi - target.lo) * Rational(s, 4);
      const auto pre = preimage_set(f, y);
      std::size_t hits = 0;
      for (const auto& c : pre.components()) {
        if (!c.is_point()) ++bad;
        bool inside = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (g.nodes[k].contains(c.lo) && g.edges[k].injective() && g.edges[k].target == j) inside = true;
        }
        if (!inside) ++bad;
        ++hits;
      }
      if (hits != g.preimage_nodes(j).size()) ++bad;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!g.cycles[k]) continue;
    const PLFunction ret = cycle_return_map(f, g, k);
    if (!ret.strictly_increasing()) ++bad;
    const bool fixed = ret.is_identity();
    bool interior_fixed = false;
    for (const auto& iv : ret.fixed_points()) {
      if (g.nodes[k].lo < iv.hi && iv.lo < g.nodes[k].hi) interior_fixed = true;
    }
    if (fixed != interior_fixed) ++bad;
    if (fixed != (g.cycles[k]->flag == CycleFlag::pointwise_fixed)) ++bad;
  }
  return bad;
}

}  // namespace testing
