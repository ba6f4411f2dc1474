// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/structure.hpp"

#include <algorithm>
#include <numeric>

#include "plconj/errors.hpp"

namespace plconj {

namespace {

std::string short_flag(CycleFlag flag) {
  switch (flag) {
    case CycleFlag::pointwise_fixed: return "fixed";
    case CycleFlag::free_above: return "above";
    case CycleFlag::free_below: return "below";
  }
  return "?";
}

// Raised when the return map of a cycle misbehaves; only a true bug when the
// cycle is short enough for the period bound to have seen it.
[[noreturn]] void cycle_failure(std::size_t period, std::size_t bound, const Gap& gap,
                                const std::string& what) {
  const std::string msg = "cycle gap " + gap.to_string() + " of period " + std::to_string(period) +
                          ": " + what;
  if (period > bound) {
    throw PreconditionError(msg + " (period exceeds the period bound " + std::to_string(bound) +
                            "; raise it)");
  }
  throw InvariantViolation(msg);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::string to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::constant: return "constant";
    case EdgeKind::increasing: return "increasing";
    case EdgeKind::decreasing: return "decreasing";
  }
  return "?";
}

std::string to_string(CycleFlag flag) {
  switch (flag) {
    case CycleFlag::pointwise_fixed: return "pointwise-fixed";
    case CycleFlag::free_above: return "free-above";
    case CycleFlag::free_below: return "free-below";
  }
  return "?";
}

TruncatedStructure build_structure(const PLMap& f, const StageFamily& stages) {
  TruncatedStructure s;
  const RationalSet& top = stages.final_set();
  s.universe = top.values();
  s.period_bound = stages.period_bound();
  s.stage_index.reserve(top.size());
  s.image.reserve(top.size());
  for (const auto& u : top) {
    s.stage_index.push_back(stages.first_stage_of(u));
    const std::size_t pos = top.index_of(f(u));
    s.image.push_back(pos == top.size() ? std::nullopt : std::optional<std::size_t>(pos));
  }
  return s;
}

std::vector<std::size_t> IntervalGraph::preimage_nodes(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].injective() && edges[k].target == node) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> IntervalGraph::component_ids() const {
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].injective()) parent[find_root(parent, k)] = find_root(parent, edges[k].target);
  }
  std::vector<std::size_t> out(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) out[k] = find_root(parent, k);
  return out;
}

PLFunction branch(const PLMap& f, const Gap& gap) {
  return f.function().restricted(gap.lo, gap.hi).simplified();
}

PLFunction cycle_return_map(const PLMap& f, const IntervalGraph& graph, std::size_t node,
                            std::size_t piece_budget) {
  if (!graph.cycles.at(node)) throw PreconditionError("node is not on a cycle");
  PLFunction result = branch(f, graph.nodes[node]);
  std::size_t cur = graph.edges[node].target;
  while (cur != node) {
    result = compose(branch(f, graph.nodes[cur]), result, piece_budget);
    cur = graph.edges[cur].target;
  }
  return result;
}

IntervalGraph build_graph(const PLMap& f, const StageFamily& stages, std::size_t piece_budget) {
  if (!stages.stabilized()) {
    throw PreconditionError("the gap graph needs a stabilized closure (status: truncated-at " +
                            std::to_string(stages.status().index) + ")");
  }
  IntervalGraph g;
  g.points = stages.final_set();
  g.nodes = complementary_intervals(g.points);
  g.period_bound = stages.period_bound();
  g.edges.resize(g.nodes.size());
  g.cycles.resize(g.nodes.size());

  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const PLFunction b = branch(f, g.nodes[k]);
    GapEdge& e = g.edges[k];
    if (b.is_constant()) {
      e.kind = EdgeKind::constant;
      e.value = b.points().front().y;
      if (!g.points.contains(e.value)) {
        throw InvariantViolation("constant value " + e.value.to_string() + " on gap " +
                                 g.nodes[k].to_string() + " is not in the closure");
      }
      continue;
    }
    const bool inc = b.strictly_increasing();
    if (!inc && !b.strictly_decreasing()) {
      throw InvariantViolation("f is neither constant nor injective on gap " +
                               g.nodes[k].to_string());
    }
    const Rational lo = inc ? b.points().front().y : b.points().back().y;
    const Rational hi = inc ? b.points().back().y : b.points().front().y;
    const std::size_t pos = g.points.index_of(lo);
    if (pos + 1 >= g.points.size() || g.points[pos + 1] != hi) {
      throw InvariantViolation("image of gap " + g.nodes[k].to_string() + " is (" +
                               lo.to_string() + "," + hi.to_string() + "), not a gap");
    }
    e.kind = inc ? EdgeKind::increasing : EdgeKind::decreasing;
    e.target = pos;
  }

  // Oriented cycles of the functional graph on injective edges.
  enum class Mark { fresh, on_path, done };
  std::vector<Mark> mark(g.nodes.size(), Mark::fresh);
  for (std::size_t start = 0; start < g.nodes.size(); ++start) {
    if (mark[start] != Mark::fresh) continue;
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (true) {
      mark[cur] = Mark::on_path;
      path.push_back(cur);
      if (!g.edges[cur].injective()) break;
      const std::size_t next = g.edges[cur].target;
      if (mark[next] == Mark::on_path) {
        auto it = std::find(path.begin(), path.end(), next);
        const auto period = static_cast<std::size_t>(path.end() - it);
        for (; it != path.end(); ++it) g.cycles[*it] = CycleMark{period, CycleFlag::pointwise_fixed};
        break;
      }
      if (mark[next] == Mark::done) break;
      cur = next;
    }
    for (std::size_t v : path) mark[v] = Mark::done;
  }

  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    if (!g.cycles[k]) continue;
    CycleMark& cm = *g.cycles[k];
    const Gap& gap = g.nodes[k];
    const PLFunction ret = cycle_return_map(f, g, k, piece_budget);
    if (!ret.strictly_increasing()) {
      cycle_failure(cm.period, g.period_bound, gap, "return map is decreasing");
    }
    if (ret.is_identity()) {
      cm.flag = CycleFlag::pointwise_fixed;
      continue;
    }
    for (const auto& iv : ret.fixed_points()) {
      if (gap.lo < iv.hi && iv.lo < gap.hi) {
        cycle_failure(cm.period, g.period_bound, gap,
                      "return map has interior fixed points but is not the identity");
      }
    }
    const Rational mid = midpoint(gap.lo, gap.hi);
    cm.flag = mid < ret(mid) ? CycleFlag::free_above : CycleFlag::free_below;
  }
  return g;
}

std::string canonical_encode(const TruncatedStructure& s) {
  std::string out = "plconj-structure 1\n";
  out += "period-bound " + std::to_string(s.period_bound) + "\n";
  out += "size " + std::to_string(s.universe.size()) + "\n";
  for (std::size_t i = 0; i < s.universe.size(); ++i) {
    out += s.universe[i].to_string() + " " + std::to_string(s.stage_index[i]) + " " +
           (s.image[i] ? std::to_string(*s.image[i]) : std::string("-")) + "\n";
  }
  return out;
}

std::string canonical_encode(const IntervalGraph& g) {
  std::string out = "plconj-graph 1\n";
  out += "period-bound " + std::to_string(g.period_bound) + "\n";
  out += "nodes " + std::to_string(g.nodes.size()) + "\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const GapEdge& e = g.edges[k];
    out += std::to_string(k) + " " + g.nodes[k].lo.to_string() + " " + g.nodes[k].hi.to_string();
    switch (e.kind) {
      case EdgeKind::constant: out += " const " + e.value.to_string(); break;
      case EdgeKind::increasing: out += " inc " + std::to_string(e.target); break;
      case EdgeKind::decreasing: out += " dec " + std::to_string(e.target); break;
    }
    if (g.cycles[k]) {
      out += " cycle " + std::to_string(g.cycles[k]->period) + " " + short_flag(g.cycles[k]->flag);
    }
    out += "\n";
  }
  return out;
}

std::string export_dot(const IntervalGraph& g) {
  std::string out = "digraph G {\n";
  RationalSet values;
  for (const auto& e : g.edges) {
    if (!e.injective()) values.insert(e.value);
  }
  for (const auto& gap : g.nodes) out += "  \"" + gap.to_string() + "\";\n";
  for (const auto& v : values) out += "  \"" + v.to_string() + "\" [shape=box];\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const GapEdge& e = g.edges[k];
    const std::string from = "\"" + g.nodes[k].to_string() + "\"";
    if (!e.injective()) {
      out += "  " + from + " -> \"" + e.value.to_string() + "\" [label=\"constant(" +
             e.value.to_string() + ")\"];\n";
      continue;
    }
    std::string label = to_string(e.kind);
    if (g.cycles[k]) label += "/" + to_string(g.cycles[k]->flag);
    out += "  " + from + " -> \"" + g.nodes[e.target].to_string() + "\" [label=\"" + label +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace plconj
