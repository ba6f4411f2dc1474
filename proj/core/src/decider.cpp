// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/decider.hpp"

#include <algorithm>

#include "plconj/errors.hpp"

namespace plconj {

namespace {

// Checks stage i of f against stage i of g under the order-preserving
// bijection; `prev_*` are the stages i-1 (empty for i = 1). The maps are
// compared only where both images land in the stage.
std::optional<std::string> compare_stage(const PLMap& f, const RationalSet& sf,
                                         const RationalSet& prev_f, const PLMap& g,
                                         const RationalSet& sg, const RationalSet& prev_g) {
  if (sf.size() != sg.size()) {
    return "cardinality " + std::to_string(sf.size()) + " vs " + std::to_string(sg.size());
  }
  for (std::size_t p = 0; p < sf.size(); ++p) {
    if (prev_f.contains(sf[p]) != prev_g.contains(sg[p])) {
      return "stage-index mismatch at " + sf[p].to_string() + " <-> " + sg[p].to_string();
    }
  }
  for (std::size_t p = 0; p < sf.size(); ++p) {
    const std::size_t q = sf.index_of(f(sf[p]));
    const std::size_t r = sg.index_of(g(sg[p]));
    if (q == sf.size() || r == sg.size()) continue;
    if (q != r) {
      return "map mismatch at " + sf[p].to_string() + " <-> " + sg[p].to_string();
    }
  }
  return std::nullopt;
}

CompareResult compare_oriented(const PLMap& f, const StageFamily& sf, const PLMap& g,
                               const StageFamily& sg) {
  const std::size_t depth = std::max(sf.depth(), sg.depth());
  const RationalSet empty;
  for (std::size_t i = 1; i <= depth; ++i) {
    const RationalSet& prev_f = i == 1 ? empty : sf.stage(i - 1);
    const RationalSet& prev_g = i == 1 ? empty : sg.stage(i - 1);
    if (auto why = compare_stage(f, sf.stage(i), prev_f, g, sg.stage(i), prev_g)) {
      return Distinguished{i, "stage " + std::to_string(i) + ": " + *why};
    }
  }
  return Consistent{depth};
}

std::string position_label(const RationalSet& s, std::size_t k) {
  return "gap " + std::to_string(k) + " (" + s[k].to_string() + "," + s[k + 1].to_string() + ")";
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::preserve ? "preserve" : "any"; }

std::optional<Matching> order_bijection(const RationalSet& a, const RationalSet& b,
                                        OrderMode mode) {
  if (a.size() != b.size()) return std::nullopt;
  Matching m;
  m.pairs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.pairs.emplace_back(a[i], mode == OrderMode::preserve ? b[i] : b[b.size() - 1 - i]);
  }
  return m;
}

CompareResult stagewise_compare(const PLMap& f, const StageFamily& sf, const PLMap& g,
                                const StageFamily& sg, Mode mode) {
  if (sf.period_bound() != sg.period_bound()) {
    throw PreconditionError("stagewise_compare: period bounds differ");
  }
  CompareResult preserved = compare_oriented(f, sf, g, sg);
  if (mode == Mode::preserve || std::holds_alternative<Consistent>(preserved)) return preserved;
  CompareResult reversed = compare_oriented(f, sf, reflect(g), reflect(sg));
  if (std::holds_alternative<Consistent>(reversed)) return reversed;
  const auto& p = std::get<Distinguished>(preserved);
  const auto& r = std::get<Distinguished>(reversed);
  return Distinguished{std::max(p.stage, r.stage),
                       "preserve: " + p.reason + "; reverse: " + r.reason};
}

CompareResult stagewise_compare(const PLMap& f, const PLMap& g, const CompareOptions& options) {
  const StageFamily sf = closure(f, options.period_bound, options.depth, options.piece_budget);
  const StageFamily sg = closure(g, options.period_bound, options.depth, options.piece_budget);
  return stagewise_compare(f, sf, g, sg, options.mode);
}

std::optional<std::string> structure_mismatch(const SystemAnalysis& a, const SystemAnalysis& b) {
  const RationalSet& ca = a.stages.final_set();
  const RationalSet& cb = b.stages.final_set();
  if (ca.size() != cb.size()) {
    return "closure cardinality " + std::to_string(ca.size()) + " vs " + std::to_string(cb.size());
  }
  for (std::size_t p = 0; p < ca.size(); ++p) {
    if (a.stages.first_stage_of(ca[p]) != b.stages.first_stage_of(cb[p])) {
      return "stage-index mismatch at " + ca[p].to_string() + " <-> " + cb[p].to_string();
    }
    if (ca.index_of(a.map(ca[p])) != cb.index_of(b.map(cb[p]))) {
      return "map mismatch at " + ca[p].to_string() + " <-> " + cb[p].to_string();
    }
  }
  const IntervalGraph& ga = a.graph;
  const IntervalGraph& gb = b.graph;
  for (std::size_t k = 0; k < ga.nodes.size(); ++k) {
    const GapEdge& ea = ga.edges[k];
    const GapEdge& eb = gb.edges[k];
    const std::string where = position_label(ca, k);
    if (ea.kind != eb.kind) {
      return where + ": edge kind " + to_string(ea.kind) + " vs " + to_string(eb.kind);
    }
    if (ea.injective() && ea.target != eb.target) return where + ": edge target mismatch";
    if (!ea.injective() && ca.index_of(ea.value) != cb.index_of(eb.value)) {
      return where + ": constant value " + ea.value.to_string() + " vs " + eb.value.to_string();
    }
    if (ga.cycles[k].has_value() != gb.cycles[k].has_value()) {
      return where + ": cycle membership differs";
    }
    if (ga.cycles[k] && ga.cycles[k]->flag != gb.cycles[k]->flag) {
      return where + ": cycle flag " + to_string(ga.cycles[k]->flag) + " vs " +
             to_string(gb.cycles[k]->flag);
    }
  }
  return std::nullopt;
}

Verdict decide_finite(const SystemAnalysis& a, const SystemAnalysis& b,
                      const DecideOptions& options) {
  const std::size_t stage = std::max(a.stages.depth(), b.stages.depth());
  auto conjugate = [&](Orientation o) {
    Witness w = build_witness(a, b, o, options.witness_depth, options.tolerance,
                              options.piece_budget);
    return Verdict{options.mode,
                   ConjugateOutcome{std::move(w.homeo), std::move(w.defect), a.stages.period_bound()}};
  };
  const auto preserved = structure_mismatch(a, b);
  if (!preserved) return conjugate(Orientation::increasing);
  if (options.mode == Mode::preserve) {
    return Verdict{options.mode, NonConjugateOutcome{stage, *preserved}};
  }
  const auto reversed = structure_mismatch(a, reflect(b));
  if (!reversed) return conjugate(Orientation::decreasing);
  return Verdict{options.mode,
                 NonConjugateOutcome{stage, "preserve: " + *preserved + "; reverse: " + *reversed}};
}

Verdict decide_finite(const PLMap& f, const PLMap& g, const DecideOptions& options) {
  const SystemAnalysis a = analyze(f, options.period_bound, options.max_depth, options.piece_budget);
  const SystemAnalysis b = analyze(g, options.period_bound, options.max_depth, options.piece_budget);
  return decide_finite(a, b, options);
}

Verdict decide(const PLMap& f, const PLMap& g, const DecideOptions& options) {
  const StageFamily sf = closure(f, options.period_bound, options.max_depth, options.piece_budget);
  const StageFamily sg = closure(g, options.period_bound, options.max_depth, options.piece_budget);
  if (sf.stabilized() && sg.stabilized()) {
    SystemAnalysis a{f, sf, build_graph(f, sf, options.piece_budget)};
    SystemAnalysis b{g, sg, build_graph(g, sg, options.piece_budget)};
    return decide_finite(a, b, options);
  }
  const CompareResult r = stagewise_compare(f, sf, g, sg, options.mode);
  if (const auto* d = std::get_if<Distinguished>(&r)) {
    return Verdict{options.mode, NonConjugateOutcome{d->stage, d->reason}};
  }
  return Verdict{options.mode, UndistinguishedOutcome{std::get<Consistent>(r).depth}};
}

std::string Verdict::report() const {
  std::string out;
  if (const auto* c = std::get_if<ConjugateOutcome>(&outcome)) {
    out += "outcome: conjugate\n";
    out += "mode: " + to_string(mode) + "\n";
    out += "orientation: ";
    out += c->witness.orientation() == Orientation::increasing ? "increasing\n" : "decreasing\n";
    out += "qualifier: modulo period bound " + std::to_string(c->period_bound) + "\n";
    out += "witness: " + c->witness.map().to_string() + "\n";
    out += "defect: " + c->defect.to_string() + "\n";
  } else if (const auto* n = std::get_if<NonConjugateOutcome>(&outcome)) {
    out += "outcome: non-conjugate\n";
    out += "mode: " + to_string(mode) + "\n";
    out += "stage: " + std::to_string(n->stage) + "\n";
    out += "certificate: " + n->reason + "\n";
  } else {
    const auto& u = std::get<UndistinguishedOutcome>(outcome);
    out += "outcome: undistinguished\n";
    out += "mode: " + to_string(mode) + "\n";
    out += "depth: " + std::to_string(u.depth) + "\n";
  }
  return out;
}

}  // namespace plconj
