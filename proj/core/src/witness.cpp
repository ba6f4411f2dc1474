// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plconj/witness.hpp"

#include <algorithm>
#include <deque>

#include "plconj/decider.hpp"

namespace plconj {

namespace {

constexpr std::size_t kMaxOrbitSteps = 20000;

using Pair = std::pair<Rational, Rational>;

bool below_diagonal(const PLFunction& fn) {
  const Rational mid = midpoint(fn.lo(), fn.hi());
  return fn(mid) < mid;
}

void require_free_branch(const PLFunction& fn, const char* name) {
  if (!fn.strictly_increasing() || fn(fn.lo()) != fn.lo() || fn(fn.hi()) != fn.hi()) {
    throw PreconditionError(std::string(name) + " must be an increasing self-map fixing its endpoints");
  }
  for (const auto& iv : fn.fixed_points()) {
    if (fn.lo() < iv.hi && iv.lo < fn.hi()) {
      throw PreconditionError(std::string(name) + " has fixed points inside its interval");
    }
  }
}

// Below-diagonal map and its inverse, with one anchored fundamental domain
// (F(anchor), anchor].
struct Side {
  PLFunction fn;
  PLFunction inv;
  Rational anchor;
  Rational anchor_image;

  // Moves x along its orbit into the fundamental domain; `shift` counts the
  // applications of fn (negative for fn^-1).
  Rational reduce(Rational x, long* shift = nullptr) const {
    long k = 0;
    for (std::size_t steps = 0; anchor < x || x <= anchor_image; ++steps) {
      if (steps > kMaxOrbitSteps) {
        throw PreconditionError("seed " + x.to_string() + " is too close to a fixed point");
      }
      if (anchor < x) {
        x = fn(x);
        ++k;
      } else {
        x = inv(x);
        --k;
      }
    }
    if (shift) *shift = k;
    return x;
  }

  // Undoes `shift` applications on this side.
  Rational unshift(Rational x, long shift) const {
    for (; shift > 0; --shift) x = inv(x);
    for (; shift < 0; ++shift) x = fn(x);
    return x;
  }
};

Side make_side(PLFunction fn, Rational anchor) {
  PLFunction inv = fn.inverse();
  Rational image = fn(anchor);
  return {std::move(fn), std::move(inv), std::move(anchor), std::move(image)};
}

std::optional<Rational> first_unmatched_in(const std::vector<Rational>& reduced,
                                           const std::vector<Rational>& taken,
                                           const Rational& lo, const Rational& hi) {
  for (const auto& y : reduced) {
    if (lo < y && y < hi && !std::binary_search(taken.begin(), taken.end(), y)) return y;
  }
  return std::nullopt;
}

void insert_sorted(std::vector<Rational>& v, const Rational& x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

struct BaseMatching {
  // Sorted matching of the closed fundamental domains, endpoints included.
  std::vector<Pair> pairs;
  std::vector<Side> sides;  // empty when there were no seeds
};

// Matching restricted to the closed fundamental domains [F(x0), x0] and
// [G(y0), y0]. Both maps below the diagonal.
BaseMatching base_matching(const PLFunction& f, const PLFunction& g,
                                const std::vector<Rational>& seeds_a,
                                const std::vector<Rational>& seeds_b) {
  for (const auto& s : seeds_a) {
    if (!(f.lo() < s && s < f.hi())) throw PreconditionError("seed outside the open interval of F");
  }
  for (const auto& s : seeds_b) {
    if (!(g.lo() < s && s < g.hi())) throw PreconditionError("seed outside the open interval of G");
  }
  if (seeds_a.empty() && seeds_b.empty()) return {};

  auto lerp = [](const Rational& x, const Rational& x0, const Rational& x1, const Rational& y0,
                 const Rational& y1) { return y0 + (x - x0) * (y1 - y0) / (x1 - x0); };
  Rational x0, y0;
  if (!seeds_a.empty()) {
    x0 = seeds_a.front();
    y0 = seeds_b.empty() ? lerp(x0, f.lo(), f.hi(), g.lo(), g.hi()) : seeds_b.front();
  } else {
    y0 = seeds_b.front();
    x0 = lerp(y0, g.lo(), g.hi(), f.lo(), f.hi());
  }
  const Side sa = make_side(f, x0);
  const Side sb = make_side(g, y0);

  std::vector<Rational> red_a, red_b;
  for (const auto& s : seeds_a) red_a.push_back(sa.reduce(s));
  for (const auto& s : seeds_b) red_b.push_back(sb.reduce(s));

  std::vector<Pair> pairs{{sa.anchor_image, sb.anchor_image}, {x0, y0}};
  std::vector<Rational> taken_a{sa.anchor_image, x0};
  std::vector<Rational> taken_b{sb.anchor_image, y0};
  std::sort(taken_a.begin(), taken_a.end());
  std::sort(taken_b.begin(), taken_b.end());

  // x in the half-open domain (F x0, x0]; finds its slot and a partner.
  auto extend = [&](const Rational& x, bool from_a) {
    auto& taken_self = from_a ? taken_a : taken_b;
    if (std::binary_search(taken_self.begin(), taken_self.end(), x)) return;
    auto key = [from_a](const Pair& p) -> const Rational& { return from_a ? p.first : p.second; };
    auto other = [from_a](const Pair& p) -> const Rational& { return from_a ? p.second : p.first; };
    auto hi_it = std::find_if(pairs.begin(), pairs.end(), [&](const Pair& p) { return x < key(p); });
    const Pair& lo_p = *(hi_it - 1);
    const Pair& hi_p = *hi_it;
    const auto& reduced_other = from_a ? red_b : red_a;
    const auto& taken_other = from_a ? taken_b : taken_a;
    std::optional<Rational> y = first_unmatched_in(reduced_other, taken_other, other(lo_p), other(hi_p));
    if (!y) y = lerp(x, key(lo_p), key(hi_p), other(lo_p), other(hi_p));
    Pair p = from_a ? Pair{x, *y} : Pair{*y, x};
    insert_sorted(taken_a, p.first);
    insert_sorted(taken_b, p.second);
    pairs.insert(std::lower_bound(pairs.begin(), pairs.end(), p,
                                  [](const Pair& l, const Pair& r) { return l.first < r.first; }),
                 std::move(p));
  };

  const std::size_t rounds = std::max(red_a.size(), red_b.size());
  for (std::size_t i = 0; i < rounds; ++i) {
    if (i < red_a.size()) extend(red_a[i], true);
    if (i < red_b.size()) extend(red_b[i], false);
  }
  return {std::move(pairs), {sa, sb}};
}

// Works with the below-diagonal representatives: a conjugacy of F and G is
// also one of F^-1 and G^-1.
std::pair<PLFunction, PLFunction> below_pair(const PLFunction& f, const PLFunction& g) {
  require_free_branch(f, "F");
  require_free_branch(g, "G");
  const bool fb = below_diagonal(f);
  if (fb != below_diagonal(g)) throw PreconditionError("F and G lie on opposite sides of the diagonal");
  if (fb) return {f, g};
  return {f.inverse(), g.inverse()};
}

std::vector<Rational> default_seeds(const PLFunction& fn) {
  const Rational p = midpoint(fn.lo(), fn.hi());
  const Rational fp = fn(p);
  std::vector<Rational> out{p};
  for (int k = 1; k <= 3; ++k) out.push_back(fp + (p - fp) * Rational(k, 4));
  return out;
}

}  // namespace

std::optional<Rational> Matching::image_of(const Rational& x) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), x,
                             [](const Pair& p, const Rational& v) { return p.first < v; });
  if (it == pairs.end() || it->first != x) return std::nullopt;
  return it->second;
}

Matching back_and_forth_extend(const PLFunction& f_branch, const PLFunction& g_branch,
                               const std::vector<Rational>& seeds_a,
                               const std::vector<Rational>& seeds_b, std::size_t depth) {
  const auto [f, g] = below_pair(f_branch, g_branch);
  Matching out;
  out.pairs.emplace_back(f.lo(), g.lo());
  out.pairs.emplace_back(f.hi(), g.hi());
  const BaseMatching base = base_matching(f, g, seeds_a, seeds_b);
  const PLFunction finv = f.inverse();
  const PLFunction ginv = g.inverse();
  auto add_segment = [&](const Pair& centre) {
    out.pairs.push_back(centre);
    Pair fwd = centre;
    Pair bwd = centre;
    for (std::size_t j = 0; j < depth; ++j) {
      fwd = {f(fwd.first), g(fwd.second)};
      bwd = {finv(bwd.first), ginv(bwd.second)};
      out.pairs.push_back(fwd);
      out.pairs.push_back(bwd);
    }
  };
  // base.pairs.front() is the image of the anchor, already on the anchor's orbit.
  for (std::size_t k = 1; k < base.pairs.size(); ++k) add_segment(base.pairs[k]);
  auto partner = [&](const Rational& r, bool from_a) {
    for (const auto& p : base.pairs) {
      if ((from_a ? p.first : p.second) == r) return from_a ? p.second : p.first;
    }
    throw InvariantViolation("reduced seed missing from the base matching");
  };
  for (const auto& x : seeds_a) {
    long shift = 0;
    const Rational r = base.sides[0].reduce(x, &shift);
    add_segment({x, base.sides[1].unshift(partner(r, true), shift)});
  }
  for (const auto& y : seeds_b) {
    long shift = 0;
    const Rational r = base.sides[1].reduce(y, &shift);
    add_segment({base.sides[0].unshift(partner(r, false), shift), y});
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  for (std::size_t i = 0; i + 1 < out.pairs.size(); ++i) {
    if (!(out.pairs[i].first < out.pairs[i + 1].first) ||
        !(out.pairs[i].second < out.pairs[i + 1].second)) {
      throw InvariantViolation("back-and-forth produced a non-monotone matching");
    }
  }
  return out;
}

PLFunction conjugate_on_gap(const PLFunction& f_branch, const PLFunction& g_branch,
                            std::size_t depth, std::size_t piece_budget) {
  if (f_branch.is_identity() && g_branch.is_identity()) {
    return PLFunction::linear(f_branch.lo(), f_branch.hi(), g_branch.lo(), g_branch.hi());
  }
  const auto [f, g] = below_pair(f_branch, g_branch);
  const PLFunction finv = f.inverse();
  const PLFunction ginv = g.inverse();
  const BaseMatching base = base_matching(f, g, default_seeds(f), default_seeds(g));
  std::vector<Breakpoint> base_pts;
  for (const auto& [x, y] : base.pairs) base_pts.push_back({x, y});
  const PLFunction h_base = PLFunction::from_points(std::move(base_pts));
  const Rational eps = Rational::pow2_inverse(static_cast<unsigned>(depth));

  // Toward the attracting end: D_{j+1} = F(D_j), h = G ∘ h ∘ F^-1 there.
  std::deque<PLFunction> parts{h_base};
  std::size_t steps = 0;
  for (std::size_t m = 1; m < depth + 1 || parts.front().points().front().y - g.lo() > eps; ++m) {
    if (++steps > kMaxOrbitSteps) {
      throw WitnessDepthExceeded("orbit transport did not reach the end tolerance",
                                 parts.front().points().front().y - g.lo());
    }
    const PLFunction& cur = parts.front();
    const PLFunction back = finv.restricted(f(cur.lo()), cur.lo());
    parts.push_front(compose(g, compose(cur, back, piece_budget), piece_budget));
  }
  // Toward the repelling end: D_{j-1} = F^-1(D_j), h = G^-1 ∘ h ∘ F there.
  for (std::size_t r = 0; r < depth || g.hi() - parts.back().points().front().y > eps; ++r) {
    if (++steps > kMaxOrbitSteps) {
      throw WitnessDepthExceeded("orbit transport did not reach the end tolerance",
                                 g.hi() - parts.back().points().front().y);
    }
    const PLFunction& cur = parts.back();
    const PLFunction fwd = f.restricted(cur.hi(), finv(cur.hi()));
    parts.push_back(compose(ginv, compose(cur, fwd, piece_budget), piece_budget));
  }
  std::vector<PLFunction> all;
  all.push_back(PLFunction::linear(f.lo(), parts.front().lo(), g.lo(), parts.front().points().front().y));
  all.insert(all.end(), parts.begin(), parts.end());
  all.push_back(PLFunction::linear(parts.back().hi(), f.hi(), parts.back().points().back().y, g.hi()));
  PLFunction h = concatenate(all).simplified();
  if (h.pieces() > piece_budget) throw BudgetExceeded(h.pieces(), piece_budget);
  return h;
}

Rational conjugacy_defect(const PLHomeo& h, const PLMap& f, const PLMap& g,
                          std::size_t piece_budget) {
  const PLFunction hf = compose(h.map().function(), f.function(), piece_budget);
  const PLFunction gh = compose(g.function(), h.map().function(), piece_budget);
  return sup_distance(hf, gh);
}

namespace {

PLFunction increasing_witness(const SystemAnalysis& a, const SystemAnalysis& b,
                              std::size_t depth, std::size_t budget) {
  const IntervalGraph& ga = a.graph;
  const IntervalGraph& gb = b.graph;
  const std::size_t n = ga.nodes.size();
  std::vector<std::optional<PLFunction>> piece(n);
  auto linear_on = [&](std::size_t k) {
    return PLFunction::linear(ga.nodes[k].lo, ga.nodes[k].hi, gb.nodes[k].lo, gb.nodes[k].hi);
  };

  // One representative per component: the lowest cycle node, else the sink.
  const std::vector<std::size_t> comp = ga.component_ids();
  std::vector<bool> seeded(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t c = comp[k];
    if (seeded[c]) continue;
    std::optional<std::size_t> rep;
    for (std::size_t j = 0; j < n && !rep; ++j) {
      if (comp[j] == c && ga.cycles[j]) rep = j;
    }
    if (rep) {
      const PLFunction fr = cycle_return_map(a.map, ga, *rep, budget);
      const PLFunction gr = cycle_return_map(b.map, gb, *rep, budget);
      piece[*rep] = ga.cycles[*rep]->flag == CycleFlag::pointwise_fixed
                        ? linear_on(*rep)
                        : conjugate_on_gap(fr, gr, depth, budget);
      // Forward along the cycle: h = g ∘ h ∘ (f|J)^-1.
      for (std::size_t cur = *rep; ga.edges[cur].target != *rep; cur = ga.edges[cur].target) {
        const std::size_t next = ga.edges[cur].target;
        const PLFunction finv = branch(a.map, ga.nodes[cur]).inverse();
        piece[next] = compose(branch(b.map, gb.nodes[cur]), compose(*piece[cur], finv, budget), budget)
                          .simplified();
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] == c && !ga.edges[j].injective()) piece[j] = linear_on(j);
      }
    }
    seeded[c] = true;
  }

  // Backward through the trees: h|K = (g|K')^-1 ∘ h|f(K) ∘ f|K.
  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < n; ++k) {
    if (piece[k]) queue.push_back(k);
  }
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t k : ga.preimage_nodes(t)) {
      if (piece[k]) continue;
      const PLFunction ginv = branch(b.map, gb.nodes[k]).inverse();
      piece[k] = compose(ginv, compose(*piece[t], branch(a.map, ga.nodes[k]), budget), budget)
                     .simplified();
      queue.push_back(k);
    }
  }

  std::vector<PLFunction> parts;
  parts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!piece[k]) throw InvariantViolation("witness: gap " + std::to_string(k) + " unreached");
    parts.push_back(*piece[k]);
  }
  PLFunction h = concatenate(parts).simplified();
  if (h.pieces() > budget) throw BudgetExceeded(h.pieces(), budget);
  // Exact agreement with the order matching of the closures.
  const RationalSet& ca = a.stages.final_set();
  const RationalSet& cb = b.stages.final_set();
  for (std::size_t p = 0; p < ca.size(); ++p) {
    if (h(ca[p]) != cb[p]) throw InvariantViolation("witness leaves the closure matching");
  }
  return h;
}

}  // namespace

Witness build_witness(const SystemAnalysis& a, const SystemAnalysis& b, Orientation orientation,
                      std::size_t witness_depth, const Rational& tolerance,
                      std::size_t piece_budget) {
  if (const auto why = structure_mismatch(
          a, orientation == Orientation::increasing ? b : reflect(b))) {
    throw PreconditionError("build_witness: structures are not compatible: " + *why);
  }
  PLHomeo h = PLHomeo::identity();
  if (orientation == Orientation::increasing) {
    h = PLHomeo::from_map(PLMap::from_function(increasing_witness(a, b, witness_depth, piece_budget)));
  } else {
    const PLFunction inc = increasing_witness(a, reflect(b), witness_depth, piece_budget);
    std::vector<Breakpoint> pts;
    for (const auto& p : inc.points()) pts.push_back({p.x, Rational(1) - p.y});
    h = PLHomeo::from_map(PLMap::from_points(std::move(pts)));
  }
  Rational defect = conjugacy_defect(h, a.map, b.map, piece_budget);
  if (tolerance < defect) {
    throw WitnessDepthExceeded("witness defect " + defect.to_string() + " exceeds tolerance " +
                                   tolerance.to_string() + " at witness depth " +
                                   std::to_string(witness_depth),
                               defect);
  }
  return {std::move(h), std::move(defect)};
}

}  // namespace plconj
