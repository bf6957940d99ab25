#pragma once

#include "gracelab/labeling.hpp"
#include "gracelab/metrics.hpp"

namespace gracelab {

struct RrgBlock {
  int level = 0;
  bool high = false;
  Label begin = 0;  // reserved slots, inclusive
  Label end = -1;
  Label used_begin = 0;
  Label used_end = -1;
  bool descending = false;
  std::vector<Label> skipped;
};

struct RrgPlan {
  std::vector<RrgBlock> blocks;  // indexed by level
  Label B = 0;
  Label max_label = 0;
};

// Levels of the same parity as d form the low blocks, filled from L_d upward and labelled
// left to right in descending order; each block is followed by ex_j unused slots. The other
// levels take the high blocks from B on, top level first, ascending, each block preceded by
// its ex_j unused slots.
inline RrgPlan rrg_plan(const RootedLayout& L, const LevelStats& st) {
  const int d = L.depth();
  auto width = [&](int t) { return static_cast<Label>(st.levels[t].n + st.levels[t].ex); };
  RrgPlan p;
  p.blocks.resize(d + 1);
  for (int j = 0; j <= d / 2; ++j) p.B += width(d - 2 * j);

  for (int i = 0; i <= d / 2; ++i) {
    const int t = d - 2 * i;
    Label start = 0;
    for (int j = 1; j <= i; ++j) start += width(d + 2 - 2 * j);
    auto& b = p.blocks[t];
    b.level = t;
    b.high = false;
    b.descending = true;
    b.begin = start;
    b.end = start + width(t) - 1;
    b.used_begin = start;
    b.used_end = start + st.levels[t].n - 1;
    for (Label x = b.used_end + 1; x <= b.end; ++x) b.skipped.push_back(x);
  }
  const int top = (d + 1) / 2;
  for (int i = 1; i <= top; ++i) {
    const int t = d + 1 - 2 * i;
    Label sum = 0;
    for (int j = i; j <= top; ++j) sum += width(d + 1 - 2 * j);
    auto& b = p.blocks[t];
    b.level = t;
    b.high = true;
    b.descending = false;
    b.end = p.B + sum - 1;
    b.used_end = b.end;
    b.used_begin = b.end - st.levels[t].n + 1;
    b.begin = b.used_begin - st.levels[t].ex;
    for (Label x = b.begin; x < b.used_begin; ++x) b.skipped.push_back(x);
  }
  for (const auto& b : p.blocks) p.max_label = std::max(p.max_label, b.end);
  return p;
}

inline Labeling apply_plan(const RootedLayout& L, const RrgPlan& p) {
  Labeling f;
  f.method = Method::Rrg;
  f.labels.assign(L.tree.order(), 0);
  for (const auto& b : p.blocks) {
    const auto& lvl = L.levels[b.level];
    for (std::size_t k = 0; k < lvl.size(); ++k) {
      auto off = static_cast<Label>(k);
      f.labels[lvl[k]] = b.descending ? b.used_end - off : b.used_begin + off;
    }
  }
  return f;
}

struct RrgBounds {
  Rational range_max;     // m + ex(T)
  Rational lobster_vmax;  // 3m/2 - d/2
};

inline RrgBounds rrg_bounds(long m, long d, long ex) { return {Rational(m + ex), Rational(3 * m - d, 2)}; }

struct RrgResult {
  Labeling labeling;
  VerificationReport report;
  RrgPlan plan;  // as applied, after any fallback shifts
  bool fallback_used = false;
};

namespace detail {

// first pair of edges sharing a weight, deeper edge second
inline std::optional<std::pair<int, int>> weight_collision(const RootedLayout& L, const Labeling& f) {
  std::map<Label, int> seen;
  const auto& E = L.tree.edges();
  for (std::size_t i = 0; i < E.size(); ++i) {
    auto [it, fresh] = seen.emplace(weight(f, E[i]), static_cast<int>(i));
    if (!fresh) {
      int a = it->second, b = static_cast<int>(i);
      if (edge_level(L, E[a]) > edge_level(L, E[b])) std::swap(a, b);
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Labels from the plan. On a weight collision, shifts up by one every block from some block
// start on, trying the deeper edge's high block first, until all weights differ.
inline RrgResult rrg_label(const RootedLayout& L, RrgPlan plan) {
  RrgResult r;
  const auto& t = L.tree;
  r.labeling = apply_plan(L, plan);
  const std::size_t cap = 4 * (t.order() + 1) * (t.order() + 1);
  for (std::size_t step = 0;; ++step) {
    auto hit = detail::weight_collision(L, r.labeling);
    if (!hit) break;
    if (step == cap) throw Error(Errc::WeightCollision, "fallback did not separate the weights");
    r.fallback_used = true;
    // a cut at c bumps every block starting at or above c; an edge's weight grows iff the
    // cut falls between its ends
    const auto& ea = t.edges()[hit->first];
    const auto& eb = t.edges()[hit->second];
    auto grows = [&](const Edge& e, Label c) {
      Label lo = std::min(r.labeling.labels[e.u], r.labeling.labels[e.v]);
      Label hi = std::max(r.labeling.labels[e.u], r.labeling.labels[e.v]);
      return lo < c && c <= hi;
    };
    int lv = edge_level(L, eb);
    std::vector<Label> cuts{plan.blocks[plan.blocks[lv].high ? lv : lv - 1].begin};
    for (const auto& b : plan.blocks) cuts.push_back(b.begin);
    std::sort(cuts.begin() + 1, cuts.end(), std::greater<>());
    auto cut = std::find_if(cuts.begin(), cuts.end(), [&](Label c) { return grows(ea, c) != grows(eb, c); });
    if (cut == cuts.end()) throw Error(Errc::WeightCollision, "no block shift separates the colliding weights");
    const Label c = *cut;
    for (auto& b : plan.blocks) {
      if (b.begin < c) continue;
      ++b.begin, ++b.end, ++b.used_begin, ++b.used_end;
      for (auto& x : b.skipped) ++x;
    }
    r.labeling = apply_plan(L, plan);
  }
  plan.max_label = 0;
  for (const auto& b : plan.blocks) plan.max_label = std::max(plan.max_label, b.end);
  r.plan = std::move(plan);

  auto st = level_metrics(L);
  r.report = verify(t, r.labeling, &L);
  if (!r.report.injective || r.report.epsilon != static_cast<int>(t.size()))
    throw Error(Errc::WeightCollision, "labeling failed verification");
  auto bounds = rrg_bounds(static_cast<long>(t.size()), L.depth(), st.ex);
  r.report.bound_checks.push_back(bound_check("max_label<=m+ex", Rational(r.report.max_label), "<=", bounds.range_max));
  if (spine_class(L) <= 2)
    r.report.bound_checks.push_back(
        bound_check("max_label<=3m/2-d/2", Rational(r.report.max_label), "<=", bounds.lobster_vmax));
  return r;
}

inline RrgResult rrg_label(const RootedLayout& L) { return rrg_label(L, rrg_plan(L, level_metrics(L))); }

}  // namespace gracelab
