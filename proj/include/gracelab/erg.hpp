#pragma once

#include "gracelab/labeling.hpp"
#include "gracelab/metrics.hpp"

#include <set>

namespace gracelab {

inline Rational alpha_bound_lobster(long m, long d) {
  return std::max(Rational(3 * m - d + 6, 4), Rational(5 * m + d + 3, 8));
}

struct ErgResult {
  Labeling labeling;
  VerificationReport report;
  Label low_block = 0;  // number of labels in the low block
};

// Low block: the levels d, d-2, ... each read right to left. High block: the other
// levels from the top down, each read left to right.
inline ErgResult erg_label(const RootedLayout& L) {
  if (spine_class(L) > 2) throw Error(Errc::NotALobster, "tree is not 2-distant");
  const auto& t = L.tree;
  const int d = L.depth();
  ErgResult r;
  r.labeling.method = Method::Erg;
  r.labeling.labels.assign(t.order(), 0);
  Label next = 0;
  for (int lv = d; lv >= 0; lv -= 2)
    for (auto it = L.levels[lv].rbegin(); it != L.levels[lv].rend(); ++it) r.labeling.labels[*it] = next++;
  r.low_block = next;
  for (int lv = (d % 2 == 0) ? 1 : 0; lv <= d; lv += 2)
    for (Vertex v : L.levels[lv]) r.labeling.labels[v] = next++;

  r.report = verify(t, r.labeling, &L);
  const long m = static_cast<long>(t.size());
  r.report.bound_checks.push_back(
      bound_check("epsilon>=ceil(alpha_bound)", Rational(r.report.epsilon), ">=", Rational(ceil_of(alpha_bound_lobster(m, d)))));
  return r;
}

struct ErgLevel {
  int level = 0;
  int m = 0;
  int alpha = 0;           // weights of this group not seen in earlier groups
  int alpha_in_group = 0;  // distinct weights inside the group
  int theta = 0;           // theta_level
  int theta_next = 0;      // theta_{level+1}
  int ex_next = 0;
  std::optional<Rational> d;
  std::optional<long> claim3_bound;  // ceil((d-1)/d * ex_next)
  bool claim3 = true;                // theta_next <= bound
  bool claim3_same_index = true;     // theta_level <= bound, the printed indexing
  std::optional<long> ineq7_bound;
  bool ineq7 = true;
  long ineq8_bound = 0;
  bool ineq8 = true;
};

struct ErgDiagnostics {
  std::vector<ErgLevel> levels;
  int epsilon = 0;
  int alpha_sum = 0;      // sum over groups, equals epsilon
  int alpha_grouped = 0;  // 1 + sum, the displayed form
  bool claim1 = true;
  std::vector<RepeatedWeight> claim1_witnesses;
  Rational bound;
};

// group of an edge: i when it hangs below x_{i-1} (child at distance <= 1) or below a
// distance-1 child of x_{i-1}
inline std::vector<int> edge_groups(const RootedLayout& L) {
  auto dist = spine_distances(L);
  std::vector<int> g;
  for (const auto& e : L.tree.edges()) {
    Vertex c = L.level_of[e.u] > L.level_of[e.v] ? e.u : e.v;
    g.push_back(dist[c] <= 1 ? L.level_of[c] : L.level_of[c] - 1);
  }
  return g;
}

inline ErgDiagnostics erg_diagnostics(const RootedLayout& L, const Labeling& f) {
  const auto& t = L.tree;
  auto st = level_metrics(L);
  auto els = edge_level_stats(L, st);
  auto rep = verify(t, f, &L);
  auto groups = edge_groups(L);
  const int d = L.depth();
  ErgDiagnostics out;
  out.epsilon = rep.epsilon;
  out.bound = alpha_bound_lobster(static_cast<long>(t.size()), d);

  std::set<Label> seen;
  for (int i = 1; i <= d; ++i) {
    const auto& es = els.levels[i - 1];
    ErgLevel lv;
    lv.level = i;
    lv.m = es.m;
    lv.d = es.d;
    lv.ex_next = es.ex_next;
    std::set<Label> here;
    for (std::size_t k = 0; k < t.size(); ++k)
      if (groups[k] == i) here.insert(weight(f, t.edges()[k]));
    lv.alpha_in_group = static_cast<int>(here.size());
    for (Label w : here) lv.alpha += seen.insert(w).second ? 1 : 0;
    lv.theta = rep.theta_per_level[i];
    lv.theta_next = i < d ? rep.theta_per_level[i + 1] : 0;
    if (es.d) {
      const Rational di = *es.d;
      lv.claim3_bound = ceil_of((di - 1) / di * es.ex_next);
      lv.claim3 = lv.theta_next <= *lv.claim3_bound;
      lv.claim3_same_index = lv.theta <= *lv.claim3_bound;
      lv.ineq7_bound = es.m - ceil_of((di - 1) * (es.m - 1) / (di * di));
      lv.ineq7 = lv.alpha >= *lv.ineq7_bound;
    }
    if (es.m >= 1) {
      lv.ineq8_bound = es.m - ceil_of(Rational(es.m - 1, 4));
      lv.ineq8 = lv.alpha >= lv.ineq8_bound;
    }
    out.alpha_sum += lv.alpha;
    out.levels.push_back(lv);
  }
  out.alpha_grouped = 1 + out.alpha_sum;
  for (const auto& rw : rep.repeated_weights) {
    bool ok = rw.multiplicity <= 2 && rw.levels.size() == 2 && rw.levels[1] - rw.levels[0] == 1;
    if (!ok) {
      out.claim1 = false;
      out.claim1_witnesses.push_back(rw);
    }
  }
  return out;
}

}  // namespace gracelab
