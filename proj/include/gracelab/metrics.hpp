#pragma once

#include "gracelab/layout.hpp"
#include "gracelab/rational.hpp"

#include <optional>

namespace gracelab {

struct LevelStat {
  int n = 0;
  int ex = 0;         // gap-sum reading
  int ex_formal = 0;  // first-gap reading
  int ex_prime = 0;
  int s = 0;
};

struct LevelStats {
  std::vector<LevelStat> levels;
  int ex = 0;
  int ex_prime = 0;
  int s = 0;        // all levels
  int s_from3 = 0;  // levels 3..d only
};

inline LevelStats level_metrics(const RootedLayout& L) {
  LevelStats st;
  for (std::size_t j = 0; j < L.levels.size(); ++j) {
    const auto& lvl = L.levels[j];
    LevelStat ls;
    ls.n = static_cast<int>(lvl.size());
    int first_gap_parent = -1;
    for (std::size_t i = 0; i + 1 < lvl.size(); ++i) {
      int pa = L.parent[lvl[i]], pb = L.parent[lvl[i + 1]];
      if (pa == pb) continue;
      ++ls.ex_prime;
      ls.ex += L.position[pb] - L.position[pa];
      if (first_gap_parent < 0) first_gap_parent = pa;
    }
    if (first_gap_parent >= 0)
      ls.ex_formal = static_cast<int>(L.levels[j - 1].size()) - 1 - L.position[first_gap_parent];
    ls.s = ls.n - ls.ex - 1;
    st.ex += ls.ex;
    st.ex_prime += ls.ex_prime;
    st.s += ls.s;
    if (j >= 3) st.s_from3 += ls.s;
    st.levels.push_back(ls);
  }
  return st;
}

inline int spine_class(const RootedLayout& L) {
  auto dist = spine_distances(L);
  return *std::max_element(dist.begin(), dist.end());
}

struct IdentityCheck {
  std::string name;
  bool holds = false;
  long residual = 0;
  bool diagnostic = false;  // reported only, not part of all_hold
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.diagnostic || c.holds; });
  }
  const IdentityCheck& get(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw Error(Errc::InvalidSpec, "no identity " + std::string(name));
  }
};

inline IdentityReport check_identities(const RootedLayout& L, const LevelStats& st) {
  if (spine_class(L) > 2) throw Error(Errc::NotALobster, "tree is not 2-distant");
  const long m = static_cast<long>(L.tree.size());
  const long d = L.depth();
  long formal_diff = 0;
  for (const auto& ls : st.levels) formal_diff += std::abs(ls.ex - ls.ex_formal);
  IdentityReport r;
  r.checks.push_back({"ex_equals_ex_prime", st.ex == st.ex_prime, st.ex - st.ex_prime, false});
  r.checks.push_back({"surplus_count", st.s + st.ex_prime + d == m, st.s + st.ex_prime + d - m, false});
  r.checks.push_back({"surplus_dominates_gaps", st.s >= st.ex_prime, st.s - st.ex_prime, false});
  r.checks.push_back({"surplus_count_from_level3", st.s_from3 + st.ex_prime + d == m, st.s_from3 + st.ex_prime + d - m, true});
  r.checks.push_back({"ex_formal_matches_gloss", formal_diff == 0, formal_diff, false});
  return r;
}

struct EdgeLevelStat {
  int level = 0;
  int m = 0;
  int s = 0;
  std::optional<Rational> d;  // absent when no qualifying vertex
  int ex_next = 0;
  int eq5_residual = 0;
  bool claim2 = true;
  bool ineq6 = true;
};

struct EdgeLevelStats {
  std::vector<EdgeLevelStat> levels;  // levels 1..d
};

// Groups edges by the spine vertex x_{i-1}: its child edges plus the edges below its
// distance-1 children.
inline EdgeLevelStats edge_level_stats(const RootedLayout& L, const LevelStats& st) {
  auto dist = spine_distances(L);
  if (*std::max_element(dist.begin(), dist.end()) > 2) throw Error(Errc::NotALobster, "tree is not 2-distant");
  EdgeLevelStats out;
  const int d = L.depth();
  for (int i = 1; i <= d; ++i) {
    EdgeLevelStat e;
    e.level = i;
    const auto& li = L.levels[i];
    for (Vertex v : li)
      if (dist[v] <= 1) ++e.m;
    int q = 0, c = 0;
    for (Vertex v : li) {
      if (dist[v] != 1 || L.children[v].empty()) continue;
      ++q;
      c += static_cast<int>(L.children[v].size());
    }
    e.m += c;
    for (std::size_t k = 0; k + 1 < li.size(); ++k)
      if (dist[li[k]] <= 1 && dist[li[k + 1]] <= 1 && L.parent[li[k]] == L.parent[li[k + 1]]) ++e.s;
    if (i < d) {
      const auto& ln = L.levels[i + 1];
      for (std::size_t k = 0; k + 1 < ln.size(); ++k)
        if (dist[ln[k]] == 2 && dist[ln[k + 1]] == 2 && L.parent[ln[k]] == L.parent[ln[k + 1]]) ++e.s;
      e.ex_next = st.levels[i + 1].ex;
    }
    if (q > 0) e.d = Rational(q + c, q);
    e.eq5_residual = e.s + e.ex_next + 1 - e.m;
    if (e.d) {
      e.claim2 = Rational(e.s) >= (*e.d - 1) * e.ex_next;
      e.ineq6 = *e.d * e.ex_next <= Rational(e.m - 1);
    }
    out.levels.push_back(e);
  }
  return out;
}

struct Matching {
  std::vector<Edge> edges;
  bool covers_all(std::size_t n) const { return 2 * edges.size() == n; }
};

struct MatchingNumber {
  int nu = 0;
  Matching witness;
};

// partner per vertex, -1 when unmatched
inline std::vector<int> mates(std::size_t n, const Matching& M) {
  std::vector<int> mate(n, -1);
  for (const auto& e : M.edges) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

// Leaves first: match a vertex with its parent whenever both are free.
inline MatchingNumber matching_number(const Tree& t, Vertex root = 0) {
  const std::size_t n = t.order();
  std::vector<int> parent(n, -1);
  std::vector<Vertex> order{root};
  parent[root] = root;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (Vertex w : t.neighbors(order[h]))
      if (parent[w] < 0) {
        parent[w] = order[h];
        order.push_back(w);
      }
  std::vector<char> used(n, 0);
  MatchingNumber mn;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (v == root || used[v] || used[parent[v]]) continue;
    used[v] = used[parent[v]] = 1;
    mn.witness.edges.push_back({parent[v], v});
  }
  mn.nu = 2 * static_cast<int>(mn.witness.edges.size());
  return mn;
}

}  // namespace gracelab
