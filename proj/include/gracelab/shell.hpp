#pragma once

#include "gracelab/rrg.hpp"

namespace gracelab {

enum class ContractionKind { Shell, Contree, Leaf };

struct ContractionMap {
  Tree result;
  std::vector<std::vector<Vertex>> origin;  // original vertices merged into each result vertex
  int contracted = 0;
  ContractionKind kind = ContractionKind::Shell;
};

// Off-path neighbours of the path all have degree two, and nothing is farther than 2.
inline bool is_shell_wrt(const Tree& t, const std::vector<Vertex>& path) {
  auto dist = distances_to(t, path);
  for (std::size_t v = 0; v < t.order(); ++v) {
    if (dist[v] > 2) return false;
    if (dist[v] == 1 && t.degree(static_cast<Vertex>(v)) != 2) return false;
  }
  return true;
}

inline bool is_shell(const Tree& t) { return is_shell_wrt(t, longest_path(t).vertices); }

namespace detail {

// tree induced by the kept vertices, numbered in increasing original order
inline std::pair<Tree, std::vector<int>> induced(const Tree& t, const std::vector<char>& keep) {
  std::vector<int> idx(t.order(), -1);
  int k = 0;
  for (std::size_t v = 0; v < t.order(); ++v)
    if (keep[v]) idx[v] = k++;
  std::vector<Edge> edges;
  for (const auto& e : t.edges())
    if (keep[e.u] && keep[e.v]) edges.push_back({idx[e.u], idx[e.v]});
  return {Tree::from_edges(static_cast<std::size_t>(k), std::move(edges)), idx};
}

}  // namespace detail

// Contract every leaf hanging on the spine and all but the lowest-numbered leaf below
// each distance-1 vertex.
inline ContractionMap shell(const RootedLayout& L) {
  const auto& t = L.tree;
  auto dist = spine_distances(L);
  if (*std::max_element(dist.begin(), dist.end()) > 2) throw Error(Errc::NotALobster, "tree is not 2-distant");
  std::vector<char> keep(t.order(), 1);
  std::vector<Vertex> into(t.order(), -1);
  for (std::size_t v = 0; v < t.order(); ++v) {
    if (dist[v] != 1) continue;
    if (t.degree(static_cast<Vertex>(v)) == 1) {
      keep[v] = 0;
      into[v] = L.parent[v];
      continue;
    }
    Vertex low = -1;
    for (Vertex c : L.children[v])
      if (t.degree(c) == 1 && (low < 0 || c < low)) low = c;
    for (Vertex c : L.children[v])
      if (t.degree(c) == 1 && c != low) {
        keep[c] = 0;
        into[c] = static_cast<Vertex>(v);
      }
  }
  auto [s, idx] = detail::induced(t, keep);
  ContractionMap map{s, std::vector<std::vector<Vertex>>(s.order()), 0, ContractionKind::Shell};
  for (std::size_t v = 0; v < t.order(); ++v)
    if (keep[v]) map.origin[idx[v]].push_back(static_cast<Vertex>(v));
  for (std::size_t v = 0; v < t.order(); ++v)
    if (!keep[v]) {
      map.origin[idx[into[v]]].push_back(static_cast<Vertex>(v));
      ++map.contracted;
    }
  return map;
}

struct ShellMatching {
  Matching matching;
  std::optional<Vertex> uncovered;
};

inline Matching perfect_matching_without(const Tree& t, std::optional<Vertex> skip) {
  std::vector<char> keep(t.order(), 1);
  if (skip) keep[*skip] = 0;
  auto [sub, idx] = detail::induced(t, keep);
  std::vector<Vertex> back(sub.order());
  for (std::size_t v = 0; v < t.order(); ++v)
    if (idx[v] >= 0) back[idx[v]] = static_cast<Vertex>(v);
  auto mn = matching_number(sub);
  Matching M;
  if (!mn.witness.covers_all(sub.order())) return M;
  for (const auto& e : mn.witness.edges) M.edges.push_back({back[e.u], back[e.v]});
  std::sort(M.edges.begin(), M.edges.end(), [](const Edge& a, const Edge& b) {
    return std::minmax(a.u, a.v) < std::minmax(b.u, b.v);
  });
  return M;
}

// Perfect for even order; otherwise misses an endpoint of the longest path.
inline ShellMatching shell_matching(const Tree& s) {
  auto P = longest_path(s).vertices;
  if (!is_shell_wrt(s, P)) throw Error(Errc::NotAShell, "tree is not a shell");
  if (s.order() % 2 == 0) {
    auto M = perfect_matching_without(s, std::nullopt);
    if (!M.covers_all(s.order())) throw Error(Errc::NotAShell, "shell without a perfect matching");
    return {M, std::nullopt};
  }
  for (Vertex u : {P.front(), P.back()}) {
    auto M = perfect_matching_without(s, u);
    if (2 * M.edges.size() + 1 == s.order()) return {M, u};
  }
  throw Error(Errc::NotAShell, "no near-perfect matching missing a path endpoint");
}

// One vertex per matched pair, pairs numbered by their smaller endpoint. A vertex listed in
// singletons stays on its own.
inline ContractionMap contract_pairs(const Tree& t, const Matching& M, const std::vector<Vertex>& singletons = {}) {
  std::vector<std::vector<Vertex>> groups;
  for (const auto& e : M.edges) groups.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  for (Vertex v : singletons) groups.push_back({v});
  std::sort(groups.begin(), groups.end());
  std::vector<int> gid(t.order(), -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (Vertex v : groups[g]) {
      if (gid[v] >= 0) throw Error(Errc::NotPerfect, "matching edges overlap");
      gid[v] = static_cast<int>(g);
    }
  for (int g : gid)
    if (g < 0) throw Error(Errc::NotPerfect, "matching does not cover every vertex");
  std::vector<Edge> edges;
  for (const auto& e : t.edges())
    if (gid[e.u] != gid[e.v]) edges.push_back({gid[e.u], gid[e.v]});
  return {Tree::from_edges(groups.size(), std::move(edges)), groups, static_cast<int>(M.edges.size()), ContractionKind::Contree};
}

inline ContractionMap contree(const Tree& t, const Matching& M) {
  for (const auto& e : M.edges)
    if (!t.adjacent(e.u, e.v)) throw Error(Errc::NotPerfect, "matching edge is not a tree edge");
  if (!M.covers_all(t.order())) throw Error(Errc::NotPerfect, "matching is not perfect");
  return contract_pairs(t, M);
}

// Types from a seed: matching edges switch type, other edges keep it.
inline std::vector<int> bh_types(const Tree& t, const std::vector<int>& mate, Vertex seed) {
  std::vector<int> type(t.order(), -1);
  std::vector<Vertex> q{seed};
  type[seed] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : t.neighbors(q[h]))
      if (type[w] < 0) {
        type[w] = mate[q[h]] == w ? 1 - type[q[h]] : type[q[h]];
        q.push_back(w);
      }
  return type;
}

struct BhResult {
  Labeling labeling;
  VerificationReport report;
  ContractionMap contree;
  Labeling contree_labeling;
};

struct BhOptions {
  bool complement_contree = true;  // use the complement of the contree's RRG labeling
  bool flip_types = false;
};

// Type-0 endpoints take 2g(w), their partners n-1-2g(w). The seed is the lowest vertex
// with a non-matching edge, so those endpoints carry 2g.
inline BhResult bh_label(const Tree& t, const Matching& M, BhOptions opt = {}) {
  BhResult r;
  r.contree = contree(t, M);
  const auto& C = r.contree.result;
  if (distance_class(C) > 1) throw Error(Errc::ContreeNotCaterpillar, "contree is not a caterpillar");
  auto g = C.order() == 1 ? Labeling{{0}, Method::Rrg} : rrg_label(layout(C, Orientation::Left)).labeling;
  if (opt.complement_contree) g = complementary(C, g);
  r.contree_labeling = g;

  auto mate = mates(t.order(), M);
  Vertex seed = -1;
  for (std::size_t v = 0; v < t.order() && seed < 0; ++v)
    for (Vertex w : t.neighbors(static_cast<Vertex>(v)))
      if (mate[v] != w) seed = static_cast<Vertex>(v);
  if (seed < 0) seed = 0;
  auto type = bh_types(t, mate, seed);
  std::vector<int> gid(t.order());
  for (std::size_t k = 0; k < r.contree.origin.size(); ++k)
    for (Vertex v : r.contree.origin[k]) gid[v] = static_cast<int>(k);

  const auto n = static_cast<Label>(t.order());
  r.labeling.method = Method::Bh;
  r.labeling.labels.assign(t.order(), 0);
  for (std::size_t v = 0; v < t.order(); ++v) {
    Label base = 2 * g.labels[gid[v]];
    r.labeling.labels[v] = (type[v] ^ static_cast<int>(opt.flip_types)) == 0 ? base : n - 1 - base;
  }
  r.report = verify(t, r.labeling);
  int sums_ok = 0;
  for (const auto& e : M.edges) sums_ok += r.labeling.labels[e.u] + r.labeling.labels[e.v] == n - 1;
  r.report.bound_checks.push_back(bound_check("matched_sums==n-1", Rational(sums_ok), ">=", Rational(static_cast<long>(M.edges.size()))));
  return r;
}

inline bool strongly_graceful(const Tree& t, const Labeling& f, const Matching& M) {
  if (!verify(t, f).graceful) return false;
  const auto n = static_cast<Label>(t.order());
  return std::all_of(M.edges.begin(), M.edges.end(), [&](const Edge& e) { return f.labels[e.u] + f.labels[e.v] == n - 1; });
}

struct BhRelaxedResult {
  Labeling labeling;
  VerificationReport report;
  int contractions = 0;  // l, plus one when the shell has odd order
  int certificate = 0;   // guaranteed distinct weights
  bool odd = false;
};

// Shell the lobster, drop a path endpoint when the shell is odd, BH-label the rest, then give
// the contracted leaves the top labels, each taking a label that adds a new weight when one is
// left. The best of the contree-labeling and type-flip variants is kept.
inline BhRelaxedResult bh_relaxed_label(const Tree& t) {
  if (distance_class(t) > 2) throw Error(Errc::NotALobster, "tree is not 2-distant");
  const std::size_t n = t.order();
  if (n <= 2) {
    BhRelaxedResult r;
    r.labeling = {n == 1 ? std::vector<Label>{0} : std::vector<Label>{0, 1}, Method::BhRelaxed};
    r.report = verify(t, r.labeling);
    r.certificate = static_cast<int>(n) - 1;
    r.report.bound_checks.push_back(bound_check("epsilon>=certificate", Rational(r.report.epsilon), ">=", Rational(r.certificate)));
    return r;
  }
  auto L = layout(t, Orientation::Right);
  auto sh = shell(L);
  const int l = sh.contracted;
  const Tree& s = sh.result;

  std::vector<std::optional<Vertex>> drops{std::nullopt};
  bool odd = s.order() % 2 == 1;
  if (odd) {
    auto P = longest_path(s).vertices;
    drops = {P.front(), P.back()};
  }

  BhRelaxedResult best;
  best.labeling.labels.clear();
  for (auto drop : drops) {
    std::vector<char> keep_s(s.order(), 1);
    if (drop) keep_s[*drop] = 0;
    auto [core, idx] = detail::induced(s, keep_s);
    auto M = perfect_matching_without(core, std::nullopt);
    if (!M.covers_all(core.order())) continue;
    std::vector<Vertex> core_to_orig(core.order());
    for (std::size_t v = 0; v < s.order(); ++v)
      if (idx[v] >= 0) core_to_orig[idx[v]] = sh.origin[v].front();
    // contracted originals and the kept vertex each one hangs on
    std::vector<std::pair<Vertex, Vertex>> extra;
    for (std::size_t v = 0; v < s.order(); ++v) {
      Vertex rep = sh.origin[v].front();
      for (std::size_t k = 1; k < sh.origin[v].size(); ++k) extra.push_back({sh.origin[v][k], rep});
    }
    if (drop) {
      // a path end of the shell is a leaf of t as well
      Vertex rep = sh.origin[*drop].front();
      extra.erase(std::remove_if(extra.begin(), extra.end(), [&](const auto& x) { return x.first == rep; }), extra.end());
      extra.push_back({rep, t.neighbors(rep).front()});
    }
    std::sort(extra.begin(), extra.end());

    for (bool comp : {true, false})
      for (bool flip : {false, true}) {
        auto bh = bh_label(core, M, {comp, flip});
        Labeling f{std::vector<Label>(n, -1), Method::BhRelaxed};
        for (std::size_t v = 0; v < core.order(); ++v) f.labels[core_to_orig[v]] = bh.labeling.labels[v];
        std::set<Label> have;
        for (const auto& e : t.edges())
          if (f.labels[e.u] >= 0 && f.labels[e.v] >= 0) have.insert(weight(f, e));
        std::vector<Label> free;
        for (auto x = static_cast<Label>(core.order()); x < static_cast<Label>(n); ++x) free.push_back(x);
        for (auto [v, anchor] : extra) {
          Label a = f.labels[anchor];
          auto pick = free.end();
          for (auto it = free.end(); it != free.begin();) {
            --it;
            if (!have.count(std::abs(*it - a))) {
              pick = it;
              break;
            }
          }
          if (pick == free.end()) pick = std::prev(free.end());
          f.labels[v] = *pick;
          have.insert(std::abs(*pick - a));
          free.erase(pick);
        }
        int eps = epsilon(t, f);
        if (best.labeling.labels.empty() || eps > best.report.epsilon) {
          best.labeling = f;
          best.report = verify(t, f);
        }
      }
  }
  if (best.labeling.labels.empty()) throw Error(Errc::NotAShell, "shell core has no perfect matching");
  best.odd = odd;
  best.contractions = l + (odd ? 1 : 0);
  best.certificate = static_cast<int>(n) - l - (odd ? 2 : 1);
  best.report.bound_checks.push_back(bound_check("epsilon>=certificate", Rational(best.report.epsilon), ">=", Rational(best.certificate)));
  return best;
}

struct DeltaResult {
  Tree tree;
  Labeling labeling;
  VerificationReport report;
  // per result vertex: (S vertex, T2 vertex), T2 vertex -1 for the exceptional vertex
  std::vector<std::pair<Vertex, Vertex>> origin;
};

// Every S vertex except u becomes a copy of T2. attach[i] names the T2 vertex joined across the
// copies for S edge i; edges at u always use v. Copy of the S vertex labelled i gets
// i*n_T + g(x) on v's side and (n_S-i-2)*n_T + g(x) on the other; u gets (n_S-1)*n_T.
inline DeltaResult delta_plus_one(const Tree& S, const Labeling& fS, Vertex u, const Tree& T2, const Labeling& g, Vertex v,
                                  std::vector<Vertex> attach = {}) {
  const auto nS = static_cast<Label>(S.order());
  const auto nT = static_cast<Label>(T2.order());
  auto fail = [](const std::string& w) { return Error(Errc::PreconditionLabeling, w); };
  if (!verify(S, fS).graceful) throw fail("S labeling is not graceful");
  if (fS.labels[u] != nS - 1) throw fail("exceptional vertex must carry n_S - 1");
  if (!verify(T2, g).graceful) throw fail("T2 labeling is not graceful");
  if (g.labels[v] != 0) throw fail("T2 vertex v must carry 0");
  if (attach.empty()) attach.assign(S.size(), v);
  if (attach.size() != S.size()) throw fail("one attach choice per S edge");

  auto side = bfs_distances(T2, v);
  std::vector<int> base(S.order(), -1);
  DeltaResult r;
  r.origin.push_back({u, -1});
  for (std::size_t w = 0; w < S.order(); ++w) {
    if (static_cast<Vertex>(w) == u) continue;
    base[w] = static_cast<int>(r.origin.size());
    for (std::size_t x = 0; x < T2.order(); ++x) r.origin.push_back({static_cast<Vertex>(w), static_cast<Vertex>(x)});
  }
  std::vector<Edge> edges;
  for (std::size_t w = 0; w < S.order(); ++w)
    if (base[w] >= 0)
      for (const auto& e : T2.edges()) edges.push_back({base[w] + e.u, base[w] + e.v});
  for (std::size_t i = 0; i < S.size(); ++i) {
    const auto& e = S.edges()[i];
    if (e.u == u || e.v == u) {
      Vertex other = e.u == u ? e.v : e.u;
      edges.push_back({0, base[other] + v});
    } else {
      edges.push_back({base[e.u] + attach[i], base[e.v] + attach[i]});
    }
  }
  r.tree = Tree::from_edges(r.origin.size(), std::move(edges));
  r.labeling.method = Method::ShellDelta;
  r.labeling.labels.assign(r.tree.order(), 0);
  r.labeling.labels[0] = (nS - 1) * nT;
  for (std::size_t k = 1; k < r.origin.size(); ++k) {
    auto [w, x] = r.origin[k];
    Label i = fS.labels[w];
    r.labeling.labels[k] = (side[x] % 2 == 0 ? i * nT : (nS - i - 2) * nT) + g.labels[x];
  }
  r.report = verify(r.tree, r.labeling);
  return r;
}

// graceful caterpillar labeling with n-1 on u, u an end of some longest path
inline std::optional<Labeling> caterpillar_top_on(const Tree& C, Vertex u) {
  if (C.order() == 1) return Labeling{{0}, Method::Rrg};
  auto ecc = eccentricities(C);
  if (ecc[u] != *std::max_element(ecc.begin(), ecc.end())) return std::nullopt;
  for (Orientation o : {Orientation::Left, Orientation::Right}) {
    auto f = rrg_label(layout(C, o, u)).labeling;
    if (!verify(C, f).graceful) continue;
    auto z = normalize_to_zero(C, f, u);
    if (z) return complementary(C, *z);
  }
  return std::nullopt;
}

struct ShellGracefulResult {
  Labeling labeling;
  VerificationReport report;
  std::string route;  // "bh" or "delta"
};

inline ShellGracefulResult shell_graceful(const Tree& s) {
  if (!is_shell(s)) throw Error(Errc::NotAShell, "tree is not a shell");
  auto sm = shell_matching(s);
  ShellGracefulResult r;
  if (!sm.uncovered) {
    auto bh = bh_label(s, sm.matching);
    r.labeling = bh.labeling;
    r.labeling.method = Method::ShellDelta;
    r.report = bh.report;
    r.route = "bh";
    return r;
  }
  const Vertex u = *sm.uncovered;
  auto S = contract_pairs(s, sm.matching, {u});
  Vertex uS = -1;
  std::vector<int> gid(s.order());
  for (std::size_t k = 0; k < S.origin.size(); ++k) {
    for (Vertex x : S.origin[k]) gid[x] = static_cast<int>(k);
    if (S.origin[k].size() == 1) uS = static_cast<Vertex>(k);
  }
  if (distance_class(S.result) > 1) throw Error(Errc::ContreeNotCaterpillar, "contracted shell is not a caterpillar");
  auto fS = caterpillar_top_on(S.result, uS);
  if (!fS) throw Error(Errc::PreconditionLabeling, "no graceful contree labeling with the top label on u");

  // v-type endpoints: u's neighbours and everything reached without crossing a matching edge
  auto mate = mates(s.order(), sm.matching);
  auto type = bh_types(s, mate, u);
  std::vector<Vertex> vtype(S.result.order(), -1), other(S.result.order(), -1);
  for (std::size_t x = 0; x < s.order(); ++x) {
    if (static_cast<Vertex>(x) == u) continue;
    (type[x] == 0 ? vtype : other)[gid[x]] = static_cast<Vertex>(x);
  }
  std::map<std::pair<int, int>, Vertex> side_of;
  for (const auto& se : s.edges())
    if (gid[se.u] != gid[se.v]) side_of[std::minmax(gid[se.u], gid[se.v])] = type[se.u] == 0 ? 0 : 1;
  std::vector<Vertex> attach;
  for (const auto& e : S.result.edges()) attach.push_back(side_of.at(std::minmax(e.u, e.v)));
  auto P2 = path_tree(2);
  auto D = delta_plus_one(S.result, *fS, uS, P2, Labeling{{0, 1}, Method::External}, 0, attach);

  r.labeling = {std::vector<Label>(s.order(), -1), Method::ShellDelta};
  std::vector<Vertex> to_s(D.tree.order());
  for (std::size_t k = 0; k < D.origin.size(); ++k) {
    auto [w, x] = D.origin[k];
    to_s[k] = x < 0 ? u : (x == 0 ? vtype[w] : other[w]);
    r.labeling.labels[to_s[k]] = D.labeling.labels[k];
  }
  std::set<std::pair<int, int>> want, got;
  for (const auto& e : s.edges()) want.insert(std::minmax(e.u, e.v));
  for (const auto& e : D.tree.edges()) got.insert(std::minmax(to_s[e.u], to_s[e.v]));
  if (want != got) throw Error(Errc::PreconditionLabeling, "attach choices do not reproduce the shell");
  r.report = verify(s, r.labeling);
  r.route = "delta";
  return r;
}

struct GsBound {
  Rational value;
  Rational first;   // 3m/4 + (d - nu)/8 + 3/2
  Rational second;  // nu
  // "nu>=3m/4", "d>=nu-12", or "none"
  std::string corollary_case;
};

inline GsBound gracesize_lower(long m, long d, long nu) {
  GsBound b;
  b.first = Rational(3 * m, 4) + Rational(d - nu, 8) + Rational(3, 2);
  b.second = Rational(nu);
  b.value = std::max(b.first, b.second);
  if (Rational(nu) >= Rational(3 * m, 4)) b.corollary_case = "nu>=3m/4";
  else if (d >= nu - 12) b.corollary_case = "d>=nu-12";
  else b.corollary_case = "none";
  return b;
}

}  // namespace gracelab
