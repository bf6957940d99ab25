#pragma once

#include "gracelab/oracle.hpp"

#include <functional>

namespace gracelab {

struct AmalgamResult {
  Tree tree;
  Labeling labeling;
  VerificationReport report;
  std::vector<Vertex> from_first;   // T1 vertex -> result vertex
  std::vector<Vertex> from_second;  // T2 vertex -> result vertex
  int epsilon_first = 0;
  int epsilon_second = 0;
};

// Identify u1 with u2. A1 gets f̂1, T2 gets f2 + |A1| - 1, B1 gets f̂1 + n2 - 1.
inline AmalgamResult amalgamate_rs(const Tree& T1, Vertex u1, const Labeling& f1, const Tree& T2, Vertex u2, const Labeling& f2) {
  auto fail = [](const std::string& w) { return Error(Errc::PreconditionLabeling, w); };
  check_labels(T1, f1);
  check_labels(T2, f2);
  if (f1.labels[u1] != 0 || f2.labels[u2] != 0) throw fail("amalgamated vertices must carry label 0");
  auto p1 = bipartition(T1, f1);
  auto p2 = bipartition(T2, f2);
  if (!is_contiguous_bipartite(T1, f1, p1) || !is_contiguous_bipartite(T2, f2, p2)) throw fail("labelings must be contiguous bipartite");
  auto h1 = inverse(T1, f1, p1);
  const auto a1 = static_cast<Label>(p1.A.size());
  const auto n1 = static_cast<int>(T1.order());
  const auto n2 = static_cast<Label>(T2.order());

  AmalgamResult r;
  r.from_first.resize(T1.order());
  std::iota(r.from_first.begin(), r.from_first.end(), 0);
  r.from_second.assign(T2.order(), -1);
  int next = n1;
  for (std::size_t v = 0; v < T2.order(); ++v) r.from_second[v] = static_cast<Vertex>(v) == u2 ? u1 : next++;

  std::vector<Edge> edges = T1.edges();
  for (const auto& e : T2.edges()) edges.push_back({r.from_second[e.u], r.from_second[e.v]});
  r.tree = Tree::from_edges(static_cast<std::size_t>(next), std::move(edges));
  r.labeling = {std::vector<Label>(r.tree.order(), 0), Method::RsAmalgam};
  for (int v = 0; v < n1; ++v) r.labeling.labels[v] = p1.in_a[v] ? h1.labels[v] : h1.labels[v] + n2 - 1;
  for (std::size_t v = 0; v < T2.order(); ++v) r.labeling.labels[r.from_second[v]] = f2.labels[v] + a1 - 1;

  r.epsilon_first = epsilon(T1, f1);
  r.epsilon_second = epsilon(T2, f2);
  r.report = verify(r.tree, r.labeling);
  r.report.bound_checks.push_back(
      bound_check("epsilon>=eps1+eps2", Rational(r.report.epsilon), ">=", Rational(r.epsilon_first + r.epsilon_second)));
  return r;
}

enum class Extreme { MinA, MaxA, MinB, MaxB };

struct Terminal {
  Vertex v = 0;
  Extreme at = Extreme::MinA;
};

struct AlphaSearch {
  Labeling labeling;
  int epsilon = -1;
  bool optimal = false;  // search space exhausted
  long nodes = 0;
};

// Branch and bound over contiguous bipartite labelings (low part A = labels 0..|A|-1) with
// pinned terminals. Isomorphic sibling subtrees without terminals are ordered by root label.
inline AlphaSearch best_bipartite(const Tree& t, const std::vector<Terminal>& terms, long budget = 50'000'000) {
  const int n = static_cast<int>(t.order());
  const int m = n - 1;
  AlphaSearch out;
  if (n == 1) {
    out.labeling = {{0}, Method::Oracle};
    out.epsilon = 0;
    out.optimal = true;
    return out;
  }
  Vertex root = 0;
  for (int v = 1; v < n; ++v)
    if (t.degree(v) > t.degree(root)) root = v;
  auto codes = subtree_codes(t, root);
  std::vector<int> parent(n, -1);
  std::vector<std::vector<Vertex>> kids(n);
  std::vector<Vertex> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t h = 0; h < order.size(); ++h) {
    Vertex x = order[h];
    for (Vertex w : t.neighbors(x))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = x;
        kids[x].push_back(w);
      }
    std::sort(kids[x].begin(), kids[x].end(), [&](Vertex a, Vertex b) { return std::tie(codes[a], a) < std::tie(codes[b], b); });
    for (Vertex w : kids[x]) order.push_back(w);
  }
  std::vector<char> marked(n, 0);
  for (const auto& tm : terms) marked[tm.v] = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (marked[*it] && parent[*it] >= 0) marked[parent[*it]] = 1;
  std::vector<int> pred(n, -1);
  for (int x = 0; x < n; ++x)
    for (std::size_t i = 1; i < kids[x].size(); ++i) {
      Vertex a = kids[x][i - 1], b = kids[x][i];
      if (!marked[a] && !marked[b] && codes[a] == codes[b]) pred[b] = a;
    }
  auto depth = bfs_distances(t, root);

  bool exhausted = true;
  for (int low = 0; low < 2; ++low) {
    Label a = 0;
    for (int v = 0; v < n; ++v) a += depth[v] % 2 == low;
    std::vector<Label> pin(n, -1);
    bool ok = true;
    for (const auto& tm : terms) {
      bool in_a = depth[tm.v] % 2 == low;
      Label x = tm.at == Extreme::MinA ? 0 : tm.at == Extreme::MaxA ? a - 1 : tm.at == Extreme::MinB ? a : m;
      bool want_a = tm.at == Extreme::MinA || tm.at == Extreme::MaxA;
      if (in_a != want_a || (pin[tm.v] >= 0 && pin[tm.v] != x)) ok = false;
      pin[tm.v] = x;
    }
    std::vector<char> used(n, 0);
    for (Label x : pin)
      if (x >= 0) {
        if (used[x]) ok = false;
        used[x] = 1;
      }
    if (!ok) continue;

    std::vector<Label> lab(n, -1);
    std::vector<int> count(n, 0);
    int distinct = 0;
    std::function<void(int)> rec = [&](int k) {
      if (out.epsilon == m) return;
      if (++out.nodes > budget) {
        exhausted = false;
        return;
      }
      if (k == n) {
        if (distinct > out.epsilon) {
          out.epsilon = distinct;
          out.labeling = {lab, Method::Oracle};
        }
        return;
      }
      if (distinct + (n - k) <= out.epsilon) return;
      Vertex v = order[k];
      bool va = depth[v] % 2 == low;
      Label lo = va ? 0 : a, hi = va ? a - 1 : m;
      if (pin[v] >= 0) lo = hi = pin[v];
      if (pred[v] >= 0) lo = std::max(lo, lab[pred[v]] + 1);
      for (Label x = hi; x >= lo; --x) {
        if (pin[v] < 0 && used[x]) continue;
        lab[v] = x;
        used[x] = 1;
        int w = -1;
        if (parent[v] >= 0) {
          Label pl = lab[parent[v]];
          w = static_cast<int>(x > pl ? x - pl : pl - x);
          if (count[w]++ == 0) ++distinct;
        }
        rec(k + 1);
        if (w >= 0 && --count[w] == 0) --distinct;
        if (pin[v] < 0) used[x] = 0;
        lab[v] = -1;
        if (out.epsilon == m || out.nodes > budget) return;
      }
    };
    rec(0);
  }
  out.optimal = exhausted && out.epsilon >= 0;
  return out;
}

struct CometLabel {
  Labeling labeling;
  int epsilon = 0;
  bool optimal = false;
  bool budget_exceeded = false;
  bool greedy = false;  // beyond search scale, no optimality claim
};

inline constexpr std::size_t kSearchMaxEdges = 14;

namespace detail {

// Center 0, rays take the top labels outside-in, every other vertex takes the free label of its
// part that adds a new weight, scanning from the top.
inline Labeling greedy_comet(const Tree& c, Vertex center) {
  const auto n = static_cast<Label>(c.order());
  auto depth = bfs_distances(c, center);
  std::vector<Vertex> A, B;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) (depth[v] % 2 == 0 ? A : B).push_back(v);
  const auto a = static_cast<Label>(A.size());
  std::vector<Label> lab(n, -1);
  std::vector<char> used(n, 0), have(n, 0);
  lab[center] = 0;
  used[0] = 1;
  std::vector<Vertex> order;
  std::vector<int> par(n, -1);
  order = bfs_order(c, center, par);
  for (Vertex v : order) {
    if (v == center) continue;
    bool in_a = depth[v] % 2 == 0;
    Label lo = in_a ? 0 : a, hi = in_a ? a - 1 : n - 1;
    Label pick = -1;
    for (Label x = hi; x >= lo; --x)
      if (!used[x] && !have[std::abs(x - lab[par[v]])]) {
        pick = x;
        break;
      }
    if (pick < 0)
      for (Label x = hi; x >= lo && pick < 0; --x)
        if (!used[x]) pick = x;
    lab[v] = pick;
    used[pick] = 1;
    have[std::abs(pick - lab[par[v]])] = 1;
  }
  return {lab, Method::Oracle};
}

}  // namespace detail

// Optimal bipartite labeling of a comet or stardust by exhaustive search (up to 14 edges),
// with the attachment at 0 when one is named.
inline CometLabel comet_alpha_label(const Tree& c, std::optional<Vertex> attachment = std::nullopt,
                                    std::vector<Terminal> extra = {}, long budget = 50'000'000) {
  if (diameter(c) > 4) throw Error(Errc::InvalidSpec, "comet pieces have diameter at most 4");
  CometLabel r;
  std::vector<Terminal> terms = std::move(extra);
  if (attachment) terms.insert(terms.begin(), {*attachment, Extreme::MinA});
  if (c.size() <= kSearchMaxEdges) {
    auto s = best_bipartite(c, terms, budget);
    if (s.epsilon < 0) throw Error(Errc::PreconditionLabeling, "terminal constraints admit no bipartite labeling");
    r.labeling = s.labeling;
    r.optimal = s.optimal;
    r.budget_exceeded = !s.optimal;
  } else {
    if (terms.size() > (attachment ? 1u : 0u)) throw Error(Errc::SearchBudgetExceeded, "constrained piece beyond search scale");
    Vertex center = attachment ? *attachment : 0;
    if (!attachment)
      for (Vertex v = 1; v < static_cast<Vertex>(c.order()); ++v)
        if (c.degree(v) > c.degree(center)) center = v;
    r.labeling = detail::greedy_comet(c, center);
    r.greedy = true;
  }
  r.labeling.method = Method::RsAmalgam;
  r.epsilon = epsilon(c, r.labeling);
  return r;
}

struct StardustPiece {
  Tree tree;                 // center is vertex 0
  Vertex attachment = 0;
  std::vector<Vertex> origin;  // piece vertex -> shell vertex
  std::optional<Labeling> labeling;
  int rays = 0;
};

struct StardustDecomposition {
  std::vector<StardustPiece> pieces;  // centers x_2 .. x_{d-2}
  std::vector<Edge> bridges;          // x_j x_{j+1} between consecutive centers
  std::vector<Vertex> spine;
};

namespace detail {

// center 0, rays 1..r, ray leaves r+1..2r, then optional center leaves
inline Tree comet_tree(int rays, int center_leaves = 0) {
  std::vector<Edge> edges;
  for (int i = 1; i <= rays; ++i) edges.push_back({0, i});
  for (int i = 1; i <= rays; ++i) edges.push_back({i, rays + i});
  for (int i = 0; i < center_leaves; ++i) edges.push_back({0, 2 * rays + 1 + i});
  return Tree::from_edges(static_cast<std::size_t>(2 * rays + 1 + center_leaves), std::move(edges));
}

}  // namespace detail

inline StardustDecomposition stardust_decompose(const RootedLayout& L) {
  const auto& s = L.tree;
  const auto P = L.spine();
  if (!is_shell_wrt(s, P)) throw Error(Errc::NotAShell, "tree is not a shell");
  const int d = L.depth();
  if (d < 4) throw Error(Errc::DiameterTooSmall, "stardust pieces need diameter >= 4");
  std::vector<char> on_p(s.order(), 0);
  for (Vertex x : P) on_p[x] = 1;
  StardustDecomposition D;
  D.spine = P;
  for (int j = 2; j <= d - 2; ++j) {
    std::vector<std::pair<Vertex, Vertex>> rays;  // (ray, leaf)
    if (j == 2) rays.push_back({P[1], P[0]});
    for (Vertex b : s.neighbors(P[j])) {
      if (on_p[b]) continue;
      Vertex leaf = s.neighbors(b)[0] == P[j] ? s.neighbors(b)[1] : s.neighbors(b)[0];
      rays.push_back({b, leaf});
    }
    if (j == d - 2) rays.push_back({P[d - 1], P[d]});
    StardustPiece piece;
    piece.rays = static_cast<int>(rays.size());
    piece.tree = detail::comet_tree(piece.rays);
    piece.origin.assign(piece.tree.order(), -1);
    piece.origin[0] = P[j];
    for (int i = 0; i < piece.rays; ++i) {
      piece.origin[1 + i] = rays[i].first;
      piece.origin[1 + piece.rays + i] = rays[i].second;
    }
    D.pieces.push_back(std::move(piece));
    if (j < d - 2) D.bridges.push_back({P[j], P[j + 1]});
  }
  return D;
}

// Contiguous bipartite labeling with v at 0 and no optimality claim.
inline Labeling plain_bipartite(const Tree& t, Vertex v) {
  auto depth = bfs_distances(t, v);
  Labeling f{std::vector<Label>(t.order()), Method::External};
  Label next = 0;
  for (int parity = 0; parity < 2; ++parity)
    for (std::size_t x = 0; x < t.order(); ++x)
      if (depth[x] % 2 == parity) f.labels[x] = next++;
  return f;
}

struct PieceReport {
  int index = 0;
  int m = 0;
  int epsilon = 0;
  int floor_target = 0;  // floor((5m+2)/6)
  bool two_terminal = false;
  bool optimal = false;
  bool greedy = false;
};

struct ShellAlphaResult {
  Labeling labeling;
  VerificationReport report;
  int target = 0;  // floor((5m+2)/6)
  bool certified = false;
  std::vector<PieceReport> pieces;
  std::vector<std::string> steps;
  int bridges_added = 0;
  int floor_sum = 0;  // piece targets plus one per extension bridge
};

// Memo of unit searches keyed by shape; safe to share within one thread.
using AlphaCache = std::map<std::tuple<int, int, bool>, CometLabel>;

namespace detail {

inline Label extreme_kind(const Tree& t, const Labeling& f, Vertex v, Extreme& kind) {
  auto p = bipartition(t, f);
  const auto a = static_cast<Label>(p.A.size());
  const auto m = static_cast<Label>(t.size());
  Label x = f.labels[v];
  if (x == 0) kind = Extreme::MinA;
  else if (x == a - 1) kind = Extreme::MaxA;
  else if (x == a) kind = Extreme::MinB;
  else if (x == m) kind = Extreme::MaxB;
  else return -1;
  return x;
}

struct Growing {
  Tree tree;
  Labeling labeling;
  std::vector<Vertex> to_shell;  // local -> shell vertex
  std::vector<int> local;        // shell -> local, -1 when absent
};

}  // namespace detail

// Pieces in spine order: the first is labelled with its center at 0, then each bridge is added
// as a leaf carrying the new top label and complemented down to 0, and the next piece is
// amalgamated there. When an amalgamation leaves the next center off the extremes, that piece is
// relabelled together with its outgoing bridge so both centers sit at extremes.
inline ShellAlphaResult shell_alpha_label(const Tree& s, AlphaCache* cache = nullptr) {
  AlphaCache local_cache;
  if (!cache) cache = &local_cache;
  auto L = layout(s, Orientation::Right);
  auto D = stardust_decompose(L);
  const int k = static_cast<int>(D.pieces.size());
  ShellAlphaResult r;
  const long m = static_cast<long>(s.size());
  r.target = static_cast<int>((5 * m + 2) / 6);

  // mode 0: center at 0; mode 1: no pin; mode 2: center at 0 and a center leaf at min B
  auto unit = [&](int rays, int mode) -> const CometLabel& {
    auto key = std::make_tuple(rays, mode, false);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    Tree t = detail::comet_tree(rays, mode == 2 ? 1 : 0);
    CometLabel c;
    if (mode == 1) c = comet_alpha_label(t);
    else if (mode == 0) c = comet_alpha_label(t, 0);
    else c = comet_alpha_label(t, 0, {{static_cast<Vertex>(2 * rays + 1), Extreme::MinB}});
    if (c.budget_exceeded) throw Error(Errc::SearchBudgetExceeded, "piece search exceeded its budget");
    return cache->emplace(key, std::move(c)).first->second;
  };
  auto report_piece = [&](int j, const Tree& t, const CometLabel& c, bool two) {
    long pm = static_cast<long>(t.size());
    r.pieces.push_back({j + 1, static_cast<int>(pm), c.epsilon, static_cast<int>((5 * pm + 2) / 6), two, c.optimal, c.greedy});
  };

  detail::Growing G;
  G.local.assign(s.order(), -1);
  auto adopt = [&](const Tree& t, const Labeling& f, const std::vector<Vertex>& to_shell) {
    G.tree = t;
    G.labeling = f;
    G.to_shell = to_shell;
    std::fill(G.local.begin(), G.local.end(), -1);
    for (std::size_t v = 0; v < to_shell.size(); ++v) G.local[to_shell[v]] = static_cast<int>(v);
  };
  auto to_zero = [&](Vertex shell_v) {
    auto z = normalize_to_zero(G.tree, G.labeling, G.local[shell_v]);
    if (!z) throw Error(Errc::PreconditionLabeling, "terminal is not at an extreme label");
    G.labeling = *z;
  };
  auto merge = [&](const StardustPiece& p, const Tree& t, const Labeling& f, const std::vector<Vertex>& origin) {
    auto A = amalgamate_rs(G.tree, G.local[p.origin[0]], G.labeling, t, 0, f);
    std::vector<Vertex> to_shell(A.tree.order());
    for (std::size_t v = 0; v < G.to_shell.size(); ++v) to_shell[A.from_first[v]] = G.to_shell[v];
    for (std::size_t v = 0; v < origin.size(); ++v) to_shell[A.from_second[v]] = origin[v];
    if (!A.report.bounds_hold()) throw Error(Errc::PreconditionLabeling, "amalgamation lost weights");
    adopt(A.tree, A.labeling, to_shell);
  };

  int extended = 0;
  if (k == 1) {
    const auto& p = D.pieces[0];
    const auto& c = unit(p.rays, 1);
    report_piece(0, p.tree, c, false);
    adopt(p.tree, c.labeling, p.origin);
    r.steps.push_back("single comet at x_2");
  } else {
    const auto& p0 = D.pieces[0];
    const auto& c0 = unit(p0.rays, 0);
    report_piece(0, p0.tree, c0, false);
    adopt(p0.tree, c0.labeling, p0.origin);
    r.steps.push_back("comet at x_2 with its center at 0");
    bool have_next = false;  // next center already placed by a two-terminal unit
    for (int j = 1; j < k; ++j) {
      const auto& p = D.pieces[j];
      const Vertex prev = D.pieces[j - 1].origin[0], here = p.origin[0];
      if (!have_next) {
        to_zero(prev);
        // new leaf on the top label, then complement so it reads 0
        auto edges = G.tree.edges();
        const auto nl = static_cast<Vertex>(G.tree.order());
        edges.push_back({G.local[prev], nl});
        Tree grown = Tree::from_edges(G.tree.order() + 1, std::move(edges));
        Labeling f = G.labeling;
        f.labels.push_back(static_cast<Label>(grown.size()));
        f = complementary(grown, f);
        auto to_shell = G.to_shell;
        to_shell.push_back(here);
        adopt(grown, f, to_shell);
        ++r.bridges_added;
        ++extended;
        r.steps.push_back("bridge to x_" + std::to_string(j + 2) + " by extension and complement");
      } else {
        to_zero(here);
      }
      if (j == k - 1) {
        const auto& c = unit(p.rays, 0);
        report_piece(j, p.tree, c, false);
        merge(p, p.tree, c.labeling, p.origin);
        r.steps.push_back("last comet amalgamated at x_" + std::to_string(j + 2));
        break;
      }
      // the printed sequence: amalgamate, then the next bridge needs this center at an extreme
      {
        const auto& c = unit(p.rays, 0);
        auto saved = G;
        merge(p, p.tree, c.labeling, p.origin);
        Extreme kind;
        if (detail::extreme_kind(G.tree, G.labeling, G.local[here], kind) >= 0) {
          report_piece(j, p.tree, c, false);
          r.steps.push_back("comet amalgamated at x_" + std::to_string(j + 2));
          have_next = false;
          continue;
        }
        r.steps.push_back("printed step fails at x_" + std::to_string(j + 2) + ": center holds label " +
                          std::to_string(G.labeling.labels[G.local[here]]) + ", not an extreme");
        G = saved;
      }
      const Vertex next = D.pieces[j + 1].origin[0];
      const auto& c = unit(p.rays, 2);
      Tree t = detail::comet_tree(p.rays, 1);
      auto origin = p.origin;
      origin.push_back(next);
      report_piece(j, t, c, true);
      merge(p, t, c.labeling, origin);
      ++r.bridges_added;
      r.steps.push_back("two-terminal unit at x_" + std::to_string(j + 2) + " carrying the bridge to x_" + std::to_string(j + 3));
      have_next = true;
    }
  }

  r.labeling = {std::vector<Label>(s.order(), -1), Method::RsAmalgam};
  if (G.tree.order() != s.order()) throw Error(Errc::PreconditionLabeling, "composition missed vertices");
  for (std::size_t v = 0; v < G.to_shell.size(); ++v) r.labeling.labels[G.to_shell[v]] = G.labeling.labels[v];
  std::set<std::pair<int, int>> want, got;
  for (const auto& e : s.edges()) want.insert(std::minmax(e.u, e.v));
  for (const auto& e : G.tree.edges()) got.insert(std::minmax(G.to_shell[e.u], G.to_shell[e.v]));
  if (want != got) throw Error(Errc::PreconditionLabeling, "composition does not reproduce the shell");

  r.report = verify(s, r.labeling);
  // an extension bridge adds one weight; two-terminal units already count theirs
  int sum = extended;
  for (const auto& p : r.pieces) sum += p.epsilon;
  r.floor_sum = extended;
  for (const auto& p : r.pieces) r.floor_sum += p.floor_target;
  r.report.bound_checks.push_back(bound_check("epsilon>=sum of parts", Rational(r.report.epsilon), ">=", Rational(sum)));
  r.report.bound_checks.push_back(bound_check("epsilon>=floor((5m+2)/6)", Rational(r.report.epsilon), ">=", Rational(r.target)));
  r.certified = r.report.epsilon >= r.target && r.report.bipartite_cutoff.has_value();
  return r;
}

}  // namespace gracelab
