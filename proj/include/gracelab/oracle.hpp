#pragma once

#include "gracelab/shell.hpp"

#include <functional>
#include <random>

namespace gracelab {

// One representative per isomorphism class on exactly n vertices, sorted by canonical code.
// Grown from the order n-1 classes by attaching a leaf everywhere.
inline std::vector<Tree> trees_of_order(std::size_t n) {
  if (n > 12) throw Error(Errc::BudgetExceeded, "enumeration is limited to n <= 12");
  if (n == 0) return {};
  std::vector<Tree> cur{Tree()};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::string, Tree> next;
    for (const auto& t : cur)
      for (std::size_t v = 0; v < t.order(); ++v) {
        auto edges = t.edges();
        edges.push_back({static_cast<int>(v), static_cast<int>(k - 1)});
        auto grown = Tree::from_edges(k, std::move(edges));
        next.emplace(canonical_code(grown), std::move(grown));
      }
    cur.clear();
    for (auto& [code, t] : next) cur.push_back(std::move(t));
  }
  return cur;
}

inline std::vector<Tree> enumerate_trees(std::size_t max_n) {
  if (max_n > 12) throw Error(Errc::BudgetExceeded, "enumeration is limited to n <= 12");
  std::vector<Tree> all;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& t : trees_of_order(n)) all.push_back(std::move(t));
  return all;
}

enum class Family { Path, Caterpillar, Lobster, KDistant };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Caterpillar: return "caterpillar";
    case Family::Lobster: return "lobster";
    case Family::KDistant: return "k-distant";
  }
  return "path";
}

inline Family family_from_name(std::string_view s) {
  for (Family f : {Family::Path, Family::Caterpillar, Family::Lobster, Family::KDistant})
    if (family_name(f) == s) return f;
  throw Error(Errc::InvalidSpec, "unknown family " + std::string(s));
}

struct GenSpec {
  Family family = Family::Lobster;
  int spine = 6;                // diameter d
  double leaf_prob = 0.35;      // per leaf slot
  int max_leaves = 3;           // leaf slots per vertex
  double branch_prob = 0.35;    // per branch slot
  int max_branches = 2;         // branch slots per spine vertex
  int max_branch_leaves = 3;    // leaves below a branch vertex: 1..this
  int k = 3;                    // depth bound for k-distant
  int max_n = 60;
  std::uint64_t seed = 1;
  bool shuffle = true;          // random vertex numbering
};

namespace detail {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  // std distributions are not portable across standard libraries
  std::uint64_t below(std::uint64_t k) { return k ? eng() % k : 0; }
  bool chance(double p) { return static_cast<double>(eng() >> 11) * 0x1.0p-53 < p; }
};

}  // namespace detail

inline Tree generate(const GenSpec& s) {
  auto bad = [](const std::string& w) { return Error(Errc::InvalidSpec, w); };
  if (s.spine < 1) throw bad("spine must be >= 1");
  if (s.max_n < s.spine + 1) throw bad("max_n below spine order");
  for (double p : {s.leaf_prob, s.branch_prob})
    if (!(p >= 0.0 && p <= 1.0)) throw bad("probability outside [0,1]");
  if (s.max_leaves < 0 || s.max_branches < 0 || s.max_branch_leaves < 1 || s.k < 0) throw bad("negative size parameter");

  detail::Rng rng(s.seed);
  const int d = s.spine;
  std::vector<Edge> edges;
  int n = d + 1;
  for (int i = 0; i < d; ++i) edges.push_back({i, i + 1});
  auto add = [&](int parent) {
    edges.push_back({parent, n});
    return n++;
  };

  if (s.family != Family::Path) {
    for (int i = 1; i < d; ++i) {
      for (int slot = 0; slot < s.max_leaves; ++slot)
        if (rng.chance(s.leaf_prob) && n < s.max_n) add(i);
      if (s.family == Family::Lobster && i >= 2 && i <= d - 2) {
        for (int slot = 0; slot < s.max_branches; ++slot) {
          if (!rng.chance(s.branch_prob)) continue;
          int leaves = 1 + static_cast<int>(rng.below(s.max_branch_leaves));
          if (n + 1 + leaves > s.max_n) continue;
          int b = add(i);
          for (int q = 0; q < leaves; ++q) add(b);
        }
      }
      if (s.family == Family::KDistant) {
        const int room = std::min({s.k, i, d - i});
        for (int slot = 0; slot < s.max_branches && room >= 1; ++slot) {
          if (!rng.chance(s.branch_prob)) continue;
          int depth = 1 + static_cast<int>(rng.below(room));
          if (n + depth > s.max_n) continue;
          int at = i;
          std::vector<int> chain;
          for (int q = 0; q < depth; ++q) chain.push_back(at = add(at));
          for (std::size_t q = 0; q + 1 < chain.size(); ++q)
            if (rng.chance(s.leaf_prob) && n < s.max_n) add(chain[q]);
        }
      }
    }
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (s.shuffle)
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  for (auto& e : edges) e = {perm[e.u], perm[e.v]};
  Tree t = Tree::from_edges(static_cast<std::size_t>(n), std::move(edges));

  const int limit = s.family == Family::Path ? 0 : s.family == Family::Caterpillar ? 1 : s.family == Family::Lobster ? 2 : s.k;
  if (distance_class(t) > limit || diameter(t) != d) throw bad("generated tree left its family");
  return t;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded lobsters with diameter 4..20 and at most 60 vertices.
inline std::vector<Tree> lobster_ensemble(std::size_t count, std::uint64_t seed, int max_n = 60) {
  std::vector<Tree> out;
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec s;
    s.family = Family::Lobster;
    s.seed = mix_seed(seed, i);
    s.spine = 4 + static_cast<int>(mix_seed(s.seed, 0) % 17);
    s.max_n = max_n;
    out.push_back(generate(s));
  }
  return out;
}

inline bool is_lobster(const Tree& t) { return distance_class(t) <= 2; }
inline bool is_caterpillar(const Tree& t) { return distance_class(t) <= 1; }

struct SearchStats {
  long nodes = 0;
};

namespace detail {

inline std::vector<Vertex> bfs_order(const Tree& t, Vertex root, std::vector<int>& parent) {
  parent.assign(t.order(), -1);
  std::vector<Vertex> order{root};
  std::vector<char> seen(t.order(), 0);
  seen[root] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (Vertex w : t.neighbors(order[h]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[h];
        order.push_back(w);
      }
  return order;
}

inline Vertex max_degree_vertex(const Tree& t) {
  Vertex best = 0;
  for (std::size_t v = 1; v < t.order(); ++v)
    if (t.degree(static_cast<Vertex>(v)) > t.degree(best)) best = static_cast<Vertex>(v);
  return best;
}

// Every graceful labeling, in a fixed order; the callback returns false to stop.
inline void graceful_search(const Tree& t, long budget, SearchStats& stats, const std::function<bool(const std::vector<Label>&)>& emit) {
  const int n = static_cast<int>(t.order());
  const int m = n - 1;
  std::vector<Label> lab(n, -1);
  if (n == 1) {
    lab[0] = 0;
    emit(lab);
    return;
  }
  std::vector<int> parent;
  auto order = bfs_order(t, max_degree_vertex(t), parent);
  std::vector<char> used_label(n, 0), used_weight(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (++stats.nodes > budget) throw Error(Errc::BudgetExceeded, "graceful search budget exhausted");
    if (k == n) {
      if (!emit(lab)) stop = true;
      return;
    }
    Vertex v = order[k];
    Label pl = lab[parent[v]];
    for (int w = m; w >= 1 && !stop; --w) {
      if (used_weight[w]) continue;
      for (Label x : {pl + w, pl - w}) {
        if (x < 0 || x > m || used_label[x]) continue;
        lab[v] = x;
        used_label[x] = used_weight[w] = 1;
        rec(k + 1);
        used_label[x] = used_weight[w] = 0;
        lab[v] = -1;
        if (stop) return;
      }
    }
  };
  for (int x = 0; x <= m && !stop; ++x) {
    lab[order[0]] = x;
    used_label[x] = 1;
    rec(1);
    used_label[x] = 0;
  }
}

}  // namespace detail

inline std::optional<Labeling> brute_graceful(const Tree& t, long budget = 200'000'000) {
  if (t.order() > 12) throw Error(Errc::BudgetExceeded, "brute_graceful is limited to n <= 12");
  SearchStats st;
  std::optional<Labeling> found;
  detail::graceful_search(t, budget, st, [&](const std::vector<Label>& lab) {
    found = Labeling{lab, Method::Oracle};
    return false;
  });
  return found;
}

inline std::vector<Labeling> all_graceful_labelings(const Tree& t, long budget = 500'000'000) {
  SearchStats st;
  std::vector<Labeling> out;
  detail::graceful_search(t, budget, st, [&](const std::vector<Label>& lab) {
    out.push_back({lab, Method::Oracle});
    return true;
  });
  return out;
}

namespace detail {

// Branch and bound for the largest distinct-weight count over bijections onto 0..m.
// Optional per-vertex label windows restrict the search (bipartite case).
inline int max_epsilon(const Tree& t, const std::vector<std::pair<Label, Label>>& window, long budget, Labeling* best_out) {
  const int n = static_cast<int>(t.order());
  const int m = n - 1;
  if (n == 1) {
    if (best_out) *best_out = {{0}, Method::Oracle};
    return 0;
  }
  std::vector<int> parent;
  auto order = bfs_order(t, 0, parent);
  std::vector<Label> lab(n, -1), best_lab;
  std::vector<char> used(n, 0);
  std::vector<int> count(n, 0);
  int best = -1, distinct = 0;
  long nodes = 0;
  std::function<void(int)> rec = [&](int k) {
    if (best == m) return;
    if (++nodes > budget) throw Error(Errc::BudgetExceeded, "exact search budget exhausted");
    if (k == n) {
      if (distinct > best) {
        best = distinct;
        best_lab = lab;
      }
      return;
    }
    if (distinct + (n - k) <= best) return;
    Vertex v = order[k];
    auto [lo, hi] = window[v];
    for (Label x = lo; x <= hi; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      lab[v] = x;
      int w = -1;
      if (k > 0) {
        Label pl = lab[parent[v]];
        w = static_cast<int>(x > pl ? x - pl : pl - x);
        if (count[w]++ == 0) ++distinct;
      }
      rec(k + 1);
      if (w >= 0 && --count[w] == 0) --distinct;
      used[x] = 0;
      if (best == m) return;
    }
    lab[v] = -1;
  };
  rec(0);
  if (best_out) *best_out = {best_lab, Method::Oracle};
  return best;
}

}  // namespace detail

inline int exact_gracesize(const Tree& t, Labeling* witness = nullptr, long budget = 2'000'000'000) {
  if (t.order() > 9) throw Error(Errc::BudgetExceeded, "exact_gracesize is limited to n <= 9");
  std::vector<std::pair<Label, Label>> window(t.order(), {0, static_cast<Label>(t.size())});
  return detail::max_epsilon(t, window, budget, witness);
}

inline int exact_alpha_size(const Tree& t, Labeling* witness = nullptr, long budget = 2'000'000'000) {
  if (t.order() > 9) throw Error(Errc::BudgetExceeded, "exact_alpha_size is limited to n <= 9");
  auto dist = bfs_distances(t, 0);
  int best = -1;
  for (int low_parity = 0; low_parity < 2; ++low_parity) {
    Label a = 0;
    for (int x : dist) a += (x % 2 == low_parity);
    std::vector<std::pair<Label, Label>> window(t.order());
    for (std::size_t v = 0; v < t.order(); ++v)
      window[v] = dist[v] % 2 == low_parity ? std::make_pair(Label{0}, a - 1) : std::make_pair(a, static_cast<Label>(t.size()));
    Labeling w;
    int e = detail::max_epsilon(t, window, budget, &w);
    if (e > best) {
      best = e;
      if (witness) *witness = w;
    }
  }
  return best;
}

// exists a leaf whose removal leaves a graceful tree
inline bool is_pretty_graceful(const Tree& t) {
  if (t.order() <= 2) return true;
  for (std::size_t leaf = 0; leaf < t.order(); ++leaf) {
    if (t.degree(static_cast<Vertex>(leaf)) != 1) continue;
    std::vector<int> idx(t.order(), -1);
    int k = 0;
    for (std::size_t v = 0; v < t.order(); ++v)
      if (v != leaf) idx[v] = k++;
    std::vector<Edge> edges;
    for (const auto& e : t.edges())
      if (e.u != static_cast<int>(leaf) && e.v != static_cast<int>(leaf)) edges.push_back({idx[e.u], idx[e.v]});
    if (brute_graceful(Tree::from_edges(t.order() - 1, std::move(edges)))) return true;
  }
  return false;
}

// Figure 1: spine u1..u8 -> 0..7, v1..v12 -> 8..19.
struct Figure1 {
  Tree tree;
  Matching matching;
};

inline Figure1 figure1() {
  auto u = [](int i) { return i - 1; };
  auto v = [](int i) { return 7 + i; };
  std::vector<Edge> edges;
  for (int i = 1; i < 8; ++i) edges.push_back({u(i), u(i + 1)});
  for (auto [b, s] : {std::pair{3, 3}, {4, 3}, {7, 4}, {8, 4}, {10, 5}, {12, 6}}) edges.push_back({v(b), u(s)});
  for (auto [a, b] : {std::pair{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 10}, {11, 12}}) edges.push_back({v(a), v(b)});
  Figure1 f{Tree::from_edges(20, edges), {}};
  for (auto [a, b] : {std::pair{1, 2}, {3, 4}, {5, 6}, {7, 8}}) f.matching.edges.push_back({u(a), u(b)});
  for (auto [a, b] : {std::pair{1, 3}, {2, 4}, {5, 7}, {6, 8}, {9, 10}, {11, 12}}) f.matching.edges.push_back({v(a), v(b)});
  return f;
}

struct BhBipartiteSearch {
  bool exists = false;
  std::optional<Labeling> witness;
  long contree_labelings = 0;
  long placements = 0;          // labelings tried
  long graceful_placements = 0;
};

// Every graceful labeling g of the contree, and for each matched pair every choice of which
// endpoint takes 2g and which n-1-2g. Stops at the first graceful bipartite one.
inline BhBipartiteSearch bh_bipartite_exists(const Tree& t, const Matching& M, long budget = 500'000'000) {
  auto C = contree(t, M);
  if (distance_class(C.result) > 1) throw Error(Errc::ContreeNotCaterpillar, "contree is not a caterpillar");
  if (C.result.order() > 10) throw Error(Errc::BudgetExceeded, "contree too large to enumerate");
  const auto n = static_cast<Label>(t.order());
  const std::size_t pairs = C.origin.size();
  BhBipartiteSearch out;
  auto gs = all_graceful_labelings(C.result, budget);
  out.contree_labelings = static_cast<long>(gs.size());
  std::vector<Label> lab(t.order());
  std::vector<char> seen(t.order());
  for (const auto& g : gs) {
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      if (++out.placements > budget) throw Error(Errc::BudgetExceeded, "placement budget exhausted");
      for (std::size_t k = 0; k < pairs; ++k) {
        Label base = 2 * g.labels[k];
        bool flip = (mask >> k) & 1u;
        lab[C.origin[k][0]] = flip ? n - 1 - base : base;
        lab[C.origin[k][1]] = flip ? base : n - 1 - base;
      }
      std::fill(seen.begin(), seen.end(), 0);
      bool ok = true;
      for (const auto& e : t.edges()) {
        Label w = lab[e.u] > lab[e.v] ? lab[e.u] - lab[e.v] : lab[e.v] - lab[e.u];
        if (w == 0 || seen[w]) {
          ok = false;
          break;
        }
        seen[w] = 1;
      }
      if (!ok) continue;
      ++out.graceful_placements;
      Labeling f{lab, Method::Bh};
      if (verify(t, f).bipartite_cutoff) {
        out.exists = true;
        out.witness = f;
        return out;
      }
    }
  }
  return out;
}

}  // namespace gracelab
