#pragma once

#include "gracelab/tree.hpp"

#include <optional>
#include <tuple>

namespace gracelab {

enum class Orientation { Left, Right };

inline std::string_view orientation_name(Orientation o) { return o == Orientation::Left ? "left" : "right"; }

struct RootedLayout {
  Tree tree;
  Vertex root = 0;
  Orientation orientation = Orientation::Left;
  std::vector<std::vector<Vertex>> levels;
  std::vector<int> parent;    // -1 at the root
  std::vector<int> level_of;
  std::vector<int> position;  // index within its level
  std::vector<int> gamma;
  std::vector<std::vector<Vertex>> children;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  // rightmost vertex of every level; a longest path
  std::vector<Vertex> spine() const {
    std::vector<Vertex> p;
    for (const auto& l : levels) p.push_back(l.back());
    return p;
  }
};

namespace detail {

inline RootedLayout build_layout(const Tree& t, Vertex root, Orientation o) {
  const std::size_t n = t.order();
  RootedLayout L;
  L.tree = t;
  L.root = root;
  L.orientation = o;
  L.parent.assign(n, -1);
  L.level_of.assign(n, -1);
  L.position.assign(n, 0);
  L.gamma.assign(n, 0);
  L.children.assign(n, {});

  std::vector<Vertex> bfs{root};
  L.level_of[root] = 0;
  for (std::size_t h = 0; h < bfs.size(); ++h)
    for (Vertex w : t.neighbors(bfs[h]))
      if (L.level_of[w] < 0) {
        L.level_of[w] = L.level_of[bfs[h]] + 1;
        L.parent[w] = bfs[h];
        L.children[bfs[h]].push_back(w);
        bfs.push_back(w);
      }
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    for (Vertex c : L.children[*it]) L.gamma[*it] = std::max(L.gamma[*it], L.gamma[c] + 1);

  auto codes = subtree_codes(t, root);
  for (auto& ch : L.children) {
    std::sort(ch.begin(), ch.end(), [&](Vertex a, Vertex b) {
      long da = static_cast<long>(t.degree(a)), db = static_cast<long>(t.degree(b));
      if (o == Orientation::Left) da = -da, db = -db;
      return std::tie(L.gamma[a], da, codes[a], a) < std::tie(L.gamma[b], db, codes[b], b);
    });
  }

  L.levels.push_back({root});
  while (true) {
    std::vector<Vertex> next;
    for (Vertex v : L.levels.back())
      for (Vertex c : L.children[v]) next.push_back(c);
    if (next.empty()) break;
    L.levels.push_back(std::move(next));
  }
  for (const auto& lvl : L.levels)
    for (std::size_t i = 0; i < lvl.size(); ++i) L.position[lvl[i]] = static_cast<int>(i);
  return L;
}

}  // namespace detail

// Root: a diametral endpoint minimizing the rooted canonical code, then the index.
// Sibling order: gamma ascending, degree descending (left) or ascending (right),
// then subtree code, then index.
inline RootedLayout layout(const Tree& t, Orientation o, std::optional<Vertex> root = std::nullopt) {
  if (!root) {
    if (t.order() == 1) {
      root = 0;
    } else {
      auto ecc = eccentricities(t);
      const int d = *std::max_element(ecc.begin(), ecc.end());
      std::string best;
      for (std::size_t v = 0; v < t.order(); ++v) {
        if (ecc[v] != d || t.degree(static_cast<Vertex>(v)) != 1) continue;
        auto code = rooted_code(t, static_cast<Vertex>(v));
        if (!root || code < best) {
          best = std::move(code);
          root = static_cast<Vertex>(v);
        }
      }
    }
  } else {
    if (*root < 0 || static_cast<std::size_t>(*root) >= t.order()) throw Error(Errc::OutOfRange, "root");
    auto ecc = eccentricities(t);
    if (ecc[*root] != *std::max_element(ecc.begin(), ecc.end()))
      throw Error(Errc::OutOfRange, "root " + std::to_string(*root) + " is not a longest-path endpoint");
  }
  return detail::build_layout(t, *root, o);
}

// distance of every vertex to the layout spine
inline std::vector<int> spine_distances(const RootedLayout& L) { return distances_to(L.tree, L.spine()); }

}  // namespace gracelab
