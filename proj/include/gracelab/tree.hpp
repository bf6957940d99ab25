#pragma once

#include "gracelab/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gracelab {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Tree {
 public:
  // single vertex
  Tree() : adj_(1) {}

  static Tree from_edges(std::size_t n, std::vector<Edge> edges) {
    if (n == 0) throw Error(Errc::EmptyInput, "tree needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
        throw Error(Errc::OutOfRange, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      if (e.u == e.v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(e.u));
      if (!seen.insert(std::minmax(e.u, e.v)).second)
        throw Error(Errc::DuplicateEdge, std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (const auto& e : edges) {
      int a = find(e.u), b = find(e.v);
      if (a == b) throw Error(Errc::CycleDetected, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      uf[a] = b;
    }
    if (edges.size() + 1 != n) throw Error(Errc::Disconnected, std::to_string(n - edges.size()) + " components");

    Tree t;
    t.adj_.assign(n, {});
    for (const auto& e : edges) {
      t.adj_[e.u].push_back(e.v);
      t.adj_[e.v].push_back(e.u);
    }
    for (auto& a : t.adj_) std::sort(a.begin(), a.end());
    t.edges_ = std::move(edges);
    return t;
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const { return std::binary_search(adj_[a].begin(), adj_[a].end(), b); }

  friend bool operator==(const Tree& a, const Tree& b) { return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

struct Path {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Ids already dense in 0..n-1 are kept; otherwise vertices are renumbered by first appearance.
inline Tree parse_edge_list(std::string_view text) {
  std::vector<std::pair<long long, long long>> raw;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream in(line);
    long long a, b;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra) || a < 0 || b < 0)
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected two non-negative integers");
    raw.emplace_back(a, b);
  }
  if (raw.empty()) throw Error(Errc::EmptyInput, "no edges");

  std::vector<long long> order;
  std::unordered_map<long long, int> index;
  for (auto [a, b] : raw)
    for (long long x : {a, b})
      if (index.emplace(x, static_cast<int>(order.size())).second) order.push_back(x);
  const std::size_t n = order.size();
  bool dense = std::all_of(order.begin(), order.end(), [&](long long x) { return x < static_cast<long long>(n); });

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (dense) edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    else edges.push_back({index[a], index[b]});
  }
  return Tree::from_edges(n, std::move(edges));
}

inline std::string serialize_edge_list(const Tree& t) {
  std::string out;
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    if (i) out += '\n';
    out += std::to_string(t.edges()[i].u) + " " + std::to_string(t.edges()[i].v);
  }
  return out;
}

inline Tree prufer_decode(const std::vector<int>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw Error(Errc::OutOfRange, "symbol " + std::to_string(x));
    ++deg[x];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(static_cast<int>(v));
  std::vector<Edge> edges;
  for (int x : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--deg[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Tree::from_edges(n, std::move(edges));
}

inline std::vector<int> prufer_encode(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) return {};
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(t.degree(static_cast<int>(v)));
    if (deg[v] == 1) leaves.push(static_cast<int>(v));
  }
  std::vector<int> seq;
  while (seq.size() + 2 < n) {
    int leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (int w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      seq.push_back(w);
      if (--deg[w] == 1) leaves.push(w);
    }
  }
  return seq;
}

inline std::vector<int> bfs_distances(const Tree& t, Vertex src) {
  std::vector<int> dist(t.order(), -1);
  std::vector<Vertex> q{src};
  dist[src] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : t.neighbors(q[h]))
      if (dist[w] < 0) {
        dist[w] = dist[q[h]] + 1;
        q.push_back(w);
      }
  return dist;
}

// multi-source BFS
inline std::vector<int> distances_to(const Tree& t, const std::vector<Vertex>& sources) {
  std::vector<int> dist(t.order(), -1);
  std::vector<Vertex> q;
  for (Vertex s : sources) {
    dist[s] = 0;
    q.push_back(s);
  }
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : t.neighbors(q[h]))
      if (dist[w] < 0) {
        dist[w] = dist[q[h]] + 1;
        q.push_back(w);
      }
  return dist;
}

inline std::vector<int> eccentricities(const Tree& t) {
  auto d0 = bfs_distances(t, 0);
  Vertex a = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = bfs_distances(t, a);
  Vertex b = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
  auto db = bfs_distances(t, b);
  std::vector<int> ecc(t.order());
  for (std::size_t v = 0; v < t.order(); ++v) ecc[v] = std::max(da[v], db[v]);
  return ecc;
}

inline int diameter(const Tree& t) {
  auto ecc = eccentricities(t);
  return *std::max_element(ecc.begin(), ecc.end());
}

inline std::vector<Vertex> path_between(const Tree& t, Vertex a, Vertex b) {
  std::vector<int> parent(t.order(), -1);
  std::vector<Vertex> q{a};
  parent[a] = a;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : t.neighbors(q[h]))
      if (parent[w] < 0) {
        parent[w] = q[h];
        q.push_back(w);
      }
  std::vector<Vertex> p{b};
  while (p.back() != a) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

// Lowest endpoint first, then the lexicographically smallest vertex sequence.
inline Path longest_path(const Tree& t) {
  if (t.order() == 1) return {{0}};
  auto ecc = eccentricities(t);
  const int d = *std::max_element(ecc.begin(), ecc.end());
  Vertex a = static_cast<Vertex>(std::find(ecc.begin(), ecc.end(), d) - ecc.begin());

  const std::size_t n = t.order();
  std::vector<int> dist(n, -1), reach(n, 0);
  std::vector<Vertex> q{a};
  dist[a] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : t.neighbors(q[h]))
      if (dist[w] < 0) {
        dist[w] = dist[q[h]] + 1;
        q.push_back(w);
      }
  for (std::size_t v = 0; v < n; ++v) reach[v] = dist[v];
  for (auto it = q.rbegin(); it != q.rend(); ++it)
    for (Vertex w : t.neighbors(*it))
      if (dist[w] == dist[*it] + 1) reach[*it] = std::max(reach[*it], reach[w]);

  Path p{{a}};
  Vertex cur = a;
  while (dist[cur] < d) {
    for (Vertex w : t.neighbors(cur))
      if (dist[w] == dist[cur] + 1 && reach[w] == d) {
        cur = w;
        break;
      }
    p.vertices.push_back(cur);
  }
  return p;
}

inline int max_distance_to(const Tree& t, const std::vector<Vertex>& path) {
  auto dist = distances_to(t, path);
  return *std::max_element(dist.begin(), dist.end());
}

// Minimum over all longest paths. Diametral endpoints hanging off the same vertex give the
// same value, so one representative per attachment vertex suffices.
inline int distance_class(const Tree& t) {
  if (t.order() <= 2) return 0;
  auto ecc = eccentricities(t);
  const int d = *std::max_element(ecc.begin(), ecc.end());
  if (d == 2) return t.order() == 3 ? 0 : 1;  // a star; its diametral ends share the center
  std::vector<Vertex> reps;
  std::set<Vertex> anchors;
  for (std::size_t v = 0; v < t.order(); ++v)
    if (ecc[v] == d && anchors.insert(t.neighbors(static_cast<Vertex>(v)).front()).second)
      reps.push_back(static_cast<Vertex>(v));
  int best = static_cast<int>(t.order());
  for (std::size_t i = 0; i < reps.size() && best > 0; ++i) {
    auto da = bfs_distances(t, reps[i]);
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (da[reps[j]] == d) best = std::min(best, max_distance_to(t, path_between(t, reps[i], reps[j])));
  }
  return best;
}

// AHU codes of every subtree with the tree rooted at root.
inline std::vector<std::string> subtree_codes(const Tree& t, Vertex root) {
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
  std::vector<std::string> code(n);
  std::vector<std::vector<const std::string*>> kids(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& ks = kids[v];
    std::sort(ks.begin(), ks.end(), [](const std::string* x, const std::string* y) { return *x < *y; });
    std::string c = "(";
    for (const auto* k : ks) c += *k;
    c += ')';
    code[v] = std::move(c);
    if (v != root) kids[parent[v]].push_back(&code[v]);
  }
  return code;
}

inline std::string rooted_code(const Tree& t, Vertex root) { return subtree_codes(t, root)[root]; }

inline std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> c(n);
    std::iota(c.begin(), c.end(), 0);
    return c;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(t.degree(static_cast<Vertex>(v)));
    if (deg[v] == 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline std::string canonical_code(const Tree& t) {
  std::string best;
  for (Vertex c : centers(t)) {
    auto code = rooted_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// relabel vertices: new index of v is perm[v]
inline Tree relabel(const Tree& t, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Tree::from_edges(t.order(), std::move(edges));
}

inline Tree path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return Tree::from_edges(n, std::move(edges));
}

inline Tree star_tree(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<int>(i)});
  return Tree::from_edges(leaves + 1, std::move(edges));
}

}  // namespace gracelab
