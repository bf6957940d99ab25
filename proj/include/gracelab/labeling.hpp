#pragma once

#include "gracelab/layout.hpp"
#include "gracelab/rational.hpp"

#include <map>
#include <optional>

namespace gracelab {

using Label = std::int64_t;

enum class Method { Rrg, Erg, Bh, BhRelaxed, ShellDelta, RsAmalgam, Oracle, External };

constexpr std::string_view method_name(Method m) {
  switch (m) {
    case Method::Rrg: return "rrg";
    case Method::Erg: return "erg";
    case Method::Bh: return "bh";
    case Method::BhRelaxed: return "bh-relaxed";
    case Method::ShellDelta: return "shell-delta";
    case Method::RsAmalgam: return "rs-amalgam";
    case Method::Oracle: return "oracle";
    case Method::External: return "external";
  }
  return "external";
}

inline Method method_from_name(std::string_view s) {
  for (Method m : {Method::Rrg, Method::Erg, Method::Bh, Method::BhRelaxed, Method::ShellDelta, Method::RsAmalgam,
                   Method::Oracle, Method::External})
    if (method_name(m) == s) return m;
  throw Error(Errc::InvalidSpec, "unknown method " + std::string(s));
}

struct Labeling {
  std::vector<Label> labels;
  Method method = Method::External;
};

inline Label weight(const Labeling& f, const Edge& e) {
  Label a = f.labels[e.u], b = f.labels[e.v];
  return a > b ? a - b : b - a;
}

inline std::vector<Label> weights(const Tree& t, const Labeling& f) {
  std::vector<Label> w;
  w.reserve(t.size());
  for (const auto& e : t.edges()) w.push_back(weight(f, e));
  return w;
}

inline int epsilon(const Tree& t, const Labeling& f) {
  auto w = weights(t, f);
  std::sort(w.begin(), w.end());
  return static_cast<int>(std::unique(w.begin(), w.end()) - w.begin());
}

struct RepeatedWeight {
  Label weight = 0;
  int multiplicity = 0;
  std::vector<int> levels;  // edge levels, when a layout is known
};

struct BoundCheck {
  std::string name;
  Rational value;
  std::string relation;  // ">=" or "<="
  Rational bound;
  bool holds = false;
};

inline BoundCheck bound_check(std::string name, Rational value, std::string relation, Rational bound) {
  bool ok = relation == ">=" ? value >= bound : value <= bound;
  return {std::move(name), value, std::move(relation), bound, ok};
}

struct VerificationReport {
  bool injective = false;
  Label max_label = 0;
  int epsilon = 0;
  bool graceful = false;
  std::optional<Label> bipartite_cutoff;
  // index i: edges joining L_{i-1} and L_i whose weight already occurred on an
  // earlier edge in level order; sums to m - epsilon
  std::vector<int> theta_per_level;
  std::vector<RepeatedWeight> repeated_weights;
  std::vector<BoundCheck> bound_checks;

  bool bounds_hold() const {
    return std::all_of(bound_checks.begin(), bound_checks.end(), [](const auto& b) { return b.holds; });
  }
};

inline void check_labels(const Tree& t, const Labeling& f) {
  if (f.labels.size() != t.order())
    throw Error(Errc::MissingLabel, std::to_string(f.labels.size()) + " labels for " + std::to_string(t.order()) + " vertices");
  for (Label x : f.labels)
    if (x < 0) throw Error(Errc::LabelOutOfRange, "negative label " + std::to_string(x));
}

// level of an edge: the deeper endpoint's level
inline int edge_level(const RootedLayout& L, const Edge& e) { return std::max(L.level_of[e.u], L.level_of[e.v]); }

inline VerificationReport verify(const Tree& t, const Labeling& f, const RootedLayout* layout = nullptr) {
  check_labels(t, f);
  VerificationReport r;
  const auto m = static_cast<Label>(t.size());
  auto sorted = f.labels;
  std::sort(sorted.begin(), sorted.end());
  r.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  r.max_label = sorted.back();

  std::map<Label, std::vector<int>> by_weight;  // weight -> edge indices
  for (std::size_t i = 0; i < t.size(); ++i) by_weight[weight(f, t.edges()[i])].push_back(static_cast<int>(i));
  r.epsilon = static_cast<int>(by_weight.size());
  r.graceful = r.injective && r.max_label == m && r.epsilon == m;

  if (t.size() > 0) {
    Label lo_max = 0, hi_min = std::numeric_limits<Label>::max();
    for (const auto& e : t.edges()) {
      lo_max = std::max(lo_max, std::min(f.labels[e.u], f.labels[e.v]));
      hi_min = std::min(hi_min, std::max(f.labels[e.u], f.labels[e.v]));
    }
    if (lo_max < hi_min) r.bipartite_cutoff = lo_max;
  }

  if (layout) r.theta_per_level.assign(layout->levels.size(), 0);
  for (const auto& [w, idx] : by_weight) {
    if (layout) {
      std::vector<int> lv;
      for (int i : idx) lv.push_back(edge_level(*layout, t.edges()[i]));
      std::sort(lv.begin(), lv.end());
      for (std::size_t k = 1; k < lv.size(); ++k) ++r.theta_per_level[lv[k]];
      if (idx.size() > 1) r.repeated_weights.push_back({w, static_cast<int>(idx.size()), lv});
    } else if (idx.size() > 1) {
      r.repeated_weights.push_back({w, static_cast<int>(idx.size()), {}});
    }
  }
  return r;
}

struct Bipartition {
  std::vector<Vertex> A, B;
  std::vector<char> in_a;
};

// A is the color class holding the vertex labeled 0 (vertex 0's class when 0 is unused)
inline Bipartition bipartition(const Tree& t, const Labeling& f) {
  check_labels(t, f);
  auto dist = bfs_distances(t, 0);
  Vertex zero = 0;
  for (std::size_t v = 0; v < t.order(); ++v)
    if (f.labels[v] == 0) zero = static_cast<Vertex>(v);
  Bipartition p;
  p.in_a.assign(t.order(), 0);
  for (std::size_t v = 0; v < t.order(); ++v) {
    bool a = (dist[v] % 2) == (dist[zero] % 2);
    p.in_a[v] = a;
    (a ? p.A : p.B).push_back(static_cast<Vertex>(v));
  }
  return p;
}

inline bool is_contiguous_bipartite(const Tree& t, const Labeling& f, const Bipartition& p) {
  const auto a = static_cast<Label>(p.A.size());
  const auto n = static_cast<Label>(t.order());
  std::vector<char> seen(t.order(), 0);
  for (std::size_t v = 0; v < t.order(); ++v) {
    Label x = f.labels[v];
    bool ok = p.in_a[v] ? (x >= 0 && x < a) : (x >= a && x < n);
    if (!ok || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

inline Labeling complementary(const Tree& t, const Labeling& f) {
  check_labels(t, f);
  const auto m = static_cast<Label>(t.size());
  Labeling g{f.labels, f.method};
  for (auto& x : g.labels) {
    if (x > m) throw Error(Errc::LabelOutOfRange, "label " + std::to_string(x) + " exceeds m");
    x = m - x;
  }
  return g;
}

inline Labeling inverse(const Tree& t, const Labeling& f, const Bipartition& p) {
  check_labels(t, f);
  if (!is_contiguous_bipartite(t, f, p)) throw Error(Errc::NotContiguousBipartite, "labels are not in contiguous bipartite form");
  const auto a = static_cast<Label>(p.A.size());
  const auto b = static_cast<Label>(p.B.size());
  Labeling g{f.labels, f.method};
  for (std::size_t v = 0; v < t.order(); ++v)
    g.labels[v] = p.in_a[v] ? a - 1 - f.labels[v] : 2 * a + b - 1 - f.labels[v];
  return g;
}

inline Labeling inverse(const Tree& t, const Labeling& f) { return inverse(t, f, bipartition(t, f)); }

// Bring vertex v to label 0 using complementary / inverse; v must hold an extreme label.
inline std::optional<Labeling> normalize_to_zero(const Tree& t, const Labeling& f, Vertex v) {
  std::vector<Labeling> frontier{f};
  for (int step = 0; step < 4; ++step) {
    std::vector<Labeling> next;
    for (const auto& g : frontier) {
      if (g.labels[v] == 0) return g;
      next.push_back(complementary(t, g));
      next.push_back(inverse(t, g));
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace gracelab
