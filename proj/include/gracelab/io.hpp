#pragma once

#include "gracelab/erg.hpp"
#include "gracelab/stardust.hpp"

#include <json.hpp>

namespace gracelab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const BoundCheck& b) {
  return Json{{"name", b.name}, {"value", to_string(b.value)}, {"relation", b.relation}, {"bound", to_string(b.bound)}, {"holds", b.holds}};
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["injective"] = r.injective;
  j["max_label"] = r.max_label;
  j["epsilon"] = r.epsilon;
  j["graceful"] = r.graceful;
  j["bipartite_cutoff"] = r.bipartite_cutoff ? Json(*r.bipartite_cutoff) : Json(nullptr);
  j["theta_per_level"] = r.theta_per_level;
  j["repeated_weights"] = Json::array();
  for (const auto& w : r.repeated_weights)
    j["repeated_weights"].push_back({{"weight", w.weight}, {"multiplicity", w.multiplicity}, {"levels", w.levels}});
  j["bound_checks"] = Json::array();
  for (const auto& b : r.bound_checks) j["bound_checks"].push_back(to_json(b));
  return j;
}

inline Json edges_json(const Tree& t) {
  Json e = Json::array();
  for (const auto& x : t.edges()) e.push_back({x.u, x.v});
  return e;
}

// field order is fixed: n, edges, labels, method, report
inline Json labeling_json(const Tree& t, const Labeling& f, const VerificationReport& r) {
  Json j;
  j["n"] = t.order();
  j["edges"] = edges_json(t);
  j["labels"] = f.labels;
  j["method"] = std::string(method_name(f.method));
  j["report"] = to_json(r);
  return j;
}

struct LabeledTree {
  Tree tree;
  Labeling labeling;
};

inline LabeledTree labeling_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    LabeledTree lt{Tree::from_edges(j.at("n").get<std::size_t>(), std::move(edges)), {}};
    lt.labeling.labels = j.at("labels").get<std::vector<Label>>();
    lt.labeling.method = j.contains("method") ? method_from_name(j["method"].get<std::string>()) : Method::External;
    return lt;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline Json contraction_json(const ContractionMap& c) {
  Json j;
  j["kind"] = c.kind == ContractionKind::Shell ? "shell" : c.kind == ContractionKind::Contree ? "contree" : "leaf";
  j["contracted"] = c.contracted;
  j["result_edges"] = edges_json(c.result);
  j["origin"] = c.origin;
  return j;
}

inline Json plan_json(const RrgPlan& p) {
  Json j;
  j["B"] = p.B;
  j["max_label"] = p.max_label;
  j["blocks"] = Json::array();
  for (const auto& b : p.blocks)
    j["blocks"].push_back({{"level", b.level},
                           {"high", b.high},
                           {"begin", b.begin},
                           {"end", b.end},
                           {"used", {b.used_begin, b.used_end}},
                           {"descending", b.descending},
                           {"skipped", b.skipped}});
  return j;
}

inline Json erg_json(const ErgDiagnostics& d) {
  Json j;
  j["epsilon"] = d.epsilon;
  j["alpha_sum"] = d.alpha_sum;
  j["alpha_grouped"] = d.alpha_grouped;
  j["bound"] = to_string(d.bound);
  j["claim1"] = d.claim1;
  j["levels"] = Json::array();
  for (const auto& l : d.levels) {
    Json x;
    x["level"] = l.level;
    x["m"] = l.m;
    x["alpha"] = l.alpha;
    x["alpha_in_group"] = l.alpha_in_group;
    x["theta"] = l.theta;
    x["theta_next"] = l.theta_next;
    x["ex_next"] = l.ex_next;
    x["d"] = l.d ? Json(to_string(*l.d)) : Json(nullptr);
    x["claim3_bound"] = l.claim3_bound ? Json(*l.claim3_bound) : Json(nullptr);
    x["claim3"] = l.claim3;
    x["claim3_same_index"] = l.claim3_same_index;
    x["ineq7_bound"] = l.ineq7_bound ? Json(*l.ineq7_bound) : Json(nullptr);
    x["ineq7"] = l.ineq7;
    x["ineq8_bound"] = l.ineq8_bound;
    x["ineq8"] = l.ineq8;
    j["levels"].push_back(std::move(x));
  }
  return j;
}

struct TreeStats {
  std::size_t n = 0, m = 0;
  int d = 0, k_distance = 0;
  LevelStats levels;
  int nu = 0;
};

inline TreeStats tree_stats(const Tree& t) {
  TreeStats s;
  s.n = t.order();
  s.m = t.size();
  s.d = diameter(t);
  s.k_distance = distance_class(t);
  s.nu = matching_number(t).nu;
  if (t.order() >= 2) s.levels = level_metrics(layout(t, Orientation::Left));
  return s;
}

inline Json stats_json(const TreeStats& s) {
  Json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["d"] = s.d;
  j["k_distance"] = s.k_distance;
  j["ex"] = s.levels.ex;
  j["ex_prime"] = s.levels.ex_prime;
  j["s"] = s.levels.s;
  j["s_from3"] = s.levels.s_from3;
  j["nu"] = s.nu;
  j["per_level"] = Json::array();
  for (std::size_t k = 0; k < s.levels.levels.size(); ++k) {
    const auto& l = s.levels.levels[k];
    j["per_level"].push_back({{"level", k}, {"n", l.n}, {"ex", l.ex}, {"ex_formal", l.ex_formal}, {"ex_prime", l.ex_prime}, {"s", l.s}});
  }
  return j;
}

// Graphviz, undirected; vertex labels show f when given, edges show weights.
inline std::string export_dot(const Tree& t, const Labeling* f = nullptr) {
  std::string out = "graph {\n";
  for (std::size_t v = 0; v < t.order(); ++v) {
    out += "  " + std::to_string(v);
    if (f) out += " [label=\"" + std::to_string(f->labels[v]) + "\"]";
    out += ";\n";
  }
  for (const auto& e : t.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (f) out += " [label=\"" + std::to_string(weight(*f, e)) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gracelab
