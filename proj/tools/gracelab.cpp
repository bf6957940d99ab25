#include "gracelab/gracelab.hpp"
#include "gracelab/io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace gracelab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::EmptyInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(Errc::InvalidSpec, "cannot write " + out);
  f << text;
}

Orientation orientation_from(const std::string& s) { return s == "right" ? Orientation::Right : Orientation::Left; }

// Checks a labeling must pass for the method that produced it. Recomputed from the tree
// alone, so `verify` and `label` agree.
std::vector<BoundCheck> method_checks(const Tree& t, const Labeling& f, const VerificationReport& r, Orientation o) {
  std::vector<BoundCheck> out;
  const auto m = static_cast<long>(t.size());
  auto flag = [&](const std::string& name, bool holds) { out.push_back(bound_check(name, Rational(holds), ">=", Rational(1))); };
  flag("injective", r.injective);
  if (!r.injective) return out;
  switch (f.method) {
    case Method::Rrg: {
      auto L = layout(t, o);
      auto st = level_metrics(L);
      flag("weights distinct", r.epsilon == m);
      auto b = rrg_bounds(m, L.depth(), st.ex);
      out.push_back(bound_check("max_label<=m+ex", Rational(r.max_label), "<=", b.range_max));
      if (spine_class(L) <= 2) out.push_back(bound_check("max_label<=3m/2-d/2", Rational(r.max_label), "<=", b.lobster_vmax));
      break;
    }
    case Method::Erg: {
      flag("bipartite", r.bipartite_cutoff.has_value());
      out.push_back(bound_check("epsilon>=ceil(alpha_bound)", Rational(r.epsilon), ">=",
                                Rational(ceil_of(alpha_bound_lobster(m, diameter(t))))));
      break;
    }
    case Method::Bh:
    case Method::ShellDelta:
    case Method::Oracle: flag("graceful", r.graceful); break;
    case Method::BhRelaxed:
      out.push_back(bound_check("epsilon>=certificate", Rational(r.epsilon), ">=", Rational(bh_relaxed_label(t).certificate)));
      break;
    case Method::RsAmalgam:
      flag("bipartite", r.bipartite_cutoff.has_value());
      out.push_back(bound_check("epsilon>=floor((5m+2)/6)", Rational(r.epsilon), ">=", Rational((5 * m + 2) / 6)));
      break;
    case Method::External: break;
  }
  return out;
}

bool all_hold(const std::vector<BoundCheck>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const auto& b) { return b.holds; });
}

struct Labeled {
  Labeling labeling;
  VerificationReport report;
  Json extra = Json::object();
};

Labeled run_method(const std::string& method, const Tree& t, Orientation o) {
  Labeled out;
  if (method == "rrg") {
    auto r = rrg_label(layout(t, o));
    out = {r.labeling, r.report};
    out.extra["plan"] = plan_json(r.plan);
    out.extra["fallback_used"] = r.fallback_used;
  } else if (method == "erg") {
    auto L = layout(t, o);
    auto r = erg_label(L);
    out = {r.labeling, r.report};
    out.extra["erg"] = erg_json(erg_diagnostics(L, r.labeling));
  } else if (method == "bh") {
    auto M = matching_number(t).witness;
    if (!M.covers_all(t.order())) throw Error(Errc::NotPerfect, "tree has no perfect matching");
    auto r = bh_label(t, M);
    out = {r.labeling, r.report};
    out.extra["contraction"] = contraction_json(r.contree);
    out.extra["strongly_graceful"] = strongly_graceful(t, r.labeling, M);
  } else if (method == "bh-relaxed") {
    auto r = bh_relaxed_label(t);
    out = {r.labeling, r.report};
    out.extra["contraction"] = contraction_json(shell(layout(t, Orientation::Right)));
    out.extra["certificate"] = r.certificate;
  } else if (method == "shell") {
    auto r = shell_graceful(t);
    out = {r.labeling, r.report};
    out.extra["route"] = r.route;
  } else if (method == "alpha-shell") {
    auto r = shell_alpha_label(t);
    out = {r.labeling, r.report};
    Json pieces = Json::array();
    for (const auto& p : r.pieces)
      pieces.push_back({{"index", p.index}, {"m", p.m}, {"epsilon", p.epsilon}, {"floor_target", p.floor_target},
                        {"optimal", p.optimal}, {"greedy", p.greedy}});
    out.extra["pieces"] = pieces;
    out.extra["steps"] = r.steps;
    out.extra["target"] = r.target;
  } else {
    throw Error(Errc::InvalidSpec, "unknown method " + method);
  }
  return out;
}

Json report_with(const Tree& t, const Labeled& l, Orientation o, bool& ok) {
  auto checks = method_checks(t, l.labeling, l.report, o);
  ok = all_hold(checks) && l.report.bounds_hold();
  auto j = labeling_json(t, l.labeling, l.report);
  for (auto it = l.extra.begin(); it != l.extra.end(); ++it) j["report"][it.key()] = it.value();
  j["report"]["orientation"] = o == Orientation::Left ? "left" : "right";
  j["report"]["ok"] = ok;
  return j;
}

// edge list, or a labeling JSON when the text starts with '{'
struct Input {
  Tree tree;
  std::optional<Labeling> labeling;
  std::optional<Orientation> orientation;
};

Input read_input(const std::string& path) {
  auto text = slurp(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
    auto lt = labeling_from_json(j);
    Input in{std::move(lt.tree), std::move(lt.labeling), std::nullopt};
    if (j.contains("report") && j["report"].contains("orientation"))
      in.orientation = orientation_from(j["report"]["orientation"].get<std::string>());
    return in;
  }
  return {parse_edge_list(text), std::nullopt, std::nullopt};
}

struct BatchRow {
  std::size_t id = 0;
  TreeStats stats;
  std::string method;
  int epsilon = 0;
  Label max_label = 0;
  Rational bound_rrg, bound_alpha, bound_gs;
  bool ok = false;
};

Tree batch_tree(Family family, std::uint64_t seed, std::size_t i) {
  GenSpec s;
  s.family = family;
  s.seed = mix_seed(seed, i);
  const int lo = family == Family::Lobster ? 4 : 2;
  s.spine = lo + static_cast<int>(mix_seed(s.seed, 0) % static_cast<std::uint64_t>(21 - lo));
  return generate(s);
}

std::string csv(const std::vector<BatchRow>& rows) {
  std::string out = "id,n,m,d,k_distance,ex,ex_prime,s,nu,method,epsilon,max_label,bound_rrg,bound_alpha,bound_gs,ok\n";
  for (const auto& r : rows) {
    const auto& s = r.stats;
    out += std::to_string(r.id) + ',' + std::to_string(s.n) + ',' + std::to_string(s.m) + ',' + std::to_string(s.d) + ',' +
           std::to_string(s.k_distance) + ',' + std::to_string(s.levels.ex) + ',' + std::to_string(s.levels.ex_prime) + ',' +
           std::to_string(s.levels.s) + ',' + std::to_string(s.nu) + ',' + r.method + ',' + std::to_string(r.epsilon) + ',' +
           std::to_string(r.max_label) + ',' + to_string(r.bound_rrg) + ',' + to_string(r.bound_alpha) + ',' +
           to_string(r.bound_gs) + ',' + (r.ok ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graceful labelings of trees"};
  app.require_subcommand(1);
  std::string in, out, orient = "left", method = "rrg";

  auto* label = app.add_subcommand("label", "label a tree");
  label->add_option("--method", method)->check(CLI::IsMember({"rrg", "erg", "bh", "bh-relaxed", "shell", "alpha-shell"}));
  label->add_option("--in", in, "edge list")->required();
  label->add_option("--orientation", orient)->check(CLI::IsMember({"left", "right"}));
  label->add_option("--out", out);

  auto* ver = app.add_subcommand("verify", "check a labeling JSON");
  ver->add_option("--in", in)->required();
  ver->add_option("--out", out);

  auto* stats = app.add_subcommand("stats", "structure metrics");
  stats->add_option("--in", in)->required();
  stats->add_option("--out", out);

  std::string family = "lobster";
  std::uint64_t seed = 1;
  GenSpec gs;
  auto* gen = app.add_subcommand("gen", "generate a random tree");
  gen->add_option("family", family)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--spine", gs.spine, "diameter");
  gen->add_option("--leaf-prob", gs.leaf_prob);
  gen->add_option("--branch-prob", gs.branch_prob);
  gen->add_option("--max-leaves", gs.max_leaves);
  gen->add_option("--max-branches", gs.max_branches);
  gen->add_option("--max-branch-leaves", gs.max_branch_leaves);
  gen->add_option("--k", gs.k);
  gen->add_option("--max-n", gs.max_n);
  gen->add_option("--out", out);

  int max_n = 6;
  auto* en = app.add_subcommand("enumerate", "all trees up to an order");
  en->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 12));
  en->add_option("--out", out);

  std::string which;
  auto* orc = app.add_subcommand("oracle", "exhaustive search on a small tree");
  orc->add_option("which", which)->required()->check(CLI::IsMember({"gracesize", "alpha", "graceful"}));
  orc->add_option("file", in)->required();
  orc->add_option("--out", out);

  auto* bnd = app.add_subcommand("bounds", "bound formulas for a tree");
  bnd->add_option("--in", in)->required();
  bnd->add_option("--out", out);

  std::size_t count = 100;
  std::string methods = "rrg";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* bat = app.add_subcommand("batch", "label a seeded ensemble, CSV out");
  bat->add_option("--family", family);
  bat->add_option("--count", count);
  bat->add_option("--seed", seed);
  bat->add_option("--methods", methods);
  bat->add_option("--threads", threads)->check(CLI::PositiveNumber);
  bat->add_option("--out", out);

  auto* dot = app.add_subcommand("export-dot", "Graphviz text");
  dot->add_option("--in", in, "edge list or labeling JSON")->required();
  dot->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*label) {
      auto input = read_input(in);
      auto o = orientation_from(orient);
      bool ok = false;
      auto j = report_with(input.tree, run_method(method, input.tree, o), o, ok);
      emit(out, j.dump(2) + "\n");
      return ok ? kOk : kFailed;
    }
    if (*ver) {
      auto input = read_input(in);
      if (!input.labeling) throw Error(Errc::ParseError, "verify expects a labeling JSON");
      auto o = input.orientation.value_or(Orientation::Left);
      auto r = verify(input.tree, *input.labeling);
      auto checks = method_checks(input.tree, *input.labeling, r, o);
      r.bound_checks.insert(r.bound_checks.end(), checks.begin(), checks.end());
      bool ok = r.bounds_hold();
      Json j;
      j["ok"] = ok;
      j["method"] = std::string(method_name(input.labeling->method));
      j["report"] = to_json(r);
      emit(out, j.dump(2) + "\n");
      return ok ? kOk : kFailed;
    }
    if (*stats) {
      emit(out, stats_json(tree_stats(read_input(in).tree)).dump(2) + "\n");
      return kOk;
    }
    if (*gen) {
      gs.family = family_from_name(family);
      gs.seed = seed;
      emit(out, serialize_edge_list(generate(gs)) + "\n");
      return kOk;
    }
    if (*en) {
      std::string text;
      std::size_t k = 0;
      for (const auto& t : enumerate_trees(static_cast<std::size_t>(max_n))) {
        if (t.order() < 2) continue;
        text += "# tree " + std::to_string(k++) + " n=" + std::to_string(t.order()) + "\n" + serialize_edge_list(t) + "\n";
      }
      emit(out, text);
      return kOk;
    }
    if (*orc) {
      auto t = read_input(in).tree;
      Json j;
      j["n"] = t.order();
      j["m"] = t.size();
      if (which == "graceful") {
        auto f = brute_graceful(t);
        j["graceful"] = f.has_value();
        j["labels"] = f ? Json(f->labels) : Json(nullptr);
      } else {
        Labeling w;
        int v = which == "gracesize" ? exact_gracesize(t, &w) : exact_alpha_size(t, &w);
        j[which == "gracesize" ? "gracesize" : "alpha_size"] = v;
        j["labels"] = w.labels;
      }
      emit(out, j.dump(2) + "\n");
      return kOk;
    }
    if (*bnd) {
      auto s = tree_stats(read_input(in).tree);
      const auto m = static_cast<long>(s.m);
      auto rb = rrg_bounds(m, s.d, s.levels.ex);
      auto g = gracesize_lower(m, s.d, s.nu);
      Json j;
      j["m"] = s.m;
      j["d"] = s.d;
      j["nu"] = s.nu;
      j["ex"] = s.levels.ex;
      j["rrg"] = {{"range_max", to_string(rb.range_max)}, {"lobster_vmax", to_string(rb.lobster_vmax)}};
      j["alpha"] = {{"bound", to_string(alpha_bound_lobster(m, s.d))}, {"ceil", ceil_of(alpha_bound_lobster(m, s.d))}};
      j["gracesize"] = {{"first", to_string(g.first)},
                        {"second", to_string(g.second)},
                        {"value", to_string(g.value)},
                        {"corollary_case", g.corollary_case}};
      emit(out, j.dump(2) + "\n");
      return kOk;
    }
    if (*bat) {
      const Family fam = family_from_name(family);
      std::vector<std::string> ms;
      for (std::stringstream ss(methods); ss.good();) {
        std::string x;
        std::getline(ss, x, ',');
        if (!x.empty()) ms.push_back(x);
      }
      for (const auto& x : ms)
        if (x != "rrg" && x != "erg" && x != "bh" && x != "bh-relaxed" && x != "shell" && x != "alpha-shell")
          throw Error(Errc::InvalidSpec, "unknown method " + x);
      std::vector<BatchRow> rows(count * ms.size());
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t i; (i = next++) < count;) {
          Tree t = batch_tree(fam, seed, i);
          auto st = tree_stats(t);
          const auto m = static_cast<long>(st.m);
          for (std::size_t k = 0; k < ms.size(); ++k) {
            auto& r = rows[i * ms.size() + k];
            r.id = i;
            r.stats = st;
            r.method = ms[k];
            r.bound_rrg = rrg_bounds(m, st.d, st.levels.ex).lobster_vmax;
            r.bound_alpha = alpha_bound_lobster(m, st.d);
            r.bound_gs = gracesize_lower(m, st.d, st.nu).value;
            try {
              auto l = run_method(ms[k], t, Orientation::Left);
              r.epsilon = l.report.epsilon;
              r.max_label = l.report.max_label;
              r.ok = all_hold(method_checks(t, l.labeling, l.report, Orientation::Left)) && l.report.bounds_hold();
            } catch (const Error&) {
              r.ok = false;
            }
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
      work();
      for (auto& th : pool) th.join();
      emit(out, csv(rows));
      bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok; });
      return ok ? kOk : kFailed;
    }
    if (*dot) {
      auto input = read_input(in);
      emit(out, export_dot(input.tree, input.labeling ? &*input.labeling : nullptr));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
