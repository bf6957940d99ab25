#include "gracelab/oracle.hpp"
#include "gracelab/shell.hpp"

#include <gtest/gtest.h>

using namespace gracelab;

namespace {

Tree from(std::size_t n, std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Edge> e;
  for (auto [a, b] : xs) e.push_back({a, b});
  return Tree::from_edges(n, std::move(e));
}

Matching match(std::initializer_list<std::pair<int, int>> xs) {
  Matching M;
  for (auto [a, b] : xs) M.edges.push_back({a, b});
  return M;
}

bool partitions(const ContractionMap& c, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const auto& o : c.origin)
    for (Vertex v : o) ++seen[v];
  return std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
}

const std::vector<Tree>& small_trees() {
  static const auto all = enumerate_trees(12);
  return all;
}

}  // namespace

TEST(Shell, CaterpillarShrinksToItsSpine) {
  // spine 0-1-2-3 with leaves 4, 5 on 1 and 6 on 2
  auto t = from(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 6}});
  auto c = shell(layout(t, Orientation::Right));
  EXPECT_EQ(c.result.order(), 4u);
  EXPECT_EQ(distance_class(c.result), 0);
  EXPECT_EQ(c.contracted, 3);
  EXPECT_TRUE(partitions(c, t.order()));
}

TEST(Shell, IdempotentAndDegreeTwo) {
  for (const auto& t : lobster_ensemble(200, 41)) {
    auto c = shell(layout(t, Orientation::Right));
    EXPECT_TRUE(is_shell(c.result));
    EXPECT_TRUE(partitions(c, t.order()));
    EXPECT_EQ(c.result.order() + c.contracted, t.order());
    auto again = shell(layout(c.result, Orientation::Right));
    EXPECT_EQ(again.contracted, 0);
    EXPECT_EQ(canonical_code(again.result), canonical_code(c.result));
  }
}

TEST(Shell, FigureOne) {
  auto f = figure1();
  auto c = shell(layout(f.tree, Orientation::Right));
  auto P = longest_path(c.result).vertices;
  auto dist = distances_to(c.result, P);
  for (std::size_t v = 0; v < c.result.order(); ++v)
    if (dist[v] == 1) {
      EXPECT_EQ(c.result.degree(static_cast<Vertex>(v)), 2u);
    }
  EXPECT_TRUE(is_shell(f.tree));
}

TEST(Shell, RejectsThreeDistant) {
  auto t = from(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {7, 8}, {8, 9}});
  EXPECT_THROW(shell(layout(t, Orientation::Right)), Error);
}

TEST(ShellMatching, Paths) {
  auto m4 = shell_matching(path_tree(4));
  EXPECT_EQ(m4.matching.edges.size(), 2u);
  EXPECT_FALSE(m4.uncovered);
  auto m5 = shell_matching(path_tree(5));
  EXPECT_EQ(m5.matching.edges.size(), 2u);
  ASSERT_TRUE(m5.uncovered);
  EXPECT_TRUE(*m5.uncovered == 0 || *m5.uncovered == 4);
  EXPECT_THROW(shell_matching(star_tree(3)), Error);
}

TEST(ShellMatching, EnsembleShells) {
  for (const auto& t : lobster_ensemble(300, 43)) {
    auto s = shell(layout(t, Orientation::Right)).result;
    auto sm = shell_matching(s);
    std::vector<int> cover(s.order(), 0);
    for (const auto& e : sm.matching.edges) {
      EXPECT_TRUE(s.adjacent(e.u, e.v));
      ++cover[e.u];
      ++cover[e.v];
    }
    int covered = 0;
    for (int c : cover) {
      EXPECT_LE(c, 1);
      covered += c;
    }
    EXPECT_EQ(covered, static_cast<int>(s.order() - (s.order() % 2)));
    if (sm.uncovered) {
      EXPECT_EQ(s.degree(*sm.uncovered), 1u);
    }
  }
}

TEST(Contree, Paths) {
  auto c4 = contree(path_tree(4), match({{0, 1}, {2, 3}}));
  EXPECT_EQ(c4.result.order(), 2u);
  auto c6 = contree(path_tree(6), match({{0, 1}, {2, 3}, {4, 5}}));
  EXPECT_EQ(c6.result.order(), 3u);
  EXPECT_EQ(distance_class(c6.result), 0);
  EXPECT_THROW(contree(path_tree(4), match({{0, 1}})), Error);
  EXPECT_THROW(contree(path_tree(4), match({{0, 2}, {1, 3}})), Error);
}

TEST(Contree, FigureOneIsCaterpillar) {
  auto f = figure1();
  EXPECT_TRUE(f.matching.covers_all(f.tree.order()));
  auto c = contree(f.tree, f.matching);
  EXPECT_EQ(c.result.order(), 10u);
  EXPECT_LE(distance_class(c.result), 1);
  EXPECT_TRUE(partitions(c, f.tree.order()));
}

TEST(BhLabel, Examples) {
  auto r = bh_label(path_tree(4), match({{0, 1}, {2, 3}}));
  EXPECT_EQ(r.labeling.labels, (std::vector<Label>{3, 0, 2, 1}));
  EXPECT_TRUE(r.report.graceful);
  EXPECT_EQ(bh_label(path_tree(2), match({{0, 1}})).labeling.labels, (std::vector<Label>{0, 1}));
}

TEST(BhLabel, FigureOneIsStronglyGraceful) {
  auto f = figure1();
  auto r = bh_label(f.tree, f.matching);
  EXPECT_TRUE(strongly_graceful(f.tree, r.labeling, f.matching));
  EXPECT_FALSE(r.report.bipartite_cutoff.has_value());
}

TEST(BhLabel, EveryPerfectMatchingLobsterUpToTwelve) {
  int checked = 0;
  for (const auto& t : small_trees()) {
    if (t.order() % 2 || distance_class(t) > 2) continue;
    auto M = matching_number(t).witness;
    if (!M.covers_all(t.order())) continue;
    auto r = bh_label(t, M);
    EXPECT_TRUE(strongly_graceful(t, r.labeling, M)) << serialize_edge_list(t);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(BhRelaxed, CaterpillarWithTwoLeaves) {
  // spine 0-1-2-3 with leaves 4 on 1 and 5 on 2
  auto t = from(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
  auto r = bh_relaxed_label(t);
  EXPECT_EQ(r.contractions, 2);
  EXPECT_EQ(r.certificate, 3);
  EXPECT_GE(r.report.epsilon, 3);
  EXPECT_TRUE(r.report.bounds_hold());
}

TEST(BhRelaxed, EvenShellIsGraceful) {
  auto r = bh_relaxed_label(figure1().tree);
  EXPECT_EQ(r.contractions, 0);
  EXPECT_TRUE(r.report.graceful);
}

TEST(BhRelaxed, CertificateOnEnsemble) {
  for (const auto& t : lobster_ensemble(300, 47)) {
    auto r = bh_relaxed_label(t);
    auto sorted = r.labeling.labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) ASSERT_EQ(sorted[i], static_cast<Label>(i));
    EXPECT_GE(r.report.epsilon, r.certificate) << serialize_edge_list(t);
  }
}

TEST(DeltaPlusOne, Smallest) {
  auto r = delta_plus_one(path_tree(2), {{1, 0}, Method::External}, 0, path_tree(2), {{0, 1}, Method::External}, 0);
  EXPECT_EQ(r.tree.order(), 3u);
  EXPECT_EQ(diameter(r.tree), 2);
  EXPECT_TRUE(r.report.graceful);
}

TEST(DeltaPlusOne, EveryAttachChoiceOnPathThree) {
  Labeling fS{{2, 0, 1}, Method::External};
  for (Vertex a : {0, 1}) {
    auto r = delta_plus_one(path_tree(3), fS, 0, path_tree(2), {{0, 1}, Method::External}, 0, {0, a});
    EXPECT_EQ(r.tree.order(), 5u);
    EXPECT_TRUE(r.report.graceful) << a;
  }
}

TEST(DeltaPlusOne, EveryAttachChoiceOnCaterpillars) {
  // S graceful with n_S - 1 on a path end; T2 = P_3 with 0 on an end
  Tree T2 = path_tree(3);
  Labeling g{{0, 2, 1}, Method::External};
  for (const auto& S : enumerate_trees(7)) {
    if (S.order() < 2 || distance_class(S) > 1) continue;
    Vertex u = longest_path(S).vertices.front();
    auto fS = caterpillar_top_on(S, u);
    ASSERT_TRUE(fS);
    int combos = 1;
    for (std::size_t i = 0; i < S.size(); ++i) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      std::vector<Vertex> attach(S.size());
      for (std::size_t i = 0, c = code; i < S.size(); ++i, c /= 3) attach[i] = static_cast<Vertex>(c % 3);
      auto r = delta_plus_one(S, *fS, u, T2, g, 0, attach);
      EXPECT_TRUE(r.report.graceful);
    }
  }
}

TEST(DeltaPlusOne, Preconditions) {
  auto P2 = path_tree(2);
  EXPECT_THROW(delta_plus_one(P2, {{0, 1}, Method::External}, 0, P2, {{0, 1}, Method::External}, 0), Error);
  EXPECT_THROW(delta_plus_one(P2, {{1, 0}, Method::External}, 0, P2, {{1, 0}, Method::External}, 0), Error);
  EXPECT_THROW(delta_plus_one(P2, {{1, 1}, Method::External}, 0, P2, {{0, 1}, Method::External}, 0), Error);
}

TEST(ShellGraceful, Routes) {
  auto odd = shell_graceful(path_tree(5));
  EXPECT_EQ(odd.route, "delta");
  EXPECT_TRUE(odd.report.graceful);
  auto even = shell_graceful(path_tree(4));
  EXPECT_EQ(even.route, "bh");
  EXPECT_TRUE(even.report.graceful);
  EXPECT_THROW(shell_graceful(star_tree(3)), Error);
}

TEST(ShellGraceful, EveryShellUpToTwelve) {
  int odd = 0, even = 0;
  for (const auto& t : small_trees()) {
    if (t.order() < 2 || !is_shell(t)) continue;
    auto r = shell_graceful(t);
    EXPECT_TRUE(r.report.graceful) << serialize_edge_list(t);
    (r.route == "delta" ? odd : even) += 1;
  }
  EXPECT_GT(odd, 10);
  EXPECT_GT(even, 10);
}

TEST(ShellGraceful, SmallShellsArePrettyGraceful) {
  for (const auto& t : enumerate_trees(9))
    if (t.order() >= 2 && is_shell(t)) {
      EXPECT_TRUE(is_pretty_graceful(t));
    }
}

TEST(GracesizeLower, Arithmetic) {
  auto b = gracesize_lower(20, 6, 14);
  EXPECT_EQ(b.value, Rational(31, 2));
  EXPECT_EQ(b.first, Rational(31, 2));
  EXPECT_EQ(gracesize_lower(20, 6, 16).corollary_case, "nu>=3m/4");
  EXPECT_EQ(gracesize_lower(20, 6, 14).corollary_case, "d>=nu-12");
  EXPECT_EQ(gracesize_lower(40, 4, 20).corollary_case, "none");
}
