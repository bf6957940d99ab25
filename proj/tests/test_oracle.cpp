#include "gracelab/oracle.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gracelab;

namespace {

// max distinct weights over every injective labeling into 0..m, by permutations
int permutation_gracesize(const Tree& t, bool bipartite_only) {
  const auto n = t.order();
  std::vector<Label> lab(n);
  std::iota(lab.begin(), lab.end(), 0);
  int best = -1;
  do {
    Labeling f{lab, Method::External};
    if (bipartite_only && !verify(t, f).bipartite_cutoff) continue;
    best = std::max(best, epsilon(t, f));
  } while (std::next_permutation(lab.begin(), lab.end()));
  return best;
}

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(trees_of_order(1).size(), 1u);
  EXPECT_EQ(trees_of_order(4).size(), 2u);
  EXPECT_EQ(trees_of_order(7).size(), 11u);
  auto otter = oracle::free_tree_counts(11);
  for (int n = 1; n <= 11; ++n) EXPECT_EQ(static_cast<long long>(trees_of_order(n).size()), otter[n]) << n;
}

TEST(Enumerate, PairwiseNonIsomorphic) {
  auto ts = trees_of_order(7);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) EXPECT_FALSE(oracle::isomorphic(ts[i], ts[j]));
}

TEST(Generate, Deterministic) {
  GenSpec s;
  s.seed = 99;
  s.spine = 9;
  EXPECT_EQ(serialize_edge_list(generate(s)), serialize_edge_list(generate(s)));
  auto other = s;
  other.seed = 100;
  EXPECT_NE(serialize_edge_list(generate(s)), serialize_edge_list(generate(other)));
}

TEST(Generate, FamiliesStayInClass) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenSpec s;
    s.seed = seed;
    s.spine = 3 + static_cast<int>(seed % 9);
    s.family = Family::Caterpillar;
    auto c = generate(s);
    EXPECT_LE(oracle::distance_class(c), 1);
    EXPECT_EQ(oracle::diameter(c), s.spine);
    s.family = Family::Lobster;
    EXPECT_LE(oracle::distance_class(generate(s)), 2);
    s.family = Family::Path;
    EXPECT_EQ(generate(s).order(), static_cast<std::size_t>(s.spine + 1));
  }
}

TEST(Generate, NoBranchesGivesCaterpillar) {
  GenSpec s;
  s.branch_prob = 0.0;
  s.spine = 10;
  EXPECT_TRUE(is_caterpillar(generate(s)));
}

TEST(Generate, InvalidSpec) {
  GenSpec s;
  s.spine = 0;
  EXPECT_THROW(generate(s), Error);
  s = GenSpec{};
  s.leaf_prob = 1.5;
  EXPECT_THROW(generate(s), Error);
  s = GenSpec{};
  s.max_n = 3;
  EXPECT_THROW(generate(s), Error);
  EXPECT_THROW(family_from_name("octopus"), Error);
  EXPECT_EQ(family_from_name("k-distant"), Family::KDistant);
}

TEST(Ensemble, LobstersInRange) {
  auto ts = lobster_ensemble(100, 7);
  ASSERT_EQ(ts.size(), 100u);
  for (const auto& t : ts) {
    EXPECT_TRUE(is_lobster(t));
    EXPECT_LE(t.order(), 60u);
    EXPECT_GE(diameter(t), 4);
    EXPECT_LE(diameter(t), 20);
  }
  EXPECT_EQ(serialize_edge_list(lobster_ensemble(3, 7)[2]), serialize_edge_list(ts[2]));
}

TEST(BruteGraceful, Examples) {
  auto p2 = brute_graceful(path_tree(2));
  ASSERT_TRUE(p2);
  EXPECT_TRUE(verify(path_tree(2), *p2).graceful);
  auto k13 = brute_graceful(star_tree(3));
  ASSERT_TRUE(k13);
  EXPECT_TRUE(verify(star_tree(3), *k13).graceful);
  EXPECT_THROW(brute_graceful(path_tree(13)), Error);
}

TEST(BruteGraceful, EveryTreeUpToTen) {
  for (const auto& t : enumerate_trees(10)) {
    auto f = brute_graceful(t);
    ASSERT_TRUE(f) << serialize_edge_list(t);
    EXPECT_TRUE(verify(t, *f).graceful);
  }
}

TEST(BruteGraceful, AllLabelingsOfPathFour) {
  // counted against every permutation
  auto all = all_graceful_labelings(path_tree(4));
  std::set<std::vector<Label>> seen;
  for (const auto& f : all) {
    EXPECT_TRUE(verify(path_tree(4), f).graceful);
    seen.insert(f.labels);
  }
  EXPECT_EQ(seen.size(), all.size());
  int count = 0;
  std::vector<Label> lab{0, 1, 2, 3};
  do count += verify(path_tree(4), {lab, Method::External}).graceful;
  while (std::next_permutation(lab.begin(), lab.end()));
  EXPECT_EQ(static_cast<int>(all.size()), count);
}

TEST(ExactGracesize, AgainstPermutations) {
  for (const auto& t : enumerate_trees(7)) {
    if (t.order() < 2) continue;
    EXPECT_EQ(exact_gracesize(t), permutation_gracesize(t, false));
    EXPECT_EQ(exact_alpha_size(t), permutation_gracesize(t, true)) << serialize_edge_list(t);
  }
}

TEST(ExactGracesize, GracefulTreesReachM) {
  for (const auto& t : enumerate_trees(9)) {
    if (t.order() < 2) continue;
    Labeling w;
    int gs = exact_gracesize(t, &w);
    EXPECT_EQ(gs, static_cast<int>(t.size()));
    EXPECT_EQ(epsilon(t, w), gs);
    EXPECT_GE(gs, exact_alpha_size(t));
  }
  EXPECT_THROW(exact_gracesize(path_tree(10)), Error);
  EXPECT_THROW(exact_alpha_size(path_tree(10)), Error);
}

TEST(ExactAlpha, Examples) {
  EXPECT_EQ(exact_alpha_size(path_tree(5)), 4);
  EXPECT_EQ(exact_alpha_size(star_tree(4)), 4);
}

TEST(PrettyGraceful, Examples) {
  EXPECT_TRUE(is_pretty_graceful(path_tree(2)));
  EXPECT_TRUE(is_pretty_graceful(path_tree(6)));
  EXPECT_TRUE(is_pretty_graceful(star_tree(5)));
}

TEST(BhBipartite, SmallCases) {
  Matching m4;
  m4.edges = {{0, 1}, {2, 3}};
  auto p4 = bh_bipartite_exists(path_tree(4), m4);
  EXPECT_TRUE(p4.exists);
  ASSERT_TRUE(p4.witness);
  EXPECT_TRUE(verify(path_tree(4), *p4.witness).bipartite_cutoff.has_value());
  Matching m2;
  m2.edges = {{0, 1}};
  EXPECT_TRUE(bh_bipartite_exists(path_tree(2), m2).exists);
}

TEST(BhBipartite, FigureOneHasNone) {
  auto f = figure1();
  auto r = bh_bipartite_exists(f.tree, f.matching);
  EXPECT_FALSE(r.exists);
  EXPECT_GT(r.contree_labelings, 0);
  EXPECT_GT(r.graceful_placements, 0);
}

TEST(Budgets, Exceeded) {
  EXPECT_THROW(all_graceful_labelings(path_tree(10), 50), Error);
  try {
    exact_gracesize(path_tree(8), nullptr, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}
