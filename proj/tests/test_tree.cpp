#include "gracelab/layout.hpp"
#include "gracelab/oracle.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gracelab;

namespace {

Errc parse_error(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidSpec;
}

std::vector<Edge> E(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Edge> out;
  for (auto [a, b] : xs) out.push_back({a, b});
  return out;
}

}  // namespace

TEST(Parse, PathAndStar) {
  auto p = parse_edge_list("0 1\n1 2\n2 3");
  EXPECT_EQ(p.order(), 4u);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(diameter(p), 3);
  auto s = parse_edge_list("0 1\n0 2\n0 3");
  EXPECT_EQ(s.degree(0), 3u);
}

TEST(Parse, CommentsAndBlankLines) {
  auto t = parse_edge_list("# a path\n\n0 1\n  # indented comment\n1 2\n\n");
  EXPECT_EQ(t.order(), 3u);
}

TEST(Parse, SparseIdsAreRenumberedByFirstAppearance) {
  auto t = parse_edge_list("10 40\n40 7");
  EXPECT_EQ(t.order(), 3u);
  EXPECT_EQ(t.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(t.edges()[1], (Edge{1, 2}));
}

TEST(Parse, ErrorsAreDistinct) {
  EXPECT_EQ(parse_error("0 1\n1 2\n2 0"), Errc::CycleDetected);
  EXPECT_EQ(parse_error("0 1\n2 3"), Errc::Disconnected);
  EXPECT_EQ(parse_error("0 0"), Errc::SelfLoop);
  EXPECT_EQ(parse_error("0 1\n1 0"), Errc::DuplicateEdge);
  EXPECT_EQ(parse_error("# nothing\n\n"), Errc::EmptyInput);
  EXPECT_EQ(parse_error("0 x"), Errc::ParseError);
  EXPECT_EQ(parse_error("0 1 2"), Errc::ParseError);
  EXPECT_EQ(parse_error("-1 2"), Errc::ParseError);
}

TEST(Serialize, Examples) {
  EXPECT_EQ(serialize_edge_list(path_tree(4)), "0 1\n1 2\n2 3");
  EXPECT_EQ(serialize_edge_list(star_tree(3)), "0 1\n0 2\n0 3");
}

TEST(Serialize, RoundTripOverEnumeration) {
  for (const auto& t : enumerate_trees(10)) {
    if (t.order() == 1) continue;
    EXPECT_EQ(parse_edge_list(serialize_edge_list(t)), t);
  }
}

TEST(Prufer, Examples) {
  auto p2 = prufer_decode({});
  EXPECT_EQ(p2.order(), 2u);
  auto star = prufer_decode({0, 0});
  EXPECT_EQ(star.degree(0), 3u);
  EXPECT_THROW(prufer_decode({5}), Error);
}

TEST(Prufer, EncodeInvertsDecodeUpToSeven) {
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> seq(n - 2, 0);
    long count = 0;
    while (true) {
      EXPECT_EQ(prufer_encode(prufer_decode(seq)), seq);
      ++count;
      int i = 0;
      while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
      if (i == n - 2) break;
    }
    long expect = 1;
    for (int k = 0; k < n - 2; ++k) expect *= n;
    EXPECT_EQ(count, expect);
  }
}

TEST(LongestPath, Examples) {
  auto p = longest_path(path_tree(4));
  EXPECT_EQ(p.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(longest_path(star_tree(3)).vertices, (std::vector<Vertex>{1, 0, 2}));
}

TEST(LongestPath, MatchesAllPairsOverEnumeration) {
  for (const auto& t : enumerate_trees(10)) {
    auto p = longest_path(t);
    EXPECT_EQ(static_cast<int>(p.length()), oracle::diameter(t));
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) EXPECT_TRUE(t.adjacent(p.vertices[i], p.vertices[i + 1]));
    std::set<Vertex> distinct(p.vertices.begin(), p.vertices.end());
    EXPECT_EQ(distinct.size(), p.vertices.size());
  }
}

TEST(LongestPath, InvariantUnderRelabeling) {
  detail::Rng rng(11);
  for (const auto& t : trees_of_order(9)) {
    std::vector<int> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    EXPECT_EQ(longest_path(relabel(t, perm)).length(), longest_path(t).length());
  }
}

TEST(DistanceClass, Examples) {
  EXPECT_EQ(distance_class(path_tree(7)), 0);
  EXPECT_EQ(distance_class(star_tree(3)), 1);
  EXPECT_EQ(distance_class(path_tree(3)), 0);
  EXPECT_EQ(distance_class(figure1().tree), 2);
}

TEST(DistanceClass, MatchesBruteForceOverEnumeration) {
  for (const auto& t : enumerate_trees(10)) EXPECT_EQ(distance_class(t), oracle::distance_class(t)) << serialize_edge_list(t);
}

TEST(CanonicalCode, Examples) {
  auto p = path_tree(4);
  EXPECT_EQ(canonical_code(p), canonical_code(relabel(p, {2, 0, 3, 1})));
  EXPECT_NE(canonical_code(p), canonical_code(star_tree(3)));
}

TEST(CanonicalCode, SevenVertexPruferSpaceHasElevenClasses) {
  std::set<std::string> codes;
  std::vector<int> seq(5, 0);
  while (true) {
    codes.insert(canonical_code(prufer_decode(seq)));
    int i = 0;
    while (i < 5 && ++seq[i] == 7) seq[i++] = 0;
    if (i == 5) break;
  }
  EXPECT_EQ(codes.size(), 11u);
  EXPECT_EQ(static_cast<long long>(codes.size()), oracle::free_tree_counts(7)[7]);
}

TEST(CanonicalCode, AgreesWithBruteIsomorphismOnSixVertices) {
  std::vector<Tree> all;
  std::vector<int> seq(4, 0);
  while (true) {
    all.push_back(prufer_decode(seq));
    int i = 0;
    while (i < 4 && ++seq[i] == 6) seq[i++] = 0;
    if (i == 4) break;
  }
  std::vector<Tree> reps;
  std::vector<std::string> rep_codes;
  for (const auto& t : all) {
    auto code = canonical_code(t);
    bool placed = false;
    for (std::size_t r = 0; r < reps.size() && !placed; ++r) {
      bool iso = oracle::isomorphic(t, reps[r]);
      EXPECT_EQ(iso, code == rep_codes[r]);
      placed = iso;
    }
    if (!placed) {
      reps.push_back(t);
      rep_codes.push_back(code);
    }
  }
  EXPECT_EQ(reps.size(), 6u);
}

TEST(Layout, PathAndStarExamples) {
  auto L = layout(path_tree(4), Orientation::Left);
  ASSERT_EQ(L.levels.size(), 4u);
  for (const auto& l : L.levels) EXPECT_EQ(l.size(), 1u);
  auto K = layout(star_tree(3), Orientation::Left);
  ASSERT_EQ(K.levels.size(), 3u);
  EXPECT_EQ(K.levels[1], (std::vector<Vertex>{0}));
  EXPECT_EQ(K.levels[2].size(), 2u);
}

TEST(Layout, CaterpillarLeavesOrderedByIndex) {
  // spine a-b-c = 0-1-2 with leaves x=3, y=4 on b
  auto t = Tree::from_edges(5, E({{0, 1}, {1, 2}, {1, 3}, {1, 4}}));
  auto L = layout(t, Orientation::Left);
  EXPECT_EQ(L.root, 0);
  EXPECT_EQ(L.levels[2], (std::vector<Vertex>{2, 3, 4}));
}

TEST(Layout, RootOverrideMustBeDiametral) {
  EXPECT_THROW(layout(path_tree(4), Orientation::Left, 1), Error);
  EXPECT_EQ(layout(path_tree(4), Orientation::Left, 3).root, 3);
}

// Every ordering rule, checked directly on all trees up to nine vertices.
TEST(Layout, RulesHoldOverEnumeration) {
  for (const auto& t : enumerate_trees(9)) {
    if (t.order() < 2) continue;
    const int d = oracle::diameter(t);
    auto ap = oracle::all_pairs(t);
    for (Orientation o : {Orientation::Left, Orientation::Right}) {
      auto L = layout(t, o);
      EXPECT_EQ(t.degree(L.root), 1u);
      EXPECT_EQ(L.gamma[L.root], d);
      EXPECT_EQ(L.depth(), d);
      ASSERT_EQ(L.levels[0].size(), 1u);
      std::vector<int> seen(t.order(), 0);
      for (std::size_t j = 0; j < L.levels.size(); ++j)
        for (Vertex v : L.levels[j]) {
          ++seen[v];
          EXPECT_EQ(ap[L.root][v], static_cast<int>(j));
        }
      for (int c : seen) EXPECT_EQ(c, 1);

      // gamma: levels below v that hold a descendant
      for (std::size_t v = 0; v < t.order(); ++v) {
        int deepest = 0;
        for (std::size_t w = 0; w < t.order(); ++w)
          if (ap[L.root][w] == ap[L.root][v] + ap[v][w]) deepest = std::max(deepest, ap[v][w]);
        EXPECT_EQ(L.gamma[v], deepest);
      }
      for (std::size_t j = 1; j < L.levels.size(); ++j) {
        const auto& lvl = L.levels[j];
        for (std::size_t i = 0; i + 1 < lvl.size(); ++i) {
          Vertex a = lvl[i], b = lvl[i + 1];
          // no crossings
          EXPECT_LE(L.position[L.parent[a]], L.position[L.parent[b]]);
          if (L.parent[a] != L.parent[b]) continue;
          EXPECT_LE(L.gamma[a], L.gamma[b]);
          if (L.gamma[a] == L.gamma[b]) {
            if (o == Orientation::Left) {
              EXPECT_GE(t.degree(a), t.degree(b));
            }
            else EXPECT_LE(t.degree(a), t.degree(b));
          }
        }
      }
      // the last vertex of every level forms a longest path
      auto sp = L.spine();
      for (std::size_t j = 0; j + 1 < sp.size(); ++j) EXPECT_TRUE(t.adjacent(sp[j], sp[j + 1]));
    }
  }
}

TEST(Enumeration, CountsMatchOtter) {
  auto counts = oracle::free_tree_counts(12);
  for (std::size_t n = 1; n <= 11; ++n) EXPECT_EQ(static_cast<long long>(trees_of_order(n).size()), counts[n]) << n;
}
