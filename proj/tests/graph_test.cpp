#include "ordtrail/graph.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "test_support.hpp"

namespace ordtrail {
namespace {

using testing::k4_fig1;
using testing::v;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ordtrail::Error";
  return ErrorCode::ParseError;
}

TEST(GraphTest, NewGraph) {
  const auto g = new_graph(4, WeightMode::Strict);
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.q(), 0u);
  EXPECT_EQ(code_of([] { new_graph(0, WeightMode::Strict); }), ErrorCode::InvalidVertexCount);
  const auto single = new_graph(1, WeightMode::Relaxed);
  EXPECT_EQ(single.q(), 0u);
  EXPECT_TRUE(validate(single).ok());
}

TEST(GraphTest, AddEdgeCanonicalizesAndRejectsBadEdges) {
  WeightedGraph g(4, WeightMode::Strict);
  g.add_edge(v(2), v(1), 1);
  ASSERT_EQ(g.q(), 1u);
  EXPECT_EQ(g.edges()[0].key, (EdgeKey{v(1), v(2)}));
  EXPECT_EQ(g.weight(v(1), v(2)), Weight(1));
  EXPECT_EQ(g.weight(v(2), v(1)), Weight(1));

  EXPECT_EQ(code_of([&] { g.add_edge(v(2), v(1), 2); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([&] { g.add_edge(v(3), v(3), 7); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([&] { g.add_edge(v(3), v(4), 1); }), ErrorCode::DuplicateWeight);
  EXPECT_EQ(code_of([&] { g.add_edge(v(3), v(4), 0); }), ErrorCode::NonPositiveWeight);
  EXPECT_EQ(code_of([&] { g.add_edge(v(3), v(4), Weight(1, 2)); }), ErrorCode::NonIntegerWeight);
  EXPECT_EQ(code_of([&] { g.add_edge(v(3), v(5), 2); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(g.q(), 1u);
}

TEST(GraphTest, ValidateFig1AndViolations) {
  EXPECT_TRUE(validate(k4_fig1()).ok());

  const auto fig1 = k4_fig1();
  std::vector<Edge> edges(fig1.edges().begin(), fig1.edges().end());
  for (Edge& e : edges) {
    if (e.weight == Weight(6)) e.weight = 5;
  }
  const auto dup = validate(WeightedGraph::unchecked(4, WeightMode::Strict, edges));
  EXPECT_TRUE(dup.has(ErrorCode::DuplicateWeight));

  const auto gap = validate(WeightedGraph::unchecked(
      4, WeightMode::Strict, {{{v(1), v(2)}, 1}, {{v(2), v(3)}, 2}, {{v(3), v(4)}, 4}}));
  EXPECT_TRUE(gap.has(ErrorCode::NotSurjective));
  EXPECT_FALSE(gap.has(ErrorCode::DuplicateWeight));

  const auto relaxed_gap = validate(WeightedGraph::unchecked(
      4, WeightMode::Relaxed, {{{v(1), v(2)}, 1}, {{v(2), v(3)}, 2}, {{v(3), v(4)}, 4}}));
  EXPECT_TRUE(relaxed_gap.ok());

  const auto loop = validate(WeightedGraph::unchecked(3, WeightMode::Strict, {{{v(2), v(2)}, 1}}));
  EXPECT_TRUE(loop.has(ErrorCode::SelfLoop));
}

TEST(GraphTest, WeightedSubgraph) {
  const auto g = k4_fig1();
  const auto g5 = weighted_subgraph(g, 5);
  EXPECT_EQ(g5.q(), 5u);
  EXPECT_FALSE(g5.has_edge(v(1), v(4)));
  EXPECT_TRUE(validate(g5).ok());

  const auto g0 = weighted_subgraph(g, 0);
  EXPECT_EQ(g0.n(), 4u);
  EXPECT_EQ(g0.q(), 0u);

  EXPECT_EQ(weighted_subgraph(g, 6), g);
  EXPECT_EQ(code_of([&] { weighted_subgraph(g, 7); }), ErrorCode::RankOutOfRange);
}

TEST(GraphTest, CompleteGraph) {
  const auto g = k4_fig1();
  EXPECT_EQ(g.weight(v(1), v(2)), Weight(1));
  EXPECT_EQ(g.weight(v(1), v(3)), Weight(3));
  EXPECT_EQ(g.weight(v(1), v(4)), Weight(6));
  EXPECT_EQ(g.weight(v(2), v(3)), Weight(5));
  EXPECT_EQ(g.weight(v(2), v(4)), Weight(4));
  EXPECT_EQ(g.weight(v(3), v(4)), Weight(2));

  const auto k2 = complete_graph(2, {1});
  EXPECT_EQ(k2.q(), 1u);
  EXPECT_EQ(code_of([] { complete_graph(3, {1, 2}); }), ErrorCode::WrongPermutationLength);
  EXPECT_EQ(code_of([] { complete_graph(3, {1, 1, 2}); }), ErrorCode::NotAPermutation);
  EXPECT_EQ(code_of([] { complete_graph(3, {1, 2, 4}); }), ErrorCode::NotAPermutation);
}

TEST(GraphTest, CompleteEdgeIndexMatchesKeyOrder) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto keys = complete_edge_keys(n);
    for (std::size_t k = 0; k < keys.size(); ++k) {
      EXPECT_EQ(complete_edge_index(n, keys[k].a.index, keys[k].b.index), k);
    }
  }
}

TEST(GraphTest, RandomGraph) {
  const auto k4 = random_graph(4, 6, 11);
  EXPECT_EQ(k4.q(), 6u);
  for (std::size_t a = 1; a <= 4; ++a) EXPECT_EQ(k4.degree(v(a)), 3u);
  EXPECT_EQ(random_graph(5, 0, 3).q(), 0u);
  EXPECT_EQ(code_of([] { random_graph(3, 4, 1); }), ErrorCode::TooManyEdges);
}

TEST(GraphPropertyTest, GeneratedGraphsSatisfyInvariants) {
  Rng rng(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = testing::random_vertex_count(rng, 1, 9);
    const std::size_t m = static_cast<std::size_t>(rng.below(max_edges(n) + 1));
    const std::uint64_t seed = rng.next();
    const auto g = random_graph(n, m, seed);
    ASSERT_TRUE(validate(g).ok());
    ASSERT_EQ(g.q(), m);
    ASSERT_LE(g.q(), max_edges(n));
    ASSERT_EQ(random_graph(n, m, seed), g);

    for (std::size_t i = 0; i < g.q(); ++i) {
      const auto lower = weighted_subgraph(g, i);
      const auto upper = weighted_subgraph(g, i + 1);
      ASSERT_EQ(lower.q(), i);
      for (const Edge& e : lower.edges()) ASSERT_EQ(upper.weight(e.key.a, e.key.b), e.weight);
      ASSERT_TRUE(validate(upper).ok());
    }

    std::vector<std::uint32_t> perm(max_edges(n));
    std::iota(perm.begin(), perm.end(), 1u);
    rng.shuffle(std::span<std::uint32_t>(perm));
    const auto kn = complete_graph<std::uint32_t>(n, perm);
    ASSERT_TRUE(validate(kn).ok());
    ASSERT_EQ(kn.q(), max_edges(n));
    for (std::size_t a = 1; a <= n; ++a) ASSERT_EQ(kn.degree(v(a)), n - 1);
  }
}

TEST(RngTest, SequenceIsFixed) {
  // mt19937_64 with the default seed: the 10000th output is fixed by the standard
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ull);

  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.below(17), b.below(17));
  Rng c(7);
  for (int k = 0; k < 1000; ++k) EXPECT_LT(c.below(3), 3u);
}

}  // namespace
}  // namespace ordtrail
