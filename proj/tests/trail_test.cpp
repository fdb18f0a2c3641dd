#include "ordtrail/trail.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ordtrail {
namespace {

using testing::k3_example;
using testing::k4_fig1;
using testing::v;

TEST(TrailTest, DecreasingTrailInFig1) {
  const auto t = Trail::through({3, 2, 4, 3});
  EXPECT_TRUE(is_ordered_trail(k4_fig1(), t, OrderKind::Decreasing));
  EXPECT_FALSE(is_ordered_trail(k4_fig1(), t, OrderKind::Increasing));
  EXPECT_EQ(trail_weights(k4_fig1(), t), (std::vector<Weight>{5, 4, 2}));
}

TEST(TrailTest, EmptyAndSingleStep) {
  const auto g = k4_fig1();
  EXPECT_TRUE(is_ordered_trail(g, Trail{}, OrderKind::Decreasing));
  EXPECT_TRUE(is_ordered_trail(g, Trail{}, OrderKind::Increasing));
  EXPECT_TRUE(is_ordered_trail(g, Trail::through({1, 4}), OrderKind::Decreasing));

  WeightedGraph sparse(3, WeightMode::Strict);
  sparse.add_edge(v(1), v(2), 1);
  EXPECT_FALSE(is_ordered_trail(sparse, Trail::through({2, 3}), OrderKind::Decreasing));
}

TEST(TrailTest, IncreasingTrailInK3) {
  EXPECT_TRUE(is_ordered_trail(k3_example(), Trail::through({3, 2, 1, 3}), OrderKind::Increasing));
}

TEST(TrailTest, RejectsMalformedTrails) {
  const auto g = k4_fig1();
  // broken chain
  EXPECT_FALSE(is_ordered_trail(g, Trail{{{v(3), v(2)}, {v(4), v(3)}}}, OrderKind::Decreasing));
  // repeated edge; weights not strictly ordered either
  EXPECT_FALSE(is_ordered_trail(g, Trail::through({1, 2, 1}), OrderKind::Decreasing));
  // step onto itself
  EXPECT_FALSE(is_ordered_trail(g, Trail{{{v(1), v(1)}}}, OrderKind::Decreasing));
  // weight order violated: 2 then 4
  EXPECT_FALSE(is_ordered_trail(g, Trail::through({3, 4, 2}), OrderKind::Decreasing));
}

TEST(TrailTest, OrderedWalk) {
  const auto g = k4_fig1();
  const auto t = Trail::through({3, 2, 4, 3});
  EXPECT_TRUE(is_ordered_walk(g, t, OrderKind::Decreasing, v(3), v(3)));
  EXPECT_FALSE(is_ordered_walk(g, t, OrderKind::Decreasing, v(3), v(4)));
  EXPECT_TRUE(is_ordered_walk(g, Trail{}, OrderKind::Increasing, v(1), v(4)));
  EXPECT_TRUE(is_ordered_walk(g, Trail{}, OrderKind::Decreasing, v(2), v(2)));
}

TEST(TrailTest, ReverseDual) {
  const auto t = Trail::through({3, 2, 4, 3});
  const auto r = reverse_dual(t);
  EXPECT_EQ(r, Trail::through({3, 4, 2, 3}));
  EXPECT_EQ(trail_weights(k4_fig1(), r), (std::vector<Weight>{2, 4, 5}));
  EXPECT_TRUE(is_ordered_trail(k4_fig1(), r, OrderKind::Increasing));
  EXPECT_EQ(reverse_dual(Trail{}), Trail{});
}

TEST(TrailTest, DropPrefix) {
  const auto t = Trail::through({3, 2, 4, 3});
  EXPECT_EQ(drop_prefix(t, 1), Trail::through({2, 4, 3}));
  EXPECT_EQ(drop_prefix(t, 0), t);
  EXPECT_EQ(drop_prefix(t, 3), Trail{});
  EXPECT_THROW(drop_prefix(t, 4), Error);
  EXPECT_THROW(take_prefix(t, 4), Error);
}

TEST(TrailTest, FigureNotation) {
  EXPECT_EQ(format_trail(Trail::through({3, 2, 4, 3})), "v3-v2-v4-v3");
  EXPECT_EQ(format_trail(Trail{}), "");
}

class TrailPropertyTest : public ::testing::Test {
 protected:
  Rng rng{987654321};
};

TEST_F(TrailPropertyTest, PredicatesAgreeOnRandomInputs) {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testing::random_small_graph(rng, 7);
    const auto kind = rng.below(2) == 0 ? OrderKind::Decreasing : OrderKind::Increasing;
    // mix genuinely ordered trails with arbitrary step sequences
    const Trail t = rng.below(2) == 0 ? testing::random_ordered_trail(g, kind, rng)
                                      : testing::random_step_sequence(g.n(), rng);
    if (t.empty()) {
      ASSERT_TRUE(is_ordered_trail(g, t, kind));
      continue;
    }
    const bool walk = is_ordered_walk(g, t, kind, t.steps.front().from, t.steps.back().to);
    ASSERT_EQ(walk, is_ordered_trail(g, t, kind)) << format_trail(t);
  }
}

TEST_F(TrailPropertyTest, DualityAndClosure) {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testing::random_small_graph(rng, 7);
    const auto t = rng.below(3) == 0 ? testing::random_step_sequence(g.n(), rng)
                                     : testing::random_ordered_trail(g, OrderKind::Decreasing, rng);
    const auto r = reverse_dual(t);
    ASSERT_EQ(r.length(), t.length());
    ASSERT_EQ(reverse_dual(r), t);
    ASSERT_EQ(is_ordered_trail(g, t, OrderKind::Decreasing), is_ordered_trail(g, r, OrderKind::Increasing));

    if (!is_ordered_trail(g, t, OrderKind::Decreasing)) continue;
    for (std::size_t k = 0; k <= t.length(); ++k) {
      ASSERT_TRUE(is_ordered_trail(g, drop_prefix(t, k), OrderKind::Decreasing));
      ASSERT_TRUE(is_ordered_trail(g, take_prefix(t, k), OrderKind::Decreasing));
      ASSERT_TRUE(is_ordered_trail(g, drop_prefix(r, k), OrderKind::Increasing));
    }
  }
}

}  // namespace
}  // namespace ordtrail
