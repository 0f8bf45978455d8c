#include "listfold/fractional.hpp"

#include <random>

#include <gtest/gtest.h>

#include "listfold/gadget.hpp"
#include "test_support.hpp"

namespace listfold {
namespace {

using testing::cycle_graph;

TEST(ColorableAB, FiveCycle) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(colorable_ab(c5, 5, 2).verdict, Verdict::kSat);
  EXPECT_EQ(colorable_ab(c5, 4, 2).verdict, Verdict::kUnsat);
}

TEST(ColorableAB, GadgetIsThreeColorable) {
  const Graph h = gadget_graph();
  const auto out = colorable_ab(h, 3, 1);
  ASSERT_EQ(out.verdict, Verdict::kSat);
  EXPECT_TRUE(verify_coloring(h, testing::uniform_lists(h, 3), *out.witness));
  EXPECT_EQ(colorable_ab(h, 2, 1).verdict, Verdict::kUnsat);  // has 5-cycles
}

TEST(Independence, SmallGraphs) {
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(testing::star_graph(4)), 4);
  EXPECT_EQ(independence_number(Graph::from_edges(0, {})), 0);
}

TEST(Independence, GadgetMatchesSubsetEnumeration) {
  const Graph h = gadget_graph();
  EXPECT_EQ(independence_number(h), testing::alpha_by_enumeration(h));
}

TEST(Independence, RandomGraphsMatchSubsetEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng, 14, 1, 1);
    ASSERT_EQ(independence_number(inst.graph), testing::alpha_by_enumeration(inst.graph));
  }
}

TEST(Independence, OverCapIsAnError) {
  EXPECT_THROW(independence_number(testing::path_graph(41)), GraphError);
}

TEST(ChiF, FiveCycle) {
  const auto b = chi_f_bounds(cycle_graph(5), 2);
  EXPECT_EQ(b.lower, Rational(5, 2));
  ASSERT_TRUE(b.upper);
  EXPECT_EQ(*b.upper, Rational(5, 2));
  EXPECT_EQ(b.best_a, 5);
  EXPECT_EQ(b.best_b, 2);
  EXPECT_TRUE(verify_coloring(cycle_graph(5), testing::uniform_lists(cycle_graph(5), 5), *b.witness));
}

TEST(ChiF, SingleEdge) {
  const auto b = chi_f_bounds(Graph::from_edges(2, {{0, 1}}), 2);
  EXPECT_EQ(b.lower, Rational(2));
  EXPECT_EQ(b.upper, Rational(2));
  EXPECT_EQ(b.best_b, 1);  // ties go to the smaller b
}

TEST(ChiF, OddCyclesReachTwoPlusOneOverK) {
  for (int k = 1; k <= 3; ++k) {
    const auto b = chi_f_bounds(cycle_graph(2 * k + 1), k);
    EXPECT_EQ(b.upper, Rational(2 * k + 1, k)) << k;
    EXPECT_EQ(b.lower, Rational(2 * k + 1, k)) << k;
  }
}

TEST(ChiF, GadgetStaysUnderTheTriangleFreePlanarBound) {
  const Graph h = gadget_graph();
  const auto b = chi_f_bounds(h, 3, Budget::seconds(60));
  ASSERT_TRUE(b.upper);
  EXPECT_LE(b.lower, *b.upper);
  EXPECT_LT(*b.upper, Rational(3) + Rational(1, 1000));
  EXPECT_EQ(triangle_free_planar_bound(16), Rational(144, 49));
  EXPECT_LE(b.lower, triangle_free_planar_bound(16));
}

TEST(ChiF, SweepPointsAreRecorded) {
  const auto b = chi_f_bounds(cycle_graph(5), 2);
  EXPECT_FALSE(b.points.empty());
  const std::string csv = sweep_to_csv(b.points);
  EXPECT_EQ(csv.rfind("a,b,verdict,nodes,time_ms\n", 0), 0u);
}

TEST(ColorableABProperty, MonotoneInA) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = testing::random_instance(rng, 7, 1, 1);
    for (int b = 1; b <= 2; ++b) {
      bool seen_sat = false;
      for (int a = 1; a <= 3 * b + 3; ++a) {
        const bool sat = colorable_ab(inst.graph, a, b).verdict == Verdict::kSat;
        ASSERT_FALSE(seen_sat && !sat) << a << "," << b;
        seen_sat = seen_sat || sat;
      }
    }
  }
}

TEST(ColorableABProperty, ScalingByReplication) {
  // A witness at (a, b) replicated k times gives a witness at (ka, kb).
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), gadget_graph()}) {
    const auto bounds = chi_f_bounds(g, 2, Budget::seconds(30));
    ASSERT_TRUE(bounds.witness);
    const int a = *bounds.best_a;
    const int b = *bounds.best_b;
    for (int k = 1; k <= 3; ++k) {
      MultiColoring big{k * b, {}};
      for (const auto& s : bounds.witness->phi) {
        std::vector<ColorId> cs;
        for (int copy = 0; copy < k; ++copy) {
          for (ColorId c : s) cs.push_back(copy * a + c);
        }
        big.phi.push_back(make_color_set(cs));
      }
      EXPECT_TRUE(verify_coloring(g, testing::uniform_lists(g, k * a), big));
      EXPECT_EQ(colorable_ab(g, k * a, k * b).verdict, Verdict::kSat);
    }
  }
}

}  // namespace
}  // namespace listfold
