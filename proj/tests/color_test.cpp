#include "listfold/color.hpp"

#include <numeric>
#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "listfold/gadget.hpp"
#include "test_support.hpp"

namespace listfold {
namespace {

using ::testing::HasSubstr;

TEST(Universe, BlockSizesAtMOne) {
  auto u = ColorUniverse::build({{"A", 1}, {"B", 1}, {"C", 1}, {"D", 2}, {"E", 0}});
  EXPECT_EQ(u.size(), 5);
  EXPECT_EQ(u.block_count(), 5);
  EXPECT_TRUE(u.block_colors("E").empty());
  EXPECT_EQ(u.name(4), "D:1");
}

TEST(Universe, EmptySpecIsEmptyUniverse) { EXPECT_EQ(ColorUniverse::build({}).size(), 0); }

TEST(Universe, BlockSizesAtMTwo) {
  auto u = ColorUniverse::build({{"A", 2}, {"B", 2}, {"C", 2}, {"D", 4}, {"E", 0}});
  EXPECT_EQ(u.size(), 10);
}

TEST(Universe, DuplicateNameIsRejected) {
  EXPECT_THROW(ColorUniverse::build({{"A", 1}, {"A", 2}}), ColorError);
  EXPECT_THROW(ColorUniverse::build({{"A", -1}}), ColorError);
}

TEST(Universe, NamesParseBack) {
  auto u = ColorUniverse::build({{"A", 3}, {"E", 0}, {"D", 4}});
  for (ColorId c = 0; c < u.size(); ++c) EXPECT_EQ(u.parse(u.name(c)), c);
  EXPECT_EQ(u.color(3), (Color{2, 0}));
  EXPECT_THROW(u.parse("D:4"), ColorError);
  EXPECT_THROW(u.parse("Q:0"), ColorError);
  EXPECT_THROW(u.parse("A0"), ColorError);
}

TEST(FoldParams, EpsilonAtSmallAndBoundaryM) {
  EXPECT_EQ(epsilon_of(1), Rational(0));
  EXPECT_EQ(epsilon_of(17), Rational(0));
  EXPECT_EQ(epsilon_of(18), Rational(1, 18));
  EXPECT_EQ(epsilon_of(34), Rational(1, 34));
  EXPECT_LT(17 * epsilon_of(34), Rational(1));
  EXPECT_THROW(epsilon_of(0), ColorError);
}

TEST(FoldParams, ExactForAllMUpTo200) {
  for (int m = 1; m <= 200; ++m) {
    const FoldParams p = FoldParams::of(m);
    const int ceil17 = (m + 16) / 17;
    ASSERT_EQ(p.e_size, ceil17 - 1) << m;
    ASSERT_EQ(p.epsilon * m, Rational(p.e_size)) << m;
    ASSERT_LT(17 * p.epsilon, Rational(1)) << m;
  }
}

TEST(PaperLists, MOneTightSizes) {
  const auto lists = block_lists(FoldParams::of(1));
  const auto& u = lists.universe();
  EXPECT_EQ(lists.list(0), ColorSet{u.parse("A:0")});
  EXPECT_EQ(lists.list(1), ColorSet{u.parse("B:0")});
  for (int v = 2; v < 16; ++v) EXPECT_EQ(lists.list(v).size(), 3u) << kGadgetRoles[v];
}

TEST(PaperLists, MOneWithOneExtraColor) {
  const auto lists = block_lists(FoldParams::of(1), 1);
  for (int v = 2; v < 16; ++v) EXPECT_EQ(lists.list(v).size(), 4u) << kGadgetRoles[v];
}

TEST(PaperLists, MEighteenListSize) {
  const auto lists = block_lists(FoldParams::of(18));
  EXPECT_EQ(lists.list(2).size(), 55u);  // x1
  EXPECT_EQ(lists.list(0).size(), 18u);
}

TEST(PaperLists, BlockMembershipPerRole) {
  const auto lists = block_lists(FoldParams::of(2), 1);
  const auto& u = lists.universe();
  auto blocks_of = [&](int v) {
    std::string s;
    for (ColorId c : lists.list(v)) {
      const std::string& name = u.block(u.block_of(c)).name;
      if (s.empty() || s.back() != name[0]) s += name;
    }
    return s;
  };
  const char* expected[] = {"A",   "B",   "ABCE", "ABCE", "ABCE", "ABCE", "ADE", "CDE",
                            "ADE", "BDE", "CDE",  "BDE",  "CDE",  "BDE",  "CDE", "ADE"};
  for (int v = 0; v < 16; ++v) EXPECT_EQ(blocks_of(v), expected[v]) << kGadgetRoles[v];
}

TEST(PaperListsProperty, SizesFollowTheFormula) {
  for (int m = 1; m <= 40; ++m) {
    for (std::optional<int> e : {std::optional<int>{}, std::optional<int>{(m + 16) / 17}}) {
      const FoldParams p = FoldParams::of(m);
      const auto lists = block_lists(p, e);
      const int eff = e.value_or(p.e_size);
      ASSERT_EQ(lists.list(0).size(), static_cast<std::size_t>(m));
      ASSERT_EQ(lists.list(1).size(), static_cast<std::size_t>(m));
      for (int v = 2; v < 16; ++v) ASSERT_EQ(lists.list(v).size(), static_cast<std::size_t>(3 * m + eff));
    }
  }
}

TEST(VerifyColoring, SingleVertexTwoFold) {
  const Graph g = Graph::from_edges(1, {});
  auto u = ColorUniverse::build({{"c", 2}});
  ListAssignment l(u, {{0, 1}});
  EXPECT_TRUE(verify_coloring(g, l, {2, {{0, 1}}}));
}

TEST(VerifyColoring, SharedColorOnEdgeIsRejected) {
  const Graph g = Graph::from_edges(2, {{0, 1}}, {"u", "v"});
  auto u = ColorUniverse::build({{"c", 2}});
  ListAssignment l(u, {{0, 1}, {0, 1}});
  auto r = verify_coloring(g, l, {1, {{0}, {0}}});
  EXPECT_FALSE(r);
  EXPECT_THAT(r.reason, HasSubstr("edge u-v"));
}

TEST(VerifyColoring, ReportsSizeAndContainmentFailures) {
  const Graph g = Graph::from_edges(2, {}, {"p", "q"});
  auto u = ColorUniverse::build({{"c", 3}});
  ListAssignment l(u, {{0, 1}, {2}});
  EXPECT_THAT(verify_coloring(g, l, {1, {{0, 1}, {2}}}).reason, HasSubstr("p has 2 colors"));
  EXPECT_THAT(verify_coloring(g, l, {1, {{0}, {1}}}).reason, HasSubstr("c:1 at q is not in its list"));
  EXPECT_FALSE(verify_coloring(g, l, {1, {{0}}}));
}

TEST(VerifyColoring, PartialCoverageSkipsEmptySets) {
  const Graph g = Graph::from_edges(2, {{0, 1}});
  auto u = ColorUniverse::build({{"c", 2}});
  ListAssignment l(u, {{0, 1}, {0, 1}});
  EXPECT_FALSE(verify_coloring(g, l, {1, {{0}, {}}}));
  EXPECT_TRUE(verify_coloring(g, l, {1, {{0}, {}}}, Coverage::kPartial));
}

TEST(VerifyColoringProperty, PermutationEquivariant) {
  std::mt19937_64 rng(3);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = testing::random_instance(rng, 6, 4, 2);
    // Random (not necessarily valid) coloring drawn from the lists.
    MultiColoring phi{inst.b, {}};
    for (const auto& l : inst.lists.lists()) {
      std::vector<ColorId> pick = l;
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(std::min<std::size_t>(pick.size(), inst.b));
      phi.phi.push_back(make_color_set(pick));
    }
    std::vector<ColorId> perm(inst.lists.universe().size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const bool before = static_cast<bool>(verify_coloring(inst.graph, inst.lists, phi));
    const bool after = static_cast<bool>(verify_coloring(inst.graph, relabel(inst.lists, perm), relabel(phi, perm)));
    ASSERT_EQ(before, after);
    accepted += before ? 1 : 0;
  }
  EXPECT_GT(accepted, 0);
}

TEST(ListsJson, RoundTripKeyedByRole) {
  const Graph h = gadget_graph();
  const auto lists = block_lists(FoldParams::of(2), 1);
  const std::string text = lists_to_json(h, lists);
  EXPECT_THAT(text, HasSubstr("\"u\":[\"A:0\",\"A:1\"]"));
  EXPECT_EQ(lists_from_json(h, text), lists);
  EXPECT_EQ(lists_to_json(h, lists_from_json(h, text)), text);
}

TEST(ListsJson, MissingVertexIsAnError) {
  const Graph g = Graph::from_edges(2, {{0, 1}});
  EXPECT_THROW(lists_from_json(g, R"({"universe":[{"name":"K","size":2}],"lists":{"0":["K:0"]}})"), ColorError);
  EXPECT_THROW(lists_from_json(g, R"({"universe":[{"name":"K","size":2}],"lists":{"0":["K:5"],"1":[]}})"),
               ColorError);
}

TEST(ColoringJson, RoundTrip) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto u = ColorUniverse::build({{"K", 4}});
  MultiColoring phi{2, {{0, 1}, {2, 3}, {0, 1}}};
  EXPECT_EQ(coloring_from_json(g, u, coloring_to_json(g, u, phi)), phi);
}

}  // namespace
}  // namespace listfold
