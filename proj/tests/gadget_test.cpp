#include "listfold/gadget.hpp"

#include <set>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

namespace listfold {
namespace {

using ::testing::HasSubstr;

TEST(BuildH, MOneHasSixteenVerticesAndThreeLists) {
  const auto h = build_H(FoldParams::of(1));
  EXPECT_EQ(h.graph.order(), 16);
  EXPECT_EQ(h.e, 0);
  for (const char* r : {"x1", "x2", "x3", "w", "y1", "y5", "z1", "z5"}) {
    EXPECT_EQ(h.lists.list(h.graph.at_role(r)).size(), 3u) << r;
  }
}

TEST(BuildH, ExtraColorGivesFourLists) {
  const auto h = build_H(FoldParams::of(1), 1);
  EXPECT_EQ(h.graph, build_H(FoldParams::of(1)).graph);
  EXPECT_EQ(h.lists.list(h.graph.at_role("w")).size(), 4u);
}

TEST(BuildH, MTwoGivesSixLists) {
  const auto h = build_H(FoldParams::of(2));
  EXPECT_EQ(h.lists.list(h.graph.at_role("y3")).size(), 6u);
  EXPECT_EQ(h.lists.list(h.graph.at_role("u")).size(), 2u);
}

TEST(BuildHProperty, StructureHoldsForEveryM) {
  for (int m = 1; m <= 60; ++m) {
    const auto h = build_H(FoldParams::of(m));
    ASSERT_GE(girth(h.graph).value_or(0), 4);
    ASSERT_LE(h.graph.size(), 2 * h.graph.order() - 4);
  }
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(3, 1), 3);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(55, 18), BigInt("144079707346575"));
  EXPECT_EQ(binomial(4, 5), 0);
}

TEST(Subsets, RankRoundTrip) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto total = static_cast<std::uint64_t>(binomial(n, k));
      std::vector<int> prev;
      for (std::uint64_t r = 0; r < total; ++r) {
        const auto s = unrank_subset(n, k, r);
        ASSERT_EQ(static_cast<int>(s.size()), k);
        ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
        ASSERT_EQ(rank_subset(n, s), r);
        if (r > 0) ASSERT_LT(prev, s);
        prev = s;
      }
    }
  }
}

TEST(BuildG, MOneExplicitCounts) {
  const auto g = build_G(FoldParams::of(1), true);
  EXPECT_EQ(g.p, 3);
  EXPECT_EQ(g.copies, 9);
  EXPECT_EQ(g.vertex_count, 128);
  EXPECT_EQ(g.edge_count, 243);
  ASSERT_TRUE(g.is_explicit());
  EXPECT_EQ(g.graph->order(), 128);
  EXPECT_EQ(g.graph->size(), 243);
  EXPECT_EQ(g.graph->degree(*g.graph->find_role("u")), 9 * 3);
  EXPECT_GE(girth(*g.graph).value_or(0), 4);
}

TEST(BuildG, MOneCopyListsMatchThePairs) {
  const auto g = build_G(FoldParams::of(1), true);
  const auto& u = g.lists->universe();
  for (std::uint64_t k = 0; k < 9; ++k) {
    const auto pair = g.copy(k);
    EXPECT_EQ(pair.phi_u, std::vector<int>{static_cast<int>(k / 3)});
    EXPECT_EQ(pair.phi_v, std::vector<int>{static_cast<int>(k % 3)});
    const Vertex x1 = *g.graph->find_role("x1#" + std::to_string(k));
    const auto& l = g.lists->list(x1);
    EXPECT_EQ(l.size(), 3u);
    EXPECT_TRUE(std::binary_search(l.begin(), l.end(), u.parse("X:" + std::to_string(k / 3))));
    EXPECT_TRUE(std::binary_search(l.begin(), l.end(), u.parse("Y:" + std::to_string(k % 3))));
  }
  EXPECT_EQ(g.lists->list(*g.graph->find_role("u")).size(), 3u);
}

TEST(BuildG, MTwoIsVirtual) {
  const auto g = build_G(FoldParams::of(2), false);
  EXPECT_EQ(g.p, 15);
  EXPECT_EQ(g.copies, 225);
  EXPECT_EQ(g.vertex_count, 2 + 14 * 225);
  EXPECT_FALSE(g.is_explicit());
  EXPECT_EQ(g.copy(224).phi_u, (std::vector<int>{4, 5}));
  EXPECT_THROW(g.copy(225), GadgetError);
}

TEST(BuildG, ExplicitOverCapAdvisesVirtualMode) {
  EXPECT_THAT([] { build_G(FoldParams::of(2), true); }, ::testing::ThrowsMessage<GadgetError>(HasSubstr("virtual")));
}

TEST(BuildG, LargeMStaysVirtual) {
  const auto g = build_G(FoldParams::of(18), false);
  EXPECT_EQ(g.list_size, 55);
  EXPECT_EQ(g.p, binomial(55, 18));
  EXPECT_THROW(g.copy_count(), GadgetError);
  EXPECT_EQ(g.copy(5).phi_v.size(), 18u);
}

TEST(CopyLists, WrongSubsetSizeIsAnError) {
  const auto h = build_H(FoldParams::of(2));
  std::vector<int> one{0};
  std::vector<int> two{0, 1};
  std::vector<int> dup{1, 1};
  std::vector<int> out{0, 6};
  EXPECT_THROW(instantiate_copy_lists(h, one, two), GadgetError);
  EXPECT_THROW(instantiate_copy_lists(h, dup, two), GadgetError);
  EXPECT_THROW(instantiate_copy_lists(h, two, out), GadgetError);
}

TEST(CopyLists, MZeroIsRejected) { EXPECT_ANY_THROW(build_H(FoldParams::of(0))); }

// Invariant under any color bijection and independent of the relabeling
// code: the size of L(a) & L(b) for every vertex pair a <= b.
std::vector<int> canonical_form(const ListAssignment& l) {
  std::vector<int> form;
  const int n = l.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      std::vector<ColorId> inter;
      std::set_intersection(l.list(a).begin(), l.list(a).end(), l.list(b).begin(), l.list(b).end(),
                            std::back_inserter(inter));
      form.push_back(static_cast<int>(inter.size()));
    }
  }
  return form;
}

TEST(CopyLists, RepresentativeIsIsomorphicToPaperLists) {
  const auto h = build_H(FoldParams::of(1));
  std::vector<int> zero{0};
  const auto copy = instantiate_copy_lists(h, zero, zero);
  EXPECT_EQ(canonical_form(copy), canonical_form(h.lists));
}

TEST(CopyLists, AllNinePairsArePairwiseIsomorphic) {
  const auto h = build_H(FoldParams::of(1));
  const auto g = build_G(FoldParams::of(1), false);
  const auto ref = canonical_form(instantiate_copy_lists(h, g.copy(0).phi_u, g.copy(0).phi_v));
  for (std::uint64_t k = 0; k < 9; ++k) {
    const auto pair = g.copy(k);
    const auto lists = instantiate_copy_lists(h, pair.phi_u, pair.phi_v);
    EXPECT_EQ(canonical_form(lists), ref) << k;
    const auto rec = relabeling_for(pair, g.list_size);
    const auto check = check_relabeling(h, rec);
    EXPECT_TRUE(check) << check.reason;
    EXPECT_EQ(relabel(instantiate_copy_lists(h, representative_pair(1).phi_u, representative_pair(1).phi_v),
                      relabel_permutation(rec, 1, 0)),
              lists);
  }
}

TEST(Relabeling, TamperedRecordIsRejected) {
  const auto h = build_H(FoldParams::of(2));
  const auto g = build_G(FoldParams::of(2), false);
  auto rec = relabeling_for(g.copy(37), g.list_size);
  ASSERT_TRUE(check_relabeling(h, rec));
  std::swap(rec.x_perm[0], rec.x_perm[5]);
  EXPECT_FALSE(check_relabeling(h, rec));
  rec = relabeling_for(g.copy(37), g.list_size);
  rec.y_perm[0] = rec.y_perm[1];
  EXPECT_FALSE(check_relabeling(h, rec));
}

TEST(Lemma1, MOneTightUnsatLooseSat) {
  const auto r = verify_lemma1(FoldParams::of(1), Budget::seconds(60));
  EXPECT_EQ(r.tight.verdict, Verdict::kUnsat);
  EXPECT_EQ(r.loose.verdict, Verdict::kSat);
  EXPECT_EQ(r.tight_list_size, 3);
  EXPECT_EQ(r.loose_list_size, 4);
}

TEST(Theorem1, MOneExhaustiveBlocksAllNinePairs) {
  const auto c = verify_theorem1(FoldParams::of(1), Theorem1Mode::kExhaustive, Budget::seconds(60));
  EXPECT_EQ(c.verdict, Theorem1Verdict::kBlocked);
  ASSERT_EQ(c.pairs.size(), 9u);
  for (const auto& p : c.pairs) EXPECT_EQ(p.outcome.verdict, Verdict::kUnsat);
}

TEST(Theorem1, MOneRepresentativeAgrees) {
  const auto c = verify_theorem1(FoldParams::of(1), Theorem1Mode::kRepresentative, Budget::seconds(60));
  EXPECT_EQ(c.verdict, Theorem1Verdict::kBlocked);
  EXPECT_EQ(c.pairs.size(), 1u);
  EXPECT_EQ(c.relabeling.size(), 9u);
  EXPECT_TRUE(c.relabeling_complete);
}

TEST(Theorem1, ExhaustiveOverCapIsAnError) {
  EXPECT_THROW(verify_theorem1(FoldParams::of(2), Theorem1Mode::kExhaustive, Budget::seconds(1), 10), GadgetError);
}

TEST(Theorem1, NodeBudgetIsInconclusive) {
  SolveOptions plain;
  plain.orbit_symmetry = false;
  const auto c = verify_theorem1(FoldParams::of(2), Theorem1Mode::kRepresentative, Budget::nodes(10), 20, plain);
  EXPECT_EQ(c.verdict, Theorem1Verdict::kInconclusive);
  EXPECT_FALSE(c.relabeling_complete);
  EXPECT_EQ(c.relabeling.size(), 20u);
}

}  // namespace
}  // namespace listfold
