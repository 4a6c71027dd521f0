#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "weyldl/grp.hpp"

namespace weyldl {
namespace {

using testing::brute_force_classes;
using testing::sorted;

GroupHandle whole(TypeLabel t, int n) {
  const auto c = build_cartan(t, n);
  return whole_group(enumerate_group(c), c.name());
}

TEST(Conjugacy, SmallExamples) {
  const auto a2 = whole(TypeLabel::A, 2);
  EXPECT_EQ(a2->classes.sizes, (std::vector<std::size_t>{1, 3, 2}));
  const auto b2 = whole(TypeLabel::B, 2);
  EXPECT_EQ(sorted(b2->classes.sizes), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  const auto a1 = whole(TypeLabel::A, 1);
  EXPECT_EQ(a1->classes.sizes, (std::vector<std::size_t>{1, 1}));
}

TEST(Conjugacy, MatchesBruteForceOrbitsOnRoster) {
  for (auto [t, n] : supported_roster()) {
    const auto g = whole(t, n);
    const auto& w = g->group.weyl();
    const auto oracle = brute_force_classes(w);
    ASSERT_EQ(oracle.size(), g->num_classes()) << g->name;
    std::size_t total = 0;
    for (std::size_t c = 0; c < g->num_classes(); ++c) {
      total += g->classes.sizes[c];
      const ElementId rep = g->representative(c);
      const auto& orbit = *std::find_if(oracle.begin(), oracle.end(), [&](const auto& s) { return s.count(rep); });
      EXPECT_EQ(orbit.size(), g->classes.sizes[c]);
      EXPECT_EQ(*orbit.begin(), rep) << "representative must be the canonical minimum";
      for (ElementId e : orbit) EXPECT_EQ(g->class_of_element(e), c);
      // Weyl groups are real: every class is its own inverse class.
      EXPECT_EQ(g->classes.inverse_class[c], c);
    }
    EXPECT_EQ(total, w.order());
  }
}

TEST(Parabolic, Examples) {
  const auto a2 = whole(TypeLabel::A, 2);
  const auto empty = parabolic(a2, {});
  EXPECT_EQ(empty.sub->order(), 1u);
  EXPECT_EQ(empty.fusion, (std::vector<std::size_t>{0}));

  const auto p1 = parabolic(a2, {0});
  EXPECT_EQ(p1.sub->order(), 2u);
  ASSERT_EQ(p1.fusion.size(), 2u);
  EXPECT_EQ(p1.fusion[0], 0u);
  EXPECT_EQ(a2->classes.sizes[p1.fusion[1]], 3u);

  const auto full = parabolic(a2, {0, 1});
  EXPECT_EQ(full.sub->order(), 6u);
  EXPECT_EQ(full.fusion, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Parabolic, FusionIsWellDefinedAndOrdersDivide) {
  for (auto [t, n] : supported_roster()) {
    if (n > 4) continue;
    const auto g = whole(t, n);
    for (const auto& p : all_parabolics(g)) {
      EXPECT_EQ(g->order() % p.sub->order(), 0u);
      for (std::size_t local = 0; local < p.sub->order(); ++local) {
        const auto d = p.sub->classes.class_of[local];
        EXPECT_EQ(g->class_of_element(p.sub->group.element(local)), p.fusion[d]);
      }
      if (static_cast<int>(p.subset.size()) == n) {
        EXPECT_EQ(p.sub->order(), g->order());
        EXPECT_EQ(sorted(p.fusion), p.fusion);
        EXPECT_EQ(std::set<std::size_t>(p.fusion.begin(), p.fusion.end()).size(), g->num_classes());
      }
    }
  }
}

TEST(DoubleCosets, Examples) {
  const auto a2 = whole(TypeLabel::A, 2);
  const auto p1 = parabolic(a2, {0});
  const auto p2 = parabolic(a2, {1});
  const auto same = double_cosets(p1, p1);
  ASSERT_EQ(same.size(), 2u);
  EXPECT_EQ(same[0].representative, 0u);
  EXPECT_EQ(same[1].intersection->order(), 1u);
  EXPECT_EQ(double_cosets(p1, p2).size(), 2u);

  const auto empty = parabolic(a2, {});
  EXPECT_EQ(double_cosets(empty, p2).size(), a2->order() / p2.sub->order());
}

TEST(DoubleCosets, CountingIdentityAndMinimality) {
  for (auto [t, n] : supported_roster()) {
    if (n > 4) continue;
    const auto g = whole(t, n);
    const auto& w = g->group.weyl();
    const auto ps = all_parabolics(g);
    for (const auto& pi : ps) {
      for (const auto& pj : ps) {
        std::size_t total = 0;
        for (const auto& dc : double_cosets(pi, pj)) {
          ASSERT_EQ(pj.sub->order() * pi.sub->order() % dc.intersection->order(), 0u);
          const std::size_t size = pj.sub->order() * pi.sub->order() / dc.intersection->order();
          EXPECT_EQ(size, dc.size);
          total += size;
          // The representative is the smallest element of its double coset.
          if (n > 3) continue;
          for (ElementId j : pj.sub->group.elements()) {
            for (ElementId i : pi.sub->group.elements()) ASSERT_LE(dc.representative, w.multiply(w.multiply(j, dc.representative), i));
          }
        }
        EXPECT_EQ(total, g->order()) << g->name << " I=" << subset_string(pi.subset) << " J=" << subset_string(pj.subset);
      }
    }
  }
}

TEST(DoubleCosets, MismatchedAmbientsAreRejected) {
  const auto a = parabolic(whole(TypeLabel::A, 2), {0});
  const auto b = parabolic(whole(TypeLabel::A, 2), {0});
  EXPECT_THROW(double_cosets(a, b), GroupMismatch);
}

}  // namespace
}  // namespace weyldl
