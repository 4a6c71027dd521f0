#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "weyldl/chars.hpp"

namespace weyldl {
namespace {

using testing::context;
using IntRows = std::vector<std::vector<std::int64_t>>;

// Character of the regular representation counted directly: the number of
// group elements fixed by left multiplication.
ClassFunction regular_by_counting(const GroupHandle& g) {
  const auto& w = g->group.weyl();
  std::vector<Rational> v;
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    std::size_t fixed = 0;
    for (ElementId x : g->group.elements()) {
      if (w.multiply(g->representative(c), x) == x) ++fixed;
    }
    v.emplace_back(fixed);
  }
  return ClassFunction(g, std::move(v));
}

TEST(CharacterTable, A2) {
  const auto& ctx = context(TypeLabel::A, 2);
  EXPECT_EQ(ctx.table.values, (IntRows{{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}));
}

TEST(CharacterTable, A1) {
  EXPECT_EQ(context(TypeLabel::A, 1).table.values, (IntRows{{1, 1}, {1, -1}}));
}

TEST(CharacterTable, B2Degrees) {
  EXPECT_EQ(context(TypeLabel::B, 2).table.degrees, (std::vector<std::int64_t>{1, 1, 1, 1, 2}));
}

TEST(CharacterTable, IntegrityOnRoster) {
  for (auto [t, n] : supported_roster()) {
    const auto& ctx = context(t, n);
    EXPECT_TRUE(table_violations(ctx.table).empty()) << ctx.cartan.name();
    EXPECT_EQ(ctx.table.size(), ctx.group->num_classes());
    for (auto d : ctx.table.degrees) EXPECT_EQ(static_cast<std::int64_t>(ctx.weyl->order()) % d, 0);
    // Exact orthonormality through the ClassFunction inner product as well.
    for (std::size_t i = 0; i < ctx.table.size(); ++i) {
      for (std::size_t j = 0; j < ctx.table.size(); ++j) {
        EXPECT_EQ(inner_product(ctx.table.character(i), ctx.table.character(j)), i == j ? 1 : 0);
      }
    }
  }
}

TEST(CharacterTable, FamiliesOfIrreducibleCounts) {
  EXPECT_EQ(context(TypeLabel::F, 4).table.size(), 25u);
  EXPECT_EQ(context(TypeLabel::G, 2).table.size(), 6u);
  EXPECT_EQ(context(TypeLabel::D, 4).table.size(), 13u);
  EXPECT_EQ(context(TypeLabel::B, 4).table.size(), 20u);
  EXPECT_EQ(context(TypeLabel::A, 5).table.size(), 11u);
}

TEST(CharacterTable, IndependentOfSeed) {
  const auto& ctx = context(TypeLabel::B, 3);
  for (std::uint64_t seed : {1u, 17u, 12345u}) {
    EXPECT_EQ(character_table(ctx.group, TableOptions{seed}).values, ctx.table.values);
  }
}

TEST(CharacterTable, TypeAMatchesFrobeniusFormulaOracle) {
  for (int n = 1; n <= 5; ++n) {
    const auto& ctx = context(TypeLabel::A, n);
    const auto& g = *ctx.group;
    std::vector<Partition> cycle_types;
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
      cycle_types.push_back(cycle_type(testing::points_permutation(*ctx.weyl, g.representative(c))));
    }
    IntRows oracle;
    for (const auto& lambda : partitions_of(n + 1)) {
      std::vector<std::int64_t> row;
      for (const auto& mu : cycle_types) row.push_back(testing::frobenius_character(lambda, mu));
      oracle.push_back(std::move(row));
    }
    auto expected = oracle;
    std::sort(expected.begin(), expected.end());
    auto actual = ctx.table.values;
    std::sort(actual.begin(), actual.end());
    EXPECT_EQ(actual, expected) << "A" << n;

    // Labels attached by the library agree with the oracle row by row.
    ASSERT_TRUE(ctx.table.labels.has_value());
    const auto parts = partitions_of(n + 1);
    for (std::size_t i = 0; i < ctx.table.size(); ++i) {
      const auto& lambda = (*ctx.table.labels)[i];
      const auto k = std::find(parts.begin(), parts.end(), lambda) - parts.begin();
      EXPECT_EQ(ctx.table.values[i], oracle[k]) << partition_string(lambda);
    }
  }
}

TEST(CharacterTable, MurnaghanNakayamaSmallValues) {
  // chi^(2,1) on cycle types (1,1,1), (2,1), (3).
  EXPECT_EQ(murnaghan_nakayama({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(murnaghan_nakayama({2, 1}, {2, 1}), 0);
  EXPECT_EQ(murnaghan_nakayama({2, 1}, {3}), -1);
  EXPECT_EQ(murnaghan_nakayama({2, 2}, {2, 2}), 2);
  EXPECT_EQ(transpose({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(4).front(), (Partition{4}));
}

TEST(SpecialCharacters, SignTrivialReflection) {
  const auto& ctx = context(TypeLabel::A, 2);
  EXPECT_EQ(sign(ctx.group).integer_values(), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(reflection(ctx.group).integer_values(), (std::vector<std::int64_t>{2, 0, -1}));
  for (auto [t, n] : supported_roster()) {
    const auto& c = context(t, n);
    EXPECT_EQ(inner_product(trivial(c.group), trivial(c.group)), 1);
    EXPECT_EQ(reflection(c.group)[0], n);
    // The reflection representation of an irreducible Weyl group is irreducible.
    EXPECT_EQ(inner_product(reflection(c.group), reflection(c.group)), 1) << c.cartan.name();
  }
}

TEST(Decompose, Examples) {
  const auto& ctx = context(TypeLabel::A, 2);
  EXPECT_EQ(decompose(regular(ctx.group), ctx.table).coeffs, (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(decompose(trivial(ctx.group), ctx.table).coeffs, (std::vector<std::int64_t>{1, 0, 0}));
  auto half = trivial(ctx.group);
  half[1] = Rational(1, 2);
  EXPECT_THROW(decompose(half, ctx.table), NotVirtual);
  auto other = trivial(context(TypeLabel::A, 1).group);
  EXPECT_THROW(decompose(other, ctx.table), GroupMismatch);
}

TEST(Decompose, RegularCharacterCountsDegrees) {
  for (auto [t, n] : supported_roster()) {
    const auto& ctx = context(t, n);
    EXPECT_EQ(regular(ctx.group), regular_by_counting(ctx.group));
    EXPECT_EQ(decompose(regular(ctx.group), ctx.table).coeffs, ctx.table.degrees);
  }
}

TEST(Decompose, RoundTripOnRandomVirtualCharacters) {
  std::mt19937_64 rng(3);
  for (auto [t, n] : supported_roster()) {
    const auto& ctx = context(t, n);
    for (int trial = 0; trial < 5; ++trial) {
      VirtualCharacter v{ctx.group, {}};
      for (std::size_t i = 0; i < ctx.table.size(); ++i) v.coeffs.push_back(static_cast<std::int64_t>(rng() % 21) - 10);
      EXPECT_EQ(decompose(compose(v, ctx.table), ctx.table), v);
    }
  }
}

TEST(Tensor, Examples) {
  const auto& ctx = context(TypeLabel::A, 2);
  const auto sgn = decompose(sign(ctx.group), ctx.table);
  const auto triv = decompose(trivial(ctx.group), ctx.table);
  const auto refl = decompose(reflection(ctx.group), ctx.table);
  EXPECT_EQ(tensor(sgn, sgn, ctx.table), triv);
  EXPECT_EQ(tensor(sgn, refl, ctx.table), refl);
  for (std::size_t i = 0; i < ctx.table.size(); ++i) EXPECT_EQ(tensor(triv, ctx.table.unit(i), ctx.table), ctx.table.unit(i));
  // (2,0,-1)^2 = (4,0,1) = triv + sgn + refl
  EXPECT_EQ(tensor(refl, refl, ctx.table).coeffs, (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(ClassFunction, ArithmeticStaysInOneGroup) {
  const auto& a = context(TypeLabel::A, 2);
  const auto& b = context(TypeLabel::B, 2);
  EXPECT_THROW(trivial(a.group) + trivial(b.group), GroupMismatch);
  EXPECT_THROW(trivial(a.group) * trivial(b.group), GroupMismatch);
  EXPECT_THROW(inner_product(trivial(a.group), trivial(b.group)), GroupMismatch);
  EXPECT_THROW(ClassFunction(a.group, {1, 2}), GroupMismatch);
  EXPECT_EQ((trivial(a.group) * Rational(3) - trivial(a.group)).integer_values(), (std::vector<std::int64_t>{2, 2, 2}));
}

}  // namespace
}  // namespace weyldl
