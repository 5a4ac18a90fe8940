#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "rrb/rrb.hpp"
#include "support/oracles.hpp"

namespace rrb {
namespace {

using testing::small_groups;

ErrorKind kind_of(const std::function<void()>& f, std::vector<int>* witness = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalError;
}

TEST(ValidateGroup, CyclicFourTable) {
  const FiniteGroup g = validate_group({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g, cyclic_group(4));
}

TEST(ValidateGroup, MissingInverseNamesElement) {
  std::vector<int> w;
  EXPECT_EQ(kind_of([] { validate_group({{0, 1}, {1, 1}}); }, &w), ErrorKind::NoInverse);
  EXPECT_EQ(w, std::vector<int>{1});
}

TEST(ValidateGroup, RejectsBrokenTables) {
  EXPECT_EQ(kind_of([] { validate_group({{0, 1}, {1, 2}}); }), ErrorKind::NotClosed);
  EXPECT_EQ(kind_of([] { validate_group({{1, 0}, {0, 1}}); }), ErrorKind::NoIdentityAtZero);
  EXPECT_EQ(kind_of([] { validate_group({{0, 1, 2}, {1, 0}, {2, 1, 0}}); }),
            ErrorKind::LengthMismatch);
  // A Latin square with identity 0 that is not associative.
  const Table loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                   {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(kind_of([&] { validate_group(loop); }), ErrorKind::NotAssociative);
}

TEST(ValidateGroup, SymmetricThreeFromComposedPermutations) {
  std::vector<IndexMap> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Table t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const IndexMap p = compose_maps(perms[i], perms[j]);
      t[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  const FiniteGroup g = validate_group(t);
  EXPECT_EQ(g.order(), 6);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(g, symmetric_group(3));
}

TEST(Homomorphism, ExamplesOnCyclicGroups) {
  const FiniteGroup z4 = cyclic_group(4), z2 = cyclic_group(2);
  EXPECT_TRUE(is_homomorphism(identity_map(4), z4, z4));
  EXPECT_TRUE(is_homomorphism({0, 0, 0, 0}, z4, z2));
  EXPECT_FALSE(is_homomorphism({0, 1, 0, 1}, z4, z4));
  EXPECT_TRUE(is_homomorphism({0, 1, 0, 1}, z4, z2));
  EXPECT_EQ(kind_of([&] { is_homomorphism({0, 1}, z4, z2); }), ErrorKind::LengthMismatch);
}

TEST(Homomorphism, MatchesPairwiseOracle) {
  const FiniteGroup z4 = cyclic_group(4);
  for (const IndexMap& map : testing::all_normalized_maps(4, 4)) {
    bool oracle = true;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) oracle = oracle && map[(x + y) % 4] == (map[x] + map[y]) % 4;
    EXPECT_EQ(is_homomorphism(map, z4, z4), oracle);
  }
}

TEST(Automorphisms, SmallCounts) {
  EXPECT_EQ(automorphism_group(cyclic_group(2)).size(), 1u);
  const auto z4 = automorphism_group(cyclic_group(4));
  ASSERT_EQ(z4.size(), 2u);
  EXPECT_EQ(z4[0].image, identity_map(4));
  EXPECT_EQ(z4[1].image, (IndexMap{0, 3, 2, 1}));
  EXPECT_EQ(automorphism_group(symmetric_group(3)).size(), 6u);
}

TEST(Automorphisms, KleinMatchesBijectionSearch) {
  const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2)).group;
  std::size_t oracle = 0;
  IndexMap p{0, 1, 2, 3};
  do {
    oracle += is_homomorphism(p, v4, v4);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  EXPECT_EQ(oracle, 6u);
  EXPECT_EQ(automorphism_group(v4).size(), oracle);
}

TEST(Automorphisms, OrderCap) {
  EXPECT_EQ(kind_of([] { automorphism_group(cyclic_group(10), 8); }), ErrorKind::OrderTooLarge);
}

TEST(Automorphisms, GroupPropertiesOnSmallGroups) {
  for (const FiniteGroup& g : small_groups()) {
    const auto auts = automorphism_group(g);
    std::set<IndexMap> images;
    for (const auto& a : auts) images.insert(a.image);
    ASSERT_TRUE(images.count(identity_map(g.order()))) << g.name();
    for (const auto& a : auts) {
      EXPECT_TRUE(images.count(inverse(a).image));
      for (const auto& b : auts) EXPECT_TRUE(images.count(compose(a, b).image));
    }
  }
}

TEST(Subgroups, ClosureAndNormality) {
  const FiniteGroup z4 = cyclic_group(4), s3 = symmetric_group(3);
  EXPECT_EQ(subgroup_closure(s3, {0}), std::vector<int>{0});
  EXPECT_EQ(subgroup_closure(z4, {2}), (std::vector<int>{0, 2}));
  EXPECT_TRUE(is_normal(z4, {0, 2}));
  const auto t = subgroup_closure(s3, {1});
  EXPECT_EQ(t.size(), 2u);
  EXPECT_FALSE(is_normal(s3, t));
  // conjugating the transposition by a 3-cycle leaves the subgroup
  const int c = 3;
  EXPECT_FALSE(std::binary_search(t.begin(), t.end(), s3.mul(s3.mul(c, 1), s3.inv(c))));
  EXPECT_TRUE(is_normal(s3, subgroup_closure(s3, {3})));
}

TEST(Quotients, Examples) {
  const FiniteGroup z4 = cyclic_group(4);
  const QuotientGroup q = quotient_group(z4, {0, 2});
  EXPECT_EQ(q.group.order(), 2);
  EXPECT_EQ(q.section, (IndexMap{0, 1}));

  const QuotientGroup same = quotient_group(z4, {0});
  EXPECT_EQ(same.group, z4);
  EXPECT_EQ(same.projection.image, identity_map(4));

  const FiniteGroup s3 = symmetric_group(3);
  const QuotientGroup sign = quotient_group(s3, subgroup_closure(s3, {3}));
  EXPECT_TRUE(find_isomorphism(sign.group, cyclic_group(2)).has_value());

  std::vector<int> w;
  EXPECT_EQ(kind_of([&] { quotient_group(s3, {0, 1}); }), ErrorKind::NotNormal);
}

TEST(Quotients, SectionAndProjectionLaws) {
  for (const FiniteGroup& g : small_groups())
    for (int x = 0; x < g.order(); ++x) {
      const auto n = subgroup_closure(g, {x});
      if (!is_normal(g, n)) continue;
      const QuotientGroup q = quotient_group(g, n);
      EXPECT_TRUE(q.projection.is_surjective());
      EXPECT_EQ(q.section[0], 0);
      for (int c = 0; c < q.group.order(); ++c) EXPECT_EQ(q.projection(q.section[c]), c);
      EXPECT_EQ(q.group.order() * static_cast<int>(n.size()), g.order());
    }
}

TEST(Products, Examples) {
  const ProductGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(v4.group.order(), 4);
  for (int x = 0; x < 4; ++x) EXPECT_EQ(v4.group.mul(x, x), 0);

  const FiniteGroup s3 = symmetric_group(3);
  EXPECT_TRUE(find_isomorphism(direct_product(s3, trivial_group()).group, s3).has_value());

  const FiniteGroup z2z3 = direct_product(cyclic_group(2), cyclic_group(3)).group;
  EXPECT_TRUE(find_isomorphism(z2z3, cyclic_group(6)).has_value());
  EXPECT_FALSE(find_isomorphism(s3, cyclic_group(6)).has_value());
}

TEST(Products, InjectionsAndProjections) {
  const ProductGroup p = direct_product(symmetric_group(3), cyclic_group(2));
  for (int x = 0; x < 6; ++x) EXPECT_EQ(p.proj1(p.inj1(x)), x);
  for (int y = 0; y < 2; ++y) EXPECT_EQ(p.proj2(p.inj2(y)), y);
}

TEST(SmallGroups, LatinSquareProperty) {
  for (const FiniteGroup& g : small_groups()) {
    const Table t = g.table();
    for (int i = 0; i < g.order(); ++i) {
      std::set<int> row(t[i].begin(), t[i].end()), col;
      for (int j = 0; j < g.order(); ++j) col.insert(t[j][i]);
      EXPECT_EQ(static_cast<int>(row.size()), g.order());
      EXPECT_EQ(static_cast<int>(col.size()), g.order());
    }
  }
}

TEST(SmallGroups, QuaternionHasOneInvolution) {
  const FiniteGroup q8 = small_groups().back();
  ASSERT_EQ(q8.order(), 8);
  EXPECT_FALSE(q8.is_abelian());
  int involutions = 0;
  for (int x = 1; x < 8; ++x) involutions += q8.element_order(x) == 2;
  EXPECT_EQ(involutions, 1);
  EXPECT_EQ(group_center(q8).size(), 2u);
}

TEST(SubgroupEmbeddings, RenumbersInOrder) {
  const FiniteGroup s3 = symmetric_group(3);
  const SubgroupEmbedding a3 = subgroup_as_group(s3, {0, 3, 4});
  EXPECT_EQ(a3.group.order(), 3);
  EXPECT_EQ(a3.embedding.image, (IndexMap{0, 3, 4}));
  EXPECT_TRUE(a3.embedding.is_injective());
}

}  // namespace
}  // namespace rrb
