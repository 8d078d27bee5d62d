#include "softgame/softset.hpp"

#include <gtest/gtest.h>

#include "softgame/error.hpp"
#include "softgame/generator.hpp"
#include "softgame/io.hpp"
#include "test_support.hpp"

namespace softgame {
namespace {

using testing::U;

// Cars example: U = {u1..u4}, E = {x1..x4}.
class CarsExample : public ::testing::Test {
 protected:
  UniversePtr u = Universe::numbered(4);
  std::vector<std::string> params{"x1", "x2", "x3", "x4"};
  SoftSet s{u, params, {U(u, {1, 2}), U(u, {1, 2, 4}), U(u, {}), U(u, {1, 2, 3, 4})}};
  SoftSet t{u, params, {U(u, {1, 2}), U(u, {1, 2, 3}), U(u, {1, 2}), U(u, {1})}};
};

TEST(UniverseTest, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Universe({}), InvalidGame);
  EXPECT_THROW(Universe({"a", "b", "a"}), InvalidGame);
  EXPECT_THROW(Universe({"a", ""}), InvalidGame);
}

TEST(UniverseTest, NameIndexBijection) {
  auto u = Universe::make({"oil", "salt", "honey"});
  for (std::size_t i = 0; i < u->size(); ++i) EXPECT_EQ(u->index_of(u->name(i)), i);
  EXPECT_FALSE(u->find("jam").has_value());
  EXPECT_THROW(u->index_of("jam"), OutOfRange);
}

TEST(SubsetTest, EnumeratesInIndexOrder) {
  auto u = Universe::numbered(10);
  Subset s(u, {7, 0, 3});
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{0, 3, 7}));
  EXPECT_EQ(s.to_string(), "{u1,u4,u8}");
  EXPECT_EQ(Subset(u).to_string(), "{}");
  EXPECT_THROW(Subset(u, {10}), OutOfRange);
}

TEST_F(CarsExample, SubsetUnion) {
  EXPECT_EQ(subset_union(U(u, {1, 2}), U(u, {1, 2, 3})), U(u, {1, 2, 3}));
  auto a = U(u, {2, 4});
  EXPECT_EQ(subset_union(a, Subset(u)), a);
  EXPECT_TRUE(subset_union(a, subset_complement(a)).is_full());
}

TEST_F(CarsExample, SubsetIntersect) {
  EXPECT_EQ(subset_intersect(U(u, {1, 2, 4}), U(u, {1, 2, 3})), U(u, {1, 2}));
  auto a = U(u, {2, 4});
  EXPECT_EQ(subset_intersect(a, Subset::full(u)), a);
  EXPECT_TRUE(subset_intersect(a, Subset(u)).is_empty());
}

TEST_F(CarsExample, SubsetComplementAndDifference) {
  EXPECT_TRUE(subset_complement(Subset(u)).is_full());
  EXPECT_TRUE(subset_complement(Subset::full(u)).is_empty());
  EXPECT_EQ(subset_complement(U(u, {1, 2})), U(u, {3, 4}));

  auto a = U(u, {1, 3});
  EXPECT_EQ(subset_difference(a, Subset(u)), a);
  EXPECT_TRUE(subset_difference(a, a).is_empty());
  EXPECT_EQ(subset_difference(U(u, {1, 2, 4}), U(u, {1, 2, 3})), U(u, {4}));
}

TEST_F(CarsExample, IsSubset) {
  EXPECT_TRUE(is_subset(Subset(u), U(u, {3})));
  EXPECT_TRUE(is_subset(U(u, {1, 2}), U(u, {1, 2, 4})));
  EXPECT_FALSE(is_subset(U(u, {1, 2, 4}), U(u, {1, 2, 3})));
}

TEST_F(CarsExample, UniverseMismatchIsAnError) {
  auto other = Universe::numbered(5);
  EXPECT_THROW(subset_union(U(u, {1}), U(other, {1})), IncompatibleOperands);
  EXPECT_THROW(subset_intersect(U(u, {1}), U(other, {1})), IncompatibleOperands);
  EXPECT_THROW(subset_difference(U(u, {1}), U(other, {1})), IncompatibleOperands);
  EXPECT_THROW(is_subset(U(u, {1}), U(other, {1})), IncompatibleOperands);
  // Structurally equal universes are interchangeable.
  EXPECT_EQ(subset_union(U(u, {1}), U(Universe::numbered(4), {2})), U(u, {1, 2}));
}

TEST_F(CarsExample, SoftSetUnion) {
  SoftSet expected{u, params, {U(u, {1, 2}), U(u, {1, 2, 3, 4}), U(u, {1, 2}), Subset::full(u)}};
  EXPECT_EQ(softset_union(s, t), expected);
  EXPECT_EQ(softset_union(s, SoftSet::empty(u, params)), s);
  EXPECT_EQ(softset_union(s, s), s);
}

TEST_F(CarsExample, SoftSetIntersect) {
  SoftSet expected{u, params, {U(u, {1, 2}), U(u, {1, 2}), U(u, {}), U(u, {1})}};
  auto st = softset_intersect(s, t);
  EXPECT_EQ(st, expected);
  EXPECT_TRUE(st.approx("x3").is_empty());
  EXPECT_EQ(softset_intersect(s, SoftSet::empty(u, params)), SoftSet::empty(u, params));
  EXPECT_EQ(softset_intersect(s, s), s);
}

TEST_F(CarsExample, SoftSetComplement) {
  EXPECT_EQ(softset_complement(SoftSet::empty(u, params)), SoftSet::full(u, params));
  EXPECT_EQ(softset_complement(softset_complement(s)), s);
  EXPECT_TRUE(softset_complement(s).approx("x4").is_empty());
  // The empty x4 value is dropped from the document.
  auto doc = serialize_soft_set(softset_complement(s));
  EXPECT_EQ(doc.find("\"x4\": ["), std::string::npos);
  EXPECT_NE(doc.find("\"x3\": ["), std::string::npos);
}

TEST_F(CarsExample, SoftSubset) {
  EXPECT_TRUE(is_soft_subset(SoftSet::empty(u, params), s));
  EXPECT_TRUE(is_soft_subset(s, s));
  EXPECT_FALSE(is_soft_subset(s, t));
}

TEST_F(CarsExample, ParameterMismatchIsAnError) {
  SoftSet r{u, {"x1", "x2", "x3"}};
  EXPECT_THROW(softset_union(s, r), IncompatibleOperands);
  EXPECT_THROW(softset_intersect(s, r), IncompatibleOperands);
  EXPECT_THROW(is_soft_subset(s, r), IncompatibleOperands);
}

TEST_F(CarsExample, SerializedFormOmitsEmptyValues) {
  auto text = serialize_soft_set(s);
  EXPECT_EQ(text.find("\"x3\": ["), std::string::npos);
  auto back = parse_soft_set(text);
  EXPECT_EQ(back, s);
  EXPECT_TRUE(back.approx("x3").is_empty());
}

// Lattice and De Morgan laws over seeded random soft sets.
class SoftSetLaws : public ::testing::Test {
 protected:
  static SoftSet random_soft_set(SplitMix64& rng, const UniversePtr& u, const std::vector<std::string>& params) {
    std::vector<Subset> values;
    for (std::size_t i = 0; i < params.size(); ++i) values.push_back(random_subset(rng, u, {1, 2}));
    return SoftSet(u, params, std::move(values));
  }
};

TEST_F(SoftSetLaws, HoldOnThousandRandomTriples) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SplitMix64 rng(seed);
    auto u = Universe::numbered(1 + seed % 16);
    std::vector<std::string> params = testing::labels("e", 1 + seed % 5);
    auto a = random_soft_set(rng, u, params);
    auto b = random_soft_set(rng, u, params);
    auto c = random_soft_set(rng, u, params);
    SCOPED_TRACE(seed);

    EXPECT_EQ(softset_complement(softset_complement(a)), a);
    EXPECT_EQ(softset_complement(softset_union(a, b)), softset_intersect(softset_complement(a), softset_complement(b)));
    EXPECT_EQ(softset_complement(softset_intersect(a, b)), softset_union(softset_complement(a), softset_complement(b)));

    EXPECT_EQ(softset_union(a, b), softset_union(b, a));
    EXPECT_EQ(softset_intersect(a, b), softset_intersect(b, a));
    EXPECT_EQ(softset_union(softset_union(a, b), c), softset_union(a, softset_union(b, c)));
    EXPECT_EQ(softset_intersect(softset_intersect(a, b), c), softset_intersect(a, softset_intersect(b, c)));
    EXPECT_EQ(softset_union(a, a), a);
    EXPECT_EQ(softset_intersect(a, a), a);
    EXPECT_EQ(softset_union(a, softset_intersect(a, b)), a);  // absorption

    EXPECT_TRUE(is_soft_subset(a, softset_union(a, b)));
    EXPECT_TRUE(is_soft_subset(softset_intersect(a, b), a));
    EXPECT_EQ(softset_difference(a, b), softset_intersect(a, softset_complement(b)));

    EXPECT_EQ(parse_soft_set(serialize_soft_set(a)), a);
  }
}

}  // namespace
}  // namespace softgame
