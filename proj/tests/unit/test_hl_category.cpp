#include <gtest/gtest.h>

#include "hldecomp/errors.hpp"
#include "hldecomp/hl_category.hpp"
#include "test_support.hpp"

using namespace hldecomp;

namespace {

bool has_kind(const std::vector<ValidationIssue>& issues, ValidationIssue::Kind kind) {
  for (const auto& i : issues)
    if (i.kind == kind) return true;
  return false;
}

}  // namespace

TEST(HeightFunction, RejectsLargeSteps) {
  EXPECT_NO_THROW(HeightFunction({0, 1, 1, 0}));
  EXPECT_THROW(HeightFunction({0, 2}), InputError);
}

TEST(MarkedVertices, SinksAndSources) {
  const HeightFunction kappa({0, 1, 2, 1, 0, 1});
  const auto m = marked_vertices(kappa, {1, 6});
  EXPECT_EQ(m.sinks, (std::vector<int>{1, 5}));
  EXPECT_EQ(m.sources, (std::vector<int>{3, 6}));
}

TEST(MarkedVertices, SingleNodeIsSink) {
  const HeightFunction kappa({0, 1, 2});
  const auto m = marked_vertices(kappa, {2, 2});
  EXPECT_EQ(m.sinks, (std::vector<int>{2}));
  EXPECT_TRUE(m.sources.empty());
}

TEST(MarkedVertices, FlatEdgeRejectedOnlyInsideJ) {
  const HeightFunction kappa({0, 0, 1});
  EXPECT_THROW(marked_vertices(kappa, {1, 3}), FlatEdgeError);
  EXPECT_NO_THROW(marked_vertices(kappa, {2, 3}));
}

TEST(PiFromInterval, FactorsAtMarkedVertices) {
  const HeightFunction kappa({0, 1, 2, 1});
  const auto word = pi_from_interval(kappa, {1, 4});
  EXPECT_EQ(word.to_string(), "1:0,3:4,4:1");
  EXPECT_TRUE(validate_p1(word).empty());
}

TEST(ValidateP1, Spacing) {
  const auto issues = validate_p1(DrinfeldWord(2, {{1, 0}, {2, 1}}));
  EXPECT_TRUE(has_kind(issues, ValidationIssue::Kind::Spacing));
  EXPECT_TRUE(validate_p1(DrinfeldWord(2, {{1, 0}, {2, 3}})).empty());
  EXPECT_TRUE(validate_p1(DrinfeldWord(2, {{1, 0}, {2, -3}})).empty());
}

TEST(ValidateP1, AlternationAndOrder) {
  EXPECT_TRUE(has_kind(validate_p1(DrinfeldWord(3, {{1, 0}, {2, 3}, {3, 6}})),
                       ValidationIssue::Kind::Alternation));
  EXPECT_TRUE(validate_p1(DrinfeldWord(3, {{1, 0}, {2, 3}, {3, 0}})).empty());
  EXPECT_TRUE(has_kind(validate_p1(DrinfeldWord(3, {{2, 0}, {1, 3}})),
                       ValidationIssue::Kind::NotStrictlyIncreasing));
  EXPECT_TRUE(has_kind(validate_p1(DrinfeldWord(3, {{4, 0}})),
                       ValidationIssue::Kind::NodeOutOfRange));
  EXPECT_THROW(require_valid(DrinfeldWord(2, {{1, 0}, {2, 1}})), InvalidWordError);
}

TEST(PiToHeightInterval, RoundTripOnGrid) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& word : reference::valid_words(n, 3, {-2, 0, 1})) {
      const auto hi = pi_to_height_interval(word);
      EXPECT_EQ(pi_from_interval(hi.kappa, hi.interval), word) << word.to_string();
    }
}

TEST(PiToHeightInterval, RejectsInvalidAndEmpty) {
  EXPECT_THROW(pi_to_height_interval(DrinfeldWord(2, {{1, 0}, {2, 1}})), InvalidWordError);
  EXPECT_THROW(pi_to_height_interval(DrinfeldWord(2, {})), InvalidWordError);
}

TEST(HeightFunction, EveryIntervalYieldsAValidWord) {
  // All height functions on 4 nodes starting at 0 with no flat edge.
  std::vector<std::int64_t> v(4, 0);
  for (int mask = 0; mask < 8; ++mask) {
    for (int i = 1; i < 4; ++i) v[i] = v[i - 1] + ((mask >> (i - 1)) & 1 ? 1 : -1);
    const HeightFunction kappa(v);
    for (int lo = 1; lo <= 4; ++lo)
      for (int hi = lo; hi <= 4; ++hi)
        EXPECT_TRUE(validate_p1(pi_from_interval(kappa, {lo, hi})).empty());
  }
}

TEST(WeightOf, SumsFundamentalWeights) {
  const DrinfeldWord w(8, {{2, 0}, {3, 3}, {4, 0}, {5, 3}, {7, -1}});
  EXPECT_EQ(weight_of(w), (Weight{0, 1, 1, 1, 1, 0, 1, 0}));
  EXPECT_EQ(consecutive_pairs(w),
            (std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}, {5, 7}}));
}

TEST(Xi, FromWeightIsCeilingHalf) {
  const auto xi = xi_from_weight(Weight{1, 0, 1});
  EXPECT_EQ(xi.at(1, 1), 1);
  EXPECT_EQ(xi.at(2, 2), 0);
  EXPECT_EQ(xi.at(1, 3), 1);
  EXPECT_EQ(xi.at(1, 2), 1);
  EXPECT_TRUE(XiTuple::is_normalized(xi.values(), 3));
}

TEST(Xi, NormalizationTakesMinimumOverSuperintervals) {
  RawXi raw{{{1, 1}, 5}, {{2, 2}, 1}, {{1, 2}, 2}};
  EXPECT_FALSE(XiTuple::is_normalized(raw, 2));
  const auto xi = normalize_xi(raw, 2);
  EXPECT_EQ(xi.at(1, 1), 2);
  EXPECT_EQ(xi.at(2, 2), 1);
  EXPECT_EQ(xi.at(1, 2), 2);
  EXPECT_EQ(xi.to_string(), "1-1:2,2-2:1,1-2:2");
}

TEST(Xi, MissingRootRejected) {
  RawXi raw{{{1, 1}, 5}, {{2, 2}, 1}};
  EXPECT_THROW(normalize_xi(raw, 2), InputError);
}
