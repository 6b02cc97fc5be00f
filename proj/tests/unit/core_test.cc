/*
 * Copyright 2026 The EAMEX Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "eamex/core/error.h"
#include "eamex/core/matrix.h"
#include "eamex/core/normalize.h"
#include "eamex/core/partition.h"
#include "eamex/core/rng.h"
#include "eamex/core/types.h"
#include "support/synthetic.h"

namespace eamex {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

Dataset TinyRegression(std::vector<double> target) {
  Matrix x(target.size(), 1);
  for (std::size_t i = 0; i < target.size(); ++i) x(i, 0) = static_cast<double>(i);
  return Dataset(x, {"a"}, std::move(target), Task::kRegression);
}

TEST(MatrixTest, RowsColumnsAndSelection) {
  Matrix m = Matrix::FromRows({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_THAT(m.Column(1), ElementsAre(2, 4, 6));
  const std::vector<std::size_t> pick = {2, 0};
  EXPECT_EQ(m.SelectRows(pick), Matrix::FromRows({{5, 6}, {1, 2}}));
  m.SetColumn(0, std::vector<double>{7, 8, 9});
  EXPECT_EQ(m(2, 0), 9);
  EXPECT_THROW(Matrix::FromRows({{1, 2}, {3}}), ValidationError);
}

TEST(RngTest, MatchesPcg32ReferenceStream) {
  // Published output of pcg32 seeded with (42, 54).
  Pcg32 rng(42, 54);
  EXPECT_EQ(rng.Next(), 0xa15c02b7u);
  EXPECT_EQ(rng.Next(), 0x7b47f409u);
  EXPECT_EQ(rng.Next(), 0xba1d3330u);
  EXPECT_EQ(rng.Next(), 0x83d2f293u);
  EXPECT_EQ(rng.Next(), 0xbfa4784bu);
  EXPECT_EQ(rng.Next(), 0xcbed606eu);
}

TEST(RngTest, EqualSeedsGiveIdenticalStreams) {
  const RngState a{1234};
  const RngState b{1234};
  Pcg32 x = a.Stream(7);
  Pcg32 y = b.Stream(7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(x.Next(), y.Next());
  Pcg32 other = a.Stream(8);
  Pcg32 same = a.Stream(7);
  int equal = 0;
  for (int i = 0; i < 100; ++i) equal += other.Next() == same.Next();
  EXPECT_LT(equal, 5);
}

TEST(RngTest, BoundedAndUniformRanges) {
  Pcg32 rng(5, 1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.Bounded(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
    const double u = rng.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(RngTest, ShuffleIsAPermutation) {
  Pcg32 rng(9, 0);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  rng.Shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(DatasetTest, ValidatesInvariants) {
  const Matrix x = Matrix::FromRows({{1, 2}, {3, 4}});
  EXPECT_NO_THROW(Dataset(x, {"a", "b"}, {0.5, 1.5}, Task::kRegression));
  EXPECT_THROW(Dataset(Matrix::FromRows({{1, 2}}), {"a", "b"}, {1}, Task::kRegression),
               ValidationError);
  EXPECT_THROW(Dataset(x, {"a", "a"}, {0, 1}, Task::kRegression), ValidationError);
  EXPECT_THROW(Dataset(x, {"a"}, {0, 1}, Task::kRegression), ValidationError);
  EXPECT_THROW(Dataset(x, {"a", "b"}, {0}, Task::kRegression), ValidationError);
  EXPECT_THROW(Dataset(x, {"a", "b"}, {0, NAN}, Task::kRegression), ValidationError);
  Matrix bad = x;
  bad(0, 0) = INFINITY;
  EXPECT_THROW(Dataset(bad, {"a", "b"}, {0, 1}, Task::kRegression), ValidationError);
  EXPECT_THROW(Dataset(x, {"a", "b"}, {0, 0.5}, Task::kClassification), ValidationError);
  // All samples in one class.
  EXPECT_THROW(Dataset(x, {"a", "b"}, {1, 1}, Task::kClassification), ValidationError);
  const Dataset c(x, {"a", "b"}, {0, 2}, Task::kClassification);
  EXPECT_EQ(c.num_classes(), 3);
  EXPECT_EQ(c.FeatureIndex("b"), 1u);
  EXPECT_THROW(c.FeatureIndex("z"), ValidationError);
}

TEST(PredictionSetTest, ValidatesProbabilitiesAndLength) {
  const Matrix x = Matrix::FromRows({{1}, {2}});
  const Dataset data(x, {"a"}, {0, 1}, Task::kClassification);
  EXPECT_NO_THROW(PredictionSet({0, 1}, Matrix::FromRows({{0.6, 0.4}, {0.2, 0.8}}))
                      .ValidateFor(data));
  EXPECT_THROW(PredictionSet({0, 1}, Matrix::FromRows({{0.6, 0.5}, {0.2, 0.8}})),
               ValidationError);
  EXPECT_THROW(PredictionSet({0, 1, 1}).ValidateFor(data), ValidationError);
  EXPECT_THROW(PredictionSet({0, 3}).ValidateFor(data), ValidationError);
  const PredictionSet p({1, 0}, Matrix::FromRows({{0.3, 0.7}, {0.9, 0.1}}));
  EXPECT_THAT(p.ScalarOutput(Task::kClassification),
              ElementsAre(DoubleNear(0.7, 1e-15), DoubleNear(0.1, 1e-15)));
}

TEST(NormalizeTest, GlobalExamples) {
  EXPECT_THAT(NormalizeImportanceValues(std::vector<double>{2, 1, 1}),
              ElementsAre(0.5, 0.25, 0.25));
  EXPECT_THAT(NormalizeImportanceValues(std::vector<double>{0, 0, 0}),
              ElementsAre(DoubleNear(1.0 / 3, 1e-15), DoubleNear(1.0 / 3, 1e-15),
                          DoubleNear(1.0 / 3, 1e-15)));
  EXPECT_THAT(NormalizeImportanceValues(std::vector<double>{3, -1}), ElementsAre(1.0, 0.0));
  EXPECT_THROW(NormalizeImportanceValues(std::vector<double>{1, NAN}), ValidationError);
}

TEST(NormalizeTest, LocalExamples) {
  const auto local = NormalizeLocal(Matrix::FromRows({{1, -1, 0}, {0, 0, 4}, {0, 0, 0}}),
                                    {"a", "b", "c"});
  EXPECT_THAT(testdata::ToVector(local.rows().Row(0)), ElementsAre(0.5, 0.5, 0.0));
  EXPECT_THAT(testdata::ToVector(local.rows().Row(1)), ElementsAre(0.0, 0.0, 1.0));
  for (double v : local.rows().Row(2)) EXPECT_NEAR(v, 1.0 / 3, 1e-15);
  const auto two = NormalizeLocal(Matrix::FromRows({{0, 0}}), {"a", "b"});
  EXPECT_THAT(testdata::ToVector(two.rows().Row(0)), ElementsAre(0.5, 0.5));
  EXPECT_THROW(NormalizeLocal(Matrix::FromRows({{1, 2}}), {"a"}), ValidationError);
}

TEST(NormalizeTest, PropertyIdempotentAndValid) {
  Pcg32 rng(17, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 1 + rng.Bounded(12);
    std::vector<double> raw(d);
    for (auto& v : raw) {
      const auto pick = rng.Bounded(5);
      v = pick == 0 ? 0.0 : (pick == 1 ? -rng.Uniform(0, 3) : rng.Uniform(0, 3));
    }
    const auto once = NormalizeImportance(raw, DefaultFeatureNames(d));
    const auto twice = NormalizeImportanceValues(once.values());
    double total = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      ASSERT_GE(once.values()[j], 0.0);
      ASSERT_NEAR(once.values()[j], twice[j], 1e-12);
      total += once.values()[j];
    }
    ASSERT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(PartitionTest, ClassificationGroupsByPredictedClass) {
  const Dataset data = TinyRegression({0, 0, 0, 0});  // shape only
  const Matrix x = data.features();
  const Dataset cls(x, {"a"}, {0, 1, 0, 1}, Task::kClassification);
  const auto part = PartitionByOutput(cls, PredictionSet({0, 1, 0, 1}));
  ASSERT_EQ(part.num_groups(), 2u);
  EXPECT_THAT(part.Members(0), ElementsAre(0, 2));
  EXPECT_THAT(part.Members(1), ElementsAre(1, 3));
}

TEST(PartitionTest, RegressionQuartiles) {
  const Dataset data = TinyRegression({1, 2, 3, 4, 5, 6, 7, 8});
  const auto part = PartitionByOutput(data, PredictionSet({1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_THAT(part.group_names(), ElementsAre("Q01", "Q12", "Q23", "Q34"));
  EXPECT_THAT(part.Members(0), ElementsAre(0, 1));
  EXPECT_THAT(part.Members(1), ElementsAre(2, 3));
  EXPECT_THAT(part.Members(2), ElementsAre(4, 5));
  EXPECT_THAT(part.Members(3), ElementsAre(6, 7));
}

TEST(PartitionTest, QuartileCutsMatchSortedQuantileOracle) {
  // Cut points q25/q50/q75 by linear interpolation on the sorted sample.
  const std::vector<double> v = {10, 1, 7, 3};
  EXPECT_DOUBLE_EQ(Quantile(v, 0.25), 1 + 0.75 * 2);
  EXPECT_DOUBLE_EQ(Quantile(v, 0.5), 5.0);
  EXPECT_DOUBLE_EQ(Quantile(v, 1.0), 10.0);
}

TEST(PartitionTest, ConstantRegressionOutputIsRejected) {
  const Dataset data = TinyRegression({1, 2, 3, 4});
  EXPECT_THROW(PartitionByOutput(data, PredictionSet({5, 5, 5, 5})), ValidationError);
}

TEST(PartitionTest, PropertyCoversAllSamplesDisjointly) {
  Pcg32 rng(3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 4 + rng.Bounded(40);
    std::vector<double> pred(m);
    for (auto& p : pred) p = static_cast<double>(rng.Bounded(6));
    std::vector<double> target(m);
    std::iota(target.begin(), target.end(), 0.0);
    const Dataset data = TinyRegression(target);
    std::optional<SubgroupPartition> part;
    try {
      part = PartitionByOutput(data, PredictionSet(pred));
    } catch (const ValidationError&) {
      continue;
    }
    std::vector<int> seen(m, 0);
    for (std::size_t g = 0; g < part->num_groups(); ++g) {
      const auto members = part->Members(g);
      ASSERT_FALSE(members.empty());
      for (auto i : members) ++seen[i];
    }
    for (int s : seen) ASSERT_EQ(s, 1);
  }
}

TEST(SubgroupPartitionTest, RejectsEmptyGroups) {
  EXPECT_THROW(SubgroupPartition({0, 0}, {"a", "b"}), ValidationError);
  EXPECT_THROW(SubgroupPartition({0, 2}, {"a", "b"}), ValidationError);
}

}  // namespace
}  // namespace eamex
