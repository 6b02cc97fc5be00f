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

#include "eamex/core/normalize.h"
#include "eamex/metrics/local_metrics.h"
#include "support/oracles.h"
#include "support/synthetic.h"

namespace eamex {
namespace {

using ::testing::ElementsAre;

LocalImportanceMatrix Local(const std::vector<std::vector<double>>& rows) {
  return NormalizeLocal(Matrix::FromRows(rows), DefaultFeatureNames(rows.front().size()));
}

LocalImportanceMatrix RandomLocal(Pcg32& rng, std::size_t m, std::size_t d) {
  Matrix rows(m, d);
  for (std::size_t i = 0; i < m; ++i) {
    const auto p = testdata::RandomSimplex(rng, d);
    std::copy(p.begin(), p.end(), rows.Row(i).begin());
  }
  return NormalizeLocal(rows, DefaultFeatureNames(d));
}

TEST(RanksTest, LargestFirstIndexTieBreak) {
  EXPECT_THAT(ImportanceRanks(std::vector<double>{0.2, 0.5, 0.3}), ElementsAre(3, 1, 2));
  EXPECT_THAT(ImportanceRanks(std::vector<double>{0.4, 0.2, 0.4}), ElementsAre(1, 3, 2));
}

TEST(RankConsistencyTest, IdenticalRowsArePerfect) {
  const auto r = RankConsistency(Local({{0.6, 0.3, 0.1}, {0.6, 0.3, 0.1}, {0.6, 0.3, 0.1}}));
  EXPECT_DOUBLE_EQ(r.rank_consistency, 1.0);
}

TEST(RankConsistencyTest, HandExample) {
  // Feature 0 ranks [1, 1, 2].
  const auto r = RankConsistency(Local({{0.7, 0.3}, {0.6, 0.4}, {0.2, 0.8}}));
  EXPECT_NEAR(r.per_feature[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.per_feature[1], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.rank_consistency, 2.0 / 3.0, 1e-15);
  EXPECT_THAT(r.mode_rank, ElementsAre(1, 2));
}

TEST(RankConsistencyTest, ReversedRowsUseSmallerModeRank) {
  const auto r = RankConsistency(Local({{0.9, 0.1}, {0.1, 0.9}}));
  EXPECT_THAT(r.mode_rank, ElementsAre(1, 1));
  EXPECT_DOUBLE_EQ(r.per_feature[0], 0.5);
  EXPECT_DOUBLE_EQ(r.per_feature[1], 0.5);
  EXPECT_DOUBLE_EQ(r.rank_consistency, 0.5);
}

TEST(RankConsistencyTest, PropertyMatchesNaiveOracle) {
  Pcg32 rng(5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto local = RandomLocal(rng, 2 + rng.Bounded(10), 1 + rng.Bounded(5));
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < local.num_samples(); ++i) {
      rows.emplace_back(local.rows().Row(i).begin(), local.rows().Row(i).end());
    }
    const auto expected = oracle::RankConsistency(rows);
    const auto actual = RankConsistency(local);
    ASSERT_EQ(actual.rank_consistency, expected.rc);
    ASSERT_EQ(actual.per_feature, expected.per_feature);
    ASSERT_EQ(actual.mode_rank, expected.mode);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int row_sum = 0;
      bool matches_mode = true;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const int dev = actual.deviation_map.at(i, j);
        ASSERT_EQ(dev, expected.deviation[i][j]);
        ASSERT_GE(dev, 0);
        ASSERT_LT(dev, static_cast<int>(rows[i].size()));
        row_sum += dev;
        matches_mode = matches_mode && ImportanceRanks(rows[i])[j] == actual.mode_rank[j];
      }
      ASSERT_EQ(row_sum == 0, matches_mode);
    }
  }
}

TEST(RankConsistencyTest, InvariantToDuplicatingSamples) {
  Pcg32 rng(6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto local = RandomLocal(rng, 2 + rng.Bounded(8), 2 + rng.Bounded(4));
    Matrix doubled(local.num_samples() * 2, local.num_features());
    for (std::size_t i = 0; i < doubled.rows(); ++i) {
      const auto src = local.rows().Row(i % local.num_samples());
      std::copy(src.begin(), src.end(), doubled.Row(i).begin());
    }
    const auto a = RankConsistency(local);
    const auto b = RankConsistency(LocalImportanceMatrix(doubled, local.feature_names()));
    ASSERT_NEAR(a.rank_consistency, b.rank_consistency, 1e-12);
  }
}

TEST(RankConsistencyTest, DisplayOrderGroupsRows) {
  const auto local = Local({{0.9, 0.1}, {0.2, 0.8}, {0.7, 0.3}, {0.1, 0.9}});
  const SubgroupPartition groups({1, 0, 1, 0}, {"g0", "g1"});
  const auto r = RankConsistency(local, &groups);
  EXPECT_THAT(r.deviation_map.row_order, ElementsAre(1, 3, 0, 2));
}

TEST(ImportanceStabilityTest, Examples) {
  EXPECT_DOUBLE_EQ(ImportanceStability(Local({{0.3, 0.7}, {0.3, 0.7}})).importance_stability,
                   1.0);
  EXPECT_NEAR(ImportanceStability(Local({{1, 0}, {0, 1}})).importance_stability, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(ImportanceStability(Local({{1}, {1}, {1}})).importance_stability, 1.0);
}

TEST(ImportanceStabilityTest, PropertyBernoulliBound) {
  Pcg32 rng(7, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto local = RandomLocal(rng, 2 + rng.Bounded(20), 1 + rng.Bounded(6));
    const auto r = ImportanceStability(local);
    for (std::size_t j = 0; j < local.num_features(); ++j) {
      ASSERT_GE(r.variance[j], 0.0);
      ASSERT_LE(r.variance[j], r.mean[j] * (1 - r.mean[j]) + 1e-15);
      ASSERT_GE(r.per_feature[j], 0.0);
      ASSERT_LE(r.per_feature[j], 1.0);
    }
    ASSERT_GE(r.importance_stability, 0.0);
    ASSERT_LE(r.importance_stability, 1.0);
  }
}

TEST(LocalMetricsTest, InvariantUnderFeaturePermutation) {
  Pcg32 rng(8, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto local = RandomLocal(rng, 3 + rng.Bounded(6), 2 + rng.Bounded(4));
    const std::size_t d = local.num_features();
    // Tie-free rows only: index tie-breaking is not permutation invariant.
    bool ties = false;
    for (std::size_t i = 0; i < local.num_samples(); ++i) {
      const auto row = local.rows().Row(i);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) ties = ties || row[a] == row[b];
    }
    Matrix rotated(local.num_samples(), d);
    for (std::size_t i = 0; i < local.num_samples(); ++i) {
      for (std::size_t j = 0; j < d; ++j) rotated(i, j) = local.rows()(i, (j + 1) % d);
    }
    const LocalImportanceMatrix other(rotated, DefaultFeatureNames(d));
    EXPECT_NEAR(ImportanceStability(local).importance_stability,
                ImportanceStability(other).importance_stability, 1e-12);
    if (!ties) {
      EXPECT_NEAR(RankConsistency(local).rank_consistency,
                  RankConsistency(other).rank_consistency, 1e-12);
    }
  }
}

}  // namespace
}  // namespace eamex
