// Copyright 2026 The nrr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace nrr;
using nrr::testing::coeffs;
using nrr::testing::parts_of;
using Parts = std::vector<std::vector<Part>>;

TEST(PartitionsOf, FourHasFivePartitionsInCanonicalOrder) {
  EXPECT_EQ(parts_of(partitions_of(4)), (Parts{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(PartitionsOf, ZeroIsTheEmptyPartition) {
  const auto ps = partitions_of(0);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(ps[0].empty());
  EXPECT_EQ(ps[0].weight(), 0u);
}

TEST(PartitionsOf, CountsMatchPentagonalRecurrence) {
  const auto p = oracle::partition_numbers(30);
  EXPECT_EQ(p[9], 30);
  EXPECT_EQ(partitions_of(9).size(), 30u);
  for (std::uint32_t n = 0; n <= 30; ++n) {
    const auto ps = partitions_of(n);
    EXPECT_EQ(static_cast<std::int64_t>(ps.size()), p[n]) << "n=" << n;
    // strictly decreasing in lexicographic order, hence each exactly once
    for (std::size_t k = 1; k < ps.size(); ++k) EXPECT_GT(ps[k - 1], ps[k]);
    for (const auto& lambda : ps) EXPECT_EQ(lambda.weight(), n);
  }
}

TEST(Partition, RejectsMalformedParts) {
  EXPECT_THROW(Partition({1, 2}), InvalidInput);
  EXPECT_THROW(Partition({3, 0}), InvalidInput);
  EXPECT_EQ(Partition::canonical({1, 3, 2, 3}).parts(), (std::vector<Part>{3, 3, 2, 1}));
  EXPECT_EQ(Partition({3, 2, 1}).to_string(), "3+2+1");
  EXPECT_EQ(Partition({2, 2, 1}).max_multiplicity(), 2u);
}

TEST(Mode, OnlyOneAndTwo) {
  EXPECT_EQ(mode_from_int(1), Mode::one);
  EXPECT_EQ(mode_from_int(2), Mode::two);
  EXPECT_THROW(mode_from_int(0), InvalidInput);
  EXPECT_THROW(mode_from_int(3), InvalidInput);
  EXPECT_EQ(min_part(Mode::one), 2u);
  EXPECT_EQ(min_part(Mode::two), 1u);
}

TEST(IsNeighborly, Examples) {
  EXPECT_TRUE(is_neighborly(Partition({2, 2}), Mode::one));
  EXPECT_FALSE(is_neighborly(Partition({2, 1, 1}), Mode::one));
  EXPECT_TRUE(is_neighborly(Partition({2, 1, 1}), Mode::two));
  EXPECT_FALSE(is_neighborly(Partition({5, 3}), Mode::two));
  EXPECT_FALSE(is_neighborly(Partition({2, 2, 2}), Mode::two));
  EXPECT_TRUE(is_neighborly(Partition{}, Mode::two));
}

TEST(NeighborlyPartitions, Examples) {
  EXPECT_EQ(parts_of(neighborly_partitions(6, Mode::two)), (Parts{{3, 3}, {3, 2, 1}, {2, 2, 1, 1}}));
  EXPECT_EQ(parts_of(neighborly_partitions(6, Mode::one)), (Parts{{3, 3}}));
  EXPECT_TRUE(neighborly_partitions(1, Mode::two).empty());
  EXPECT_EQ(parts_of(neighborly_partitions(4, Mode::one)), (Parts{{2, 2}}));
  EXPECT_EQ(parts_of(neighborly_partitions(4, Mode::two)), (Parts{{2, 2}, {2, 1, 1}}));
  EXPECT_THROW(neighborly_partitions(0, Mode::one), InvalidInput);
}

TEST(TPartitions, Examples) {
  EXPECT_EQ(parts_of(t_partitions(4, Mode::two)), (Parts{{4}, {3, 1}}));
  EXPECT_TRUE(t_partitions(1, Mode::one).empty());
  EXPECT_EQ(parts_of(t_partitions(9, Mode::two)), (Parts{{9}, {8, 1}, {7, 2}, {6, 3}, {5, 3, 1}}));
  EXPECT_EQ(t_partitions(0, Mode::one).size(), 1u);
}

TEST(EPartitions, Examples) {
  EXPECT_EQ(e_partitions(9, Mode::two).size(), 5u);
  EXPECT_EQ(parts_of(e_partitions(4, Mode::one)), (Parts{{2, 2}}));
  EXPECT_EQ(parts_of(e_partitions(0, Mode::one)), (Parts{{}}));
  EXPECT_EQ(parts_of(e_partitions(0, Mode::two)), (Parts{{}}));
}

TEST(RSignedCount, Examples) {
  EXPECT_EQ(parts_of(r_partitions(6, Mode::one)), (Parts{{6}}));
  EXPECT_EQ(r_signed_count(6, Mode::one), -1);
  EXPECT_TRUE(r_partitions(6, Mode::two).empty());
  EXPECT_EQ(r_signed_count(6, Mode::two), 0);
  EXPECT_EQ(parts_of(r_partitions(3, Mode::two)), (Parts{{3}}));
  EXPECT_EQ(r_signed_count(3, Mode::two), -1);
  EXPECT_THROW(r_signed_count(0, Mode::two), InvalidInput);
}

TEST(Families, DefinitionalSoundnessUpTo30) {
  for (Mode mode : {Mode::one, Mode::two}) {
    const int i = to_int(mode);
    for (std::uint32_t n = 1; n <= 30; ++n) {
      std::set<Partition> nb, t, e, r;
      for (const auto& p : neighborly_partitions(n, mode)) nb.insert(p);
      for (const auto& p : t_partitions(n, mode)) t.insert(p);
      for (const auto& p : e_partitions(n, mode)) e.insert(p);
      for (const auto& p : r_partitions(n, mode)) r.insert(p);
      for (const auto& p : partitions_of(n)) {
        EXPECT_EQ(nb.count(p) == 1, oracle::neighborly(p.parts(), i)) << p << " i=" << i;
        EXPECT_EQ(t.count(p) == 1, oracle::t_member(p.parts(), i)) << p << " i=" << i;
        EXPECT_EQ(e.count(p) == 1, oracle::e_member(p.parts(), i)) << p << " i=" << i;
        EXPECT_EQ(r.count(p) == 1, oracle::r_member(p.parts(), i)) << p << " i=" << i;
      }
    }
  }
}

TEST(Families, NeighborlyMultiplicityAtMostTwo) {
  for (Mode mode : {Mode::one, Mode::two})
    for (std::uint32_t n = 1; n <= 30; ++n)
      for (const auto& p : neighborly_partitions(n, mode)) EXPECT_LE(p.max_multiplicity(), 2u) << p;
}

TEST(Families, TAndEAreEquinumerousUpTo40) {
  for (Mode mode : {Mode::one, Mode::two})
    for (std::uint32_t n = 0; n <= 40; ++n)
      EXPECT_EQ(t_partitions(n, mode).size(), e_partitions(n, mode).size()) << "n=" << n;
}

TEST(GfT, Examples) {
  EXPECT_EQ(coeffs(gf_t(Mode::two, Order(5))), (std::vector<Coeff>{1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(coeffs(gf_t(Mode::one, Order(4))), (std::vector<Coeff>{1, 0, 1, 1, 1}));
  EXPECT_EQ(gf_t(Mode::one, Order(0))[0], 1);
}

TEST(RrSumSide, Examples) {
  EXPECT_EQ(coeffs(rr_sum_side(Mode::two, Order(5))), (std::vector<Coeff>{1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(coeffs(rr_sum_side(Mode::one, Order(5))), (std::vector<Coeff>{1, 0, 1, 1, 1, 1}));
  // at order 0 only the k = 0 term survives
  EXPECT_EQ(rr_sum_side(Mode::two, Order(0)), series_const(1, Order(0)));
  EXPECT_EQ(rr_sum_side(Mode::one, Order(1)), series_const(1, Order(1)));
}

TEST(RrSumSide, TermByTermAgainstUntruncatedExpansion) {
  // Sum of q^{k^2+(2-i)k} * (partitions into parts <= k), built from the oracle.
  for (int i : {1, 2}) {
    const std::size_t order = 30;
    oracle::Poly expected(order + 1, 0);
    for (std::size_t k = 0; k * k + (2 - i) * k <= order; ++k) {
      std::vector<std::size_t> parts;
      for (std::size_t j = 1; j <= k; ++j) parts.push_back(j);
      const auto term = oracle::count_restricted_partitions(parts, order);
      const std::size_t lead = k * k + (2 - i) * k;
      for (std::size_t e = lead; e <= order; ++e) expected[e] += term[e - lead];
    }
    EXPECT_EQ(coeffs(rr_sum_side(mode_from_int(i), Order(order))), expected);
  }
}

TEST(RrProductSide, Examples) {
  for (Mode mode : {Mode::one, Mode::two}) {
    EXPECT_EQ(rr_product_side(mode, Order(5)), rr_sum_side(mode, Order(5)));
    EXPECT_EQ(rr_product_side(mode, Order(5))[0], 1);
  }
}

TEST(RogersRamanujan, AllRoutesAgreeTo60) {
  for (Mode mode : {Mode::one, Mode::two}) {
    const Order order(60);
    const auto t = gf_t(mode, order);
    EXPECT_EQ(rr_sum_side(mode, order), t);
    EXPECT_EQ(rr_product_side(mode, order), t);
    EXPECT_EQ(gf_e(mode, order), t);
  }
}

TEST(NumeratorExponents, ResidueClass) {
  EXPECT_EQ(numerator_exponents(Mode::two, Order(12)), (std::vector<std::size_t>{2, 3, 5, 7, 8, 10, 12}));
  EXPECT_EQ(numerator_exponents(Mode::one, Order(12)), (std::vector<std::size_t>{4, 5, 6, 9, 10, 11}));
}
