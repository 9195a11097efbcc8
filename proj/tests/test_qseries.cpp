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

#include <climits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace nrr;
using nrr::testing::coeffs;

TEST(SeriesConst, Examples) {
  EXPECT_EQ(coeffs(series_const(1, Order(3))), (std::vector<Coeff>{1, 0, 0, 0}));
  EXPECT_EQ(coeffs(series_const(0, Order(2))), (std::vector<Coeff>{0, 0, 0}));
  EXPECT_EQ(coeffs(series_const(-1, Order(1))), (std::vector<Coeff>{-1, 0}));
}

TEST(SeriesAdd, Examples) {
  EXPECT_EQ(SeriesQ::from_coeffs({1, 1}) + SeriesQ::from_coeffs({0, -1}), SeriesQ::from_coeffs({1, 0}));
  EXPECT_EQ(SeriesQ::from_coeffs({1, 0, -1}) + SeriesQ::from_coeffs({0, 0, 1}),
            SeriesQ::from_coeffs({1, 0, 0}));
  const auto a = SeriesQ::from_coeffs({3, -4, 7});
  EXPECT_EQ(a + series_const(0, a.order()), a);
}

TEST(SeriesAdd, OrderMismatchIsRejected) {
  EXPECT_THROW(SeriesQ::from_coeffs({1, 1}) + SeriesQ::from_coeffs({1}), OrderMismatch);
  EXPECT_THROW(SeriesQ::from_coeffs({1, 1}) * SeriesQ::from_coeffs({1, 2, 3}), OrderMismatch);
}

TEST(SeriesAdd, OverflowIsReported) {
  EXPECT_THROW(SeriesQ::from_coeffs({LLONG_MAX}) + SeriesQ::from_coeffs({1}), CoefficientOverflow);
  EXPECT_THROW(SeriesQ::from_coeffs({LLONG_MIN}) - SeriesQ::from_coeffs({1}), CoefficientOverflow);
}

TEST(SeriesMul, Examples) {
  const Order n3(3);
  EXPECT_EQ(product_one_minus({1}, n3) * SeriesQ::from_coeffs({1, 1, 1, 1}), series_const(1, n3));
  // (1-q^2)(1-q^3) = 1 - q^2 - q^3 + q^5
  EXPECT_EQ(SeriesQ::from_coeffs({1, 0, -1, 0, 0, 0}) * SeriesQ::from_coeffs({1, 0, 0, -1, 0, 0}),
            SeriesQ::from_coeffs({1, 0, -1, -1, 0, 1}));
  const auto a = SeriesQ::from_coeffs({2, -1, 5});
  EXPECT_EQ(a * series_const(1, a.order()), a);
}

TEST(SeriesMul, OverflowIsReported) {
  const auto big = SeriesQ::from_coeffs({1LL << 40, 0});
  EXPECT_THROW(big * big, CoefficientOverflow);
}

TEST(ProductOneMinus, Examples) {
  EXPECT_EQ(coeffs(product_one_minus({2, 3, 5}, Order(6))), (std::vector<Coeff>{1, 0, -1, -1, 0, 0, 0}));
  EXPECT_EQ(oracle::expand_one_minus({2, 3, 5}, 6), (oracle::Poly{1, 0, -1, -1, 0, 0, 0}));
  EXPECT_EQ(product_one_minus({4, 5, 6}, Order(6))[6], -1);
  EXPECT_EQ(product_one_minus(std::span<const std::size_t>{}, Order(4)), series_const(1, Order(4)));
}

TEST(ProductOneMinus, ExponentsAboveOrderAreIgnored) {
  EXPECT_EQ(product_one_minus({2, 7, 100}, Order(5)), product_one_minus({2}, Order(5)));
  EXPECT_EQ(inverse_one_minus({3, 9}, Order(5)), inverse_one_minus({3}, Order(5)));
}

TEST(ProductOneMinus, ZeroExponentIsRejected) {
  EXPECT_THROW(product_one_minus({0}, Order(3)), InvalidInput);
  EXPECT_THROW(inverse_one_minus({0}, Order(3)), InvalidInput);
}

TEST(InverseOneMinus, Examples) {
  EXPECT_EQ(coeffs(inverse_one_minus({1}, Order(4))), (std::vector<Coeff>{1, 1, 1, 1, 1}));
  EXPECT_EQ(coeffs(inverse_one_minus({1, 2}, Order(4))), (std::vector<Coeff>{1, 1, 2, 2, 3}));
  EXPECT_EQ(oracle::count_restricted_partitions({1, 2}, 4), (oracle::Poly{1, 1, 2, 2, 3}));
}

TEST(InverseOneMinus, CountsRestrictedPartitions) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> parts;
    for (std::size_t j = 1; j <= 12; ++j)
      if (rng() % 3 == 0) parts.push_back(j);
    EXPECT_EQ(coeffs(inverse_one_minus(parts, Order(25))), oracle::count_restricted_partitions(parts, 25));
  }
}

TEST(OneMinus, ReciprocityOnRandomExponentSets) {
  std::mt19937_64 rng(42);
  const Order order(30);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::size_t> exps;
    const std::size_t count = rng() % 12;
    for (std::size_t k = 0; k < count; ++k) exps.push_back(1 + rng() % 40);
    EXPECT_EQ(product_one_minus(exps, order) * inverse_one_minus(exps, order), series_const(1, order));
    EXPECT_EQ(coeffs(product_one_minus(exps, order)), oracle::expand_one_minus(exps, 30));
  }
}

TEST(SeriesEqToOrder, Examples) {
  EXPECT_TRUE(series_eq_to_order(SeriesQ::from_coeffs({1, 0, -1}), SeriesQ::from_coeffs({1, 0, -1}), Order(2)));
  const auto check = series_eq_to_order(SeriesQ::from_coeffs({1, 0}), SeriesQ::from_coeffs({1, 1}), Order(1));
  ASSERT_FALSE(check);
  EXPECT_EQ(*check.discrepancy, (Discrepancy{1, 0, 1}));
  EXPECT_TRUE(series_eq_to_order(rr_sum_side(Mode::two, Order(60)), rr_product_side(Mode::two, Order(60)),
                                 Order(60)));
}

TEST(SeriesEqToOrder, ComparisonBeyondOrderIsRejected) {
  EXPECT_THROW(series_eq_to_order(SeriesQ::from_coeffs({1}), SeriesQ::from_coeffs({1, 0}), Order(1)),
               InvalidInput);
}

namespace {

SeriesQ random_series(std::mt19937_64& rng, Order order) {
  std::vector<Coeff> v(order.value() + 1);
  for (auto& c : v) c = static_cast<Coeff>(rng() % 201) - 100;
  return SeriesQ(order, std::move(v));
}

}  // namespace

TEST(SeriesRing, LawsHoldToTruncation) {
  std::mt19937_64 rng(1);
  const Order order(20);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order);
    const auto c = random_series(rng, order);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(SeriesRing, ProductAgreesWithUntruncatedExpansion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_series(rng, Order(15));
    const auto b = random_series(rng, Order(15));
    auto full = oracle::multiply(coeffs(a), coeffs(b));
    full.resize(16);
    EXPECT_EQ(coeffs(a * b), full);
  }
}

TEST(SeriesTruncation, ComputingLowAgreesWithTruncatingHigh) {
  const Order high(40);
  const std::vector<std::size_t> exps{1, 3, 4, 9, 11, 17, 30};
  for (std::size_t m = 0; m <= 40; m += 7) {
    const Order low(m);
    EXPECT_EQ(product_one_minus(exps, high).truncated(low), product_one_minus(exps, low));
    EXPECT_EQ(inverse_one_minus(exps, high).truncated(low), inverse_one_minus(exps, low));
    const auto a = inverse_one_minus({1, 2}, high);
    const auto b = product_one_minus({5, 6}, high);
    EXPECT_EQ((a * b).truncated(low), a.truncated(low) * b.truncated(low));
  }
  EXPECT_THROW(series_const(1, Order(2)).truncated(Order(3)), InvalidInput);
}

TEST(SeriesQ, ConstructionValidatesLength) {
  EXPECT_THROW(SeriesQ(Order(2), {1, 2}), InvalidInput);
  EXPECT_THROW(SeriesQ::from_coeffs(std::vector<Coeff>{}), InvalidInput);
}
