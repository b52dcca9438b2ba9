// Copyright 2026 The carlitz-jets Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carlitz/power_series.hpp"

#include <gtest/gtest.h>

#include <set>

#include "carlitz/errors.hpp"
#include "support.hpp"

namespace carlitz {
namespace {

using testing::OracleField;
using testing::random_series;
using testing::random_unit;

class SeriesRingTest : public ::testing::TestWithParam<unsigned> {
 protected:
  FqSpecPtr spec_ = resolve_field(GetParam());
  std::mt19937_64 rng_{0x5eed0000u + GetParam()};
};

// Cauchy product computed coefficient by coefficient in the oracle field.
TEST_P(SeriesRingTest, ProductMatchesOracle) {
  const OracleField oracle(spec_->p(), spec_->defining_poly());
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_series(rng_, spec_, 12);
    const auto g = random_series(rng_, spec_, 12);
    const auto h = f * g;
    for (std::size_t n = 0; n < 12; ++n) {
      unsigned acc = 0;
      for (std::size_t i = 0; i <= n; ++i)
        acc = oracle.add(acc, oracle.mul(f.raw(i), g.raw(n - i)));
      ASSERT_EQ(h.raw(n), acc);
    }
  }
}

TEST_P(SeriesRingTest, RingLaws) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(rng_, spec_, 10);
    const auto b = random_series(rng_, spec_, 10);
    const auto c = random_series(rng_, spec_, 10);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, TruncSeries::zero(spec_, 10));
    EXPECT_EQ(a + (-a), TruncSeries::zero(spec_, 10));
    EXPECT_EQ(a * TruncSeries::one(spec_, 10), a);
  }
}

TEST_P(SeriesRingTest, InverseOfUnits) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_unit(rng_, spec_, 16);
    const auto v = ts_inv(u);
    EXPECT_EQ(u * v, TruncSeries::one(spec_, 16));
    EXPECT_EQ(v * u, TruncSeries::one(spec_, 16));
    EXPECT_EQ(ts_inv(v), u);
  }
}

TEST_P(SeriesRingTest, PowerMatchesRepeatedProduct) {
  const auto f = random_series(rng_, spec_, 9);
  TruncSeries acc = TruncSeries::one(spec_, 9);
  for (std::uint64_t n = 0; n < 20; ++n) {
    EXPECT_EQ(ts_pow(f, n), acc) << n;
    acc *= f;
  }
  // The q-power map is the Frobenius on coefficients combined with t -> t^q.
  const unsigned q = spec_->order();
  const auto fq = ts_pow(f, q);
  for (std::size_t i = 0; i < 9; ++i) {
    const FqRaw expect = i % q == 0 ? spec_->pow(f.raw(i / q), q) : 0;
    EXPECT_EQ(fq.raw(i), expect);
  }
}

TEST_P(SeriesRingTest, LiteralRoundTrip) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_series(rng_, spec_, 7);
    EXPECT_EQ(parse_series(spec_, f.to_string(), 7), f) << f.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, SeriesRingTest,
                         ::testing::Values(2u, 3u, 4u, 5u, 9u, 16u));

TEST(TruncSeries, PrecisionIsTheMinimum) {
  const auto f2 = resolve_field(2);
  const auto a = TruncSeries::from_ints(f2, {1, 1}, 5);
  const auto b = TruncSeries::from_ints(f2, {1, 0, 1}, 3);
  EXPECT_EQ((a + b).prec(), 3u);
  EXPECT_EQ((a * b).prec(), 3u);
  EXPECT_EQ((a - b).prec(), 3u);
  EXPECT_EQ(a.truncated(2), TruncSeries::from_ints(f2, {1, 1}, 2));
  EXPECT_THROW(b.truncated(4), InsufficientPrecision);
  EXPECT_THROW(TruncSeries(f2, 0), InsufficientPrecision);
  EXPECT_THROW(a.coeff(5), InsufficientPrecision);
}

TEST(TruncSeries, EqualityIncludesPrecision) {
  const auto f3 = resolve_field(3);
  EXPECT_FALSE(TruncSeries::one(f3, 2) == TruncSeries::one(f3, 3));
  EXPECT_NE(TruncSeries::one(f3, 2).key(), TruncSeries::one(f3, 3).key());
  EXPECT_EQ(TruncSeries::one(f3, 2).key(), TruncSeries::one(f3, 2).key());
}

TEST(TruncSeries, NonUnits) {
  const auto f5 = resolve_field(5);
  const auto t = TruncSeries::monomial(FqElem::one(f5), 1, 4);
  EXPECT_FALSE(t.is_unit());
  EXPECT_THROW(ts_inv(t), NonUnit);
  EXPECT_THROW(UnitClass{t}, NonUnit);
  EXPECT_TRUE(TruncSeries::monomial(FqElem::one(f5), 7, 4).is_zero());
  // 1/(1-t) = 1 + t + t^2 + t^3.
  const auto g = ts_inv(TruncSeries::from_ints(f5, {1, -1}, 4));
  EXPECT_EQ(g, TruncSeries::from_ints(f5, {1, 1, 1, 1}, 4));
  EXPECT_EQ(ts_eval0(g), FqElem::one(f5));
}

TEST(SeriesLiteral, Forms) {
  const auto f3 = resolve_field(3);
  EXPECT_EQ(parse_series(f3, "1+t+2*t^2", 4),
            TruncSeries::from_ints(f3, {1, 1, 2}, 4));
  EXPECT_EQ(parse_series(f3, " 2 - t^3 + t^3 + 4*t ", 4),
            TruncSeries::from_ints(f3, {2, 1}, 4));
  EXPECT_EQ(parse_series(f3, "-1", 2), TruncSeries::from_ints(f3, {2}, 2));
  EXPECT_EQ(parse_series(f3, "1+t^9", 3), TruncSeries::one(f3, 3));
  EXPECT_EQ(parse_series(f3, "t^2+1", 3), TruncSeries::from_ints(f3, {1, 0, 1}, 3));
  EXPECT_EQ(TruncSeries::from_ints(f3, {1, 1, 2}, 4).to_string(), "1+t+2*t^2");
  EXPECT_EQ(TruncSeries::zero(f3, 4).to_string(), "0");

  const auto f4 = resolve_field(4);
  const auto f = parse_series(f4, "[1,0]+[0,1]*t", 3);
  const std::vector<unsigned> x = {0, 1};
  EXPECT_EQ(f.coeff(1), FqElem::from_coeffs(f4, x));
  EXPECT_EQ(parse_series(f4, f.to_string(), 3), f);
}

TEST(SeriesLiteral, Errors) {
  const auto f4 = resolve_field(4);
  for (const char* bad : {"", "+", "1+", "1++t", "t^", "2*", "1*x", "[1]",
                          "[1,0", "1 t", "1 2", "1t", "t ^2 1", "t^a",
                          "(1+t)"}) {
    EXPECT_THROW(parse_series(f4, bad, 4), ParseError) << bad;
  }
  // Blanks around operators are fine.
  EXPECT_EQ(parse_series(f4, " 1 + [0, 1] * t ^ 2 ", 4),
            parse_series(f4, "1+[0,1]*t^2", 4));
}

TEST(UnitEnumeration, CountsAndOrder) {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto spec = resolve_field(q);
    for (std::size_t T = 1; T <= 4; ++T) {
      std::vector<std::vector<FqRaw>> seen;
      for_each_unit(*spec, T, [&](std::span<const FqRaw> a) {
        seen.emplace_back(a.begin(), a.end());
      });
      ASSERT_EQ(seen.size(), unit_count(q, T));
      const auto order = fq_enumerate_raw(*spec);
      auto rank = [&](const std::vector<FqRaw>& v) {
        std::vector<std::size_t> r;
        for (FqRaw c : v)
          r.push_back(static_cast<std::size_t>(
              std::find(order.begin(), order.end(), c) - order.begin()));
        return r;
      };
      for (std::size_t i = 0; i < seen.size(); ++i) {
        EXPECT_NE(seen[i][0], 0);
        if (i) EXPECT_LT(rank(seen[i - 1]), rank(seen[i]));
      }
    }
  }
}

TEST(UnitEnumeration, PartitionsAreDisjointAndExhaustive) {
  const auto spec = resolve_field(3);
  for (std::size_t parts : {1u, 2u, 3u, 4u, 7u, 40u}) {
    std::multiset<std::vector<FqRaw>> all;
    for (std::size_t i = 0; i < parts; ++i)
      for_each_unit(
          *spec, 4,
          [&](std::span<const FqRaw> a) { all.emplace(a.begin(), a.end()); },
          UnitPartition{i, parts});
    EXPECT_EQ(all.size(), unit_count(3, 4));
    EXPECT_EQ(std::set<std::vector<FqRaw>>(all.begin(), all.end()).size(),
              all.size());
  }
}

TEST(UnitEnumeration, BudgetAndErrors) {
  const auto spec = resolve_field(2);
  EXPECT_EQ(unit_count(2, 10), 512u);
  EXPECT_EQ(unit_count(16, 40), std::numeric_limits<std::uint64_t>::max());
  auto noop = [](std::span<const FqRaw>) {};
  EXPECT_THROW(for_each_unit(*spec, 10, noop, {}, 511), BudgetExceeded);
  EXPECT_NO_THROW(for_each_unit(*spec, 10, noop, {}, 512));
  EXPECT_THROW(for_each_unit(*spec, 0, noop), InsufficientPrecision);
  EXPECT_THROW(for_each_unit(*spec, 3, noop, UnitPartition{2, 2}), InvalidSpec);
  const auto units = unit_enumerate(spec, 3);
  ASSERT_EQ(units.size(), 4u);
  EXPECT_EQ(units.front().series(), TruncSeries::one(spec, 3));
}

}  // namespace
}  // namespace carlitz
