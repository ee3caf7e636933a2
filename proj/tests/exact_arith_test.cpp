// Copyright 2026 The npcuboid Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "npcuboid/exact_arith.hpp"

#include <gtest/gtest.h>

#include "npcuboid/random.hpp"
#include "oracle.hpp"

namespace npc {
namespace {

TEST(IsqrtTest, Examples) {
  auto r = isqrt(BigInt(906304));
  EXPECT_EQ(r.root, 952);
  EXPECT_TRUE(r.exact);

  r = isqrt(BigInt(0));
  EXPECT_EQ(r.root, 0);
  EXPECT_TRUE(r.exact);

  // 667^2 = 444889 < 445729 < 668^2 = 446224
  r = isqrt(BigInt(445729));
  EXPECT_EQ(r.root, 667);
  EXPECT_FALSE(r.exact);
}

TEST(IsqrtTest, SmallValuesMatchLinearScan) {
  long k = 0;
  for (long n = 0; n < 20000; ++n) {
    while ((k + 1) * (k + 1) <= n) ++k;
    auto r = isqrt(BigInt(n));
    ASSERT_EQ(r.root, k) << n;
    ASSERT_EQ(r.exact, k * k == n) << n;
  }
}

TEST(IsqrtTest, NegativeIsDomainError) {
  EXPECT_THROW(isqrt(BigInt(-1)), DomainError);
}

TEST(IsqrtTest, FloorPropertyAgainstGmp) {
  Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    const unsigned bits = 1 + static_cast<unsigned>(rng() % 4000);
    const BigInt n = random_bigint(rng, bits);
    const auto r = isqrt(n);
    ASSERT_LE(r.root * r.root, n);
    ASSERT_GT((r.root + 1) * (r.root + 1), n);
    const auto [root, rem] = oracle::sqrtrem(n);
    ASSERT_EQ(r.root, root);
    ASSERT_EQ(r.exact, rem == 0);
  }
}

TEST(IsqrtTest, PowersOfTwoAndNeighbours) {
  for (unsigned e = 0; e < 300; ++e) {
    BigInt n = pow(BigInt(2), e);
    for (const BigInt& m : {BigInt(n - 1), n, BigInt(n + 1)}) {
      if (m < 0) continue;
      ASSERT_EQ(isqrt(m).root, oracle::sqrtrem(m).first) << m.get_str();
    }
  }
}

TEST(IsPerfectSquareTest, Examples) {
  EXPECT_TRUE(is_perfect_square(BigInt(49)));
  EXPECT_FALSE(is_perfect_square(BigInt(-4)));
  EXPECT_FALSE(is_perfect_square(BigInt(1020321)));  // between 1010^2 and 1011^2
  EXPECT_TRUE(is_perfect_square(BigInt(0)));
  EXPECT_TRUE(is_perfect_square(BigInt(1)));
}

TEST(IsPerfectSquareTest, SquaresOfRandomValuesUpTo1e50) {
  Rng rng(12);
  const BigInt bound = pow(BigInt(10), 50);
  for (int i = 0; i < 20000; ++i) {
    const BigInt k = random_bigint(rng, 167) % (bound + 1);
    ASSERT_TRUE(is_perfect_square(k * k)) << k.get_str();
    if (k > 0) {
      ASSERT_FALSE(is_perfect_square(k * k + 1)) << k.get_str();
      ASSERT_FALSE(is_perfect_square(k * k - 1 + (k == 1 ? 2 : 0))) << k.get_str();
    }
  }
}

TEST(IsPerfectSquareTest, AgreesWithGmpOnRandomValues) {
  Rng rng(13);
  for (int i = 0; i < 20000; ++i) {
    const BigInt n = random_bigint(rng, 1 + static_cast<unsigned>(rng() % 200));
    ASSERT_EQ(is_perfect_square(n), oracle::is_square(n)) << n.get_str();
  }
}

TEST(ReduceTest, Examples) {
  Ratio r = reduce(14, -8);
  EXPECT_EQ(r.num(), -7);
  EXPECT_EQ(r.den(), 4);

  r = reduce(0, 5);
  EXPECT_EQ(r.num(), 0);
  EXPECT_EQ(r.den(), 1);

  r = reduce(16335, 16384);
  EXPECT_EQ(r.num(), 16335);
  EXPECT_EQ(r.den(), 16384);

  EXPECT_THROW(reduce(1, 0), DomainError);
}

TEST(ReduceTest, IdempotentAndCanonical) {
  Rng rng(14);
  for (int i = 0; i < 2000; ++i) {
    const BigInt n = BigInt(random_int(rng, -1000000, 1000000)) *
                     random_int(rng, 1, 50);
    BigInt d = BigInt(random_int(rng, 1, 1000000)) * random_int(rng, 1, 50);
    if (rng() & 1) d = -d;
    const Ratio r = reduce(n, d);
    ASSERT_GT(r.den(), 0);
    ASSERT_EQ(gcd(r.num(), r.den()), r.num() == 0 ? r.den() : BigInt(1));
    ASSERT_EQ(reduce(r.num(), r.den()), r);
    ASSERT_EQ(r.num() * d, n * r.den());
  }
}

TEST(RatioTest, Arithmetic) {
  const Ratio a(BigInt(1), BigInt(2));
  const Ratio b(BigInt(1), BigInt(3));
  EXPECT_EQ(a + b, Ratio(BigInt(5), BigInt(6)));
  EXPECT_EQ(a - b, Ratio(BigInt(1), BigInt(6)));
  EXPECT_EQ(a * b, Ratio(BigInt(1), BigInt(6)));
  EXPECT_EQ(a / b, Ratio(BigInt(3), BigInt(2)));
  EXPECT_EQ(-a, Ratio(BigInt(-1), BigInt(2)));
  EXPECT_TRUE(b < a);
  EXPECT_THROW(a / Ratio(), DomainError);
  EXPECT_THROW(Ratio().reciprocal(), DomainError);
}

TEST(ParseRatioTest, AcceptsAndRejects) {
  EXPECT_EQ(parse_ratio("2/1"), Ratio(2));
  EXPECT_EQ(parse_ratio("-6/4"), Ratio(BigInt(-3), BigInt(2)));
  EXPECT_EQ(parse_ratio("7"), Ratio(7));
  EXPECT_FALSE(parse_ratio("x"));
  EXPECT_FALSE(parse_ratio("1/0"));
  EXPECT_FALSE(parse_ratio("1/"));
  EXPECT_FALSE(parse_ratio("/2"));
  EXPECT_FALSE(parse_ratio(""));
  EXPECT_FALSE(parse_ratio("1.5"));
  EXPECT_FALSE(parse_ratio("-"));
}

TEST(IsRationalSquareTest, Examples) {
  EXPECT_TRUE(is_rational_square(Ratio(BigInt(49), BigInt(1024))));
  EXPECT_FALSE(is_rational_square(Ratio(BigInt(7), BigInt(8))));
  EXPECT_TRUE(is_rational_square(Ratio(BigInt(0), BigInt(1))));
  EXPECT_FALSE(is_rational_square(Ratio(BigInt(-49), BigInt(1024))));
  // 4/8 reduces to 1/2, which is not a square even though 4 is.
  EXPECT_FALSE(is_rational_square(Ratio(BigInt(4), BigInt(8))));
  // 8/18 reduces to 4/9.
  EXPECT_TRUE(is_rational_square(Ratio(BigInt(8), BigInt(18))));
}

TEST(IsRationalSquareTest, MatchesPartsAfterReduction) {
  Rng rng(15);
  for (int i = 0; i < 5000; ++i) {
    Ratio r;
    if (rng() % 2) {
      const Ratio x = random_ratio(rng, 5000);
      r = x * x;
    } else {
      r = random_ratio(rng, 1000000);
    }
    ASSERT_EQ(is_rational_square(r),
              r.sign() >= 0 && oracle::is_square(r.num()) &&
                  oracle::is_square(r.den()))
        << r.str();
  }
}

TEST(RationalSqrtTest, RoundTrip) {
  Rng rng(16);
  for (int i = 0; i < 2000; ++i) {
    const Ratio x = random_ratio(rng, 1000000);
    const Ratio ax = x.sign() < 0 ? -x : x;
    auto r = rational_sqrt(x * x);
    ASSERT_TRUE(r);
    ASSERT_EQ(*r, ax);
  }
  EXPECT_FALSE(rational_sqrt(Ratio(BigInt(1), BigInt(6))));
  EXPECT_FALSE(rational_sqrt(Ratio(-4)));
}

}  // namespace
}  // namespace npc
