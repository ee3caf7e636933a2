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

#include "npcuboid/verifier.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "npcuboid/random.hpp"

namespace npc {
namespace {

CuboidCandidate box(long a, long b, long c, long d_ac, long d_bc, long d_s) {
  CuboidCandidate x;
  x.a = a;
  x.b = b;
  x.c = c;
  x.d_ac = d_ac;
  x.d_bc = d_bc;
  x.d_s = d_s;
  set_dab(x);
  return x;
}

TEST(VerifyTest, FirstFamilyAtTwoIsNPC) {
  auto r = verify(generate(ParamId::I, RationalParam(2, 1)));
  EXPECT_TRUE(r.identity_ac_ok);
  EXPECT_TRUE(r.identity_bc_ok);
  EXPECT_TRUE(r.identity_s_ok);
  EXPECT_FALSE(r.dab_root);
  EXPECT_EQ(r.dab_sq, 445729);
  EXPECT_TRUE(r.primitive);
  EXPECT_EQ(r.classification, Classification::NPC);
  EXPECT_TRUE(r.reason.empty());
}

TEST(VerifyTest, ConstructedFailure) {
  // 3^2 + 12^2 = 153, not 15^2.
  auto r = verify(box(3, 4, 12, 15, 12, 13));
  EXPECT_FALSE(r.identity_ac_ok);
  EXPECT_EQ(r.classification, Classification::Degenerate);
  EXPECT_FALSE(r.reason.empty());
}

TEST(VerifyTest, EulerBrickWithIrrationalSpaceDiagonalIsRejected) {
  // 44^2 + 117^2 = 125^2, 240^2 + 117^2 = 267^2, 44^2 + 240^2 = 244^2, but
  // 44^2 + 240^2 + 117^2 = 73225 lies strictly between 270^2 and 271^2.
  auto r = verify(box(44, 240, 117, 125, 267, 270));
  EXPECT_TRUE(r.identity_ac_ok);
  EXPECT_TRUE(r.identity_bc_ok);
  EXPECT_FALSE(r.identity_s_ok);
  EXPECT_EQ(r.dab_root, BigInt(244));
  EXPECT_EQ(r.classification, Classification::Degenerate);
}

TEST(VerifyTest, NonPositiveQuantityIsDegenerate) {
  auto c = generate(ParamId::I, RationalParam(2, 1));
  c.b = -c.b;
  set_dab(c);
  auto r = verify(c);
  EXPECT_TRUE(r.identity_bc_ok);
  EXPECT_EQ(r.classification, Classification::Degenerate);
  EXPECT_EQ(r.reason, "non-positive quantity");
}

TEST(VerifyTest, DoesNotTrustStoredDerivedFields) {
  auto c = generate(ParamId::I, RationalParam(2, 1));
  c.dab_sq += 1;
  auto r = verify(c);
  EXPECT_EQ(r.dab_sq, 445729);
  EXPECT_FALSE(r.stored_fields_ok);
  EXPECT_EQ(r.classification, Classification::Degenerate);

  c = generate(ParamId::I, RationalParam(2, 1));
  c.dab_root = BigInt(667);
  EXPECT_EQ(verify(c).classification, Classification::Degenerate);
}

TEST(VerifyTest, NonPrimitiveIsStillNPC) {
  auto c = generate(ParamId::III, RationalParam(2, 1));
  for (BigInt* v : {&c.a, &c.b, &c.c, &c.d_ac, &c.d_bc, &c.d_s}) *v *= 7;
  set_dab(c);
  auto r = verify(c);
  EXPECT_FALSE(r.primitive);
  EXPECT_EQ(r.classification, Classification::NPC);
}

TEST(VerifyTest, PureFunction) {
  auto c = generate(ParamId::II, RationalParam(7, 3));
  EXPECT_EQ(verify(c), verify(c));
}

TEST(VerifyTest, AllFamiliesClassifyAsNPC) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    RationalParam t = random_nontrivial_t(rng, 100000);
    for (ParamId id : kAllParams) {
      auto c = generate(id, t);
      auto r = verify(c);
      ASSERT_NE(r.classification, Classification::Degenerate) << t.str();
      ASSERT_EQ(r.classification == Classification::PCHit, c.dab_is_square());
    }
  }
}

TEST(CanonicalizeTest, OrdersIrrationalPairAndRelabelsDiagonals) {
  auto c = generate(ParamId::I, RationalParam(2, 1));  // (448, 495, 840, ...)
  auto k = canonicalize(c);
  EXPECT_EQ(k.a, 495);
  EXPECT_EQ(k.b, 448);
  EXPECT_EQ(k.c, 840);
  EXPECT_EQ(k.d_ac, 975);
  EXPECT_EQ(k.d_bc, 952);
  EXPECT_EQ(k.d_s, 1073);
  EXPECT_EQ(k.dab_sq, 445729);
  EXPECT_EQ(verify(k).classification, Classification::NPC);
}

TEST(CanonicalizeTest, RemovesCommonFactor) {
  auto c = generate(ParamId::I, RationalParam(2, 1));
  auto scaled = c;
  for (BigInt* v : {&scaled.a, &scaled.b, &scaled.c, &scaled.d_ac, &scaled.d_bc,
                    &scaled.d_s})
    *v *= 7;
  set_dab(scaled);
  auto k = canonicalize(scaled);
  EXPECT_TRUE(same_quantities(k, canonicalize(c)));
  EXPECT_EQ(k.primitive_gcd, 7);
}

TEST(CanonicalizeTest, IdempotentAndPreservesSides) {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    RationalParam t = random_nontrivial_t(rng, 100000);
    for (ParamId id : kAllParams) {
      auto c = generate(id, t);
      auto k = canonicalize(c);
      ASSERT_TRUE(same_quantities(canonicalize(k), k));
      std::array<BigInt, 3> before = {c.a, c.b, c.c};
      std::array<BigInt, 3> after = {k.a, k.b, k.c};
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      ASSERT_EQ(before, after);
      ASSERT_EQ(verify(k).classification, Classification::NPC);
      ASSERT_GE(k.a, k.b);
    }
  }
}

TEST(CanonicalizeTest, DegenerateInputThrows) {
  EXPECT_THROW(canonicalize(box(3, 4, 12, 15, 12, 13)), DomainError);
}

}  // namespace
}  // namespace npc
