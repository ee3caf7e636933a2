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

#pragma once

// Independent re-verification of candidates. Every square is recomputed
// from the six stored integers; derived fields written by a generator are
// only compared against, never used.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "npcuboid/exact_arith.hpp"
#include "npcuboid/parametrizations.hpp"

namespace npc {

enum class Classification { Degenerate, NPC, PCHit };

inline std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Degenerate: return "Degenerate";
    case Classification::NPC: return "NPC";
    case Classification::PCHit: return "PCHit";
  }
  return "?";
}

struct VerificationReport {
  bool identity_ac_ok = false;  // a^2 + c^2 = d_ac^2
  bool identity_bc_ok = false;  // b^2 + c^2 = d_bc^2
  bool identity_s_ok = false;   // a^2 + b^2 + c^2 = d_s^2
  bool all_positive = false;
  bool stored_fields_ok = false;  // dab_sq / dab_root agree with a, b
  BigInt dab_sq;
  std::optional<BigInt> dab_root;
  bool primitive = false;
  Classification classification = Classification::Degenerate;
  std::string reason;  // empty unless Degenerate

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

inline VerificationReport verify(const CuboidCandidate& c) {
  VerificationReport r;
  const BigInt a2 = c.a * c.a;
  const BigInt b2 = c.b * c.b;
  const BigInt c2 = c.c * c.c;
  r.identity_ac_ok = a2 + c2 == c.d_ac * c.d_ac;
  r.identity_bc_ok = b2 + c2 == c.d_bc * c.d_bc;
  r.identity_s_ok = a2 + b2 + c2 == c.d_s * c.d_s;
  r.dab_sq = a2 + b2;
  SqrtResult root = isqrt(r.dab_sq);
  if (root.exact) r.dab_root = std::move(root.root);

  r.all_positive = true;
  BigInt g = 0;
  for (const auto& v : c.quantities()) {
    if (v <= 0) r.all_positive = false;
    g = gcd(g, v);
  }
  r.primitive = g == 1;
  r.stored_fields_ok = c.dab_sq == r.dab_sq && c.dab_root == r.dab_root;

  if (!r.all_positive) {
    r.reason = "non-positive quantity";
  } else if (!r.identity_ac_ok) {
    r.reason = "a^2 + c^2 != d_ac^2";
  } else if (!r.identity_bc_ok) {
    r.reason = "b^2 + c^2 != d_bc^2";
  } else if (!r.identity_s_ok) {
    r.reason = "a^2 + b^2 + c^2 != d_s^2";
  } else if (!r.stored_fields_ok) {
    r.reason = "stored dab_sq/dab_root disagree with a, b";
  } else {
    r.classification =
        r.dab_root ? Classification::PCHit : Classification::NPC;
  }
  return r;
}

/// Canonical form of a verified candidate.
///
/// NPC: the irrational face is (a, b); order it so a >= b, keep c, divide
/// by the gcd. PCHit: every face is rational, so sort all three sides
/// descending. Diagonals are re-derived from the sides in both cases.
/// Provenance fields are carried over; primitive_gcd accumulates.
inline CuboidCandidate canonicalize(const CuboidCandidate& in) {
  const VerificationReport report = verify(in);
  if (report.classification == Classification::Degenerate) {
    throw DomainError("canonicalize: degenerate candidate (" + report.reason +
                      ")");
  }
  std::array<BigInt, 3> sides = {in.a, in.b, in.c};
  if (report.classification == Classification::PCHit) {
    std::sort(sides.begin(), sides.end(), std::greater<>());
  } else if (sides[0] < sides[1]) {
    std::swap(sides[0], sides[1]);
  }
  BigInt g = gcd(gcd(sides[0], sides[1]), sides[2]);
  for (auto& s : sides) mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), g.get_mpz_t());

  CuboidCandidate out = in;
  out.a = sides[0];
  out.b = sides[1];
  out.c = sides[2];
  out.d_ac = isqrt(out.a * out.a + out.c * out.c).root;
  out.d_bc = isqrt(out.b * out.b + out.c * out.c).root;
  out.d_s = isqrt(out.a * out.a + out.b * out.b + out.c * out.c).root;
  out.primitive_gcd = in.primitive_gcd * g;
  set_dab(out);
  return out;
}

}  // namespace npc
