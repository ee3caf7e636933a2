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

// Seeded generators for property checks. std::mt19937_64 output is fully
// specified by the standard, so a fixed seed gives the same cases on every
// platform.

#include <cstdint>
#include <algorithm>
#include <random>

#include "npcuboid/exact_arith.hpp"
#include "npcuboid/parametrizations.hpp"

namespace npc {

using Rng = std::mt19937_64;

/// Uniform in [0, 2^bits).
inline BigInt random_bigint(Rng& rng, unsigned bits) {
  BigInt x = 0;
  unsigned filled = 0;
  while (filled < bits) {
    const unsigned take = std::min(64u, bits - filled);
    std::uint64_t word = rng();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    BigInt w;
    mpz_import(w.get_mpz_t(), 1, 1, sizeof word, 0, 0, &word);
    x = (x << take) | w;
    filled += take;
  }
  return x;
}

// Plain modular reduction instead of std::uniform_int_distribution, whose
// algorithm differs between standard libraries. The bias is irrelevant here.
inline std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Random rational with |num| <= bound and 1 <= den <= bound.
inline Ratio random_ratio(Rng& rng, std::int64_t bound) {
  return Ratio(BigInt(random_int(rng, -bound, bound)),
               BigInt(random_int(rng, 1, bound)));
}

inline Ratio random_nonzero_ratio(Rng& rng, std::int64_t bound) {
  for (;;) {
    Ratio r = random_ratio(rng, bound);
    if (!r.is_zero()) return r;
  }
}

inline RationalParam random_nontrivial_t(Rng& rng, std::int64_t bound) {
  for (;;) {
    Ratio r = random_nonzero_ratio(rng, bound);
    const BigInt n = abs(r.num());
    if (n != r.den() && n != 3 * r.den()) return RationalParam(r);
  }
}

}  // namespace npc
