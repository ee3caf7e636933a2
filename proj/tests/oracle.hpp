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

// Test-only oracles. None of these share code with the paths they check:
// families are evaluated directly in rational arithmetic from their factored
// forms, square roots come from GMP's mpz_sqrtrem, and enumeration is a
// brute-force filter.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "npcuboid/exact_arith.hpp"
#include "npcuboid/parametrizations.hpp"

namespace npc::oracle {

/// floor(sqrt(n)) and remainder from GMP.
inline std::pair<BigInt, BigInt> sqrtrem(const BigInt& n) {
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  return {root, rem};
}

inline bool is_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// The six entries (a, b, c, d_ac, d_bc, d_s) of a family evaluated at a
/// rational t, written out factor by factor.
inline std::array<Ratio, 6> family_at(ParamId id, const Ratio& t) {
  const Ratio t2 = t * t;
  const Ratio t4 = t2 * t2;
  const Ratio t8 = t4 * t4;
  auto k = [](long v) { return Ratio(v); };
  const Ratio f_4m9 = t4 - k(9);
  const Ratio f_4m10 = t4 - k(10) * t2 + k(9);
  const Ratio f_4p2 = t4 + k(2) * t2 + k(9);
  const Ratio f_4m2 = t4 - k(2) * t2 + k(9);
  const Ratio f_4p10 = t4 + k(10) * t2 + k(9);
  const Ratio f_8p46 = t8 + k(46) * t4 + k(81);
  const Ratio f_8m82 = t8 - k(82) * t4 + k(81);
  switch (id) {
    case ParamId::I:
      return {k(16) * t2 * f_4m9,
              f_4m10 * f_4p2,
              k(4) * t * (t2 + k(3)) * f_4m10,
              k(4) * t * (t2 + k(3)) * f_4m2,
              (t4 - k(1)) * (t4 - k(81)),
              f_8p46};
    case ParamId::II:
      return {k(16) * t2 * f_4m9 * f_4m2,
              f_4m10 * f_8p46,
              k(4) * t * (t2 - k(3)) * f_4m10 * f_4p2,
              k(4) * t * (t2 - k(3)) * f_8p46,
              f_4m2 * f_8m82,
              f_4m2 * f_8p46};
    case ParamId::III:
      return {(t4 - k(1)) * (t4 - k(81)),
              k(4) * t * (t2 - k(3)) * f_4p2,
              k(16) * t2 * f_4m9,
              f_8p46,
              k(4) * t * (t2 - k(3)) * f_4p10,
              f_4m2 * f_4p10};
  }
  return {};
}

/// Scales six rationals to coprime non-negative integers.
inline std::array<BigInt, 6> primitive_integers(const std::array<Ratio, 6>& v) {
  BigInt lcm = 1;
  for (const auto& r : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.den().get_mpz_t());
  std::array<BigInt, 6> out;
  BigInt g = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    out[i] = ::abs(v[i].num() * (lcm / v[i].den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& x : out) x /= g;
  return out;
}

/// All admissible (p, q) with min_h <= p + q <= max_h by exhaustive scan
/// of the square [1, max_h]^2.
inline std::vector<std::pair<std::int64_t, std::int64_t>> brute_force_pairs(
    std::int64_t min_h, std::int64_t max_h) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = 1; p <= max_h; ++p) {
    for (std::int64_t q = 1; q <= max_h; ++q) {
      const std::int64_t h = p + q;
      if (h < min_h || h > max_h) continue;
      if (std::gcd(p, q) != 1) continue;
      if (p == q || p == 3 * q) continue;
      // t > sqrt(3)
      if (!(p * p > 3 * q * q)) continue;
      out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(), [](auto x, auto y) {
    return std::pair(x.first + x.second, x.first) <
           std::pair(y.first + y.second, y.first);
  });
  return out;
}

/// Residues y^2 mod m for y = 0..m-1.
inline std::set<std::uint64_t> squares_mod(std::uint64_t m) {
  std::set<std::uint64_t> s;
  for (std::uint64_t y = 0; y < m; ++y) s.insert(y * y % m);
  return s;
}

}  // namespace npc::oracle
