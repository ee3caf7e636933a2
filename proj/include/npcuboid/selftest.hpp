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

// Embedded property suite behind `npcuboid selftest`. Runs against a given
// set of family tables so that a corrupted table can be shown to fail.

#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "npcuboid/exact_arith.hpp"
#include "npcuboid/parametrizations.hpp"
#include "npcuboid/random.hpp"
#include "npcuboid/search.hpp"
#include "npcuboid/verifier.hpp"

namespace npc {

inline constexpr std::uint64_t kSelftestSeed = 0x5eedc0bef00dULL;

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = false;
  std::string detail;  // first counterexample or exception text
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Runs check(rng) `cases` times; stops at the first false or exception.
inline PropertyResult run_property(
    const std::string& name, std::size_t cases, std::uint64_t seed,
    const std::function<bool(Rng&, std::string&)>& check) {
  PropertyResult r{name, cases, true, {}};
  Rng rng(seed ^ fnv1a(name));
  for (std::size_t i = 0; i < cases; ++i) {
    std::string detail;
    try {
      if (!check(rng, detail)) {
        r.passed = false;
        r.detail = "case " + std::to_string(i) + ": " + detail;
        return r;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = "case " + std::to_string(i) + ": " + detail + " threw " + e.what();
      return r;
    }
  }
  return r;
}

// Homogenized degree-4 multiplier at t = p/q.
inline BigInt quartic(std::int64_t c0, std::int64_t c2, const BigInt& p,
                      const BigInt& q) {
  return eval_homogeneous(factors::make({c0, 0, c2, 0, 1}), 4, p, q);
}

}  // namespace detail

inline std::vector<PropertyResult> run_selftest(
    const ParamTables& tables = builtin_tables(),
    std::uint64_t seed = kSelftestSeed) {
  using detail::run_property;
  constexpr std::int64_t kBound = 1'000'000;
  std::vector<PropertyResult> out;

  out.push_back(run_property("identity7", 1000, seed, [](Rng& rng, std::string& d) {
    Ratio T = random_ratio(rng, kBound);
    d = "T = " + T.str();
    return verify_identity7(T);
  }));

  out.push_back(run_property("condition8", 1000, seed, [](Rng& rng, std::string& d) {
    Ratio t = random_nonzero_ratio(rng, kBound);
    d = "t = " + t.str();
    return check_condition8(t);
  }));

  out.push_back(run_property("alpha-beta", 500, seed, [](Rng& rng, std::string& d) {
    RationalParam t = random_nontrivial_t(rng, kBound);
    d = "t = " + t.str();
    XiZeta xz = xi_zeta_from_t(t);
    AlphaBeta ab = alpha_beta_from_t(t);
    return ab.alpha * ab.beta == xz.xi() && ab.alpha / ab.beta == xz.zeta() &&
           ab.alpha * ab.alpha == xz.xi() * xz.zeta();
  }));

  out.push_back(run_property("square-conditions-c4-c5", 500, seed, [](Rng& rng, std::string& d) {
    RationalParam t = random_nontrivial_t(rng, kBound);
    d = "t = " + t.str();
    Theorem1Result r = check_theorem1(xi_zeta_from_t(t));
    return r.c4 && r.c5;
  }));

  out.push_back(run_property(
      "pythagorean-identities", 300, seed, [&](Rng& rng, std::string& d) {
        RationalParam t = random_nontrivial_t(rng, kBound);
        for (const auto& table : tables) {
          d = "param " + std::string(to_string(table.id)) + ", t = " + t.str();
          auto [a, b, c, dac, dbc, ds] = evaluate_raw(table, t.p(), t.q());
          if (a * a + c * c != dac * dac) return false;
          if (b * b + c * c != dbc * dbc) return false;
          if (a * a + b * b + c * c != ds * ds) return false;
        }
        return true;
      }));

  out.push_back(run_property(
      "cross-identity I/III", 500, seed, [&](Rng& rng, std::string& d) {
        RationalParam t = random_nontrivial_t(rng, kBound);
        d = "t = " + t.str();
        auto one = evaluate_raw(tables[0], t.p(), t.q());
        auto three = evaluate_raw(tables[2], t.p(), t.q());
        return three[0] == one[4] && three[2] == one[0] && three[3] == one[5];
      }));

  out.push_back(run_property(
      "cross-identity II/I", 500, seed, [&](Rng& rng, std::string& d) {
        RationalParam t = random_nontrivial_t(rng, kBound);
        d = "t = " + t.str();
        const BigInt& p = t.p();
        const BigInt& q = t.q();
        auto one = evaluate_raw(tables[0], p, q);
        auto two = evaluate_raw(tables[1], p, q);
        const BigInt m2 = detail::quartic(9, -2, p, q);    // t^4 - 2t^2 + 9
        const BigInt m10 = detail::quartic(9, -10, p, q);  // t^4 - 10t^2 + 9
        const BigInt m3 = 4 * p * q * (p * p - 3 * q * q);  // 4t(t^2 - 3)
        return two[0] == one[0] * m2 && two[1] == m10 * one[5] &&
               two[2] == m3 * one[1] && two[3] == m3 * one[5] &&
               two[5] == m2 * one[5];
      }));

  out.push_back(run_property(
      "symmetry t<->3/t, t<->-t", 200, seed, [&](Rng& rng, std::string& d) {
        RationalParam t = random_nontrivial_t(rng, kBound);
        for (const auto& table : tables) {
          d = "param " + std::string(to_string(table.id)) + ", t = " + t.str();
          auto base = canonicalize(generate(table, t.value()));
          auto inv = canonicalize(generate(table, Ratio(3) / t.value()));
          auto neg = canonicalize(generate(table, -t.value()));
          if (!same_quantities(base, inv) || !same_quantities(base, neg)) {
            return false;
          }
        }
        return true;
      }));

  out.push_back(run_property(
      "xi-zeta-consistency", 200, seed, [&](Rng& rng, std::string& d) {
        RationalParam t = random_nontrivial_t(rng, kBound);
        d = "t = " + t.str();
        auto built = canonicalize(build_npc_from_xi_zeta(xi_zeta_from_t(t)));
        auto gen = canonicalize(generate(tables[0], t.value()));
        return same_quantities(built, gen);
      }));

  {
    const SieveConfig cfg(default_sieve_moduli(), tables);
    out.push_back(run_property(
        "sieve-soundness", 100000, seed, [&](Rng& rng, std::string& d) {
          BigInt k = random_bigint(rng, 167);  // up to ~10^50
          d = "k = " + to_string(k);
          return !sieve_rejects_value(k * k, cfg);
        }));
    out.push_back(run_property(
        "sieve-residues", 300, seed, [&](Rng& rng, std::string& d) {
          const std::int64_t p = random_int(rng, 2, 100000);
          const std::int64_t q = random_int(rng, 1, 100000);
          d = "p/q = " + std::to_string(p) + "/" + std::to_string(q);
          for (const auto& table : tables) {
            auto raw = evaluate_raw(table, BigInt(p), BigInt(q));
            const BigInt s = raw[0] * raw[0] + raw[1] * raw[1];
            for (std::size_t i = 0; i < cfg.moduli().size(); ++i) {
              if (cfg.condition_mod(table.id, i, p, q) !=
                  mpz_fdiv_ui(s.get_mpz_t(), cfg.moduli()[i])) {
                return false;
              }
            }
          }
          return true;
        }));
  }
  return out;
}

inline bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

inline void print_selftest(std::ostream& os,
                           const std::vector<PropertyResult>& results) {
  for (const auto& r : results) {
    if (r.passed) {
      os << "ok    " << r.name << " (" << r.cases << " cases)\n";
    } else {
      os << "FAIL  " << r.name << ": " << r.detail << '\n';
    }
  }
}

}  // namespace npc
