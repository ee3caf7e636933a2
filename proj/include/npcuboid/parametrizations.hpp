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

/**
 * @file parametrizations.hpp
 * @brief One-parameter families of nearly-perfect cuboids.
 *
 * A nearly-perfect cuboid here has integer sides a, b, c, integer face
 * diagonals d_ac, d_bc, an integer space diagonal d_s, and an irrational
 * face diagonal over (a, b). Three polynomial families in a rational
 * parameter t produce such boxes. Each family is stored in factored form
 * (used to name a vanishing factor) and as expanded integer coefficients
 * (used for evaluation).
 *
 * Evaluation is homogenized: for t = p/q every entry of a family is
 * multiplied by q^D (D = 8 for I and III, 12 for II), so each quantity is
 * sum_k c_k p^k q^(D-k), an exact integer.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "npcuboid/exact_arith.hpp"

namespace npc {

enum class ParamId { I, II, III };

inline constexpr std::array<ParamId, 3> kAllParams = {ParamId::I, ParamId::II,
                                                      ParamId::III};

inline std::string_view to_string(ParamId id) {
  switch (id) {
    case ParamId::I: return "I";
    case ParamId::II: return "II";
    case ParamId::III: return "III";
  }
  return "?";
}

inline std::optional<ParamId> parse_param_id(std::string_view s) {
  if (s == "I") return ParamId::I;
  if (s == "II") return ParamId::II;
  if (s == "III") return ParamId::III;
  return std::nullopt;
}

/// Raised when a family entry vanishes at the requested parameter.
class DegenerateError : public DomainError {
 public:
  DegenerateError(std::string factor, const std::string& what)
      : DomainError(what), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

// ---------------------------------------------------------------------------
// Polynomials

inline constexpr int kMaxDegree = 12;

/// Dense integer polynomial in t, ascending powers, degree <= 12.
struct IntPoly {
  std::array<std::int64_t, kMaxDegree + 1> c{};

  constexpr int degree() const {
    for (int k = kMaxDegree; k > 0; --k)
      if (c[k] != 0) return k;
    return 0;
  }

  friend constexpr IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    IntPoly r;
    for (int i = 0; i <= kMaxDegree; ++i) {
      if (x.c[i] == 0) continue;
      for (int j = 0; i + j <= kMaxDegree; ++j) r.c[i + j] += x.c[i] * y.c[j];
    }
    return r;
  }
  friend constexpr bool operator==(const IntPoly&, const IntPoly&) = default;
};

/// Evaluates sum_k c_k p^k q^(D-k) by Horner's rule in p, multiplying in
/// one more power of q at each step down.
inline BigInt eval_homogeneous(const IntPoly& poly, int total_degree,
                               const BigInt& p, const BigInt& q) {
  BigInt acc = poly.c[total_degree];
  BigInt q_pow = 1;
  for (int k = total_degree - 1; k >= 0; --k) {
    q_pow *= q;
    acc *= p;
    if (poly.c[k] != 0) acc += poly.c[k] * q_pow;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Family tables

struct Factor {
  std::string_view text;
  IntPoly poly;
};

struct Formula {
  std::string_view quantity;  // "a", "b", "c", "d_ac", "d_bc", "d_s"
  std::int64_t scale = 1;
  std::vector<Factor> factors;
  IntPoly expanded;
};

struct ParamTable {
  ParamId id;
  int degree;  // homogenization degree
  std::array<Formula, 6> formulas;
};

using ParamTables = std::array<ParamTable, 3>;

inline constexpr std::array<std::string_view, 6> kQuantityNames = {
    "a", "b", "c", "d_ac", "d_bc", "d_s"};

namespace factors {

inline constexpr IntPoly make(std::initializer_list<std::int64_t> coeffs) {
  IntPoly p;
  int k = 0;
  for (auto v : coeffs) p.c[k++] = v;
  return p;
}

inline const Factor kT{"t", make({0, 1})};
inline const Factor kT2p3{"t²+3", make({3, 0, 1})};
inline const Factor kT2m3{"t²−3", make({-3, 0, 1})};
inline const Factor kT4m9{"t⁴−9", make({-9, 0, 0, 0, 1})};
inline const Factor kT4m10{"t⁴−10t²+9", make({9, 0, -10, 0, 1})};
inline const Factor kT4p2{"t⁴+2t²+9", make({9, 0, 2, 0, 1})};
inline const Factor kT4m2{"t⁴−2t²+9", make({9, 0, -2, 0, 1})};
inline const Factor kT4p10{"t⁴+10t²+9", make({9, 0, 10, 0, 1})};
inline const Factor kT4m1{"t⁴−1", make({-1, 0, 0, 0, 1})};
inline const Factor kT4m81{"t⁴−81", make({-81, 0, 0, 0, 1})};
inline const Factor kT8p46{"t⁸+46t⁴+81", make({81, 0, 0, 0, 46, 0, 0, 0, 1})};
inline const Factor kT8m82{"t⁸−82t⁴+81", make({81, 0, 0, 0, -82, 0, 0, 0, 1})};

}  // namespace factors

inline Formula make_formula(std::string_view quantity, std::int64_t scale,
                            std::vector<Factor> fs) {
  IntPoly e = factors::make({scale});
  for (const auto& f : fs) e = e * f.poly;
  return Formula{quantity, scale, std::move(fs), e};
}

/// Builds the three families from their factored forms.
inline ParamTables make_param_tables() {
  using namespace factors;
  ParamTable one{
      ParamId::I,
      8,
      {make_formula("a", 16, {kT, kT, kT4m9}),
       make_formula("b", 1, {kT4m10, kT4p2}),
       make_formula("c", 4, {kT, kT2p3, kT4m10}),
       make_formula("d_ac", 4, {kT, kT2p3, kT4m2}),
       make_formula("d_bc", 1, {kT4m1, kT4m81}),
       make_formula("d_s", 1, {kT8p46})}};
  ParamTable two{
      ParamId::II,
      12,
      {make_formula("a", 16, {kT, kT, kT4m9, kT4m2}),
       make_formula("b", 1, {kT4m10, kT8p46}),
       make_formula("c", 4, {kT, kT2m3, kT4m10, kT4p2}),
       make_formula("d_ac", 4, {kT, kT2m3, kT8p46}),
       make_formula("d_bc", 1, {kT4m2, kT8m82}),
       make_formula("d_s", 1, {kT4m2, kT8p46})}};
  ParamTable three{
      ParamId::III,
      8,
      {make_formula("a", 1, {kT4m1, kT4m81}),
       make_formula("b", 4, {kT, kT2m3, kT4p2}),
       make_formula("c", 16, {kT, kT, kT4m9}),
       make_formula("d_ac", 1, {kT8p46}),
       make_formula("d_bc", 4, {kT, kT2m3, kT4p10}),
       make_formula("d_s", 1, {kT4m2, kT4p10})}};
  return {std::move(one), std::move(two), std::move(three)};
}

inline const ParamTables& builtin_tables() {
  static const ParamTables tables = make_param_tables();
  return tables;
}

inline const ParamTable& table_for(ParamId id) {
  return builtin_tables()[static_cast<std::size_t>(id)];
}

// ---------------------------------------------------------------------------
// Parameter types

/// Nontrivial rational parameter t = p/q in lowest terms, q >= 1.
/// Excludes t = 0, +-1, +-3, where a family entry vanishes.
class RationalParam {
 public:
  RationalParam(const BigInt& p, const BigInt& q) : RationalParam(Ratio(p, q)) {}
  explicit RationalParam(const Ratio& t) : p_(t.num()), q_(t.den()) {
    if (p_ == 0 || abs(p_) == q_ || abs(p_) == 3 * q_) {
      throw DomainError("trivial parameter t = " + t.str());
    }
  }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  Ratio value() const { return Ratio(p_, q_); }
  std::string str() const { return value().str(); }

  friend bool operator==(const RationalParam&, const RationalParam&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

/// Pair (xi, zeta) of distinct rationals outside {0, +-1}.
class XiZeta {
 public:
  XiZeta(Ratio xi, Ratio zeta) : xi_(std::move(xi)), zeta_(std::move(zeta)) {
    auto trivial = [](const Ratio& r) {
      return r.is_zero() || r == Ratio(1) || r == Ratio(-1);
    };
    if (trivial(xi_)) throw PreconditionError("trivial xi = " + xi_.str());
    if (trivial(zeta_)) throw PreconditionError("trivial zeta = " + zeta_.str());
    if (xi_ == zeta_) throw PreconditionError("xi and zeta must differ");
  }

  const Ratio& xi() const { return xi_; }
  const Ratio& zeta() const { return zeta_; }

  friend bool operator==(const XiZeta&, const XiZeta&) = default;

 private:
  Ratio xi_;
  Ratio zeta_;
};

struct AlphaBeta {
  Ratio alpha;
  Ratio beta;
};

// ---------------------------------------------------------------------------
// Candidates

enum class Source { I, II, III, Theorem2 };

inline std::string_view to_string(Source s) {
  switch (s) {
    case Source::I: return "I";
    case Source::II: return "II";
    case Source::III: return "III";
    case Source::Theorem2: return "theorem2";
  }
  return "?";
}

inline Source source_of(ParamId id) {
  return static_cast<Source>(static_cast<int>(id));
}

/// Integer box with face diagonals d_ac, d_bc and space diagonal d_s.
/// dab_sq = a^2 + b^2; dab_root is present iff that is a perfect square.
struct CuboidCandidate {
  BigInt a, b, c, d_ac, d_bc, d_s;
  BigInt dab_sq;
  std::optional<BigInt> dab_root;
  BigInt primitive_gcd = 1;  // factor divided out of the raw values
  Source source = Source::I;
  std::optional<Ratio> t;
  std::optional<XiZeta> xi_zeta;

  std::array<BigInt, 6> quantities() const { return {a, b, c, d_ac, d_bc, d_s}; }
  bool dab_is_square() const { return dab_root.has_value(); }
};

/// Same six integers, ignoring provenance.
inline bool same_quantities(const CuboidCandidate& x, const CuboidCandidate& y) {
  return x.quantities() == y.quantities();
}

inline void set_dab(CuboidCandidate& c) {
  c.dab_sq = c.a * c.a + c.b * c.b;
  SqrtResult r = isqrt(c.dab_sq);
  if (r.exact) {
    c.dab_root = std::move(r.root);
  } else {
    c.dab_root.reset();
  }
}

/// Absolute values, division by the collective gcd, and the a^2+b^2 status.
inline CuboidCandidate make_primitive_candidate(std::array<BigInt, 6> raw,
                                                Source source) {
  BigInt g = 0;
  for (auto& v : raw) {
    v = abs(v);
    g = gcd(g, v);
  }
  if (g == 0) throw DegenerateError("all", "degenerate: all quantities vanish");
  for (auto& v : raw) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  CuboidCandidate c;
  c.a = std::move(raw[0]);
  c.b = std::move(raw[1]);
  c.c = std::move(raw[2]);
  c.d_ac = std::move(raw[3]);
  c.d_bc = std::move(raw[4]);
  c.d_s = std::move(raw[5]);
  c.primitive_gcd = std::move(g);
  c.source = source;
  set_dab(c);
  return c;
}

// ---------------------------------------------------------------------------
// Operations

/// Signed homogenized values of the six entries of a family at t = p/q,
/// before absolute values or gcd reduction.
inline std::array<BigInt, 6> evaluate_raw(const ParamTable& table,
                                          const BigInt& p, const BigInt& q) {
  std::array<BigInt, 6> out;
  for (std::size_t i = 0; i < 6; ++i)
    out[i] = eval_homogeneous(table.formulas[i].expanded, table.degree, p, q);
  return out;
}

inline std::array<BigInt, 6> evaluate_raw(ParamId id, const BigInt& p,
                                          const BigInt& q) {
  return evaluate_raw(table_for(id), p, q);
}

/// Throws DegenerateError naming the first factor that vanishes at t.
inline void check_nondegenerate(const ParamTable& table, const Ratio& t) {
  for (const auto& f : table.formulas) {
    for (const auto& factor : f.factors) {
      const int d = factor.poly.degree();
      if (eval_homogeneous(factor.poly, d, t.num(), t.den()) == 0) {
        throw DegenerateError(std::string(factor.text),
                              "degenerate: " + std::string(factor.text) +
                                  " = 0");
      }
    }
  }
}

inline CuboidCandidate generate(const ParamTable& table, const Ratio& t) {
  check_nondegenerate(table, t);
  auto raw = evaluate_raw(table, t.num(), t.den());
  for (std::size_t i = 0; i < 6; ++i) {
    if (raw[i] == 0) {
      throw DegenerateError(std::string(table.formulas[i].quantity),
                            "degenerate: " +
                                std::string(table.formulas[i].quantity) +
                                " = 0");
    }
  }
  CuboidCandidate c = make_primitive_candidate(std::move(raw),
                                               source_of(table.id));
  c.t = t;
  return c;
}

inline CuboidCandidate generate(ParamId id, const Ratio& t) {
  return generate(table_for(id), t);
}

inline CuboidCandidate generate(ParamId id, const RationalParam& t) {
  return generate(table_for(id), t.value());
}

/// xi = (t^2+3)/(4t), zeta = xi * ((t^2-3)/(2t))^2.
inline XiZeta xi_zeta_from_t(const RationalParam& param) {
  const Ratio t = param.value();
  const Ratio t2 = t * t;
  Ratio xi = (t2 + Ratio(3)) / (Ratio(4) * t);
  Ratio s = (t2 - Ratio(3)) / (Ratio(2) * t);
  Ratio zeta = xi * s * s;
  return XiZeta(std::move(xi), std::move(zeta));
}

/// alpha = (t^4-9)/(8t^2), beta = 2t/(t^2-3).
inline AlphaBeta alpha_beta_from_t(const RationalParam& param) {
  const Ratio t = param.value();
  const Ratio t2 = t * t;
  return {(t2 * t2 - Ratio(9)) / (Ratio(8) * t2),
          (Ratio(2) * t) / (t2 - Ratio(3))};
}

struct Theorem1Result {
  bool c4 = false;  // xi*zeta is a square
  bool c5 = false;  // (1-xi^2)(1-zeta^2) is a square
  bool c6 = false;  // (1-xi^2)(1-zeta^2) + 4 xi zeta is a square

  bool all() const { return c4 && c5 && c6; }
  friend bool operator==(const Theorem1Result&, const Theorem1Result&) = default;
};

inline Theorem1Result check_theorem1(const XiZeta& xz) {
  const Ratio one(1);
  const Ratio prod = xz.xi() * xz.zeta();
  const Ratio f = (one - xz.xi() * xz.xi()) * (one - xz.zeta() * xz.zeta());
  return {is_rational_square(prod), is_rational_square(f),
          is_rational_square(f + Ratio(4) * prod)};
}

/// Nearly-perfect cuboid from a pair satisfying the first two conditions
/// of check_theorem1. The side ratios over a are
///   d_s = (1+A^2)/2A, d_bc = (1-A^2)/2A, d_ac = (1+B^2)/2B, c = (1-B^2)/2B,
///   b = sqrt((1-xi^2)(1-zeta^2) / (4 xi zeta)),
/// with A^2 = xi*zeta and B^2 = xi/zeta.
inline CuboidCandidate build_npc_from_xi_zeta(const XiZeta& xz) {
  const Ratio one(1);
  const Ratio two(2);
  const Ratio prod = xz.xi() * xz.zeta();
  auto alpha = rational_sqrt(prod);
  if (!alpha) {
    throw PreconditionError("xi*zeta = " + prod.str() +
                            " is not a rational square");
  }
  auto beta = rational_sqrt(xz.xi() / xz.zeta());
  if (!beta) {
    throw PreconditionError("xi/zeta is not a rational square");
  }
  const Ratio f = (one - xz.xi() * xz.xi()) * (one - xz.zeta() * xz.zeta());
  auto b_over_a = rational_sqrt(f / (Ratio(4) * prod));
  if (!b_over_a) {
    throw PreconditionError("(1-xi^2)(1-zeta^2) = " + f.str() +
                            " is not a rational square");
  }
  const Ratio a2 = *alpha * *alpha;
  const Ratio b2 = *beta * *beta;
  std::array<Ratio, 6> ratios = {
      one,
      *b_over_a,
      (one - b2) / (two * *beta),
      (one + b2) / (two * *beta),
      (one - a2) / (two * *alpha),
      (one + a2) / (two * *alpha),
  };
  BigInt lcm = 1;
  for (const auto& r : ratios) {
    if (r.is_zero()) {
      throw DegenerateError("ratio", "degenerate: a side or diagonal vanishes");
    }
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.den().get_mpz_t());
  }
  std::array<BigInt, 6> raw;
  for (std::size_t i = 0; i < 6; ++i)
    raw[i] = ratios[i].num() * (lcm / ratios[i].den());
  CuboidCandidate c = make_primitive_candidate(std::move(raw), Source::Theorem2);
  c.xi_zeta = xz;
  return c;
}

/// Both sides of (1-T^2)(1-(4T^3-3T)^2) = [(1-T^2)(1-4T^2)]^2.
inline bool verify_identity7(const Ratio& T) {
  const Ratio one(1);
  const Ratio T2 = T * T;
  const Ratio cheb = Ratio(4) * T2 * T - Ratio(3) * T;
  const Ratio lhs = (one - T2) * (one - cheb * cheb);
  const Ratio inner = (one - T2) * (one - Ratio(4) * T2);
  return lhs == inner * inner;
}

/// With T = (t^2+3)/(4t), whether 4T^2 - 3 is a rational square.
inline bool check_condition8(const Ratio& t) {
  if (t.is_zero()) throw DomainError("check_condition8: t = 0");
  const Ratio T = (t * t + Ratio(3)) / (Ratio(4) * t);
  return is_rational_square(Ratio(4) * T * T - Ratio(3));
}

}  // namespace npc
