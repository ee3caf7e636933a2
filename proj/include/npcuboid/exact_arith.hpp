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
 * @file exact_arith.hpp
 * @brief Exact integer and rational arithmetic with square predicates.
 *
 * BigInt is GMP's mpz_class. Ratio is always kept in lowest terms with a
 * positive denominator, so zero is uniquely 0/1 and equality is structural.
 * Nothing in this header touches floating point.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace npc {

using BigInt = mpz_class;

/// Base for all argument/domain failures raised by the library.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A precondition of an operation (not of a type) does not hold.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline BigInt abs(const BigInt& x) { return ::abs(x); }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline int sign(const BigInt& x) { return sgn(x); }

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

/// Parses an optionally signed decimal integer. Rejects anything else,
/// including empty strings, whitespace and "+".
inline std::optional<BigInt> parse_bigint(std::string_view s) {
  std::size_t i = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return std::nullopt;
  }
  return BigInt(std::string(s), 10);
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

struct SqrtResult {
  BigInt root;
  bool exact = false;
};

/// floor(sqrt(n)) by integer Newton iteration.
///
/// The initial guess 2^ceil(bits/2) is never below the true root, and from
/// above the iterates decrease monotonically to floor(sqrt(n)), so the loop
/// stops at the first non-decreasing step.
inline SqrtResult isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt: negative argument " + to_string(n));
  if (n < 2) return {n, true};

  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return {x, x * x == n};
}

namespace detail {

// Squares modulo 64, 63, 65 and 11 as bit masks. Cheap rejection before
// the Newton iteration.
constexpr std::uint64_t square_mask(unsigned m) {
  std::uint64_t mask = 0;
  for (unsigned y = 0; y < m; ++y) mask |= std::uint64_t{1} << (y * y % m);
  return mask;
}
inline constexpr std::uint64_t kSquares64 = square_mask(64);
inline constexpr std::uint64_t kSquares63 = square_mask(63);
inline constexpr std::uint64_t kSquares11 = square_mask(11);

}  // namespace detail

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 64ul * 63 * 11);
  if (!((detail::kSquares64 >> (r % 64)) & 1)) return false;
  if (!((detail::kSquares63 >> (r % 63)) & 1)) return false;
  if (!((detail::kSquares11 >> (r % 11)) & 1)) return false;
  return isqrt(n).exact;
}

/// Exact rational number in lowest terms with a positive denominator.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(const BigInt& n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Ratio(long n) : num_(n), den_(1) {}           // NOLINT(implicit)
  Ratio(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  Ratio operator-() const { return from_reduced(-num_, den_); }
  Ratio reciprocal() const {
    if (num_ == 0) throw DomainError("reciprocal of zero");
    return Ratio(den_, num_);
  }

  friend Ratio operator+(const Ratio& x, const Ratio& y) {
    return Ratio(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Ratio operator-(const Ratio& x, const Ratio& y) {
    return Ratio(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Ratio operator*(const Ratio& x, const Ratio& y) {
    return Ratio(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Ratio operator/(const Ratio& x, const Ratio& y) {
    if (y.num_ == 0) throw DomainError("division by zero");
    return Ratio(x.num_ * y.den_, x.den_ * y.num_);
  }
  Ratio& operator+=(const Ratio& y) { return *this = *this + y; }
  Ratio& operator-=(const Ratio& y) { return *this = *this - y; }
  Ratio& operator*=(const Ratio& y) { return *this = *this * y; }
  Ratio& operator/=(const Ratio& y) { return *this = *this / y; }

  friend bool operator==(const Ratio& x, const Ratio& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator<(const Ratio& x, const Ratio& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Ratio& x, const Ratio& y) { return y < x; }

  std::string str() const {
    return to_string(num_) + "/" + to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
    return os << r.str();
  }

 private:
  static Ratio from_reduced(BigInt n, BigInt d) {
    Ratio r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  void normalize() {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Ratio reduce(const BigInt& num, const BigInt& den) {
  return Ratio(num, den);
}

inline Ratio pow(const Ratio& r, unsigned long exp) {
  return Ratio(pow(r.num(), exp), pow(r.den(), exp));
}

inline bool is_rational_square(const Ratio& r) {
  return r.sign() >= 0 && is_perfect_square(r.num()) &&
         is_perfect_square(r.den());
}

/// Non-negative rational square root, or nullopt when r is not a square.
inline std::optional<Ratio> rational_sqrt(const Ratio& r) {
  if (r.sign() < 0) return std::nullopt;
  SqrtResult n = isqrt(r.num());
  if (!n.exact) return std::nullopt;
  SqrtResult d = isqrt(r.den());
  if (!d.exact) return std::nullopt;
  return Ratio(std::move(n.root), std::move(d.root));
}

/// Accepts "P/Q" or "P" with decimal integers; the result is reduced.
inline std::optional<Ratio> parse_ratio(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_bigint(s);
    if (!n) return std::nullopt;
    return Ratio(*n);
  }
  auto n = parse_bigint(s.substr(0, slash));
  auto d = parse_bigint(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Ratio(*n, *d);
}

}  // namespace npc
