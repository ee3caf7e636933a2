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

// Candidate records as JSON lines and CSV rows. Every integer is written as
// a decimal string so consumers with 53- or 64-bit integers lose nothing.
//
//   {"param":"I","p":"2","q":"1","a":"448",...,"dab_sq":"445729",
//    "primitive_gcd":"1"}
//
// dab_root is present only when dab_sq is a perfect square. Candidates built
// from (xi, zeta) carry "xi"/"zeta" instead of "p"/"q".

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "npcuboid/exact_arith.hpp"
#include "npcuboid/parametrizations.hpp"

namespace npc {

using json = nlohmann::ordered_json;

/// Malformed serialized input (bad JSON, missing or non-decimal fields).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kCsvHeader =
    "param,p,q,a,b,c,d_ac,d_bc,d_s,dab_sq,dab_root,primitive_gcd";

inline json candidate_to_json(const CuboidCandidate& c) {
  json j;
  j["param"] = std::string(to_string(c.source));
  if (c.t) {
    j["p"] = to_string(c.t->num());
    j["q"] = to_string(c.t->den());
  }
  if (c.xi_zeta) {
    j["xi"] = c.xi_zeta->xi().str();
    j["zeta"] = c.xi_zeta->zeta().str();
  }
  j["a"] = to_string(c.a);
  j["b"] = to_string(c.b);
  j["c"] = to_string(c.c);
  j["d_ac"] = to_string(c.d_ac);
  j["d_bc"] = to_string(c.d_bc);
  j["d_s"] = to_string(c.d_s);
  j["dab_sq"] = to_string(c.dab_sq);
  if (c.dab_root) j["dab_root"] = to_string(*c.dab_root);
  j["primitive_gcd"] = to_string(c.primitive_gcd);
  return j;
}

inline std::string candidate_to_jsonl(const CuboidCandidate& c) {
  return candidate_to_json(c).dump();
}

inline std::string candidate_to_csv(const CuboidCandidate& c) {
  std::ostringstream os;
  os << to_string(c.source) << ','
     << (c.t ? to_string(c.t->num()) : std::string()) << ','
     << (c.t ? to_string(c.t->den()) : std::string()) << ',' << c.a << ','
     << c.b << ',' << c.c << ',' << c.d_ac << ',' << c.d_bc << ',' << c.d_s
     << ',' << c.dab_sq << ','
     << (c.dab_root ? to_string(*c.dab_root) : std::string()) << ','
     << c.primitive_gcd;
  return os.str();
}

namespace detail {

inline BigInt require_int(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field ") + key);
  if (!it->is_string()) {
    throw FormatError(std::string("field ") + key +
                      " must be a decimal string");
  }
  auto v = parse_bigint(it->get<std::string>());
  if (!v) throw FormatError(std::string("field ") + key + " is not an integer");
  return *v;
}

inline Ratio require_ratio(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw FormatError(std::string("missing or non-string field ") + key);
  }
  auto v = parse_ratio(it->get<std::string>());
  if (!v) throw FormatError(std::string("field ") + key + " is not a ratio");
  return *v;
}

}  // namespace detail

inline CuboidCandidate candidate_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("record is not a JSON object");
  CuboidCandidate c;
  auto param = j.find("param");
  if (param == j.end() || !param->is_string()) {
    throw FormatError("missing field param");
  }
  const std::string src = param->get<std::string>();
  if (src == "theorem2") {
    c.source = Source::Theorem2;
  } else if (auto id = parse_param_id(src)) {
    c.source = source_of(*id);
  } else {
    throw FormatError("unknown param " + src);
  }
  if (j.contains("p") || j.contains("q")) {
    BigInt p = detail::require_int(j, "p");
    BigInt q = detail::require_int(j, "q");
    if (q == 0) throw FormatError("q = 0");
    c.t = Ratio(p, q);
  }
  if (j.contains("xi") || j.contains("zeta")) {
    try {
      c.xi_zeta = XiZeta(detail::require_ratio(j, "xi"),
                         detail::require_ratio(j, "zeta"));
    } catch (const DomainError& e) {
      throw FormatError(e.what());
    }
  }
  c.a = detail::require_int(j, "a");
  c.b = detail::require_int(j, "b");
  c.c = detail::require_int(j, "c");
  c.d_ac = detail::require_int(j, "d_ac");
  c.d_bc = detail::require_int(j, "d_bc");
  c.d_s = detail::require_int(j, "d_s");
  c.dab_sq = detail::require_int(j, "dab_sq");
  if (j.contains("dab_root")) c.dab_root = detail::require_int(j, "dab_root");
  c.primitive_gcd =
      j.contains("primitive_gcd") ? detail::require_int(j, "primitive_gcd") : 1;
  return c;
}

inline CuboidCandidate candidate_from_jsonl(const std::string& line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw FormatError("invalid JSON");
  return candidate_from_json(j);
}

inline void print_candidate_human(std::ostream& os, const CuboidCandidate& c) {
  os << "source: " << to_string(c.source);
  if (c.t) os << "  t = " << c.t->str();
  if (c.xi_zeta) {
    os << "  xi = " << c.xi_zeta->xi() << "  zeta = " << c.xi_zeta->zeta();
  }
  os << "\n"
     << "sides:     a = " << c.a << ", b = " << c.b << ", c = " << c.c << "\n"
     << "diagonals: d_ac = " << c.d_ac << ", d_bc = " << c.d_bc
     << ", d_s = " << c.d_s << "\n"
     << "a^2 + b^2 = " << c.dab_sq;
  if (c.dab_root) {
    os << " = " << *c.dab_root << "^2 (square)\n";
  } else {
    os << " (not a square)\n";
  }
  os << "primitive gcd removed: " << c.primitive_gcd << "\n";
}

}  // namespace npc
