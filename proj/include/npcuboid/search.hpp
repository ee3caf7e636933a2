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
 * @file search.hpp
 * @brief Height-ordered search for a rational a^2 + b^2 diagonal.
 *
 * For each family and each reduced t = p/q the square of the missing face
 * diagonal is S(p, q) = A(p, q)^2 + B(p, q)^2, where A and B are the
 * homogenized a and b entries. A perfect square S would give a perfect
 * cuboid.
 *
 * Parameters are walked by height H = p + q, ascending, then by p. Only the
 * fundamental domain p^2 > 3 q^2 is visited: t -> -t and t -> 3/t map every
 * family onto the same boxes. Each pair first passes a quadratic residue
 * sieve that evaluates S modulo small integers with pre-reduced
 * coefficients; only survivors are evaluated exactly.
 *
 * run_search splits heights into contiguous chunks, one per worker, and
 * commits results in height order from the calling thread, which is the
 * only writer of the checkpoint file. A checkpoint always sits on a height
 * boundary, so a resumed run repeats no completed height and skips none.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "npcuboid/exact_arith.hpp"
#include "npcuboid/parametrizations.hpp"
#include "npcuboid/records.hpp"
#include "npcuboid/verifier.hpp"

namespace npc {

/// A square S whose candidate does not verify, or a sieve rejection of a
/// square in audit mode. Either means the arithmetic is broken.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamPair {
  std::int64_t p;
  std::int64_t q;
  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

struct SearchWindow {
  std::int64_t min_height = 3;
  std::int64_t max_height = 3;
  std::vector<ParamId> param_ids = {kAllParams.begin(), kAllParams.end()};

  void validate() const {
    if (min_height < 3) throw DomainError("min_height must be >= 3");
    if (max_height < min_height) {
      throw DomainError("max_height must be >= min_height");
    }
    if (param_ids.empty()) throw DomainError("no parametrization selected");
  }
  friend bool operator==(const SearchWindow&, const SearchWindow&) = default;
};

// ---------------------------------------------------------------------------
// Enumeration

/// Calls f(p, q) for every admissible pair of height h, ascending p.
template <typename F>
void for_each_pair_of_height(std::int64_t h, F&& f) {
  for (std::int64_t p = 1; p < h; ++p) {
    const std::int64_t q = h - p;
    if (p * p <= 3 * q * q) continue;
    if (p == q || p == 3 * q) continue;
    if (std::gcd(p, q) != 1) continue;
    f(ParamPair{p, q});
  }
}

inline std::vector<ParamPair> enumerate_params(const SearchWindow& w) {
  w.validate();
  std::vector<ParamPair> out;
  for (std::int64_t h = w.min_height; h <= w.max_height; ++h)
    for_each_pair_of_height(h, [&](ParamPair pq) { out.push_back(pq); });
  return out;
}

// ---------------------------------------------------------------------------
// Sieve

inline const std::vector<std::uint32_t>& default_sieve_moduli() {
  // Every prime in [17, 127]. S is a square modulo 2^k, 3, 5, 7 and 11 for
  // every pair of all three families, so those never reject.
  static const std::vector<std::uint32_t> moduli = {
      17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
      71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  return moduli;
}

inline constexpr std::uint32_t kMaxSieveModulus = 1u << 20;

class SieveConfig {
 public:
  SieveConfig() : SieveConfig(default_sieve_moduli()) {}

  explicit SieveConfig(std::vector<std::uint32_t> moduli,
                       const ParamTables& tables = builtin_tables())
      : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw DomainError("sieve needs at least one modulus");
    for (std::uint32_t m : moduli_) {
      if (m < 2 || m > kMaxSieveModulus) {
        throw DomainError("sieve modulus out of range: " + std::to_string(m));
      }
      std::vector<bool> table(m, false);
      for (std::uint64_t y = 0; y < m; ++y) table[y * y % m] = true;
      residue_tables_.push_back(std::move(table));
    }
    for (const auto& t : tables) {
      PerParam pp;
      pp.degree = t.degree;
      for (std::uint32_t m : moduli_) {
        pp.a_coeffs.push_back(reduce_coeffs(t.formulas[0].expanded, m));
        pp.b_coeffs.push_back(reduce_coeffs(t.formulas[1].expanded, m));
      }
      per_param_.push_back(std::move(pp));
    }
  }

  const std::vector<std::uint32_t>& moduli() const { return moduli_; }
  const std::vector<std::vector<bool>>& residue_tables() const {
    return residue_tables_;
  }

  /// True when s mod moduli()[i] is not a square residue.
  bool rejects_residue(std::size_t i, std::uint64_t s_mod_m) const {
    return !residue_tables_[i][s_mod_m];
  }

  /// S(p, q) reduced modulo moduli()[i], computed without big integers.
  std::uint64_t condition_mod(ParamId id, std::size_t i, std::uint64_t p,
                              std::uint64_t q) const {
    const PerParam& pp = per_param_[static_cast<std::size_t>(id)];
    const std::uint64_t m = moduli_[i];
    const std::uint64_t pm = p % m;
    const std::uint64_t qm = q % m;
    const std::uint64_t a = horner_mod(pp.a_coeffs[i], pp.degree, pm, qm, m);
    const std::uint64_t b = horner_mod(pp.b_coeffs[i], pp.degree, pm, qm, m);
    return (a * a + b * b) % m;
  }

 private:
  using Coeffs = std::array<std::uint64_t, kMaxDegree + 1>;

  struct PerParam {
    int degree = 0;
    std::vector<Coeffs> a_coeffs;  // per modulus
    std::vector<Coeffs> b_coeffs;
  };

  static Coeffs reduce_coeffs(const IntPoly& poly, std::uint32_t m) {
    Coeffs out{};
    const auto mm = static_cast<std::int64_t>(m);
    for (int k = 0; k <= kMaxDegree; ++k) {
      out[k] = static_cast<std::uint64_t>(((poly.c[k] % mm) + mm) % mm);
    }
    return out;
  }

  static std::uint64_t horner_mod(const Coeffs& c, int degree, std::uint64_t p,
                                  std::uint64_t q, std::uint64_t m) {
    std::uint64_t acc = c[degree];
    std::uint64_t q_pow = 1;
    for (int k = degree - 1; k >= 0; --k) {
      q_pow = q_pow * q % m;
      acc = (acc * p + c[k] * q_pow) % m;
    }
    return acc;
  }

  std::vector<std::uint32_t> moduli_;
  std::vector<std::vector<bool>> residue_tables_;
  std::vector<PerParam> per_param_;
};

/// Sieve decision for an arbitrary value; the hot path makes the same
/// per-modulus decision on residues computed from the polynomials.
inline bool sieve_rejects_value(const BigInt& s, const SieveConfig& cfg) {
  if (s < 0) return true;
  for (std::size_t i = 0; i < cfg.moduli().size(); ++i) {
    const std::uint64_t r = mpz_fdiv_ui(s.get_mpz_t(), cfg.moduli()[i]);
    if (cfg.rejects_residue(i, r)) return true;
  }
  return false;
}

inline bool sieve_reject(ParamId id, std::int64_t p, std::int64_t q,
                         const SieveConfig& cfg) {
  const auto up = static_cast<std::uint64_t>(p);
  const auto uq = static_cast<std::uint64_t>(q);
  for (std::size_t i = 0; i < cfg.moduli().size(); ++i) {
    if (cfg.rejects_residue(i, cfg.condition_mod(id, i, up, uq))) return true;
  }
  return false;
}

inline bool sieve_reject(ParamId id, const BigInt& p, const BigInt& q,
                         const SieveConfig& cfg) {
  if (p < 0 || q < 0 || !p.fits_slong_p() || !q.fits_slong_p()) {
    return sieve_rejects_value(
        [&] {
          auto raw = evaluate_raw(id, p, q);
          return BigInt(raw[0] * raw[0] + raw[1] * raw[1]);
        }(),
        cfg);
  }
  return sieve_reject(id, p.get_si(), q.get_si(), cfg);
}

// ---------------------------------------------------------------------------
// Exact test

/// S(p, q) = A^2 + B^2 for the homogenized a and b entries.
inline BigInt condition_value(ParamId id, const BigInt& p, const BigInt& q) {
  const auto& t = table_for(id);
  BigInt a = eval_homogeneous(t.formulas[0].expanded, t.degree, p, q);
  BigInt b = eval_homogeneous(t.formulas[1].expanded, t.degree, p, q);
  return a * a + b * b;
}

struct HitRecord {
  ParamId param_id = ParamId::I;
  BigInt p;
  BigInt q;
  CuboidCandidate candidate;
  BigInt dab_root;
};

inline std::optional<HitRecord> exact_test(ParamId id, const BigInt& p,
                                           const BigInt& q) {
  const BigInt s = condition_value(id, p, q);
  if (!is_perfect_square(s)) return std::nullopt;

  CuboidCandidate c = generate(id, RationalParam(p, q));
  const VerificationReport report = verify(c);
  if (report.classification != Classification::PCHit || !report.dab_root) {
    throw IntegrityError("S(" + to_string(p) + "/" + to_string(q) +
                         ") is a square for parametrization " +
                         std::string(to_string(id)) +
                         " but the candidate verifies as " +
                         std::string(to_string(report.classification)));
  }
  return HitRecord{id, p, q, c, *report.dab_root};
}

// ---------------------------------------------------------------------------
// Checkpoints

struct Checkpoint {
  static constexpr int kVersion = 1;

  int version = kVersion;
  SearchWindow window;
  std::int64_t next_height = 0;
  std::int64_t pairs_done_in_height = 0;
  std::uint64_t tested = 0;  // (pair, parametrization) tests
  std::uint64_t sieve_rejected = 0;
  std::uint64_t exact_tested = 0;
  std::vector<HitRecord> hits;
  double wall_time_s = 0.0;

  bool complete() const { return next_height > window.max_height; }
};

inline json hit_to_json(const HitRecord& h) {
  json j;
  j["param_id"] = std::string(to_string(h.param_id));
  j["p"] = to_string(h.p);
  j["q"] = to_string(h.q);
  j["candidate"] = candidate_to_json(h.candidate);
  j["dab_root"] = to_string(h.dab_root);
  return j;
}

inline json checkpoint_to_json(const Checkpoint& ck) {
  json params = json::array();
  for (ParamId id : ck.window.param_ids) params.push_back(std::string(to_string(id)));
  json hits = json::array();
  for (const auto& h : ck.hits) hits.push_back(hit_to_json(h));
  json j;
  j["version"] = ck.version;
  j["window"] = {{"min_height", std::to_string(ck.window.min_height)},
                 {"max_height", std::to_string(ck.window.max_height)},
                 {"param_ids", params}};
  j["next_height"] = std::to_string(ck.next_height);
  j["pairs_done_in_height"] = std::to_string(ck.pairs_done_in_height);
  j["tested"] = std::to_string(ck.tested);
  j["sieve_rejected"] = std::to_string(ck.sieve_rejected);
  j["exact_tested"] = std::to_string(ck.exact_tested);
  j["hits"] = std::move(hits);
  j["wall_time_s"] = ck.wall_time_s;
  return j;
}

namespace detail {

template <typename T>
T checkpoint_int(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw CheckpointError(std::string("checkpoint: bad or missing ") + key);
  }
  const std::string s = it->get<std::string>();
  auto v = parse_bigint(s);
  if (!v) throw CheckpointError(std::string("checkpoint: bad integer ") + key);
  if constexpr (std::is_signed_v<T>) {
    if (!v->fits_slong_p()) throw CheckpointError("checkpoint: overflow");
    return static_cast<T>(v->get_si());
  } else {
    if (*v < 0 || !v->fits_ulong_p()) {
      throw CheckpointError("checkpoint: overflow");
    }
    return static_cast<T>(v->get_ui());
  }
}

}  // namespace detail

inline Checkpoint checkpoint_from_json(const json& j) {
  try {
    Checkpoint ck;
    if (!j.is_object()) throw CheckpointError("checkpoint: not an object");
    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != Checkpoint::kVersion) {
      throw CheckpointError("checkpoint: unsupported version");
    }
    const json& w = j.at("window");
    ck.window.min_height = detail::checkpoint_int<std::int64_t>(w, "min_height");
    ck.window.max_height = detail::checkpoint_int<std::int64_t>(w, "max_height");
    ck.window.param_ids.clear();
    for (const auto& s : w.at("param_ids")) {
      auto id = parse_param_id(s.get<std::string>());
      if (!id) throw CheckpointError("checkpoint: bad param id");
      ck.window.param_ids.push_back(*id);
    }
    ck.window.validate();
    ck.next_height = detail::checkpoint_int<std::int64_t>(j, "next_height");
    ck.pairs_done_in_height =
        detail::checkpoint_int<std::int64_t>(j, "pairs_done_in_height");
    ck.tested = detail::checkpoint_int<std::uint64_t>(j, "tested");
    ck.sieve_rejected = detail::checkpoint_int<std::uint64_t>(j, "sieve_rejected");
    ck.exact_tested = detail::checkpoint_int<std::uint64_t>(j, "exact_tested");
    for (const auto& h : j.at("hits")) {
      HitRecord r;
      auto id = parse_param_id(h.at("param_id").get<std::string>());
      if (!id) throw CheckpointError("checkpoint: bad hit param id");
      r.param_id = *id;
      r.p = detail::require_int(h, "p");
      r.q = detail::require_int(h, "q");
      r.candidate = candidate_from_json(h.at("candidate"));
      r.dab_root = detail::require_int(h, "dab_root");
      ck.hits.push_back(std::move(r));
    }
    ck.wall_time_s = j.at("wall_time_s").get<double>();
    if (ck.next_height < ck.window.min_height ||
        ck.next_height > ck.window.max_height + 1 ||
        ck.pairs_done_in_height != 0 ||
        ck.exact_tested + ck.sieve_rejected != ck.tested) {
      throw CheckpointError("checkpoint: inconsistent state");
    }
    return ck;
  } catch (const json::exception& e) {
    throw CheckpointError(std::string("checkpoint: ") + e.what());
  } catch (const FormatError& e) {
    throw CheckpointError(std::string("checkpoint: ") + e.what());
  }
}

inline Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot read checkpoint " + path.string());
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw CheckpointError("corrupted checkpoint " + path.string());
  }
  return checkpoint_from_json(j);
}

/// Writes via a sibling temporary file and rename, so a crash leaves either
/// the old or the new checkpoint.
inline void save_checkpoint(const Checkpoint& ck,
                            const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp.string());
    out << checkpoint_to_json(ck).dump(2) << '\n';
    if (!out) throw CheckpointError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw CheckpointError("cannot move checkpoint into place at " +
                          path.string() + ": " + ec.message());
  }
}

/// Counters and hits only; wall time is left out so that runs can be
/// compared byte for byte.
inline std::string summary(const Checkpoint& ck) {
  std::ostringstream os;
  os << "window: " << ck.window.min_height << ".." << ck.window.max_height
     << " params:";
  for (ParamId id : ck.window.param_ids) os << ' ' << to_string(id);
  os << "\nnext_height: " << ck.next_height << "\ntested: " << ck.tested
     << "\nsieve_rejected: " << ck.sieve_rejected
     << "\nexact_tested: " << ck.exact_tested << "\nhits: " << ck.hits.size()
     << '\n';
  for (const auto& h : ck.hits) {
    os << "hit " << to_string(h.param_id) << " t=" << h.p << '/' << h.q
       << ' ' << candidate_to_jsonl(h.candidate) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Driver

struct SearchOptions {
  unsigned workers = 1;
  std::optional<std::filesystem::path> checkpoint_path;
  std::int64_t checkpoint_every = 1;  // completed heights between saves
  std::int64_t heights_per_chunk = 4;
  bool stop_on_hit = false;
  /// Also exact-test every sieve rejection and fail if any is a square.
  bool audit = false;
  /// Polled after each committed height; true stops the run at that
  /// boundary with a checkpoint written.
  std::function<bool()> should_stop;
  std::function<void(const HitRecord&)> on_hit;
};

struct HeightResult {
  std::int64_t height = 0;
  std::uint64_t tested = 0;
  std::uint64_t sieve_rejected = 0;
  std::uint64_t exact_tested = 0;
  std::vector<HitRecord> hits;
};

inline HeightResult process_height(std::int64_t h,
                                   const std::vector<ParamId>& params,
                                   const SieveConfig& cfg, bool audit) {
  HeightResult r;
  r.height = h;
  for_each_pair_of_height(h, [&](ParamPair pq) {
    for (ParamId id : params) {
      ++r.tested;
      if (sieve_reject(id, pq.p, pq.q, cfg)) {
        ++r.sieve_rejected;
        if (audit && is_perfect_square(condition_value(id, pq.p, pq.q))) {
          throw IntegrityError("sieve rejected a square at t = " +
                               std::to_string(pq.p) + "/" +
                               std::to_string(pq.q));
        }
        continue;
      }
      ++r.exact_tested;
      if (auto hit = exact_test(id, BigInt(pq.p), BigInt(pq.q))) {
        r.hits.push_back(std::move(*hit));
      }
    }
  });
  return r;
}

inline Checkpoint run_search(const SearchWindow& window, const SieveConfig& cfg,
                             const SearchOptions& opts = {}) {
  window.validate();
  if (opts.workers < 1) throw DomainError("workers must be >= 1");
  if (opts.checkpoint_every < 1) throw DomainError("checkpoint_every must be >= 1");
  if (opts.heights_per_chunk < 1) throw DomainError("heights_per_chunk must be >= 1");

  std::vector<ParamId> params = window.param_ids;
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  Checkpoint ck;
  ck.window = window;
  ck.next_height = window.min_height;

  const auto& path = opts.checkpoint_path;
  if (path && std::filesystem::exists(*path)) {
    Checkpoint loaded = load_checkpoint(*path);
    if (!(loaded.window == window)) {
      throw CheckpointError("checkpoint " + path->string() +
                            " belongs to a different window");
    }
    ck = std::move(loaded);
  } else if (path) {
    save_checkpoint(ck, *path);
  }

  const double wall_before = ck.wall_time_s;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return wall_before +
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
               .count();
  };
  auto save = [&] {
    ck.wall_time_s = elapsed();
    if (path) save_checkpoint(ck, *path);
  };

  std::int64_t since_save = 0;
  bool stopped = false;
  while (!ck.complete() && !stopped) {
    // One round: workers * heights_per_chunk heights in contiguous chunks.
    const std::int64_t round_begin = ck.next_height;
    const std::int64_t round_end = std::min<std::int64_t>(
        window.max_height + 1,
        round_begin + static_cast<std::int64_t>(opts.workers) *
                          opts.heights_per_chunk);
    std::vector<HeightResult> results(
        static_cast<std::size_t>(round_end - round_begin));
    std::vector<std::exception_ptr> errors(opts.workers);

    auto work = [&](unsigned w) {
      try {
        for (std::int64_t h = round_begin + w * opts.heights_per_chunk;
             h < std::min(round_end, round_begin + (w + 1) * opts.heights_per_chunk);
             ++h) {
          results[static_cast<std::size_t>(h - round_begin)] =
              process_height(h, params, cfg, opts.audit);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (opts.workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < opts.workers; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    for (auto& r : results) {
      ck.tested += r.tested;
      ck.sieve_rejected += r.sieve_rejected;
      ck.exact_tested += r.exact_tested;
      const bool found = !r.hits.empty();
      for (auto& hit : r.hits) {
        if (opts.on_hit) opts.on_hit(hit);
        ck.hits.push_back(std::move(hit));
      }
      ck.next_height = r.height + 1;
      if (++since_save >= opts.checkpoint_every || ck.complete()) {
        save();
        since_save = 0;
      }
      if ((found && opts.stop_on_hit) || (opts.should_stop && opts.should_stop())) {
        stopped = true;
        break;
      }
    }
  }
  save();
  return ck;
}

}  // namespace npc
