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

// Command-line front end. Exit codes:
//   0  success (NPC generated, all records verified, search without hits)
//   1  failure (verification failed, theorem1 not certified, runtime error)
//   2  invalid arguments
//   3  degenerate parameter (generate)
//   10 perfect cuboid found (search)
//   130 interrupted (search; checkpoint written)

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "npcuboid/exact_arith.hpp"
#include "npcuboid/parametrizations.hpp"
#include "npcuboid/records.hpp"
#include "npcuboid/search.hpp"
#include "npcuboid/selftest.hpp"
#include "npcuboid/verifier.hpp"

namespace npc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kDegenerate = 3,
  kPerfectCuboid = 10,
  kInterrupted = 130,
};

enum class OutputFormat { jsonl, csv, human };

inline std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "jsonl") return OutputFormat::jsonl;
  if (s == "csv") return OutputFormat::csv;
  if (s == "human") return OutputFormat::human;
  return std::nullopt;
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

/// "all", a single id, or a comma-separated list of ids.
inline std::optional<std::vector<ParamId>> parse_param_list(const std::string& s) {
  if (s == "all") return std::vector<ParamId>(kAllParams.begin(), kAllParams.end());
  std::vector<ParamId> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto id = parse_param_id(item);
    if (!id) return std::nullopt;
    out.push_back(*id);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

inline std::optional<std::vector<std::uint32_t>> parse_moduli(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = parse_bigint(item);
    if (!v || *v < 2 || *v > kMaxSieveModulus) return std::nullopt;
    out.push_back(static_cast<std::uint32_t>(v->get_ui()));
  }
  if (out.empty()) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string param;
  std::string t;
  std::string format = "human";
};

inline int cmd_generate(const GenerateArgs& args, std::ostream& out,
                        std::ostream& err) {
  auto id = parse_param_id(args.param);
  if (!id) {
    err << "error: --param must be I, II or III\n";
    return kUsage;
  }
  auto fmt = parse_format(args.format);
  if (!fmt) {
    err << "error: --format must be jsonl, csv or human\n";
    return kUsage;
  }
  auto t = parse_ratio(args.t);
  if (!t) {
    err << "error: cannot parse t '" << args.t << "' (expected P/Q)\n";
    return kUsage;
  }
  CuboidCandidate c;
  try {
    c = generate(*id, *t);
  } catch (const DegenerateError& e) {
    err << e.what() << '\n';
    return kDegenerate;
  }
  switch (*fmt) {
    case OutputFormat::jsonl: out << candidate_to_jsonl(c) << '\n'; break;
    case OutputFormat::csv:
      out << kCsvHeader << '\n' << candidate_to_csv(c) << '\n';
      break;
    case OutputFormat::human: print_candidate_human(out, c); break;
  }
  const auto report = verify(c);
  if (report.classification == Classification::PCHit) return kPerfectCuboid;
  return report.classification == Classification::NPC ? kOk : kFailure;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string format = "human";
};

inline void print_report(std::ostream& out, OutputFormat fmt, std::size_t index,
                         const VerificationReport& r) {
  switch (fmt) {
    case OutputFormat::jsonl: {
      json j;
      j["record"] = index;
      j["classification"] = std::string(to_string(r.classification));
      j["identity_ac_ok"] = r.identity_ac_ok;
      j["identity_bc_ok"] = r.identity_bc_ok;
      j["identity_s_ok"] = r.identity_s_ok;
      j["dab_sq"] = to_string(r.dab_sq);
      if (r.dab_root) j["dab_root"] = to_string(*r.dab_root);
      j["primitive"] = r.primitive;
      if (!r.reason.empty()) j["reason"] = r.reason;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << index << ',' << to_string(r.classification) << ','
          << bool_str(r.identity_ac_ok) << ',' << bool_str(r.identity_bc_ok)
          << ',' << bool_str(r.identity_s_ok) << ',' << r.dab_sq << ','
          << (r.dab_root ? to_string(*r.dab_root) : std::string()) << ','
          << bool_str(r.primitive) << ',' << r.reason << '\n';
      break;
    case OutputFormat::human:
      out << "record " << index << ": " << to_string(r.classification);
      if (!r.reason.empty()) out << " (" << r.reason << ")";
      out << "  a^2+b^2 = " << r.dab_sq
          << (r.dab_root ? " square" : " non-square")
          << (r.primitive ? ", primitive" : ", not primitive") << '\n';
      break;
  }
}

inline int cmd_verify(const VerifyArgs& args, std::ostream& out,
                      std::ostream& err) {
  auto fmt = parse_format(args.format);
  if (!fmt) {
    err << "error: --format must be jsonl, csv or human\n";
    return kUsage;
  }
  std::ifstream file;
  std::istream* in = &std::cin;
  if (args.input != "-") {
    file.open(args.input);
    if (!file) {
      err << "error: cannot open " << args.input << '\n';
      return kUsage;
    }
    in = &file;
  }
  if (*fmt == OutputFormat::csv) {
    out << "record,classification,identity_ac_ok,identity_bc_ok,identity_s_ok,"
           "dab_sq,dab_root,primitive,reason\n";
  }
  std::size_t records = 0;
  std::size_t failures = 0;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++records;
    try {
      const VerificationReport r = verify(candidate_from_jsonl(line));
      print_report(out, *fmt, records, r);
      if (r.classification == Classification::Degenerate) ++failures;
    } catch (const std::exception& e) {
      ++failures;
      err << "record " << records << ": malformed: " << e.what() << '\n';
    }
  }
  err << records << " records, " << failures << " failed\n";
  if (*fmt == OutputFormat::human) {
    out << records << " records\n";
  }
  return failures == 0 ? kOk : kFailure;
}

// ---------------------------------------------------------------------------

struct Theorem1Args {
  std::string xi;
  std::string zeta;
};

inline int cmd_theorem1(const Theorem1Args& args, std::ostream& out,
                        std::ostream& err) {
  auto xi = parse_ratio(args.xi);
  auto zeta = parse_ratio(args.zeta);
  if (!xi || !zeta) {
    err << "error: --xi and --zeta must be rationals P/Q\n";
    return kUsage;
  }
  try {
    const Theorem1Result r = check_theorem1(XiZeta(*xi, *zeta));
    out << "c4=" << bool_str(r.c4) << " c5=" << bool_str(r.c5)
        << " c6=" << bool_str(r.c6) << '\n';
    if (r.all()) out << "all three conditions hold: perfect cuboid certificate\n";
    return r.all() ? kOk : kFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string param = "all";
  std::int64_t min_height = 3;
  std::int64_t max_height = 0;
  unsigned workers = 1;
  std::string sieve_moduli;
  std::string checkpoint;
  std::int64_t checkpoint_every = 1;
  std::string out;
  bool stop_on_hit = false;
  bool audit = false;
};

inline int cmd_search(const SearchArgs& args, std::ostream& out,
                      std::ostream& err,
                      const std::atomic<bool>* interrupt = nullptr) {
  SearchWindow window;
  auto params = parse_param_list(args.param);
  if (!params) {
    err << "error: --param must be all, I, II, III or a comma list\n";
    return kUsage;
  }
  window.param_ids = *params;
  window.min_height = args.min_height;
  window.max_height = args.max_height;
  try {
    window.validate();
  } catch (const DomainError& e) {
    err << "error: invalid window: " << e.what() << '\n';
    return kUsage;
  }
  if (args.workers < 1 || args.checkpoint_every < 1) {
    err << "error: --workers and --checkpoint-every must be >= 1\n";
    return kUsage;
  }
  std::vector<std::uint32_t> moduli = default_sieve_moduli();
  if (!args.sieve_moduli.empty()) {
    auto m = parse_moduli(args.sieve_moduli);
    if (!m) {
      err << "error: --sieve-moduli must be a comma list of integers in [2, "
          << kMaxSieveModulus << "]\n";
      return kUsage;
    }
    moduli = *m;
  }

  SearchOptions opts;
  opts.workers = args.workers;
  opts.checkpoint_every = args.checkpoint_every;
  opts.stop_on_hit = args.stop_on_hit;
  opts.audit = args.audit;
  if (!args.checkpoint.empty()) opts.checkpoint_path = args.checkpoint;
  if (interrupt) opts.should_stop = [interrupt] { return interrupt->load(); };
  opts.on_hit = [&err](const HitRecord& h) {
    err << "PERFECT CUBOID: parametrization " << to_string(h.param_id)
        << " t = " << h.p << '/' << h.q << ' '
        << candidate_to_jsonl(h.candidate) << '\n';
  };

  Checkpoint ck;
  const auto start = std::chrono::steady_clock::now();
  try {
    ck = run_search(window, SieveConfig(moduli), opts);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!args.out.empty()) {
    std::ofstream f(args.out, std::ios::trunc);
    if (!f) {
      err << "error: cannot write " << args.out << '\n';
      return kFailure;
    }
    for (const auto& h : ck.hits) f << candidate_to_jsonl(h.candidate) << '\n';
  }

  out << summary(ck);
  out << "rate: " << std::fixed << std::setprecision(1)
      << (secs > 0 ? static_cast<double>(ck.tested) / secs : 0.0)
      << " tests/s\n";
  if (!ck.hits.empty()) return kPerfectCuboid;
  if (!ck.complete() && !args.stop_on_hit) {
    out << "interrupted at height " << ck.next_height
        << "; rerun with the same --checkpoint to resume\n";
    return kInterrupted;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

inline int cmd_selftest(std::ostream& out) {
  const auto results = run_selftest();
  print_selftest(out, results);
  return all_passed(results) ? kOk : kFailure;
}

// ---------------------------------------------------------------------------

/// Entry point; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err,
                   const std::atomic<bool>* interrupt = nullptr) {
  CLI::App app{"Nearly-perfect cuboid generator, verifier and search", "npcuboid"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a cuboid from t");
  generate_cmd->add_option("--param", gen.param, "Parametrization I, II or III")
      ->required();
  generate_cmd->add_option("--t", gen.t, "Parameter t as P/Q")->required();
  generate_cmd->add_option("--format", gen.format, "jsonl, csv or human");

  VerifyArgs ver;
  auto* verify_cmd =
      app.add_subcommand("verify", "Re-verify a JSONL stream of candidates");
  verify_cmd->add_option("input,--input", ver.input, "JSONL file, or - for stdin")
      ->required();
  verify_cmd->add_option("--format", ver.format, "jsonl, csv or human");

  Theorem1Args th;
  auto* theorem1_cmd = app.add_subcommand(
      "theorem1", "Check the three square conditions for (xi, zeta)");
  theorem1_cmd->add_option("--xi", th.xi, "xi as P/Q")->required();
  theorem1_cmd->add_option("--zeta", th.zeta, "zeta as P/Q")->required();

  SearchArgs sa;
  auto* search_cmd =
      app.add_subcommand("search", "Search rational t for a perfect cuboid");
  search_cmd->add_option("--param", sa.param, "all, I, II, III or a comma list");
  search_cmd->add_option("--min-height", sa.min_height, "Smallest p+q (>= 3)");
  search_cmd->add_option("--max-height", sa.max_height, "Largest p+q")->required();
  search_cmd->add_option("--workers", sa.workers, "Worker threads");
  search_cmd->add_option("--sieve-moduli", sa.sieve_moduli,
                         "Comma list of sieve moduli");
  search_cmd->add_option("--checkpoint", sa.checkpoint,
                         "Checkpoint file; resumed from when present");
  search_cmd->add_option("--checkpoint-every", sa.checkpoint_every,
                         "Completed heights between checkpoint writes");
  search_cmd->add_option("--out", sa.out, "Write hit records (JSONL) here");
  search_cmd->add_flag("--stop-on-hit", sa.stop_on_hit, "Stop at the first hit");
  search_cmd->add_flag("--audit", sa.audit,
                       "Exact-test sieve rejections too (slow)");

  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the embedded property checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (*generate_cmd) return cmd_generate(gen, out, err);
  if (*verify_cmd) return cmd_verify(ver, out, err);
  if (*theorem1_cmd) return cmd_theorem1(th, out, err);
  if (*search_cmd) return cmd_search(sa, out, err, interrupt);
  if (*selftest_cmd) return cmd_selftest(out);
  return kUsage;
}

}  // namespace npc::cli
