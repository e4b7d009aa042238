#pragma once

// Pipeline orchestration: gate -> theorem3 -> hilbert -> modp -> lemma2 ->
// magnus-e1, and the JSON run report.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "onerel/presentation.hpp"
#include "onerel/quotient_lab.hpp"

namespace onerel {

enum class Check { Gate, Theorem3, Hilbert, ModP, Lemma2, MagnusE1 };

/// Parses one --check token ("gate", "theorem3", "hilbert", "modp",
/// "lemma2", "magnus-e1", or "all").
std::set<Check> parse_checks(const std::vector<std::string>& names);

/// Process exit codes.
enum ExitCode : int {
  kExitPass = 0,
  kExitGateRejected = 1,
  kExitCheckFailed = 2,
  kExitInconclusive = 3,
  kExitUsage = 4,
};

struct RunConfig {
  std::string input_path;
  std::optional<int> max_degree;  // default d + 6
  std::optional<int> e;           // overrides the file
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  std::uint64_t seed = 1;
  int samples = 1000;
  int max_word_len = 12;
  std::set<Check> checks{Check::Gate, Check::Theorem3, Check::Hilbert, Check::ModP, Check::Lemma2, Check::MagnusE1};
  std::string json_out;
  bool force_downstream = false;
  int gate_cutoff = 16;  // used when no max degree is given
  bool timings = false;
  std::string matrix_dir;  // dump ideal matrices here when non-empty
  Budget budget;

  /// Throws std::invalid_argument on N < 1, a prime < 2 or not prime,
  /// negative sample counts.
  void validate() const;
};

using Json = nlohmann::ordered_json;

struct RunReport {
  Json json;
  int exit_code = kExitPass;
};

RunReport run_report(const RunConfig& config, const Presentation& pres);
/// Reads config.input_path; parse errors surface as PresentationParseError.
RunReport run_report(const RunConfig& config);

/// Re-reads an emitted report.
Json read_report(const std::string& text);
std::string emit_report(const Json& report);

}  // namespace onerel
