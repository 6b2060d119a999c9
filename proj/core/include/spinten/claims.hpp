#pragma once
// Claim runners: each paper-facing computation packaged as a reproducible,
// JSON-documented pass/fail/inconclusive verdict. The command line tool is a
// thin veneer over run(); the acceptance suite drives the same entry point.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spinten/fields.hpp"

namespace spinten {

struct RunConfig {
  std::string subcommand;  // derive, count, audit-z-models, forms, f2-lemma,
                           // verify-plane, duality-test, all
  FieldSpec field = FieldSpec::rationals();
  bool field_given = false;       // --field present; count narrows to one claim
  std::uint64_t seed = 1;
  long trials = -1;               // -1: every claim keeps its documented default
  std::vector<mpz_class> primes;  // audit grid / duality prime; empty: defaults
  int jobs = 1;                   // parallelism bound; execution is sequential
  std::string plane_file;         // verify-plane candidate (JSON, 6 x 16)
};

struct ClaimReport {
  std::string id;             // stable, e.g. "sigma-count-f2"
  std::string status;         // "pass" | "fail" | "inconclusive"
  std::string detail;         // one human-readable line
  std::string artifacts;      // JSON object text; decimal strings, no floats
  std::string wall_clock_ms;  // excluded from reproducibility comparisons
};

struct RunReport {
  std::string schema;        // "spinten-report/1"
  std::string tool_version;  // library version
  RunConfig config;
  std::vector<ClaimReport> claims;
  std::string status;  // worst claim status: fail > inconclusive > pass
  std::string wall_clock_ms;
};

/// Executes every claim the subcommand covers, in a fixed order,
/// deterministically in (subcommand, field, seed, trials, primes). Throws
/// std::invalid_argument on an unknown subcommand or unusable configuration
/// (usage errors, distinct from refuted claims).
RunReport run(const RunConfig& config);

/// 0 all pass, 1 some claim failed, 2 pass/inconclusive mix only.
int exit_code(const RunReport& report);

const std::vector<std::string>& known_subcommands();

}  // namespace spinten
