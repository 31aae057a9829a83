// Command-line front end with one subcommand per capability.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherebraid/braid_word.hpp"
#include "spherebraid/budget.hpp"
#include "spherebraid/certificate.hpp"
#include "spherebraid/theorems.hpp"

namespace spherebraid {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { verify, normal_form, act, selftest };
enum class OutputFormat { text, machine };
enum class Action { sphere, disk };

std::string_view to_string(Command command);
std::string_view to_string(Action action);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int unexpected_verdict = 1;
inline constexpr int internal_error = 2;
inline constexpr int inconclusive = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::verify;
  Claim claim = Claim::q8;
  int from = 3;
  int to = 3;
  std::vector<std::string> words;
  Action action = Action::sphere;
  OutputFormat format = OutputFormat::text;
  Budget budget;
  int jobs = 1;
  int pairs = 1000;
  int max_length = 40;
  std::uint64_t seed = 20240229;
  /// Report destination; empty means standard output.
  std::string out;

  /// Throws UsageError on an empty range or non-positive budgets.
  void validate() const;
  /// Everything that determines the report; jobs and out are excluded.
  Json to_json() const;
};

/// Throws UsageError (with CLI11's message) on bad arguments. Returns
/// nullopt when help was requested and printed to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes the command, writing the report to `out` and diagnostics to
/// `err`. Returns one of the exit_code constants.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, honoring --out.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Cross-oracle property suite.

/// Uniform letters from +-1..+-(n-1), length uniform in [0, max_length].
BraidWord random_word(int n, int max_length, std::mt19937_64& rng);

/// A word equal to `w` in B_n: one defining relation (or a cancelling
/// pair) spliced in at a random position. Adds at most 6 letters.
BraidWord insert_relation(const BraidWord& w, std::mt19937_64& rng);

struct SelftestReport {
  int n = 0;
  int pairs = 0;
  int equal_pairs = 0;
  /// Pairs where the Garside and Artin engines disagree, or where a pair
  /// built equal was judged unequal.
  int engine_mismatches = 0;
  int relators = 0;
  int relator_failures = 0;
  int substitution_checks = 0;
  int substitution_mismatches = 0;

  bool passed() const {
    return engine_mismatches == 0 && relator_failures == 0 && substitution_mismatches == 0;
  }
  Json to_json() const;
};

/// Throws ResourceExhausted if an Artin image exceeds the budget.
SelftestReport run_selftest(int n, int pairs, int max_length, std::uint64_t seed, const Budget& budget = {});

}  // namespace spherebraid
