#pragma once

// Verification suites shared by the command-line tool and the test harness.
// Each suite checks one family of identities exhaustively up to its size
// parameters and reports one row per checked cell.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freecum/json_io.hpp"
#include "freecum/partition.hpp"

namespace freecum {

struct SuiteParams {
  std::optional<int> n;
  std::optional<int> N;
  std::optional<Family> lattice;
  std::optional<std::uint64_t> seed;
  /// Digits shown for root approximations; never used in a decision.
  int precision = 6;
};

struct SuiteReport {
  std::string suite;
  Json params = Json::object();
  bool passed = true;
  std::vector<std::string> failures;
  std::size_t failure_count = 0;
  std::vector<std::string> columns;
  std::vector<Json> rows;

  void fail(const std::string& message);
};

const std::vector<std::string>& suite_names();
bool suite_needs_seed(const std::string& name);

/// Throws ParseError for an unknown suite or a missing seed, and
/// SizeLimitError / DomainError for parameters outside a suite's range.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

Json report_to_json(const SuiteReport& report);
std::string report_to_csv(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

/// The maximal σ ∈ NC_n with interweave(π, σ) noncrossing, by search over
/// NC_n; an independent route to the Kreweras complement.
Partition maximal_interweave(const Partition& pi);

enum class Rounding { down, up };

/// Decimal rendering of a rational with the given number of digits after
/// the point. Rounds toward -inf by default; use Rounding::up for upper bounds.
std::string decimal(const Rational& value, int digits, Rounding rounding = Rounding::down);

}  // namespace freecum
