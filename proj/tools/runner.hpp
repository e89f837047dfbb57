#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "resint/resolution.hpp"

namespace resint::runner {

using Json = nlohmann::ordered_json;

inline constexpr int kScenarioSchema = 1;

/// Malformed scenario, bad override, or unreadable input (exit code 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A validated scenario document.
struct Scenario {
  Json doc;
  std::string name;
};

Scenario parse_scenario(const Json& doc);
Scenario load_scenario(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> characteristic;
  int jobs = 1;
  /// Caps the scenario's wall budget.
  std::optional<double> max_seconds;
};

/// Runs every declared stage and compares each expected value. Stage failures
/// are recorded in the report, never thrown. Everything outside "run" depends
/// only on the scenario, the options and the tool version.
Json run_scenario(const Scenario& sc, const RunOptions& opts = {});

/// 0 when every check passes, 1 on a failed or unknown check, 3 when the only
/// shortfall is checks skipped for budget.
int exit_code(const Json& report);

/// The report minus its "run" block (timings, cache counters).
Json report_body(const Json& report);

/// One line per check plus a status line.
std::string summary_text(const Json& report);

/// Writes through a temporary file and a rename.
void write_atomically(const std::filesystem::path& path, const std::string& text);

enum class BettiFormat { PaperText, Json };
std::string emit_betti(const BettiTable& table, BettiFormat format);
Json betti_to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);
/// Reads the column-aligned layout written by BettiTable::to_text (also the
/// listings printed by other systems, with or without a leading "oN =").
BettiTable parse_betti_text(const std::string& text);

}  // namespace resint::runner
