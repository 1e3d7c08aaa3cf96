#pragma once

// Table-producing back ends of the `wigner` command-line tool.

#include "wigner/oracle.hpp"
#include "wigner/params.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wigner::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  Preset ensemble = Preset::goe;
  EnsembleParams params = EnsembleParams::goe();
  unsigned kmax = 8;
  std::vector<unsigned long> ns;
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::csv;
  std::string out;  // empty writes to stdout
  unsigned order = 40;
  unsigned threads = 0;  // not echoed: results do not depend on it

  // Throws std::invalid_argument naming the violated invariant.
  void validate() const;
  nlohmann::json echo() const;
};

// Explicit parameter overrides on top of a preset. Presets other than custom
// fix (r, sigma2, s2, alpha) except rademacher, which takes sigma2 and s2.
struct ParamOverrides {
  std::optional<int> r;
  std::optional<std::string> sigma2, s2, alpha;
};

Rational parse_rational(const std::string& text);
EnsembleParams resolve_params(Preset preset, const ParamOverrides& overrides);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::json summary = nlohmann::json::object();
};

// CSV: "# config <json>" line, header row, comma-separated rows, then
// "# <key>,<value>" summary lines. JSON: {"config", "rows", "summary"}.
void write_table(std::ostream& os, const Table& table, const RunConfig& config);

Table moments_table(const RunConfig& config);

struct CheckOptions {
  unsigned order = 40;
  unsigned max_walk_length = 10;
  // Test hook: adds one to Cat(i) in the series used by the identity checks.
  std::optional<unsigned> perturb_catalan;
  std::vector<EnsembleParams> params;  // in addition to the built-in sets
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_identity_suite(const CheckOptions& options);
Table check_table(const std::vector<CheckResult>& results);

struct EnumerateFilter {
  std::optional<unsigned> v, e;
  std::optional<CycleType> cycle_type;
};

// Throws std::invalid_argument for k outside 1..kMaxWalkLength.
Table enumerate_table(unsigned k, const EnumerateFilter& filter, const MomentModel& model);

Table mc_table(const RunConfig& config);

Table density_table(const RunConfig& config, unsigned points);

// H and the correction transform on `points` equally spaced points of the
// circle |z| = radius.
Table stieltjes_table(const RunConfig& config, double radius, unsigned points);

}  // namespace wigner::cli
