#pragma once

// Batch-run configuration read by `eqcut sweep --config`.
//
//   {
//     "bundles": ["2:2", "3:1,0:-2"],              // and/or
//     "grid": {"rp_range": [-2, 2], "rq_range": "-2..2"},
//     "checks": ["all"],
//     "output": {"path": "report.json", "format": "json"},
//     "fail_fast": false
//   }

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqcut/cp1_geometry.hpp"
#include "eqcut/verifier.hpp"

namespace eqcut {

enum class OutputFormat { json, csv, md };

OutputFormat parse_format(std::string_view name);

/// Inclusive "A..B" with A <= B; throws ParseError.
std::pair<Weight, Weight> parse_range(std::string_view text);

struct RunConfig {
  std::vector<EquivBundleCP1> bundles;
  std::optional<GridSpec> grid;
  std::vector<CheckId> checks;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::json;
  bool fail_fast = false;

  /// Explicit bundles first, then the grid points.
  std::vector<EquivBundleCP1> points() const;
};

/// Unknown check ids, empty or reversed ranges and a config without any
/// bundle are rejected here.
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::string& path);

}  // namespace eqcut
