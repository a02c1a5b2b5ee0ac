#include <cstddef>

#include "eqcut/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eqcut {

namespace {

std::vector<CheckResult> evaluate_point(const EquivBundleCP1& bundle, const std::vector<CheckId>& checks) {
  std::vector<CheckResult> row;
  row.reserve(checks.size());
  for (CheckId id : checks) row.push_back(run_check(id, bundle));
  return row;
}

bool any_failed(const std::vector<CheckResult>& row) {
  for (const auto& r : row)
    if (!r.passed) return true;
  return false;
}

SweepReport start_report(const std::vector<EquivBundleCP1>& grid, const std::vector<CheckId>& checks) {
  SweepReport report;
  report.grid = grid;
  report.checks = checks;
  report.results.resize(grid.size());
  return report;
}

}  // namespace

SweepReport sweep_serial(const std::vector<EquivBundleCP1>& grid, const std::vector<CheckId>& checks) {
  auto report = start_report(grid, checks);
  for (std::size_t i = 0; i < grid.size(); ++i) report.results[i] = evaluate_point(grid[i], checks);
  aggregate(report);
  return report;
}

SweepReport sweep(const std::vector<EquivBundleCP1>& grid, const std::vector<CheckId>& checks,
                  const SweepOptions& options) {
  if (options.fail_fast) {
    auto report = start_report(grid, checks);
    std::size_t done = 0;
    while (done < grid.size()) {
      report.results[done] = evaluate_point(grid[done], checks);
      if (any_failed(report.results[done++])) break;
    }
    report.grid.erase(report.grid.begin() + static_cast<std::ptrdiff_t>(done), report.grid.end());
    report.results.resize(done);
    aggregate(report);
    return report;
  }

  auto report = start_report(grid, checks);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    // Each slot is written by exactly one iteration; run_check never throws.
    report.results[static_cast<std::size_t>(i)] = evaluate_point(grid[static_cast<std::size_t>(i)], checks);
  }
  aggregate(report);
  return report;
}

SweepReport sweep(const GridSpec& grid, const std::vector<CheckId>& checks, const SweepOptions& options) {
  return sweep(grid.points(), checks, options);
}

EqualityRegionReport equality_region(const GridSpec& grid, const SweepOptions& options) {
  EqualityRegionReport out;
  out.sweep = sweep(grid, {CheckId::mcut, CheckId::morse}, options);
  for (std::size_t i = 0; i < out.sweep.grid.size(); ++i) {
    const auto& s = out.sweep.grid[i].summands().front();
    const auto& mcut = out.sweep.results[i][0];
    const auto& morse = out.sweep.results[i][1];
    RegionRow row;
    row.r_P = s.r_P;
    row.r_Q = s.r_Q;
    row.q = mcut.witness.value_or(CharPoly{});
    row.q_prime = morse.witness.value_or(CharPoly{});
    row.q_zero = mcut.witness && mcut.witness->is_zero();
    row.q_prime_zero = morse.witness && morse.witness->is_zero();
    row.claimed = s.r_Q <= 0 && 0 <= s.r_P;
    if (row.claimed) {
      out.claimed_with_nonzero_q_prime += !row.q_prime_zero;
      out.claimed_with_nonzero_q += !row.q_zero;
    } else {
      out.unclaimed_with_zero_q += row.q_zero;
      out.unclaimed_with_zero_q_prime += row.q_prime_zero;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace eqcut
