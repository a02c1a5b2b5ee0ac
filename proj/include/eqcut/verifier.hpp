#pragma once

// Runs the identities and inequalities relating the cohomology of a bundle to
// that of its cut pieces, on one bundle or across a parameter grid.
//
// A failed check never throws: it carries its witness and a residual so a
// sweep can report every discrepancy it finds.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eqcut/character.hpp"
#include "eqcut/cp1_geometry.hpp"

namespace eqcut {

enum class CheckId {
  gluing,          // index(M) = index(M+) + index(M-) - dims of M_red
  mcut,            // P_cut = P_M + (1+t) Q, Q >= 0
  morse,           // P_+ + P_- + t dim H^0(red) = P_M + (1+t) Q', Q' >= 0
  mv,              // same left side, right side P_cut
  simple,          // degreewise consequence of the morse check
  semicontinuity,  // h^p(cut) >= h^p(M), equal indices
  oracle,          // closed forms agree with the Cech and localization oracles
};

inline constexpr std::array<CheckId, 7> kAllChecks = {CheckId::gluing, CheckId::mcut,           CheckId::morse,
                                                      CheckId::mv,     CheckId::simple,         CheckId::semicontinuity,
                                                      CheckId::oracle};

std::string_view check_name(CheckId id);
/// Throws ParseError on an unknown name.
CheckId parse_check(std::string_view name);
/// Comma-separated names; "all" expands to kAllChecks. Duplicates collapse,
/// order follows kAllChecks.
std::vector<CheckId> parse_check_list(std::string_view list);

/// True for the checks whose witness is a (1+t)-quotient.
bool has_morse_witness(CheckId id);

using Residual = std::variant<Character, CharPoly>;

struct CheckResult {
  CheckId check_id = CheckId::gluing;
  bool passed = false;
  std::optional<CharPoly> witness;
  std::optional<Residual> residual;
  std::optional<std::string> note;
  std::string inputs;  ///< bundle literal

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

CheckResult verify_gluing(const EquivBundleCP1& bundle);
CheckResult verify_cut_inequality(const EquivBundleCP1& bundle);
CheckResult verify_morse(const EquivBundleCP1& bundle);
CheckResult verify_mv_morse(const EquivBundleCP1& bundle);
CheckResult verify_simple(const EquivBundleCP1& bundle);
CheckResult verify_semicontinuity(const EquivBundleCP1& bundle);
CheckResult cross_validate(const EquivBundleCP1& bundle);

/// Dispatches on the id. An arithmetic overflow inside a check becomes a
/// failed result with a note instead of an exception.
CheckResult run_check(CheckId id, const EquivBundleCP1& bundle);

/// Inclusive rectangle of rank-1 bundles (r_P, r_Q).
struct GridSpec {
  Weight rp_lo = 0, rp_hi = 0;
  Weight rq_lo = 0, rq_hi = 0;

  bool empty() const { return rp_lo > rp_hi || rq_lo > rq_hi; }
  /// Lexicographic in (r_P, r_Q).
  std::vector<EquivBundleCP1> points() const;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct SweepReport {
  std::vector<EquivBundleCP1> grid;
  std::vector<CheckId> checks;
  std::vector<std::vector<CheckResult>> results;  ///< results[i] belongs to grid[i]
  std::map<CheckId, CheckTally> summary;
  /// For each Morse-type check, the grid points whose witness is identically 0.
  std::map<CheckId, std::vector<std::string>> equality_sets;

  bool all_passed() const;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

struct SweepOptions {
  int threads = 0;         ///< 0: OpenMP default
  bool fail_fast = false;  ///< stop after the first point with a failed check (runs in order)
};

/// Evaluates every check on every point, in parallel across points. The
/// report is identical to sweep_serial's whatever the thread count.
SweepReport sweep(const std::vector<EquivBundleCP1>& grid, const std::vector<CheckId>& checks,
                  const SweepOptions& options = {});
SweepReport sweep(const GridSpec& grid, const std::vector<CheckId>& checks, const SweepOptions& options = {});

/// Single-threaded reference for sweep.
SweepReport sweep_serial(const std::vector<EquivBundleCP1>& grid, const std::vector<CheckId>& checks);

/// Rebuilds summary and equality_sets from grid and results.
void aggregate(SweepReport& report);

struct RegionRow {
  Weight r_P = 0;
  Weight r_Q = 0;
  bool q_zero = false;        ///< cut-inequality witness Q == 0
  bool q_prime_zero = false;  ///< morse witness Q' == 0
  CharPoly q;
  CharPoly q_prime;
  bool claimed = false;  ///< r_Q <= 0 <= r_P

  friend bool operator==(const RegionRow&, const RegionRow&) = default;
};

/// Where the cut inequality and the morse inequality are equalities, set
/// beside the region r_Q <= 0 <= r_P claimed for them. Nothing here asserts
/// the claim; the findings are counts.
struct EqualityRegionReport {
  SweepReport sweep;
  std::vector<RegionRow> rows;
  std::size_t claimed_with_nonzero_q_prime = 0;
  std::size_t unclaimed_with_zero_q = 0;
  std::size_t unclaimed_with_zero_q_prime = 0;
  std::size_t claimed_with_nonzero_q = 0;
};

EqualityRegionReport equality_region(const GridSpec& grid, const SweepOptions& options = {});

}  // namespace eqcut
