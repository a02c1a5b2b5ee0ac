#include "eqcut/verifier.hpp"

#include <exception>

#include "eqcut/oracles.hpp"

namespace eqcut {

namespace {

constexpr std::array<std::string_view, 7> kCheckNames = {"gluing", "mcut",           "morse", "mv",
                                                         "simple", "semicontinuity", "oracle"};

CheckResult make_result(CheckId id, const EquivBundleCP1& bundle) {
  CheckResult r;
  r.check_id = id;
  r.inputs = bundle.literal();
  return r;
}

// Sum over p < n of t^{p+1} dim H^p(M_red); n = 1, so only H^0 appears.
CharPoly red_shift(const CutDecomposition& cutd) {
  return CharPoly::term(1, Character::constant(cutd.red_dims.first));
}

// LHS = R + (1+t) Q with Q >= 0.
CheckResult morse_check(CheckId id, const EquivBundleCP1& bundle, const CharPoly& lhs, const CharPoly& rhs) {
  auto result = make_result(id, bundle);
  try {
    CharPoly q = morse_quotient(lhs, rhs);
    result.passed = poly_nonneg(q);
    if (!result.passed) {
      result.residual = negative_part(q);
      result.note = "quotient has negative coefficients";
    }
    result.witness = std::move(q);
  } catch (const NotDivisible& e) {
    result.passed = false;
    result.residual = e.value_at_minus_one();
    result.note = "difference does not vanish at t = -1";
  }
  return result;
}

CharPoly morse_left_side(const CutDecomposition& cutd) {
  return euler_poly(cohomology(cutd.plus)) + euler_poly(cohomology(cutd.minus)) + red_shift(cutd);
}

}  // namespace

std::string_view check_name(CheckId id) { return kCheckNames[static_cast<std::size_t>(id)]; }

CheckId parse_check(std::string_view name) {
  for (std::size_t i = 0; i < kCheckNames.size(); ++i)
    if (kCheckNames[i] == name) return static_cast<CheckId>(i);
  throw ParseError("unknown check id '" + std::string(name) + "'");
}

std::vector<CheckId> parse_check_list(std::string_view list) {
  std::array<bool, kAllChecks.size()> selected{};
  std::string_view rest = list;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    if (item == "all")
      selected.fill(true);
    else if (!item.empty())
      selected[static_cast<std::size_t>(parse_check(item))] = true;
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  std::vector<CheckId> out;
  for (CheckId id : kAllChecks)
    if (selected[static_cast<std::size_t>(id)]) out.push_back(id);
  return out;
}

bool has_morse_witness(CheckId id) { return id == CheckId::mcut || id == CheckId::morse || id == CheckId::mv; }

CheckResult verify_gluing(const EquivBundleCP1& bundle) {
  auto result = make_result(CheckId::gluing, bundle);
  const auto cutd = cut(bundle);
  const Character lhs = index_character(cohomology(bundle));
  const Character rhs = index_character(cohomology(cutd.plus)) + index_character(cohomology(cutd.minus)) -
                        Character::constant(cutd.red_dims.first);
  result.passed = lhs == rhs;
  if (!result.passed) result.residual = lhs - rhs;
  return result;
}

CheckResult verify_cut_inequality(const EquivBundleCP1& bundle) {
  const auto table = cohomology(bundle);
  const auto cut_table = mcut_cohomology(cut(bundle));
  auto result = morse_check(CheckId::mcut, bundle, euler_poly(cut_table), euler_poly(table));
  // Index constancy, the t = -1 specialization.
  const Character index_gap = index_character(cut_table) - index_character(table);
  if (!index_gap.is_zero()) {
    result.passed = false;
    result.residual = index_gap;
    result.note = "indices of M and M_cut differ";
  }
  return result;
}

CheckResult verify_morse(const EquivBundleCP1& bundle) {
  const auto cutd = cut(bundle);
  return morse_check(CheckId::morse, bundle, morse_left_side(cutd), euler_poly(cohomology(bundle)));
}

CheckResult verify_mv_morse(const EquivBundleCP1& bundle) {
  const auto cutd = cut(bundle);
  return morse_check(CheckId::mv, bundle, morse_left_side(cutd), euler_poly(mcut_cohomology(cutd)));
}

CheckResult verify_simple(const EquivBundleCP1& bundle) {
  auto result = make_result(CheckId::simple, bundle);
  const auto cutd = cut(bundle);
  const auto m = cohomology(bundle);
  const auto plus = cohomology(cutd.plus);
  const auto minus = cohomology(cutd.minus);
  const Character gap0 = plus.h0 + minus.h0 - m.h0;
  const Character gap1 = plus.h1 + minus.h1 + Character::constant(cutd.red_dims.first) - m.h1;
  result.passed = is_nonneg(gap0) && is_nonneg(gap1);
  if (!result.passed) result.residual = negative_part(CharPoly{gap0, gap1});
  return result;
}

CheckResult verify_semicontinuity(const EquivBundleCP1& bundle) {
  auto result = make_result(CheckId::semicontinuity, bundle);
  const auto m = cohomology(bundle);
  const auto c = mcut_cohomology(cut(bundle));
  const CharPoly gap{c.h0 - m.h0, c.h1 - m.h1};
  const Character index_gap = index_character(c) - index_character(m);
  result.passed = poly_nonneg(gap) && index_gap.is_zero();
  if (!index_gap.is_zero()) {
    result.residual = index_gap;
    result.note = "indices of M and M_cut differ";
  } else if (!result.passed) {
    result.residual = negative_part(gap);
  }
  return result;
}

CheckResult cross_validate(const EquivBundleCP1& bundle) {
  auto result = make_result(CheckId::oracle, bundle);
  auto fail = [&](CharPoly residual, std::string what) {
    if (!result.residual) {
      result.residual = std::move(residual);
      result.note = std::move(what);
    }
  };

  Character h1_limit_gap;
  for (const auto& s : bundle.summands()) {
    const auto closed = cohomology(s);
    const auto cech = cech_cohomology_p1(s);
    if (closed != cech) fail(euler_poly(closed) - euler_poly(cech), "cohomology differs from the Cech oracle");
    const Character loc = localization_index(s);
    if (loc != index_character(cech))
      fail(CharPoly(loc - index_character(cech)), "localization index differs from the Cech index");
    if (s.r_Q > s.r_P) h1_limit_gap += Character::range(s.r_P - 1, s.r_Q - 1) - cech.h1;
  }
  const auto cutd = cut(bundle);
  const auto closed_cut = mcut_cohomology(cutd);
  const auto nodal = cech_cohomology_nodal(cutd);
  if (closed_cut != nodal)
    fail(euler_poly(closed_cut) - euler_poly(nodal), "cut cohomology differs from the nodal Cech oracle");

  result.passed = !result.residual.has_value();
  if (result.passed && !h1_limit_gap.is_zero())
    result.note = "H^1 sums from r_P+1 to r_Q-1; starting at r_P-1 instead would overcount by " +
                  to_string(h1_limit_gap);
  return result;
}

CheckResult run_check(CheckId id, const EquivBundleCP1& bundle) {
  try {
    switch (id) {
      case CheckId::gluing: return verify_gluing(bundle);
      case CheckId::mcut: return verify_cut_inequality(bundle);
      case CheckId::morse: return verify_morse(bundle);
      case CheckId::mv: return verify_mv_morse(bundle);
      case CheckId::simple: return verify_simple(bundle);
      case CheckId::semicontinuity: return verify_semicontinuity(bundle);
      case CheckId::oracle: return cross_validate(bundle);
    }
  } catch (const std::exception& e) {
    auto result = make_result(id, bundle);
    result.note = std::string("error: ") + e.what();
    return result;
  }
  throw std::logic_error("unhandled check id");
}

std::vector<EquivBundleCP1> GridSpec::points() const {
  std::vector<EquivBundleCP1> out;
  for (Weight rp = rp_lo; rp <= rp_hi; ++rp)
    for (Weight rq = rq_lo; rq <= rq_hi; ++rq) out.emplace_back(rp, rq);
  return out;
}

bool SweepReport::all_passed() const {
  for (const auto& row : results)
    for (const auto& r : row)
      if (!r.passed) return false;
  return true;
}

void aggregate(SweepReport& report) {
  report.summary.clear();
  report.equality_sets.clear();
  for (CheckId id : report.checks) {
    report.summary[id] = {};
    if (has_morse_witness(id)) report.equality_sets[id] = {};
  }
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    for (const auto& r : report.results[i]) {
      auto& tally = report.summary[r.check_id];
      (r.passed ? tally.passed : tally.failed) += 1;
      if (has_morse_witness(r.check_id) && r.witness && r.witness->is_zero())
        report.equality_sets[r.check_id].push_back(report.grid[i].literal());
    }
  }
}

}  // namespace eqcut
