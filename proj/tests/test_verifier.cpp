#include <doctest.h>

#include "eqcut/report_io.hpp"
#include "eqcut/verifier.hpp"
#include "generators.hpp"

using namespace eqcut;
using eqcut::testing::one;
using eqcut::testing::u;

namespace {

EquivBundleCP1 b(Weight rp, Weight rq) { return EquivBundleCP1(rp, rq); }

CharPoly morse_lhs(const EquivBundleCP1& bundle) {
  const auto c = cut(bundle);
  return euler_poly(cohomology(c.plus)) + euler_poly(cohomology(c.minus)) +
         CharPoly::term(1, Character::constant(c.red_dims.first));
}

}  // namespace

TEST_CASE("check names") {
  CHECK(parse_check("mv") == CheckId::mv);
  CHECK(check_name(CheckId::semicontinuity) == "semicontinuity");
  CHECK_THROWS_AS(parse_check("bogus"), ParseError);
  CHECK(parse_check_list("all").size() == 7);
  CHECK(parse_check_list("morse,gluing,morse") == std::vector<CheckId>{CheckId::gluing, CheckId::morse});
  CHECK(parse_check_list("").empty());
  CHECK_THROWS_AS(parse_check_list("gluing,nope"), ParseError);
}

TEST_CASE("verify_gluing") {
  for (auto bundle : {b(2, 2), b(0, 0), b(-1, 1)}) {
    const auto r = verify_gluing(bundle);
    CHECK(r.passed);
    CHECK_FALSE(r.residual.has_value());
    CHECK(r.inputs == bundle.literal());
  }
}

TEST_CASE("verify_cut_inequality") {
  auto r = verify_cut_inequality(b(2, 2));
  CHECK(r.passed);
  CHECK(r.witness == CharPoly{u()});
  CHECK(verify_cut_inequality(b(1, -1)).witness == CharPoly{});
  CHECK(verify_cut_inequality(b(0, 0)).witness == CharPoly{});
  CHECK(verify_cut_inequality(b(1, -1)).passed);
}

TEST_CASE("verify_morse") {
  auto r = verify_morse(b(3, 3));
  CHECK(r.passed);
  CHECK(r.witness == CharPoly{one() + u() + u(2)});
  CHECK(verify_morse(b(1, -1)).witness == CharPoly{one()});
  CHECK(verify_morse(b(0, 0)).witness == CharPoly{one()});
}

TEST_CASE("verify_mv_morse") {
  CHECK(verify_mv_morse(b(2, 2)).witness == CharPoly{one()});
  CHECK(verify_mv_morse(b(0, 0)).witness == CharPoly{one()});
  auto r = verify_mv_morse(b(-1, 1));
  CHECK(r.passed);
  CHECK(r.witness == CharPoly{});
}

TEST_CASE("verify_simple, verify_semicontinuity, cross_validate") {
  for (auto bundle : {b(2, 2), b(0, 0), b(-4, 3)}) CHECK(verify_simple(bundle).passed);
  for (auto bundle : {b(2, 2), b(0, 0), b(-3, 2)}) CHECK(verify_semicontinuity(bundle).passed);
  for (auto bundle : {b(2, 0), b(0, 0), b(-3, 0)}) CHECK(cross_validate(bundle).passed);

  // r_Q > r_P: the oracle note records the two-unit H^1 limit discrepancy.
  const auto r = cross_validate(b(-3, 0));
  REQUIRE(r.note.has_value());
  CHECK(r.note->find("u^-4 + u^-3") != std::string::npos);
  CHECK_FALSE(cross_validate(b(2, 0)).note.has_value());
}

TEST_CASE("run_check turns overflow into a failed result") {
  const auto huge = std::numeric_limits<Weight>::max();
  const auto r = run_check(CheckId::morse, EquivBundleCP1(huge, huge));
  CHECK_FALSE(r.passed);
  REQUIRE(r.note.has_value());
  CHECK(r.note->rfind("error:", 0) == 0);
}

TEST_CASE("grid invariants of the witnesses") {
  for (Weight rp = -10; rp <= 10; ++rp) {
    for (Weight rq = -10; rq <= 10; ++rq) {
      CAPTURE(rp);
      CAPTURE(rq);
      const auto bundle = b(rp, rq);
      const auto q = verify_cut_inequality(bundle);
      const auto qp = verify_morse(bundle);
      const auto qpp = verify_mv_morse(bundle);
      REQUIRE(q.passed);
      REQUIRE(qp.passed);
      REQUIRE(qpp.passed);
      // Reconstruction.
      REQUIRE(CharPoly::one_plus_t() * *q.witness + euler_poly(cohomology(bundle)) ==
              euler_poly(mcut_cohomology(cut(bundle))));
      REQUIRE(CharPoly::one_plus_t() * *qp.witness + euler_poly(cohomology(bundle)) == morse_lhs(bundle));
      REQUIRE(CharPoly::one_plus_t() * *qpp.witness + euler_poly(mcut_cohomology(cut(bundle))) == morse_lhs(bundle));
      if (rq <= 0 && 0 <= rp) {
        REQUIRE(q.witness->is_zero());
        REQUIRE(*qp.witness == CharPoly{one()});
      }
      if (rp == rq && rp > 0) {
        REQUIRE(*qp.witness == CharPoly{Character::range(0, rp - 1)});
        REQUIRE(*q.witness == CharPoly{Character::range(1, rp - 1)});
      }
    }
  }
}

TEST_CASE("property: every check passes on random direct sums") {
  testing::Gen gen(0x5eed0401);
  for (int i = 0; i < 100; ++i) {
    const auto bundle = gen.bundle(3);
    CAPTURE(bundle.literal());
    for (CheckId id : kAllChecks) REQUIRE(run_check(id, bundle).passed);
  }
}

TEST_CASE("sweep") {
  const GridSpec grid{-2, 2, -2, 2};
  const std::vector<CheckId> all(kAllChecks.begin(), kAllChecks.end());
  const auto report = sweep(grid, all);
  CHECK(report.grid.size() == 25);
  CHECK(report.grid.front().literal() == "-2:-2");
  CHECK(report.grid[1].literal() == "-2:-1");
  CHECK(report.all_passed());
  for (const auto& [id, tally] : report.summary) CHECK(tally == CheckTally{25, 0});
  CHECK(report.equality_sets.size() == 3);
  // Q' vanishes only where r_P < 0 < r_Q: M has pure H^1 and the cut's
  // extra H^1 from the node absorbs the red term.
  const std::vector<std::string> q_prime_zero{"-2:1", "-2:2", "-1:1", "-1:2"};
  CHECK(report.equality_sets.at(CheckId::morse) == q_prime_zero);
  CHECK(report.equality_sets.at(CheckId::mv) == q_prime_zero);

  SUBCASE("parallel and serial reports are identical") {
    const GridSpec wide{-10, 10, -10, 10};
    const auto serial = sweep_serial(wide.points(), all);
    for (int threads : {1, 2, 4, 7}) {
      const auto parallel = sweep(wide, all, {threads, false});
      REQUIRE(parallel == serial);
      REQUIRE(dump(to_json(parallel)) == dump(to_json(serial)));
    }
  }

  SUBCASE("single point") {
    const auto one_point = sweep(GridSpec{3, 3, 3, 3}, {CheckId::morse});
    REQUIRE(one_point.results.size() == 1);
    CHECK(one_point.results[0][0].witness == CharPoly{one() + u() + u(2)});
  }

  SUBCASE("no checks") {
    const auto empty = sweep(grid, {});
    CHECK(empty.results.size() == 25);
    for (const auto& row : empty.results) CHECK(row.empty());
    CHECK(empty.summary.empty());
  }

  SUBCASE("fail_fast on an all-pass grid visits every point") {
    const auto ff = sweep(grid, all, {0, true});
    CHECK(ff == report);
  }
}

TEST_CASE("aggregate tallies failures") {
  SweepReport r;
  r.grid = {b(0, 0), b(1, 1)};
  r.checks = {CheckId::mcut};
  CheckResult ok{CheckId::mcut, true, CharPoly{}, std::nullopt, std::nullopt, "0:0"};
  CheckResult bad{CheckId::mcut, false, std::nullopt, Residual{one()}, std::string("x"), "1:1"};
  r.results = {{ok}, {bad}};
  aggregate(r);
  CHECK(r.summary.at(CheckId::mcut) == CheckTally{1, 1});
  CHECK(r.equality_sets.at(CheckId::mcut) == std::vector<std::string>{"0:0"});
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("equality_region") {
  const auto region = equality_region(GridSpec{-1, 1, -1, 1});
  REQUIRE(region.rows.size() == 9);
  auto row_at = [&](Weight rp, Weight rq) {
    for (const auto& row : region.rows)
      if (row.r_P == rp && row.r_Q == rq) return row;
    FAIL("missing row");
    return RegionRow{};
  };
  CHECK(row_at(1, -1).q_zero);
  CHECK(row_at(1, -1).q_prime == CharPoly{one()});
  CHECK(row_at(1, -1).claimed);
  CHECK(row_at(0, 0).q_zero);
  CHECK(row_at(-1, 1).q_zero);
  CHECK_FALSE(row_at(-1, 1).claimed);
  CHECK(row_at(1, 1).q_zero);

  const auto big = equality_region(GridSpec{-3, 3, -3, 3});
  CHECK(big.claimed_with_nonzero_q_prime == 16);
  CHECK(big.claimed_with_nonzero_q == 0);
  CHECK(big.unclaimed_with_zero_q > 0);
}
