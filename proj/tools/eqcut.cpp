// eqcut: cohomology characters of equivariant bundles on the projective line,
// their cut at level 0, and verification of the resulting Morse-type
// inequalities.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqcut/cp1_geometry.hpp"
#include "eqcut/report_io.hpp"
#include "eqcut/run_config.hpp"
#include "eqcut/verifier.hpp"

namespace {

using namespace eqcut;

constexpr int kExitUsage = 2;

struct Outputs {
  std::string format = "json";
  std::string out_path;
  bool timestamps = false;
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + out_path + "'");
  out << text;
}

std::string render(const SweepReport& report, OutputFormat format, bool timestamps) {
  switch (format) {
    case OutputFormat::json: {
      Json j = to_json(report);
      if (timestamps) j["generated_at"] = utc_now();
      return dump(j);
    }
    case OutputFormat::csv:
      return to_csv(report);
    case OutputFormat::md: {
      std::string text = to_markdown(report);
      if (timestamps) text += "\nGenerated at " + utc_now() + "\n";
      return text;
    }
  }
  return {};
}

int finish(const SweepReport& report, OutputFormat format, const Outputs& o) {
  emit(render(report, format, o.timestamps), o.out_path);
  return report.all_passed() ? 0 : 1;
}

void add_output_flags(CLI::App* cmd, Outputs& o) {
  cmd->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
  cmd->add_flag("--timestamps", o.timestamps, "stamp reports with the generation time");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cohomology of bundles on the projective line and their symplectic cut"};
  app.require_subcommand(1);

  std::string bundle_literal;
  std::string checks = "all";
  std::string rp_range, rq_range, config_path;
  bool fail_fast = false;
  int threads = 0;
  Outputs outputs;

  auto* cohomology_cmd = app.add_subcommand("cohomology", "print ch H^0 and ch H^1 of a bundle");
  cohomology_cmd->add_option("bundle", bundle_literal, "rP:rQ[,rP:rQ...]")->required();

  auto* cut_cmd = app.add_subcommand("cut", "cut a bundle at level 0 and print the pieces");
  cut_cmd->add_option("bundle", bundle_literal, "rP:rQ[,rP:rQ...]")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run checks on one bundle");
  verify_cmd->add_option("bundle", bundle_literal, "rP:rQ[,rP:rQ...]")->required();
  verify_cmd->add_option("--checks", checks, "gluing,mcut,morse,mv,simple,semicontinuity,oracle,all");
  add_output_flags(verify_cmd, outputs);

  auto* sweep_cmd = app.add_subcommand("sweep", "run checks over a grid or a config file");
  sweep_cmd->add_option("--config", config_path, "JSON run configuration");
  sweep_cmd->add_option("--rp-range", rp_range, "inclusive A..B");
  sweep_cmd->add_option("--rq-range", rq_range, "inclusive A..B");
  sweep_cmd->add_option("--checks", checks, "gluing,mcut,morse,mv,simple,semicontinuity,oracle,all");
  sweep_cmd->add_flag("--fail-fast", fail_fast, "stop at the first point with a failed check");
  sweep_cmd->add_option("--threads", threads, "worker threads (0: default)")->check(CLI::NonNegativeNumber);
  add_output_flags(sweep_cmd, outputs);

  auto* region_cmd = app.add_subcommand("equality-region", "where the Morse-type inequalities are equalities");
  region_cmd->add_option("--rp-range", rp_range, "inclusive A..B")->required();
  region_cmd->add_option("--rq-range", rq_range, "inclusive A..B")->required();
  std::string region_format = "md";
  region_cmd->add_option("--format", region_format, "md or json")->check(CLI::IsMember({"json", "md"}));
  region_cmd->add_option("--out", outputs.out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cohomology_cmd->parsed()) {
      const auto bundle = EquivBundleCP1::parse(bundle_literal);
      std::cout << dump(to_json(cohomology(bundle)));
      return 0;
    }

    if (cut_cmd->parsed()) {
      const auto bundle = EquivBundleCP1::parse(bundle_literal);
      const auto cutd = cut(bundle);
      Json j = to_json(cutd);
      j["plus_cohomology"] = to_json(cohomology(cutd.plus));
      j["minus_cohomology"] = to_json(cohomology(cutd.minus));
      j["cut_cohomology"] = to_json(mcut_cohomology(cutd));
      std::cout << dump(j);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto bundle = EquivBundleCP1::parse(bundle_literal);
      const auto report = sweep_serial({bundle}, parse_check_list(checks));
      return finish(report, parse_format(outputs.format), outputs);
    }

    if (sweep_cmd->parsed()) {
      RunConfig cfg;
      if (!config_path.empty()) {
        cfg = load_run_config(config_path);
        if (sweep_cmd->count("--checks") > 0) cfg.checks = parse_check_list(checks);
        if (sweep_cmd->count("--format") > 0) cfg.format = parse_format(outputs.format);
        cfg.fail_fast = cfg.fail_fast || fail_fast;
      } else {
        if (rp_range.empty() || rq_range.empty())
          throw ParseError("sweep needs --config or both --rp-range and --rq-range");
        auto [rp_lo, rp_hi] = parse_range(rp_range);
        auto [rq_lo, rq_hi] = parse_range(rq_range);
        cfg.grid = GridSpec{rp_lo, rp_hi, rq_lo, rq_hi};
        cfg.checks = parse_check_list(checks);
        cfg.format = parse_format(outputs.format);
        cfg.fail_fast = fail_fast;
      }
      if (!outputs.out_path.empty()) cfg.output_path = outputs.out_path;
      const auto report = sweep(cfg.points(), cfg.checks, {threads, cfg.fail_fast});
      Outputs o = outputs;
      o.out_path = cfg.output_path.value_or("");
      return finish(report, cfg.format, o);
    }

    if (region_cmd->parsed()) {
      auto [rp_lo, rp_hi] = parse_range(rp_range);
      auto [rq_lo, rq_hi] = parse_range(rq_range);
      const auto report = equality_region(GridSpec{rp_lo, rp_hi, rq_lo, rq_hi});
      emit(region_format == "md" ? to_markdown(report) : dump(to_json(report)), outputs.out_path);
      // Findings are reported, not judged.
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
