#include "eqcut/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "eqcut/report_io.hpp"

namespace eqcut {

namespace {

Weight parse_endpoint(std::string_view text, std::string_view whole) {
  Weight value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("bad range '" + std::string(whole) + "', expected A..B");
  return value;
}

std::pair<Weight, Weight> range_from_json(const Json& j, const char* what) {
  if (j.is_string()) return parse_range(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    auto lo = j[0].get<Weight>(), hi = j[1].get<Weight>();
    if (lo > hi) throw ParseError(std::string(what) + " is empty");
    return {lo, hi};
  }
  throw ParseError(std::string(what) + " must be \"A..B\" or [A, B]");
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "md") return OutputFormat::md;
  throw ParseError("unknown format '" + std::string(name) + "' (json, csv, md)");
}

std::pair<Weight, Weight> parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError("bad range '" + std::string(text) + "', expected A..B");
  Weight lo = parse_endpoint(text.substr(0, dots), text);
  Weight hi = parse_endpoint(text.substr(dots + 2), text);
  if (lo > hi) throw ParseError("range '" + std::string(text) + "' is empty");
  return {lo, hi};
}

std::vector<EquivBundleCP1> RunConfig::points() const {
  std::vector<EquivBundleCP1> out = bundles;
  if (grid) {
    auto g = grid->points();
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

RunConfig parse_run_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");

  RunConfig cfg;
  if (j.contains("bundles")) {
    if (!j["bundles"].is_array()) throw ParseError("bundles must be an array of literals");
    for (const auto& b : j["bundles"]) {
      if (!b.is_string()) throw ParseError("bundle literals must be strings");
      cfg.bundles.push_back(EquivBundleCP1::parse(b.get<std::string>()));
    }
  }
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (!g.is_object() || !g.contains("rp_range") || !g.contains("rq_range"))
      throw ParseError("grid needs rp_range and rq_range");
    auto [rp_lo, rp_hi] = range_from_json(g["rp_range"], "rp_range");
    auto [rq_lo, rq_hi] = range_from_json(g["rq_range"], "rq_range");
    cfg.grid = GridSpec{rp_lo, rp_hi, rq_lo, rq_hi};
  }
  if (cfg.bundles.empty() && !cfg.grid) throw ParseError("config needs at least one bundle or a grid");

  if (j.contains("checks")) {
    const auto& c = j["checks"];
    std::string list;
    if (c.is_string()) {
      list = c.get<std::string>();
    } else if (c.is_array()) {
      for (const auto& id : c) {
        if (!id.is_string()) throw ParseError("check ids must be strings");
        if (!list.empty()) list += ',';
        list += id.get<std::string>();
      }
    } else {
      throw ParseError("checks must be a list of ids");
    }
    cfg.checks = parse_check_list(list);
  } else {
    cfg.checks.assign(kAllChecks.begin(), kAllChecks.end());
  }

  if (j.contains("output")) {
    const auto& o = j["output"];
    if (!o.is_object()) throw ParseError("output must be an object");
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw ParseError("output.path must be a string");
      cfg.output_path = o["path"].get<std::string>();
    }
    if (o.contains("format")) {
      if (!o["format"].is_string()) throw ParseError("output.format must be a string");
      cfg.format = parse_format(o["format"].get<std::string>());
    }
  }
  if (j.contains("fail_fast")) {
    if (!j["fail_fast"].is_boolean()) throw ParseError("fail_fast must be a boolean");
    cfg.fail_fast = j["fail_fast"].get<bool>();
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

}  // namespace eqcut
