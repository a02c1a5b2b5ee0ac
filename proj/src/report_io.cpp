#include "eqcut/report_io.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace eqcut {

namespace {

Weight parse_weight_key(const std::string& key) {
  Weight value = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (key.empty() || ec != std::errc{} || ptr != key.data() + key.size())
    throw ParseError("character key '" + key + "' is not a decimal weight");
  return value;
}

std::int64_t parse_integer(const Json& j, const std::string& what) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ParseError(what + " is out of range");
    return static_cast<std::int64_t>(v);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw ParseError(what + " must be an integer, got " + j.dump());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool parse_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::string parse_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::string weights_cell(const EquivBundleCP1& b, bool p_side) {
  std::string out;
  for (const auto& s : b.summands()) {
    if (!out.empty()) out += ';';
    out += std::to_string(p_side ? s.r_P : s.r_Q);
  }
  return out;
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "(none)";
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += '(' + s + ')';
  }
  return out;
}

}  // namespace

Json to_json(const Character& c) {
  Json j = Json::object();
  for (const auto& [k, m] : c.terms()) j[std::to_string(k)] = m;
  return j;
}

Json to_json(const CharPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

Json to_json(const CohomologyTable& t) { return Json{{"h0", to_json(t.h0)}, {"h1", to_json(t.h1)}, {"n", t.n}}; }

Json to_json(const CutDecomposition& c) {
  return Json{{"plus", c.plus.literal()},
              {"minus", c.minus.literal()},
              {"red_dims", Json::array({c.red_dims.first, c.red_dims.second})}};
}

Json to_json(const CheckResult& r) {
  Json j{{"check_id", std::string(check_name(r.check_id))}, {"passed", r.passed}, {"inputs", r.inputs}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.residual) j["residual"] = std::visit([](const auto& v) { return to_json(v); }, *r.residual);
  if (r.note) j["note"] = *r.note;
  return j;
}

Json to_json(const SweepReport& r) {
  Json j = Json::object();
  j["grid"] = Json::array();
  for (const auto& b : r.grid) j["grid"].push_back(b.literal());
  j["checks"] = Json::array();
  for (CheckId id : r.checks) j["checks"].push_back(std::string(check_name(id)));
  j["results"] = Json::array();
  for (const auto& row : r.results) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(to_json(c));
    j["results"].push_back(std::move(jr));
  }
  j["summary"] = Json::object();
  for (const auto& [id, t] : r.summary)
    j["summary"][std::string(check_name(id))] = Json{{"passed", t.passed}, {"failed", t.failed}};
  j["equality_sets"] = Json::object();
  for (const auto& [id, pts] : r.equality_sets) j["equality_sets"][std::string(check_name(id))] = pts;
  return j;
}

Json to_json(const EqualityRegionReport& r) {
  Json rows = Json::array();
  std::vector<std::string> q_zero, q_prime_zero, claimed;
  for (const auto& row : r.rows) {
    const std::string lit = std::to_string(row.r_P) + ":" + std::to_string(row.r_Q);
    rows.push_back(Json{{"r_P", row.r_P},
                        {"r_Q", row.r_Q},
                        {"q", to_json(row.q)},
                        {"q_prime", to_json(row.q_prime)},
                        {"q_zero", row.q_zero},
                        {"q_prime_zero", row.q_prime_zero},
                        {"claimed", row.claimed}});
    if (row.q_zero) q_zero.push_back(lit);
    if (row.q_prime_zero) q_prime_zero.push_back(lit);
    if (row.claimed) claimed.push_back(lit);
  }
  return Json{{"rows", std::move(rows)},
              {"q_zero_set", q_zero},
              {"q_prime_zero_set", q_prime_zero},
              {"claimed_region", claimed},
              {"findings",
               Json{{"claimed_with_nonzero_q_prime", r.claimed_with_nonzero_q_prime},
                    {"claimed_with_nonzero_q", r.claimed_with_nonzero_q},
                    {"unclaimed_with_zero_q", r.unclaimed_with_zero_q},
                    {"unclaimed_with_zero_q_prime", r.unclaimed_with_zero_q_prime}}}};
}

Character character_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a character must be a JSON object, got " + j.dump());
  Character c;
  for (const auto& [key, value] : j.items())
    c.add_term(parse_weight_key(key), parse_integer(value, "multiplicity of weight " + key));
  return c;
}

CharPoly charpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a character polynomial must be a JSON array");
  std::vector<Character> coeffs;
  for (const auto& c : j) coeffs.push_back(character_from_json(c));
  return CharPoly(std::move(coeffs));
}

CohomologyTable table_from_json(const Json& j) {
  CohomologyTable t;
  t.h0 = character_from_json(require(j, "h0"));
  t.h1 = character_from_json(require(j, "h1"));
  t.n = static_cast<int>(parse_integer(require(j, "n"), "n"));
  return t;
}

CheckResult check_result_from_json(const Json& j) {
  CheckResult r;
  r.check_id = parse_check(parse_string(require(j, "check_id"), "check_id"));
  r.passed = parse_bool(require(j, "passed"), "passed");
  r.inputs = parse_string(require(j, "inputs"), "inputs");
  if (j.contains("witness")) r.witness = charpoly_from_json(j.at("witness"));
  if (j.contains("residual")) {
    const auto& res = j.at("residual");
    if (res.is_array())
      r.residual = charpoly_from_json(res);
    else
      r.residual = character_from_json(res);
  }
  if (j.contains("note")) r.note = parse_string(j.at("note"), "note");
  return r;
}

SweepReport sweep_report_from_json(const Json& j) {
  SweepReport r;
  for (const auto& lit : require(j, "grid")) r.grid.push_back(EquivBundleCP1::parse(parse_string(lit, "grid entry")));
  for (const auto& id : require(j, "checks")) r.checks.push_back(parse_check(parse_string(id, "check id")));
  for (const auto& row : require(j, "results")) {
    std::vector<CheckResult> parsed;
    for (const auto& c : row) parsed.push_back(check_result_from_json(c));
    r.results.push_back(std::move(parsed));
  }
  if (r.results.size() != r.grid.size()) throw ParseError("results and grid have different lengths");
  for (const auto& [name, t] : require(j, "summary").items())
    r.summary[parse_check(name)] = {static_cast<std::size_t>(parse_integer(require(t, "passed"), "passed")),
                                    static_cast<std::size_t>(parse_integer(require(t, "failed"), "failed"))};
  for (const auto& [name, pts] : require(j, "equality_sets").items()) {
    auto& set = r.equality_sets[parse_check(name)];
    for (const auto& p : pts) set.push_back(parse_string(p, "equality set entry"));
  }
  return r;
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream out;
  out << "r_P,r_Q,check_id,passed,witness\n";
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    for (const auto& c : r.results[i]) {
      out << weights_cell(r.grid[i], true) << ',' << weights_cell(r.grid[i], false) << ',' << check_name(c.check_id)
          << ',' << (c.passed ? "true" : "false") << ',';
      if (c.witness) out << csv_quote(to_json(*c.witness).dump());
      out << '\n';
    }
  }
  return out.str();
}

std::string to_markdown(const SweepReport& r) {
  std::ostringstream out;
  out << "# Sweep report\n\n";
  out << "Points: " << r.grid.size() << "\n\n";
  out << "| check | passed | failed |\n|---|---:|---:|\n";
  for (const auto& [id, t] : r.summary) out << "| " << check_name(id) << " | " << t.passed << " | " << t.failed << " |\n";

  if (!r.equality_sets.empty()) {
    out << "\n## Zero witness (equality)\n\n";
    for (const auto& [id, pts] : r.equality_sets) out << "- " << check_name(id) << ": " << join(pts) << "\n";
  }

  if (r.summary.contains(CheckId::oracle)) {
    std::size_t h1_limit_notes = 0;
    for (const auto& row : r.results)
      for (const auto& c : row)
        if (c.check_id == CheckId::oracle && c.passed && c.note) ++h1_limit_notes;
    out << "\n## Oracle agreement\n\n"
        << "H^1 of a line bundle with r_Q > r_P is the sum of u^m for r_P+1 <= m <= r_Q-1; it matches the Cech "
           "oracle at every passing point. A lower limit of r_P-1 would disagree with the oracle at "
        << h1_limit_notes << " point(s).\n";
  }

  std::vector<const CheckResult*> failures;
  for (const auto& row : r.results)
    for (const auto& c : row)
      if (!c.passed) failures.push_back(&c);
  if (!failures.empty()) {
    out << "\n## Failures\n\n| bundle | check | residual | note |\n|---|---|---|---|\n";
    for (const auto* c : failures) {
      std::string residual;
      if (c->residual) residual = std::visit([](const auto& v) { return to_string(v); }, *c->residual);
      out << "| " << c->inputs << " | " << check_name(c->check_id) << " | " << residual << " | "
          << c->note.value_or("") << " |\n";
    }
  }
  return out.str();
}

std::string to_markdown(const EqualityRegionReport& r) {
  std::ostringstream out;
  out << "# Equality region\n\n";
  out << "| r_P | r_Q | Q | Q = 0 | Q' | Q' = 0 | r_Q <= 0 <= r_P |\n|---:|---:|---|---|---|---|---|\n";
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& row : r.rows)
    out << "| " << row.r_P << " | " << row.r_Q << " | " << to_string(row.q) << " | " << yes(row.q_zero) << " | "
        << to_string(row.q_prime) << " | " << yes(row.q_prime_zero) << " | " << yes(row.claimed) << " |\n";
  out << "\n## Findings\n\n"
      << "- points in r_Q <= 0 <= r_P with Q' != 0: " << r.claimed_with_nonzero_q_prime << "\n"
      << "- points in r_Q <= 0 <= r_P with Q != 0: " << r.claimed_with_nonzero_q << "\n"
      << "- points outside r_Q <= 0 <= r_P with Q = 0: " << r.unclaimed_with_zero_q << "\n"
      << "- points outside r_Q <= 0 <= r_P with Q' = 0: " << r.unclaimed_with_zero_q_prime << "\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace eqcut
