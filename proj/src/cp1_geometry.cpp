#include "eqcut/cp1_geometry.hpp"

#include <charconv>
#include <stdexcept>

namespace eqcut {

namespace {

Weight parse_weight(std::string_view text, std::string_view literal) {
  Weight value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw ParseError("bad weight '" + std::string(text) + "' in bundle literal '" + std::string(literal) + "'");
  return value;
}

}  // namespace

EquivBundleCP1::EquivBundleCP1(std::vector<LineWeights> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw std::invalid_argument("an equivariant bundle needs at least one summand");
}

EquivBundleCP1 EquivBundleCP1::parse(std::string_view literal) {
  std::vector<LineWeights> summands;
  std::string_view rest = literal;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("bundle literal '" + std::string(literal) + "' must look like rP:rQ[,rP:rQ...]");
    summands.push_back({parse_weight(item.substr(0, colon), literal), parse_weight(item.substr(colon + 1), literal)});
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return EquivBundleCP1(std::move(summands));
}

std::string EquivBundleCP1::literal() const {
  std::string out;
  for (const auto& s : summands_) {
    if (!out.empty()) out += ',';
    out += std::to_string(s.r_P) + ':' + std::to_string(s.r_Q);
  }
  return out;
}

CohomologyTable cohomology(const LineWeights& s) {
  CohomologyTable table;
  if (s.r_Q <= s.r_P)
    table.h0 = Character::range(s.r_Q, s.r_P);
  else
    table.h1 = Character::range(checked::add(s.r_P, 1), checked::sub(s.r_Q, 1));
  return table;
}

CohomologyTable cohomology(const EquivBundleCP1& bundle) {
  CohomologyTable table;
  for (const auto& s : bundle.summands()) {
    auto piece = cohomology(s);
    table.h0 += piece.h0;
    table.h1 += piece.h1;
  }
  return table;
}

CharPoly euler_poly(const CohomologyTable& table) { return CharPoly{table.h0, table.h1}; }

CutDecomposition cut(const EquivBundleCP1& bundle) {
  // 0 is a regular value of mu: the only critical values are +-1.
  std::vector<LineWeights> plus;
  std::vector<LineWeights> minus;
  for (const auto& s : bundle.summands()) {
    plus.push_back({s.r_P, 0});
    minus.push_back({0, s.r_Q});
  }
  const auto rank = static_cast<Multiplicity>(bundle.rank());
  return {EquivBundleCP1(std::move(plus)), EquivBundleCP1(std::move(minus)), {rank, 0}};
}

bool node_evaluation_onto(const LineWeights& plus, const LineWeights& minus) {
  return plus.r_P >= 0 || minus.r_Q <= 0;
}

CohomologyTable mcut_cohomology(const CutDecomposition& cutd) {
  const auto& plus = cutd.plus.summands();
  const auto& minus = cutd.minus.summands();
  if (plus.size() != minus.size()) throw MalformedCut("cut pieces have different ranks");
  if (cutd.red_dims != std::pair<Multiplicity, Multiplicity>{static_cast<Multiplicity>(plus.size()), 0})
    throw MalformedCut("reduced-space dimensions must be (rank, 0)");

  CohomologyTable table;
  for (std::size_t i = 0; i < plus.size(); ++i) {
    if (plus[i].r_Q != 0 || minus[i].r_P != 0)
      throw MalformedCut("summand " + std::to_string(i) + " has a nonzero weight over the reduced space");
    auto hp = cohomology(plus[i]);
    auto hm = cohomology(minus[i]);
    table.h0 += hp.h0 + hm.h0;
    table.h1 += hp.h1 + hm.h1;
    // The evaluation difference lands in the weight-0 fiber over M_red;
    // its image is lost from H^0 and its cokernel feeds H^1.
    if (node_evaluation_onto(plus[i], minus[i]))
      table.h0 -= Character::constant(1);
    else
      table.h1 += Character::constant(1);
  }
  return table;
}

Character index_character(const CohomologyTable& table) { return table.h0 - table.h1; }

}  // namespace eqcut
