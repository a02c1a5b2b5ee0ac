#include "eqcut/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eqcut {

// ------------------------------------------------------------ Cech complex

Weight GradedCechComplex::weight_of(const ChartMonomial& mono) const {
  // z^j e_0 has weight r_Q + j; w^j e_1 has weight r_P - j.
  return mono.chart == 0 ? checked::add(summand_.r_Q, mono.exponent) : checked::sub(summand_.r_P, mono.exponent);
}

Weight GradedCechComplex::overlap_weight(Weight exponent) const { return checked::add(summand_.r_Q, exponent); }

GradedCechComplex GradedCechComplex::for_line(const LineWeights& summand) {
  GradedCechComplex cx;
  cx.summand_ = summand;
  cx.lo_ = checked::sub(std::min(summand.r_P, summand.r_Q), 1);
  cx.hi_ = checked::add(std::max(summand.r_P, summand.r_Q), 1);
  const Weight degree = summand.degree();
  if (checked::sub(cx.hi_, cx.lo_) >= kMaxWeightSpan) throw OverflowError("Cech weight range is too wide");

  for (Weight m = cx.lo_; m <= cx.hi_; ++m) {
    WeightBlock block;
    block.weight = m;
    const Weight j0 = checked::sub(m, summand.r_Q);
    const Weight j1 = checked::sub(summand.r_P, m);
    if (j0 >= 0) block.c0_basis.push_back({0, j0});
    if (j1 >= 0) block.c0_basis.push_back({1, j1});
    block.c1_basis.push_back(j0);

    // d(s_0, s_1) = s_0 - s_1 on the overlap, in the chart-0 frame, where
    // w^j e_1 = z^{d - j} e_0.
    block.differential = IntMatrix(block.c1_basis.size(), block.c0_basis.size());
    for (std::size_t c = 0; c < block.c0_basis.size(); ++c) {
      const auto& mono = block.c0_basis[c];
      if (cx.weight_of(mono) != m) throw std::logic_error("Cech basis element in the wrong weight block");
      const Weight image = mono.chart == 0 ? mono.exponent : checked::sub(degree, mono.exponent);
      const std::int64_t sign = mono.chart == 0 ? 1 : -1;
      auto row = std::find(block.c1_basis.begin(), block.c1_basis.end(), image);
      if (row == block.c1_basis.end() || cx.overlap_weight(image) != m)
        throw std::logic_error("Cech differential does not preserve weight");
      block.differential(static_cast<std::size_t>(row - block.c1_basis.begin()), c) = sign;
    }
    cx.blocks_.push_back(std::move(block));
  }
  return cx;
}

const WeightBlock* GradedCechComplex::block(Weight m) const {
  if (m < lo_ || m > hi_) return nullptr;
  return &blocks_[static_cast<std::size_t>(m - lo_)];
}

CohomologyTable GradedCechComplex::cohomology() const {
  CohomologyTable table;
  for (const auto& block : blocks_) {
    const auto r = static_cast<Multiplicity>(rank(block.differential));
    table.h0.add_term(block.weight, static_cast<Multiplicity>(block.c0_basis.size()) - r);
    table.h1.add_term(block.weight, static_cast<Multiplicity>(block.c1_basis.size()) - r);
  }
  return table;
}

std::vector<std::vector<std::int64_t>> GradedCechComplex::global_sections(Weight m) const {
  const WeightBlock* b = block(m);
  if (b == nullptr) return {};
  return column_echelon(b->differential).kernel_basis();
}

CohomologyTable cech_cohomology_p1(const LineWeights& summand) {
  return GradedCechComplex::for_line(summand).cohomology();
}

namespace {

// Coefficient of the section that trivializes the fiber at a fixed point,
// i.e. the value of the section there.
std::int64_t value_at(const WeightBlock& block, const std::vector<std::int64_t>& section, int chart) {
  for (std::size_t i = 0; i < block.c0_basis.size(); ++i)
    if (block.c0_basis[i] == ChartMonomial{chart, 0}) return section[i];
  return 0;
}

}  // namespace

CohomologyTable cech_cohomology_nodal(const CutDecomposition& cutd) {
  const auto& plus = cutd.plus.summands();
  const auto& minus = cutd.minus.summands();
  if (plus.size() != minus.size()) throw MalformedCut("cut pieces have different ranks");

  CohomologyTable table;
  for (std::size_t i = 0; i < plus.size(); ++i) {
    // The node is Q on the plus piece (chart 0) and P on the minus piece (chart 1).
    const Weight node_weight = plus[i].r_Q;
    if (node_weight != 0 || minus[i].r_P != 0)
      throw MalformedCut("summand " + std::to_string(i) + " has a nonzero weight over the reduced space");

    const auto cx_plus = GradedCechComplex::for_line(plus[i]);
    const auto cx_minus = GradedCechComplex::for_line(minus[i]);
    const auto h_plus = cx_plus.cohomology();
    const auto h_minus = cx_minus.cohomology();
    table.h1 += h_plus.h1 + h_minus.h1;

    const Weight lo = std::min(cx_plus.min_weight(), cx_minus.min_weight());
    const Weight hi = std::max(cx_plus.max_weight(), cx_minus.max_weight());
    for (Weight m = lo; m <= hi; ++m) {
      const auto sec_plus = cx_plus.global_sections(m);
      const auto sec_minus = cx_minus.global_sections(m);
      const std::size_t fiber_rows = m == node_weight ? 1 : 0;

      IntMatrix evaluation(fiber_rows, sec_plus.size() + sec_minus.size());
      if (fiber_rows == 1) {
        for (std::size_t c = 0; c < sec_plus.size(); ++c)
          evaluation(0, c) = value_at(*cx_plus.block(m), sec_plus[c], 0);
        for (std::size_t c = 0; c < sec_minus.size(); ++c)
          evaluation(0, sec_plus.size() + c) = checked::neg(value_at(*cx_minus.block(m), sec_minus[c], 1));
      }
      const auto r = static_cast<Multiplicity>(rank(evaluation));
      table.h0.add_term(m, static_cast<Multiplicity>(evaluation.cols()) - r);
      table.h1.add_term(m, static_cast<Multiplicity>(fiber_rows) - r);
    }
  }
  return table;
}

// ------------------------------------------------------------ localization

RationalCharacter::RationalCharacter(Character numerator, Character denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
}

RationalCharacter RationalCharacter::rescaled(const Character& factor) const {
  return {num_ * factor, den_ * factor};
}

std::pair<Character, Character> RationalCharacter::divide() const {
  Character quotient;
  Character rem = num_;
  if (rem.is_zero()) return {quotient, rem};

  const Weight num_low = rem.terms().begin()->first;
  const Weight den_low = den_.terms().begin()->first;
  const auto [den_high, den_lead] = *den_.terms().rbegin();
  const Weight den_span = den_high - den_low;

  // Long division from the top; every subtracted term stays at or above
  // the numerator's lowest weight, so this terminates.
  while (!rem.is_zero()) {
    const auto [high, lead] = *rem.terms().rbegin();
    if (high - num_low < den_span || lead % den_lead != 0) break;
    const auto step = Character::monomial(high - den_high, lead / den_lead);
    quotient += step;
    rem -= step * den_;
  }
  return {quotient, rem};
}

Character RationalCharacter::reduce() const {
  auto [quotient, rem] = divide();
  if (!rem.is_zero())
    throw NonPolynomialResult("(" + to_string(num_) + ") / (" + to_string(den_) + ") leaves remainder " +
                              to_string(rem));
  return quotient;
}

RationalCharacter operator+(const RationalCharacter& a, const RationalCharacter& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Character localization_index(const LineWeights& summand) {
  const auto u = Character::monomial(1);
  const auto one = Character::constant(1);
  // Fixed-point contributions: at P the tangent weight is -1, at Q it is +1.
  const RationalCharacter at_p(Character::monomial(summand.r_P), one - Character::monomial(-1));
  const RationalCharacter at_q(Character::monomial(summand.r_Q), one - u);
  // Common denominator u - 1.
  return (at_p.rescaled(u) + at_q.rescaled(-one)).reduce();
}

}  // namespace eqcut
