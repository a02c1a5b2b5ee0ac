#pragma once

// Brute-force cross-checks for the closed-form rules in cp1_geometry:
//
//  * a weight-graded Cech complex on the standard two-chart cover of the
//    projective line, reduced weight by weight with exact integer algebra;
//  * the same complex glued at a node, which computes the cohomology of the
//    cut space from explicit section bases and an explicit evaluation map;
//  * the fixed-point localization formula for the equivariant index.
//
// None of these call into the closed-form engine.

#include <utility>
#include <vector>

#include "eqcut/character.hpp"
#include "eqcut/cp1_geometry.hpp"
#include "eqcut/integer_matrix.hpp"

namespace eqcut {

/// Chart 0 is the affine chart around Q with coordinate z, trivialized by a
/// frame of weight r_Q; chart 1 is the chart around P with coordinate
/// w = 1/z and a frame of weight r_P. z has weight +1.
struct ChartMonomial {
  int chart = 0;
  Weight exponent = 0;

  friend bool operator==(const ChartMonomial&, const ChartMonomial&) = default;
};

/// The part of the Cech complex C^0 -> C^1 in a single weight m.
struct WeightBlock {
  Weight weight = 0;
  std::vector<ChartMonomial> c0_basis;  ///< sections over chart 0 or chart 1
  std::vector<Weight> c1_basis;         ///< exponents k of z^k (chart-0 frame) on the overlap
  IntMatrix differential;               ///< c1_basis.size() x c0_basis.size()
};

class GradedCechComplex {
 public:
  /// Builds the blocks for weights in [min(r_P, r_Q) - 1, max(r_P, r_Q) + 1].
  /// Every other block is an isomorphism between one-dimensional pieces and
  /// contributes nothing. Throws std::logic_error if a differential ever
  /// connects basis elements of different weights.
  static GradedCechComplex for_line(const LineWeights& summand);

  const LineWeights& summand() const { return summand_; }
  Weight min_weight() const { return lo_; }
  Weight max_weight() const { return hi_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  /// Block for weight m, or nullptr outside the examined range.
  const WeightBlock* block(Weight m) const;

  Weight weight_of(const ChartMonomial& mono) const;
  Weight overlap_weight(Weight exponent) const;

  /// Graded kernel and cokernel dimensions of the differential.
  CohomologyTable cohomology() const;
  /// Z-basis of the global sections of weight m, as coefficient vectors over
  /// block(m)->c0_basis. Empty outside the examined range.
  std::vector<std::vector<std::int64_t>> global_sections(Weight m) const;

 private:
  LineWeights summand_;
  Weight lo_ = 0;
  Weight hi_ = -1;
  std::vector<WeightBlock> blocks_;
};

CohomologyTable cech_cohomology_p1(const LineWeights& summand);

/// Cohomology of E_cut computed from explicit section bases: H^0 is the
/// kernel of the evaluation-difference map into the fiber over the node, and
/// its cokernel joins H^1. Throws MalformedCut on a nonzero node weight.
CohomologyTable cech_cohomology_nodal(const CutDecomposition& cutd);

/// Laurent fraction num / den; den is never zero.
class RationalCharacter {
 public:
  RationalCharacter(Character numerator, Character denominator);

  const Character& numerator() const { return num_; }
  const Character& denominator() const { return den_; }

  /// Multiplies numerator and denominator by a nonzero factor.
  RationalCharacter rescaled(const Character& factor) const;

  /// Quotient and remainder of Laurent division; the remainder is zero iff
  /// the fraction is a Laurent polynomial (for divisors with unit leading
  /// coefficient).
  std::pair<Character, Character> divide() const;
  /// The fraction as a Laurent polynomial; throws NonPolynomialResult.
  Character reduce() const;

  friend RationalCharacter operator+(const RationalCharacter& a, const RationalCharacter& b);

 private:
  Character num_;
  Character den_;
};

/// index = u^{r_P} / (1 - u^{-1}) + u^{r_Q} / (1 - u), reduced exactly.
Character localization_index(const LineWeights& summand);

}  // namespace eqcut
