#pragma once

// Equivariant bundles on the projective line with the rotation action, their
// cohomology characters, and the cut at moment-map level 0.
//
// The moment map is normalized with mu(P) = 1 and mu(Q) = -1. A line bundle
// is determined up to equivariant isomorphism by its fiber weights (r_P, r_Q)
// at the two fixed points; its degree is r_P - r_Q. Higher rank bundles are
// formal direct sums of line bundles.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqcut/character.hpp"

namespace eqcut {

struct LineWeights {
  Weight r_P = 0;  ///< fiber weight at P, where mu = 1
  Weight r_Q = 0;  ///< fiber weight at Q, where mu = -1

  Weight degree() const { return checked::sub(r_P, r_Q); }

  friend bool operator==(const LineWeights&, const LineWeights&) = default;
  friend auto operator<=>(const LineWeights&, const LineWeights&) = default;
};

class EquivBundleCP1 {
 public:
  /// Throws std::invalid_argument on an empty summand list.
  explicit EquivBundleCP1(std::vector<LineWeights> summands);
  EquivBundleCP1(Weight r_P, Weight r_Q) : summands_{{r_P, r_Q}} {}

  /// Parses "rP:rQ[,rP:rQ...]"; throws ParseError.
  static EquivBundleCP1 parse(std::string_view literal);

  const std::vector<LineWeights>& summands() const { return summands_; }
  std::size_t rank() const { return summands_.size(); }
  /// Canonical literal, e.g. "3:1,0:-2".
  std::string literal() const;

  friend bool operator==(const EquivBundleCP1&, const EquivBundleCP1&) = default;

 private:
  std::vector<LineWeights> summands_;
};

struct CohomologyTable {
  Character h0;
  Character h1;
  int n = 1;  ///< complex dimension

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// M_+ carries the fixed points P and M_red, M_- carries M_red and Q. Each
/// summand of `plus` is stored as (r_P, 0) and each summand of `minus` as
/// (0, r_Q): the fiber weight over M_red sits in the slot of the fixed point
/// it replaces and is always zero.
struct CutDecomposition {
  EquivBundleCP1 plus;
  EquivBundleCP1 minus;
  std::pair<Multiplicity, Multiplicity> red_dims;  ///< (dim H^0, dim H^1) of E_red over M_red

  friend bool operator==(const CutDecomposition&, const CutDecomposition&) = default;
};

CohomologyTable cohomology(const LineWeights& summand);
CohomologyTable cohomology(const EquivBundleCP1& bundle);

/// h0 + t h1.
CharPoly euler_poly(const CohomologyTable& table);

/// Cut at level 0, summand by summand.
CutDecomposition cut(const EquivBundleCP1& bundle);

/// Whether the evaluation-difference map H^0(E_+) + H^0(E_-) -> E_red at the
/// weight-0 node is onto for one summand pair: a weight-0 section exists on
/// at least one side.
bool node_evaluation_onto(const LineWeights& plus, const LineWeights& minus);

/// Cohomology of E_cut over M_+ glued to M_- at M_red, from the long exact
/// sequence. Throws MalformedCut if a reduced-space weight is nonzero.
CohomologyTable mcut_cohomology(const CutDecomposition& cutd);

/// h0 - h1.
Character index_character(const CohomologyTable& table);

}  // namespace eqcut
