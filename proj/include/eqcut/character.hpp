#pragma once

// Exact arithmetic in the ring of formal S^1-characters Z[u, u^-1] and in
// the polynomial ring over it in a formal variable t.
//
// Weight convention: the monomial e^{-ik theta} is stored at key k, so with
// u := e^{-i theta} a character is a Laurent polynomial in u. Every module
// shares this encoding.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqcut/error.hpp"

namespace eqcut {

using Weight = std::int64_t;
using Multiplicity = std::int64_t;

/// Largest weight interval materialized term by term (ranges, Cech blocks).
inline constexpr Weight kMaxWeightSpan = Weight{1} << 20;

namespace checked {

// Overflow is an OverflowError, never silent wraparound.
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);

}  // namespace checked

/// Element of Z[u, u^-1]. Stored sparsely; zero multiplicities are never
/// kept, so equality is structural.
class Character {
 public:
  using Terms = std::map<Weight, Multiplicity>;

  Character() = default;
  Character(std::initializer_list<std::pair<const Weight, Multiplicity>> terms);

  static Character monomial(Weight k, Multiplicity c = 1);
  static Character constant(Multiplicity c) { return monomial(0, c); }
  /// Sum of u^m for lo <= m <= hi; zero when lo > hi. Throws OverflowError
  /// when the interval is wider than kMaxWeightSpan.
  static Character range(Weight lo, Weight hi);
  /// Counts each weight of the multiset.
  static Character from_weights(std::span<const Weight> weights);

  Multiplicity operator[](Weight k) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  /// Sum of all multiplicities (the dimension, for a genuine representation).
  Multiplicity dimension() const;

  void add_term(Weight k, Multiplicity c);
  /// Multiplication by u^k.
  Character shifted(Weight k) const;

  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  Character& operator*=(const Character& other);
  Character operator-() const;

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character&, const Character&) = default;

 private:
  Terms terms_;
};

/// Every multiplicity is >= 0.
bool is_nonneg(const Character& a);
/// a >= b in the partial order: a - b is nonnegative.
bool char_ge(const Character& a, const Character& b);

/// Human-readable form such as "1 + 2u - u^-1"; "0" for the zero character.
std::string to_string(const Character& a);

/// Polynomial in t with Character coefficients; coefficient p multiplies t^p.
/// Trailing zero coefficients are trimmed.
class CharPoly {
 public:
  CharPoly() = default;
  CharPoly(std::initializer_list<Character> coeffs);
  explicit CharPoly(std::vector<Character> coeffs);
  /// Constant polynomial.
  CharPoly(Character c);  // NOLINT(google-explicit-constructor)

  /// t^p * c.
  static CharPoly term(std::size_t p, Character c);
  /// The polynomial 1 + t.
  static CharPoly one_plus_t();

  /// Degree in t; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^p (zero beyond the degree).
  Character coeff(std::size_t p) const;
  const std::vector<Character>& coeffs() const { return coeffs_; }

  CharPoly& operator+=(const CharPoly& other);
  CharPoly& operator-=(const CharPoly& other);
  CharPoly operator-() const;

  friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
  friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  void trim();
  std::vector<Character> coeffs_;
};

bool poly_nonneg(const CharPoly& p);
bool poly_ge(const CharPoly& p, const CharPoly& r);

/// Sum of (-1)^p c_p. A ring homomorphism L[t] -> L.
Character eval_at_minus_one(const CharPoly& p);

/// The coefficient-wise negative part: every negative multiplicity of p,
/// all other entries dropped. Zero iff poly_nonneg(p).
CharPoly negative_part(const CharPoly& p);

std::string to_string(const CharPoly& p);

/// Raised by morse_quotient when P - R does not vanish at t = -1.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(Character value_at_minus_one);
  const Character& value_at_minus_one() const { return value_; }

 private:
  Character value_;
};

/// The unique Q with P = R + (1 + t) Q. Q may have negative coefficients;
/// callers test nonnegativity with poly_nonneg. Throws NotDivisible when
/// (P - R)(-1) != 0.
CharPoly morse_quotient(const CharPoly& p, const CharPoly& r);

}  // namespace eqcut
