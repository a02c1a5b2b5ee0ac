#include "eqcut/character.hpp"

#include <sstream>

namespace eqcut {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

// ---------------------------------------------------------------- Character

Character::Character(std::initializer_list<std::pair<const Weight, Multiplicity>> terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

Character Character::monomial(Weight k, Multiplicity c) {
  Character out;
  out.add_term(k, c);
  return out;
}

Character Character::range(Weight lo, Weight hi) {
  Character out;
  if (lo > hi) return out;
  Weight span;
  if (__builtin_sub_overflow(hi, lo, &span) || span >= kMaxWeightSpan)
    throw OverflowError("weight range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is too wide");
  for (Weight m = lo;; ++m) {
    out.terms_.emplace_hint(out.terms_.end(), m, 1);
    if (m == hi) break;
  }
  return out;
}

Character Character::from_weights(std::span<const Weight> weights) {
  Character out;
  for (Weight k : weights) out.add_term(k, 1);
  return out;
}

Multiplicity Character::operator[](Weight k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

Multiplicity Character::dimension() const {
  Multiplicity sum = 0;
  for (const auto& [k, c] : terms_) sum = checked::add(sum, c);
  return sum;
}

void Character::add_term(Weight k, Multiplicity c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Character Character::shifted(Weight k) const {
  Character out;
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), checked::add(w, k), c);
  return out;
}

Character& Character::operator+=(const Character& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

Character& Character::operator-=(const Character& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, checked::neg(c));
  return *this;
}

Character& Character::operator*=(const Character& other) {
  *this = *this * other;
  return *this;
}

Character Character::operator-() const {
  Character out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, checked::neg(c));
  return out;
}

Character operator*(const Character& a, const Character& b) {
  Character out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(checked::add(ka, kb), checked::mul(ca, cb));
  return out;
}

bool is_nonneg(const Character& a) {
  for (const auto& [k, c] : a.terms())
    if (c < 0) return false;
  return true;
}

bool char_ge(const Character& a, const Character& b) { return is_nonneg(a - b); }

std::string to_string(const Character& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    Multiplicity mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'u';
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

// ----------------------------------------------------------------- CharPoly

CharPoly::CharPoly(std::initializer_list<Character> coeffs) : coeffs_(coeffs) { trim(); }

CharPoly::CharPoly(std::vector<Character> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CharPoly::CharPoly(Character c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

CharPoly CharPoly::term(std::size_t p, Character c) {
  std::vector<Character> coeffs(p + 1);
  coeffs[p] = std::move(c);
  return CharPoly(std::move(coeffs));
}

CharPoly CharPoly::one_plus_t() { return CharPoly{Character::constant(1), Character::constant(1)}; }

Character CharPoly::coeff(std::size_t p) const { return p < coeffs_.size() ? coeffs_[p] : Character{}; }

void CharPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CharPoly& CharPoly::operator+=(const CharPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t p = 0; p < other.coeffs_.size(); ++p) coeffs_[p] += other.coeffs_[p];
  trim();
  return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t p = 0; p < other.coeffs_.size(); ++p) coeffs_[p] -= other.coeffs_[p];
  trim();
  return *this;
}

CharPoly CharPoly::operator-() const {
  CharPoly out;
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Character> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return CharPoly(std::move(coeffs));
}

bool poly_nonneg(const CharPoly& p) {
  for (const auto& c : p.coeffs())
    if (!is_nonneg(c)) return false;
  return true;
}

bool poly_ge(const CharPoly& p, const CharPoly& r) { return poly_nonneg(p - r); }

Character eval_at_minus_one(const CharPoly& p) {
  Character out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i % 2 == 0)
      out += p.coeffs()[i];
    else
      out -= p.coeffs()[i];
  }
  return out;
}

CharPoly negative_part(const CharPoly& p) {
  std::vector<Character> coeffs(p.coeffs().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (const auto& [k, c] : p.coeffs()[i].terms())
      if (c < 0) coeffs[i].add_term(k, c);
  return CharPoly(std::move(coeffs));
}

std::string to_string(const CharPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(c) << ')';
    if (i == 1) out << "*t";
    if (i > 1) out << "*t^" << i;
  }
  return out.str();
}

NotDivisible::NotDivisible(Character value_at_minus_one)
    : Error("not divisible by (1 + t): value at t = -1 is " + to_string(value_at_minus_one)),
      value_(std::move(value_at_minus_one)) {}

CharPoly morse_quotient(const CharPoly& p, const CharPoly& r) {
  const CharPoly diff = p - r;
  Character at_minus_one = eval_at_minus_one(diff);
  if (!at_minus_one.is_zero()) throw NotDivisible(std::move(at_minus_one));
  if (diff.is_zero()) return {};

  // Synthetic division by (1 + t): q_m = d_m - q_{m-1}.
  const auto& d = diff.coeffs();
  std::vector<Character> q(d.size() - 1);
  Character running;
  for (std::size_t m = 0; m + 1 < d.size(); ++m) {
    running = d[m] - running;
    q[m] = running;
  }
  return CharPoly(std::move(q));
}

}  // namespace eqcut
