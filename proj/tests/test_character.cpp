#include <doctest.h>

#include <limits>
#include <vector>

#include "eqcut/character.hpp"
#include "generators.hpp"

using namespace eqcut;
using eqcut::testing::Gen;
using eqcut::testing::one;
using eqcut::testing::u;

TEST_CASE("char_from_weights counts multiplicities") {
  std::vector<Weight> none;
  CHECK(Character::from_weights(none).is_zero());

  std::vector<Weight> h0{0, 1, 2};
  CHECK(Character::from_weights(h0) == one() + u() + u(2));

  std::vector<Weight> repeated{0, 0, -1};
  const auto c = Character::from_weights(repeated);
  CHECK(c == Character::constant(2) + u(-1));
  CHECK(c[0] == 2);
  CHECK(c[-1] == 1);
  CHECK(c[5] == 0);
}

TEST_CASE("ring operations keep canonical form") {
  CHECK((u() + -u()).is_zero());
  CHECK((u() + -u()).terms().empty());
  CHECK((one() + u()) * (one() + u()) == one() + Character::constant(2) * u() + u(2));
  CHECK(u(-1) * u() == one());
  CHECK(Character{{3, 0}, {1, 2}} == Character{{1, 2}});
  CHECK(Character::range(3, 2).is_zero());
  CHECK(Character::range(-1, 1) == u(-1) + one() + u());
}

TEST_CASE("overflow is reported") {
  const auto big = Character::constant(std::numeric_limits<Multiplicity>::max());
  CHECK_THROWS_AS(big + one(), OverflowError);
  CHECK_THROWS_AS(big * Character::constant(2), OverflowError);
  CHECK_THROWS_AS(-Character::constant(std::numeric_limits<Multiplicity>::min()), OverflowError);
  CHECK_THROWS_AS(u(std::numeric_limits<Weight>::max()) * u(), OverflowError);
  constexpr auto wmax = std::numeric_limits<Weight>::max();
  CHECK(Character::range(wmax, wmax) == u(wmax));
  CHECK(Character::range(wmax - 2, wmax).support_size() == 3);
  CHECK_THROWS_AS(Character::range(0, wmax), OverflowError);
  CHECK_THROWS_AS(Character::range(std::numeric_limits<Weight>::min(), wmax), OverflowError);
}

TEST_CASE("partial order") {
  CHECK(is_nonneg(one() + u()));
  CHECK_FALSE(is_nonneg(one() - u()));
  CHECK(char_ge(Character::constant(2) + u(), one() + u()));
  CHECK_FALSE(char_ge(one() + u(), Character::constant(2)));
  // Not total: neither dominates.
  CHECK_FALSE(char_ge(Character::constant(2), one() + u()));
  CHECK(poly_nonneg(CharPoly{one() + u(), Character{}}));
  CHECK_FALSE(poly_nonneg(CharPoly{one(), -u()}));
  CHECK(poly_ge(CharPoly{one(), u()}, CharPoly{Character{}, u()}));
}

TEST_CASE("eval_at_minus_one") {
  CHECK(eval_at_minus_one(CharPoly{one() + u() + u(2), one() + u()}) == u(2));
  CHECK(eval_at_minus_one(CharPoly{}).is_zero());
  CHECK(eval_at_minus_one(CharPoly{one(), one()}).is_zero());
}

TEST_CASE("morse_quotient") {
  SUBCASE("worked example") {
    const CharPoly p{one() + u() + u(2), one() + u()};
    const CharPoly r{u(2)};
    CHECK(morse_quotient(p, r) == CharPoly{one() + u()});
  }
  SUBCASE("equal arguments") {
    const CharPoly p{one() + u(), u(3)};
    CHECK(morse_quotient(p, p).is_zero());
  }
  SUBCASE("not divisible") {
    try {
      morse_quotient(CharPoly{one()}, CharPoly{u()});
      FAIL("expected NotDivisible");
    } catch (const NotDivisible& e) {
      CHECK(e.value_at_minus_one() == one() - u());
    }
  }
  SUBCASE("negative quotients are returned") {
    // (1 + t)(-u) + 0
    const CharPoly p{-u(), -u()};
    const auto q = morse_quotient(p, CharPoly{});
    CHECK(q == CharPoly{-u()});
    CHECK_FALSE(poly_nonneg(q));
    CHECK(negative_part(q) == q);
  }
  SUBCASE("higher degree") {
    const CharPoly q{u(), one(), u(-2)};
    const CharPoly r{one(), u(4)};
    CHECK(morse_quotient(CharPoly::one_plus_t() * q + r, r) == q);
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(Character{}) == "0");
  CHECK(to_string(one() + u() + u(2)) == "1 + u + u^2");
  CHECK(to_string(Character::constant(2) - u(-1)) == "-u^-1 + 2");
  CHECK(to_string(CharPoly{one(), u()}) == "(1) + (u)*t");
}

TEST_CASE("property: ring axioms") {
  Gen gen(0x5eed0001);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen.character(), b = gen.character(), c = gen.character();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + Character{} == a);
    REQUIRE(a * one() == a);
    REQUIRE((a + -a).is_zero());
    const auto ab = a * b;
    for (const auto& [k, m] : ab.terms()) REQUIRE(m != 0);
  }
}

TEST_CASE("property: CharPoly ring and evaluation homomorphism") {
  Gen gen(0x5eed0002);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.charpoly(), q = gen.charpoly(), r = gen.charpoly();
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE(eval_at_minus_one(p + q) == eval_at_minus_one(p) + eval_at_minus_one(q));
    REQUIRE(eval_at_minus_one(p * q) == eval_at_minus_one(p) * eval_at_minus_one(q));
    if (!p.is_zero()) REQUIRE_FALSE(p.coeffs().back().is_zero());
  }
}

TEST_CASE("property: morse_quotient round trip and uniqueness") {
  Gen gen(0x5eed0003);
  for (int i = 0; i < 300; ++i) {
    const auto r = gen.charpoly();
    const auto q = gen.nonneg_charpoly();
    const auto p = CharPoly::one_plus_t() * q + r;
    const auto got = morse_quotient(p, r);
    REQUIRE(got == q);
    REQUIRE((CharPoly::one_plus_t() * got + r - p).is_zero());
  }
}

TEST_CASE("property: morse_quotient fails exactly when (P - R)(-1) != 0") {
  Gen gen(0x5eed0004);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.charpoly(), r = gen.charpoly();
    const bool divisible = eval_at_minus_one(p - r).is_zero();
    if (divisible) {
      const auto q = morse_quotient(p, r);
      REQUIRE(CharPoly::one_plus_t() * q + r == p);
    } else {
      REQUIRE_THROWS_AS(morse_quotient(p, r), NotDivisible);
    }
  }
}

TEST_CASE("property: partial order") {
  Gen gen(0x5eed0005);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen.character(3);
    const auto b = a + gen.nonneg_character(3);
    const auto c = b + gen.nonneg_character(3);
    REQUIRE(char_ge(a, a));
    REQUIRE(char_ge(b, a));
    REQUIRE(char_ge(c, b));
    REQUIRE(char_ge(c, a));  // transitivity
    if (char_ge(a, b)) REQUIRE(a == b);  // antisymmetry
    const auto x = gen.character(3), y = gen.character(3);
    if (char_ge(x, y) && char_ge(y, x)) REQUIRE(x == y);
  }
}
