#include "doctest.h"
#include "e6char/scalars.hpp"

using namespace e6char;

TEST_CASE("Laurent arithmetic with negative exponents") {
  LaurentPoly q = LaurentPoly::q_power(1);
  LaurentPoly qinv = LaurentPoly::q_power(-1);
  REQUIRE(q * qinv == LaurentPoly(1));
  LaurentPoly p = LaurentPoly(Rational(2), 3) - LaurentPoly(1);
  REQUIRE(p.coefficient(3) == Rational(2));
  REQUIRE(p.coefficient(0) == Rational(-1));
  REQUIRE(p.coefficient(1) == Rational(0));
  REQUIRE((p + LaurentPoly(1)) == LaurentPoly(Rational(2), 3));
  REQUIRE((p - p).is_zero());
}

TEST_CASE("string forms round-trip through the parser") {
  LaurentPoly p = LaurentPoly(Rational(2, 3), 3) - LaurentPoly(Rational(1), 1) +
                  LaurentPoly(4) + LaurentPoly(Rational(1, 2), -2);
  REQUIRE(LaurentPoly::parse(p.data_str()) == p);
  REQUIRE(LaurentPoly::parse(p.str()) == p);
  REQUIRE(LaurentPoly::parse("0").is_zero());
  REQUIRE(LaurentPoly::parse("q^6") == LaurentPoly::q_power(6));
  REQUIRE(LaurentPoly::parse("-q") == LaurentPoly() - LaurentPoly::q_power(1));
  REQUIRE(LaurentPoly::parse("3*q^3") == LaurentPoly(Rational(3), 3));
  REQUIRE(LaurentPoly(1).str() == "1");
  REQUIRE(LaurentPoly().str() == "0");
  REQUIRE(LaurentPoly(Rational(2, 3), 3).str() == "2/3*q^3");
  REQUIRE_THROWS(LaurentPoly::parse(""));
  REQUIRE_THROWS(LaurentPoly::parse("2*w"));
}

TEST_CASE("evaluation and specialization") {
  LaurentPoly p = LaurentPoly(Rational(2), 6) + LaurentPoly::q_power(3);
  REQUIRE(p.evaluate(Rational(3)) == Rational(2 * 729 + 27));
  REQUIRE(p.at_one() == Rational(3));
  REQUIRE(p.all_integer_coefficients());
  REQUIRE_FALSE(LaurentPoly(Rational(1, 3), 2).all_integer_coefficients());
  REQUIRE(p.compose_q_power(2) ==
          LaurentPoly(Rational(2), 12) + LaurentPoly::q_power(6));
}

TEST_CASE("exact division of Laurent polynomials") {
  LaurentPoly num = (LaurentPoly::q_power(2) - LaurentPoly(1)) *
                    (LaurentPoly::q_power(3) + LaurentPoly(2));
  LaurentPoly quot;
  REQUIRE(LaurentPoly::divide_exact(num, LaurentPoly::q_power(2) - LaurentPoly(1),
                                    &quot));
  REQUIRE(quot == LaurentPoly::q_power(3) + LaurentPoly(2));
  REQUIRE_FALSE(LaurentPoly::divide_exact(
      LaurentPoly::q_power(1) + LaurentPoly(1),
      LaurentPoly::q_power(1) - LaurentPoly(1), &quot));
}

TEST_CASE("third root of unity algebra") {
  Cyc3 w = Cyc3::omega();
  Cyc3 w2 = Cyc3::omega2();
  REQUIRE(w * w == w2);
  REQUIRE(w * w2 == Cyc3(1));
  REQUIRE((Cyc3(1) + w + w2).is_zero());
  REQUIRE(w.conj() == w2);
  REQUIRE(Cyc3(5).is_rational());
  REQUIRE_FALSE(w.is_rational());
  REQUIRE((w + w.conj()) == Cyc3(-1));
}

TEST_CASE("polynomial-coefficient cyclotomic values") {
  LaurentPoly q3 = LaurentPoly::q_power(3);
  Cyc3Poly a = Cyc3Poly::from_cyc3(Cyc3::omega()).scaled(q3);
  Cyc3Poly b = Cyc3Poly::from_cyc3(Cyc3::omega2()).scaled(q3);
  REQUIRE(a.conj() == b);
  Cyc3Poly prod = a * b;  // q^3 w * q^3 w^2 = q^6
  REQUIRE(prod == Cyc3Poly(LaurentPoly::q_power(6), LaurentPoly()));
  REQUIRE((a + b) == Cyc3Poly(LaurentPoly() - q3, LaurentPoly()));
}

TEST_CASE("sign-linear values evaluate at both signs") {
  SignLinear m(LaurentPoly::q_power(6), LaurentPoly(Rational(2), 6));
  REQUIRE(m.evaluate(1) == LaurentPoly(Rational(3), 6));
  REQUIRE(m.evaluate(-1) == LaurentPoly() - LaurentPoly::q_power(6));
  REQUIRE(m.str() == "(q^6) + xi*(2*q^6)");
}

TEST_CASE("rational literals") {
  REQUIRE(rational_from_string("-2/3") == Rational(-2, 3));
  REQUIRE(rational_from_string("7") == Rational(7));
  REQUIRE_THROWS(rational_from_string("2/"));
}
