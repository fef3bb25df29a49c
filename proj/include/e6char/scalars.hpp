#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

// Exact coefficient types: Laurent polynomials over Q in one variable q,
// the quadratic extension by a primitive cube root of unity, and linear
// forms in an undetermined sign.

namespace e6char {

using Rational = mpq_class;

Rational rational_from_string(const std::string& s);

// Laurent polynomial in q with rational coefficients, exponents in Z.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor) constants convert freely
  explicit LaurentPoly(const Rational& c, int exponent = 0);

  static LaurentPoly q_power(int exponent);

  bool is_zero() const { return m_terms.empty(); }
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero
  Rational coefficient(int exponent) const;
  const std::map<int, Rational>& terms() const { return m_terms; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  bool operator==(const LaurentPoly& o) const { return m_terms == o.m_terms; }

  // q -> q^k (k >= 1).  Used to express parameters such as q^2.
  LaurentPoly compose_q_power(int k) const;

  // Exact evaluation; x must be nonzero when negative exponents are present.
  Rational evaluate(const Rational& x) const;
  Rational at_one() const { return evaluate(1); }

  bool all_integer_coefficients() const;

  // Ordinary polynomial division (both operands must have no negative
  // exponents).  Returns false when the remainder is nonzero.
  static bool divide_exact(const LaurentPoly& num, const LaurentPoly& den,
                           LaurentPoly* quotient);

  // Human-facing form: terms by descending exponent, "2*q^3 - 1/3*q + 4".
  std::string str() const;
  // Machine form used in data files: every term "c*q^e", joined by " + ".
  std::string data_str() const;
  // Accepts the data form plus minor variations ("q^3", "-q", bare "5").
  static LaurentPoly parse(const std::string& text);

 private:
  std::map<int, Rational> m_terms;  // exponent -> coefficient, zeros dropped
  void strip_zeros();
};

// a + b*t3 where t3 is a primitive cube root of unity (t3^2 = -1 - t3).
struct Cyc3 {
  Rational a{0};
  Rational b{0};

  Cyc3() = default;
  Cyc3(long c) : a(c) {}  // NOLINT(google-explicit-constructor)
  Cyc3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Cyc3 omega() { return Cyc3(Rational(0), Rational(1)); }       // t3
  static Cyc3 omega2() { return Cyc3(Rational(-1), Rational(-1)); }    // t3^2

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  Cyc3 conj() const { return Cyc3(a - b, -b); }  // t3 -> t3^2

  Cyc3 operator-() const { return Cyc3(-a, -b); }
  Cyc3& operator+=(const Cyc3& o);
  Cyc3& operator-=(const Cyc3& o);
  Cyc3& operator*=(const Cyc3& o);
  friend Cyc3 operator+(Cyc3 x, const Cyc3& y) { return x += y; }
  friend Cyc3 operator-(Cyc3 x, const Cyc3& y) { return x -= y; }
  friend Cyc3 operator*(Cyc3 x, const Cyc3& y) { return x *= y; }
  bool operator==(const Cyc3& o) const { return a == o.a && b == o.b; }

  std::string str() const;  // "a + b*t3" with sign folding
};

// Laurent polynomial with Cyc3 coefficients, kept as a + b*t3 parts.
struct Cyc3Poly {
  LaurentPoly a;
  LaurentPoly b;

  Cyc3Poly() = default;
  Cyc3Poly(LaurentPoly pa, LaurentPoly pb) : a(std::move(pa)), b(std::move(pb)) {}
  static Cyc3Poly from_cyc3(const Cyc3& c);

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  Cyc3Poly conj() const;
  Cyc3Poly& operator+=(const Cyc3Poly& o);
  Cyc3Poly& operator*=(const Cyc3Poly& o);
  friend Cyc3Poly operator+(Cyc3Poly x, const Cyc3Poly& y) { return x += y; }
  friend Cyc3Poly operator*(Cyc3Poly x, const Cyc3Poly& y) { return x *= y; }
  Cyc3Poly scaled(const LaurentPoly& f) const;
  bool operator==(const Cyc3Poly& o) const { return a == o.a && b == o.b; }
  std::string str() const;
};

// c + xi * d with Laurent-polynomial parts, xi an undetermined sign.
struct SignLinear {
  LaurentPoly constant;
  LaurentPoly xi_part;

  SignLinear() = default;
  SignLinear(LaurentPoly c, LaurentPoly x)
      : constant(std::move(c)), xi_part(std::move(x)) {}

  LaurentPoly evaluate(int xi) const;  // xi in {+1, -1}
  SignLinear& operator+=(const SignLinear& o);
  friend SignLinear operator+(SignLinear a, const SignLinear& b) { return a += b; }
  bool operator==(const SignLinear& o) const = default;
  std::string str() const;  // "(c) + xi*(d)"
};

}  // namespace e6char
