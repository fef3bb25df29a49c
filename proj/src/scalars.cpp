#include "e6char/scalars.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace e6char {

Rational rational_from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
  v.canonicalize();
  return v;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) m_terms[0] = Rational(c);
}

LaurentPoly::LaurentPoly(const Rational& c, int exponent) {
  if (c != 0) m_terms[exponent] = c;
}

LaurentPoly LaurentPoly::q_power(int exponent) {
  return LaurentPoly(Rational(1), exponent);
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::logic_error("min_exponent of zero");
  return m_terms.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::logic_error("max_exponent of zero");
  return m_terms.rbegin()->first;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = m_terms.find(exponent);
  return it == m_terms.end() ? Rational(0) : it->second;
}

void LaurentPoly::strip_zeros() {
  for (auto it = m_terms.begin(); it != m_terms.end();) {
    if (it->second == 0)
      it = m_terms.erase(it);
    else
      ++it;
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : m_terms) r.m_terms[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.m_terms) m_terms[e] += c;
  strip_zeros();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.m_terms) m_terms[e] -= c;
  strip_zeros();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  std::map<int, Rational> out;
  for (const auto& [e1, c1] : m_terms)
    for (const auto& [e2, c2] : o.m_terms) out[e1 + e2] += c1 * c2;
  m_terms = std::move(out);
  strip_zeros();
  return *this;
}

LaurentPoly LaurentPoly::compose_q_power(int k) const {
  if (k < 1) throw std::invalid_argument("compose_q_power needs k >= 1");
  LaurentPoly r;
  for (const auto& [e, c] : m_terms) r.m_terms[e * k] = c;
  return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (!is_zero() && min_exponent() < 0 && x == 0)
    throw std::domain_error("evaluating negative exponent at 0");
  Rational acc(0);
  for (const auto& [e, c] : m_terms) {
    Rational p(1);
    int n = e >= 0 ? e : -e;
    for (int i = 0; i < n; ++i) p *= x;
    if (e < 0) p = 1 / p;
    acc += c * p;
  }
  return acc;
}

bool LaurentPoly::all_integer_coefficients() const {
  for (const auto& [e, c] : m_terms)
    if (c.get_den() != 1) return false;
  return true;
}

bool LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den,
                               LaurentPoly* quotient) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (!num.is_zero() && num.min_exponent() < 0)
    throw std::invalid_argument("divide_exact expects ordinary polynomials");
  if (den.min_exponent() < 0)
    throw std::invalid_argument("divide_exact expects ordinary polynomials");
  LaurentPoly rem = num;
  LaurentPoly quot;
  const int dde = den.max_exponent();
  const Rational dlc = den.coefficient(dde);
  while (!rem.is_zero() && rem.max_exponent() >= dde) {
    int e = rem.max_exponent() - dde;
    Rational c = rem.coefficient(rem.max_exponent()) / dlc;
    LaurentPoly t(c, e);
    quot += t;
    rem -= t * den;
  }
  if (quotient) *quotient = quot;
  return rem.is_zero();
}

namespace {

std::string rational_str(const Rational& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    int e = it->first;
    if (e == 0) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string LaurentPoly::data_str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(it->second) << "*q^" << it->first;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty Laurent literal");
  // split into signed terms at '+' and '-' not following '^' or '/'
  std::vector<std::string> chunks;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '/' &&
        s[i - 1] != '+' && s[i - 1] != '-' && s[i - 1] != '*') {
      chunks.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  chunks.push_back(cur);
  LaurentPoly out;
  for (std::string term : chunks) {
    if (term.empty()) throw std::invalid_argument("bad Laurent literal: " + text);
    if (term[0] == '+') term.erase(0, 1);
    if (term == "0") continue;
    Rational coeff(1);
    int exponent = 0;
    auto qpos = term.find('q');
    if (qpos == std::string::npos) {
      coeff = rational_from_string(term);
    } else {
      std::string head = term.substr(0, qpos);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (head == "-")
        coeff = Rational(-1);
      else if (!head.empty())
        coeff = rational_from_string(head);
      std::string tail = term.substr(qpos + 1);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail[0] == '^') {
        exponent = std::stoi(tail.substr(1));
      } else {
        throw std::invalid_argument("bad Laurent term: " + term);
      }
    }
    out += LaurentPoly(coeff, exponent);
  }
  return out;
}

Cyc3& Cyc3::operator+=(const Cyc3& o) {
  a += o.a;
  b += o.b;
  return *this;
}

Cyc3& Cyc3::operator-=(const Cyc3& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

Cyc3& Cyc3::operator*=(const Cyc3& o) {
  // (a + b t)(c + d t) with t^2 = -1 - t
  Rational c = o.a, d = o.b;
  Rational na = a * c - b * d;
  Rational nb = a * d + b * c - b * d;
  a = na;
  b = nb;
  return *this;
}

std::string Cyc3::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (a != 0) os << a;
  if (b != 0) {
    if (a != 0) os << (b < 0 ? " - " : " + ");
    Rational ab = (a != 0 && b < 0) ? Rational(-b) : b;
    if (ab == 1)
      os << "t3";
    else if (ab == -1)
      os << "-t3";
    else
      os << ab << "*t3";
  }
  return os.str();
}

Cyc3Poly Cyc3Poly::from_cyc3(const Cyc3& c) {
  return Cyc3Poly(LaurentPoly(c.a, 0), LaurentPoly(c.b, 0));
}

Cyc3Poly Cyc3Poly::conj() const { return Cyc3Poly(a - b, -b); }

Cyc3Poly& Cyc3Poly::operator+=(const Cyc3Poly& o) {
  a += o.a;
  b += o.b;
  return *this;
}

Cyc3Poly& Cyc3Poly::operator*=(const Cyc3Poly& o) {
  LaurentPoly na = a * o.a - b * o.b;
  LaurentPoly nb = a * o.b + b * o.a - b * o.b;
  a = na;
  b = nb;
  return *this;
}

Cyc3Poly Cyc3Poly::scaled(const LaurentPoly& f) const {
  return Cyc3Poly(a * f, b * f);
}

std::string Cyc3Poly::str() const {
  if (is_zero()) return "0";
  if (b.is_zero()) return a.str();
  std::string out;
  if (!a.is_zero()) out += a.str() + " + ";
  out += "(" + b.str() + ")*t3";
  return out;
}

LaurentPoly SignLinear::evaluate(int xi) const {
  if (xi != 1 && xi != -1) throw std::invalid_argument("xi must be +1 or -1");
  return xi == 1 ? constant + xi_part : constant - xi_part;
}

SignLinear& SignLinear::operator+=(const SignLinear& o) {
  constant += o.constant;
  xi_part += o.xi_part;
  return *this;
}

std::string SignLinear::str() const {
  return "(" + constant.str() + ") + xi*(" + xi_part.str() + ")";
}

}  // namespace e6char
