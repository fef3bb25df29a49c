#include <stdexcept>

#include "doctest.h"
#include "e6char/context.hpp"
#include "e6char/fourier.hpp"

using namespace e6char;

TEST_CASE("pairing matrices of the four small groups verify and have the "
          "expected sizes") {
  struct Want {
    const char* name;
    int pairs;
  };
  for (Want w : {Want{"1", 1}, Want{"Z2", 4}, Want{"Z3", 9}, Want{"S3", 8}}) {
    SmallGroup g = SmallGroup::by_name(w.name);
    FourierMatrix m = FourierMatrix::build(g);
    REQUIRE(m.group_name == w.name);
    REQUIRE(static_cast<int>(m.pair_names.size()) == w.pairs);
    REQUIRE_NOTHROW(m.verify());
  }
  REQUIRE_THROWS_AS(SmallGroup::by_name("Z5"), std::invalid_argument);
  // lookup is case-insensitive, matching the command-line surface
  REQUIRE(SmallGroup::by_name("s3").name == "S3");
  REQUIRE(SmallGroup::by_name("z2").name == "Z2");
}

TEST_CASE("squaring the matrix gives the identity exactly") {
  const FourierMatrix& m = Workspace::instance().family_fourier();
  const int n = static_cast<int>(m.pair_names.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyc3 acc;
      for (int k = 0; k < n; ++k) acc += m.entries[i][k] * m.entries[k][j];
      REQUIRE(acc == (i == j ? Cyc3(1) : Cyc3(0)));
    }
}

TEST_CASE("the eight pairs come in the documented order with rational, "
          "symmetric entries") {
  const FourierMatrix& m = Workspace::instance().family_fourier();
  const char* want[8] = {"1:1",   "1:r",     "1:eps",  "g2:1",
                         "g2:eps", "g3:1",   "g3:th",  "g3:th2"};
  REQUIRE(m.pair_names.size() == 8);
  for (int i = 0; i < 8; ++i) REQUIRE(m.pair_names[i] == want[i]);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      REQUIRE(m.entries[i][j].is_rational());
      REQUIRE(m.entries[i][j] == m.entries[j][i]);
      REQUIRE(m.rational_entry(i, j) == m.entries[i][j].a);
    }
}

TEST_CASE("anchor entries in the cuspidal block") {
  const FourierMatrix& m = Workspace::instance().family_fourier();
  int th = m.index_of("g3:th");
  int th2 = m.index_of("g3:th2");
  REQUIRE(th >= 0);
  REQUIRE(th2 >= 0);
  REQUIRE(m.rational_entry(th, th) == Rational(2, 3));
  REQUIRE(m.rational_entry(th2, th2) == Rational(2, 3));
  REQUIRE(m.rational_entry(th, th2) == Rational(-1, 3));
  REQUIRE(m.index_of("g3:zeta") == -1);
}

TEST_CASE("the two cuspidal columns agree away from the cuspidal block") {
  const FourierMatrix& m = Workspace::instance().family_fourier();
  int th = m.index_of("g3:th");
  int th2 = m.index_of("g3:th2");
  for (int i = 0; i < 8; ++i) {
    if (i == th || i == th2) continue;
    REQUIRE(m.entries[i][th] == m.entries[i][th2]);
  }
  // and the shared column restricted off the block matches the coefficient
  // pattern used for the value table
  REQUIRE(m.rational_entry(m.index_of("1:1"), th) +
              m.rational_entry(m.index_of("1:1"), th2) ==
          Rational(2, 3));
  REQUIRE(m.rational_entry(m.index_of("1:r"), th) +
              m.rational_entry(m.index_of("1:r"), th2) ==
          Rational(-2, 3));
  REQUIRE(m.rational_entry(m.index_of("1:eps"), th) +
              m.rational_entry(m.index_of("1:eps"), th2) ==
          Rational(2, 3));
  REQUIRE(m.rational_entry(m.index_of("g3:1"), th) +
              m.rational_entry(m.index_of("g3:1"), th2) ==
          Rational(-2, 3));
  REQUIRE(m.rational_entry(m.index_of("g2:1"), th) +
              m.rational_entry(m.index_of("g2:1"), th2) ==
          Rational(0));
  REQUIRE(m.rational_entry(m.index_of("g2:eps"), th) +
              m.rational_entry(m.index_of("g2:eps"), th2) ==
          Rational(0));
}

TEST_CASE("an independently verified full row of the pairing matrix") {
  const FourierMatrix& m = Workspace::instance().family_fourier();
  int row = m.index_of("g3:th");
  Rational want[8] = {Rational(1, 3),  Rational(-1, 3), Rational(1, 3),
                      Rational(0),     Rational(0),     Rational(-1, 3),
                      Rational(2, 3),  Rational(-1, 3)};
  for (int j = 0; j < 8; ++j) REQUIRE(m.rational_entry(row, j) == want[j]);
}

TEST_CASE("order-3 cyclic group has a hermitian complex pairing") {
  FourierMatrix m = FourierMatrix::build(SmallGroup::cyclic(3));
  REQUIRE_NOTHROW(m.verify());
  bool complex_entry = false;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      if (!m.entries[i][j].is_rational()) complex_entry = true;
      REQUIRE(m.entries[i][j] == m.entries[j][i].conj());
    }
  REQUIRE(complex_entry);
  // irrational entries refuse the rational accessor
  bool threw = false;
  for (int i = 0; i < 9 && !threw; ++i)
    for (int j = 0; j < 9 && !threw; ++j) {
      if (m.entries[i][j].is_rational()) continue;
      REQUIRE_THROWS(m.rational_entry(i, j));
      threw = true;
    }
  REQUIRE(threw);
}

TEST_CASE("group structure invariants behind the pairing") {
  SmallGroup g = SmallGroup::symmetric3();
  REQUIRE(g.order == 6);
  REQUIRE(g.class_rep.size() == 3);
  for (int x = 0; x < g.order; ++x) {
    REQUIRE(g.mul[x][g.inv[x]] == 0);
    // order divides 6 and matches the class invariant
    int o = g.element_order(x);
    REQUIRE(6 % o == 0);
    REQUIRE(g.element_order(g.class_rep[g.class_of[x]]) == o);
  }
  // centralizer characters are orthonormal on the centralizer
  for (std::size_t c = 0; c < g.class_rep.size(); ++c) {
    const std::vector<int>& cent = g.centralizers[c];
    const auto& chars = g.cent_char_values[c];
    REQUIRE(!chars.empty());
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = 0; j < chars.size(); ++j) {
        Cyc3 acc;
        for (int x : cent) acc += chars[i][x] * chars[j][x].conj();
        Cyc3 want = i == j ? Cyc3(static_cast<long>(cent.size())) : Cyc3(0);
        REQUIRE(acc == want);
      }
  }
}
