#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "e6char/context.hpp"
#include "e6char/hecke.hpp"

using namespace e6char;

namespace {

HeckeAlgebra make_algebra(const CaseContext& c) {
  return HeckeAlgebra(c.group, c.param_degrees);
}

// write a copy of the data with one row's trace replaced
std::string tampered_copy(const HeckeData& src, const std::string& label,
                          const std::string& new_value) {
  HeckeData d = src;
  int row = d.row_by_name(label);
  REQUIRE(row >= 0);
  d.traces[row] = LaurentPoly::parse(new_value);
  std::string path = std::string("/tmp/e6char_tamper_") + label + ".tsv";
  d.save(path);
  return path;
}

}  // namespace

TEST_CASE("defining relations hold for both parameter patterns") {
  const Workspace& ws = Workspace::instance();
  for (bool tw : {false, true}) {
    HeckeAlgebra h = make_algebra(ws.ctx(tw));
    REQUIRE_NOTHROW(verify_hecke_relations(h));
  }
}

TEST_CASE("basis multiplication matches length additivity") {
  const Workspace& ws = Workspace::instance();
  const CaseContext& c = ws.ctx(true);  // small enough to probe broadly
  HeckeAlgebra h = make_algebra(c);
  const GroupArena& g = c.group;
  for (int id : {3, 57, 200, 999}) {
    // T_s T_w = T_{sw} when the length goes up
    for (int s = 0; s < g.n_gens; ++s) {
      int sw = g.left_cayley[id * g.n_gens + s];
      if (g.length[sw] > g.length[id]) {
        HeckeAlgebra::Elt prod = h.mul_gen_left(s, HeckeAlgebra::basis(id));
        REQUIRE(prod.size() == 1);
        REQUIRE(prod.begin()->first == sw);
        REQUIRE(prod.begin()->second == LaurentPoly(1));
      }
    }
    // weight of a reduced word is invariant and left_word is reduced
    std::vector<int> word = h.left_word(id);
    REQUIRE(static_cast<int>(word.size()) == g.length[id]);
    REQUIRE(g.id_of_word(word) == id);
  }
  // associativity on a sample of basis products
  HeckeAlgebra::Elt a = HeckeAlgebra::basis(g.id_of_word({0, 1}));
  HeckeAlgebra::Elt b = HeckeAlgebra::basis(g.id_of_word({1, 2, 1}));
  HeckeAlgebra::Elt d = HeckeAlgebra::basis(g.id_of_word({3, 2}));
  REQUIRE(h.mul(h.mul(a, b), d) == h.mul(a, h.mul(b, d)));
}

TEST_CASE("computed trace columns equal the shipped data files") {
  const Workspace& ws = Workspace::instance();
  for (bool tw : {false, true}) {
    const CaseContext& c = ws.ctx(tw);
    HeckeData computed = HeckeData::compute(c.table, c.labels, c.group,
                                            c.param_degrees, c.cox_word,
                                            c.case_name);
    HeckeData shipped = HeckeData::load(hecke_path(default_data_dir(), tw));
    REQUIRE(computed.case_name == shipped.case_name);
    REQUIRE(computed.names == shipped.names);
    REQUIRE(computed.class_words == shipped.class_words);
    REQUIRE(computed.traces.size() == shipped.traces.size());
    for (std::size_t i = 0; i < computed.traces.size(); ++i)
      REQUIRE(computed.traces[i] == shipped.traces[i]);
  }
}

TEST_CASE("shipped data passes the full validation") {
  const Workspace& ws = Workspace::instance();
  for (bool tw : {false, true}) {
    const CaseContext& c = ws.ctx(tw);
    HeckeAlgebra h = make_algebra(c);
    HeckeData d = HeckeData::load(hecke_path(default_data_dir(), tw));
    REQUIRE_NOTHROW(validate_hecke_data(d, c.table, c.labels, h, c.cox_id, tw));
    REQUIRE(family_trace_combination(d, tw) == LaurentPoly(Rational(3), 3));
    // index representation row carries q^6, sign representation row 1
    REQUIRE(d.traces[d.row_by_name("phi_1_0")] == LaurentPoly::q_power(6));
    REQUIRE(d.traces[d.row_by_name(tw ? "phi_1_24" : "phi_1_36")] ==
            LaurentPoly(1));
  }
}

TEST_CASE("trace formula: fractional exponent forces a vanishing trace") {
  const Workspace& ws = Workspace::instance();
  for (bool tw : {false, true}) {
    const CaseContext& c = ws.ctx(tw);
    HeckeData d = HeckeData::load(hecke_path(default_data_dir(), tw));
    int nonzero = 0;
    int cox = c.group.id_of_word(c.cox_word);
    for (std::size_t r = 0; r < d.traces.size(); ++r) {
      if (!d.traces[r].is_zero()) ++nonzero;
      // every row specializes at q = 1 to the character value on the class
      int trow = c.labels.row_by_name(d.names[r]);
      REQUIRE(trow >= 0);
      long long val = c.table.value(trow, c.group.class_of[cox]);
      REQUIRE(d.traces[r].at_one() == Rational(static_cast<long>(val)));
      if (val == 0) REQUIRE(d.traces[r].is_zero());
    }
    REQUIRE(nonzero == 12);
  }
}

TEST_CASE("validation rejects corrupted data") {
  const Workspace& ws = Workspace::instance();
  const CaseContext& c = ws.ctx(false);
  HeckeAlgebra h = make_algebra(c);
  HeckeData good = HeckeData::load(hecke_path(default_data_dir(), false));

  auto expect_reject = [&](const HeckeData& d) {
    REQUIRE_THROWS_AS(
        validate_hecke_data(d, c.table, c.labels, h, c.cox_id, false),
        std::exception);
  };

  // wrong coefficient (breaks q -> 1)
  {
    HeckeData d = good;
    d.traces[d.row_by_name("phi_6_1")] = LaurentPoly::parse("-2*q^5");
    expect_reject(d);
  }
  // wrong exponent that survives q -> 1 (caught by the family combination
  // or the induced-module oracle)
  {
    HeckeData d = good;
    d.traces[d.row_by_name("phi_20_10")] = LaurentPoly::parse("q^5");
    expect_reject(d);
  }
  // nonzero value on a vanishing row (breaks q -> 1)
  {
    HeckeData d = good;
    d.traces[d.row_by_name("phi_64_4")] = LaurentPoly::parse("q^4");
    expect_reject(d);
  }
  // family-row exponent shift that survives q -> 1
  {
    HeckeData d = good;
    d.traces[d.row_by_name("phi_90_8")] = LaurentPoly::parse("-q^5");
    expect_reject(d);
  }
  // wrong label
  {
    HeckeData d = good;
    d.names[d.row_by_name("phi_6_1")] = "phi_6_2";
    expect_reject(d);
  }
  // duplicated label
  {
    HeckeData d = good;
    d.names[d.row_by_name("phi_6_1")] = "phi_1_0";
    expect_reject(d);
  }
  // missing row
  {
    HeckeData d = good;
    d.names.pop_back();
    d.class_words.pop_back();
    d.traces.pop_back();
    expect_reject(d);
  }
  // class word off the distinguished class
  {
    HeckeData d = good;
    d.class_words[0] = {0};
    expect_reject(d);
  }
  // wrong case tag
  {
    HeckeData d = good;
    d.case_name = "2e6";
    expect_reject(d);
  }
}

TEST_CASE("file round-trip preserves everything; loader rejects junk") {
  HeckeData good = HeckeData::load(hecke_path(default_data_dir(), true));
  std::string path = "/tmp/e6char_roundtrip_hecke.tsv";
  good.save(path);
  HeckeData back = HeckeData::load(path);
  REQUIRE(back.case_name == good.case_name);
  REQUIRE(back.names == good.names);
  REQUIRE(back.class_words == good.class_words);
  for (std::size_t i = 0; i < good.traces.size(); ++i)
    REQUIRE(back.traces[i] == good.traces[i]);
  std::remove(path.c_str());

  {
    std::ofstream f(path);
    f << "# case: e6\nphi_1_0\tnot_a_word\tq^6\n";
  }
  REQUIRE_THROWS(HeckeData::load(path));
  std::remove(path.c_str());
  {
    std::ofstream f(path);
    f << "phi_1_0\t1,2\tq^6\n";  // missing the case header
  }
  REQUIRE_THROWS(HeckeData::load(path));
  std::remove(path.c_str());
  REQUIRE_THROWS(HeckeData::load("/tmp/e6char_no_such_file.tsv"));
}

TEST_CASE("tampered files on disk are rejected end to end") {
  const Workspace& ws = Workspace::instance();
  const CaseContext& c = ws.ctx(false);
  HeckeAlgebra h = make_algebra(c);
  HeckeData good = HeckeData::load(hecke_path(default_data_dir(), false));
  std::string path = tampered_copy(good, "phi_10_9", "-q");
  HeckeData d = HeckeData::load(path);
  REQUIRE_THROWS(validate_hecke_data(d, c.table, c.labels, h, c.cox_id, false));
  std::remove(path.c_str());
}
