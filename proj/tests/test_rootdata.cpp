#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "e6char/context.hpp"
#include "e6char/rootdata.hpp"

using namespace e6char;

TEST_CASE("root counts, heights, and the highest root") {
  const RootSystem& rs = Workspace::instance().roots();
  REQUIRE(rs.num_roots() == 72);
  REQUIRE(rs.num_positive() == 36);
  REQUIRE(rs.coord(rs.highest_root()) == Coord{1, 2, 2, 3, 2, 1});
  REQUIRE(rs.height(rs.highest_root()) == 11);
  for (int i = 0; i < 6; ++i) {
    Coord e{};
    e[i] = 1;
    REQUIRE(rs.coord(rs.simple_root(i)) == e);
    REQUIRE(rs.height(rs.simple_root(i)) == 1);
  }
  // positives come first, sorted by height; negatives mirror them
  for (int r = 0; r < rs.num_roots(); ++r) {
    int h = std::accumulate(rs.coord(r).begin(), rs.coord(r).end(), 0);
    REQUIRE(rs.height(r) == h);
    REQUIRE(rs.is_positive(r) == (h > 0));
    int neg = rs.negative(r);
    for (int i = 0; i < kRank; ++i)
      REQUIRE(rs.coord(neg)[i] == -rs.coord(r)[i]);
    REQUIRE(rs.index_of(rs.coord(r)) == r);
  }
}

TEST_CASE("pairings agree with the Cartan matrix and reflections are involutive") {
  const RootSystem& rs = Workspace::instance().roots();
  const IntMat c = cartan_e6();
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j)
      REQUIRE(rs.pairing(rs.simple_root(i), j) == c[j][i]);
  for (int r = 0; r < rs.num_roots(); ++r)
    for (int i = 0; i < kRank; ++i) {
      int s = rs.reflect_index(r, i);
      REQUIRE(s >= 0);
      REQUIRE(rs.reflect_index(s, i) == r);
      // reflecting any simple root other than alpha_{i+1} stays positive
      if (r < rs.num_positive() && r != rs.simple_root(i))
        REQUIRE(rs.is_positive(s));
    }
  for (int i = 0; i < kRank; ++i)
    REQUIRE(rs.reflect_index(rs.simple_root(i), i) ==
            rs.negative(rs.simple_root(i)));
}

TEST_CASE("lattice invariants of the Cartan matrix") {
  const IntMat c = cartan_e6();
  REQUIRE(det_int(c) == 3);
  SmithResult snf = smith_normal_form(c);
  std::array<long long, kRank> want{1, 1, 1, 1, 1, 3};
  for (int i = 0; i < kRank; ++i) {
    for (int j = 0; j < kRank; ++j)
      REQUIRE(snf.d[i][j] == (i == j ? want[i] : 0));
  }
  // the two transforms are unimodular and u*c*v reproduces d
  REQUIRE((det_int(snf.u) == 1 || det_int(snf.u) == -1));
  REQUIRE((det_int(snf.v) == 1 || det_int(snf.v) == -1));
  IntMat prod{};
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) {
      long long acc = 0;
      for (int k = 0; k < kRank; ++k)
        for (int l = 0; l < kRank; ++l)
          acc += snf.u[i][k] * c[k][l] * snf.v[l][j];
      prod[i][j] = acc;
    }
  REQUIRE(prod == snf.d);
  // independent determinantal-divisor computation gives the same diagonal
  REQUIRE(smith_diagonal_by_minors(c) == want);
}

TEST_CASE("diagram involution swaps the outer legs and fixes the rest") {
  const RootSystem& rs = Workspace::instance().roots();
  REQUIRE(RootSystem::dagger_simple(0) == 5);
  REQUIRE(RootSystem::dagger_simple(2) == 4);
  REQUIRE(RootSystem::dagger_simple(1) == 1);
  REQUIRE(RootSystem::dagger_simple(3) == 3);
  for (int r = 0; r < rs.num_roots(); ++r) {
    int d = rs.dagger(r);
    REQUIRE(rs.dagger(d) == r);
    REQUIRE(rs.height(d) == rs.height(r));
  }
  REQUIRE(rs.dagger(rs.highest_root()) == rs.highest_root());
}

TEST_CASE("structure constants satisfy every defining identity") {
  const Workspace& ws = Workspace::instance();
  const RootSystem& rs = ws.roots();
  const StructureConstants& sc = ws.constants();
  REQUIRE_NOTHROW(verify_structure_identities(rs, sc));
  // support matches root addition, values are signs
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j) {
      Coord sum;
      for (int k = 0; k < kRank; ++k)
        sum[k] = rs.coord(i)[k] + rs.coord(j)[k];
      int sidx = rs.index_of(sum);
      REQUIRE(sc.sum_index(i, j) == sidx);
      if (sidx < 0)
        REQUIRE(sc.n(i, j) == 0);
      else
        REQUIRE((sc.n(i, j) == 1 || sc.n(i, j) == -1));
    }
  // normalization anchor: alpha_1 + alpha_3 is a root with constant +1
  const RootSystem& r = rs;
  int a1 = r.simple_root(0), a3 = r.simple_root(2);
  REQUIRE(sc.sum_index(a1, a3) >= 0);
  REQUIRE(sc.n(a1, a3) == 1);
}

TEST_CASE("generation rejects non-finite Cartan input") {
  IntMat affine{};  // rank-2 affine matrix embedded in the fixed-size type
  for (int i = 0; i < kRank; ++i) affine[i][i] = 2;
  affine[0][1] = -2;
  affine[1][0] = -2;
  REQUIRE_THROWS_AS(RootSystem::generate(affine), std::runtime_error);
}
