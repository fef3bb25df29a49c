#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "e6char/rootdata.hpp"
#include "e6char/scalars.hpp"

namespace e6char {

// permutation of up to 72 points; storage is padded so the gather-based
// compose kernel may read a few bytes past the live range
struct Perm {
  alignas(16) std::array<uint8_t, 80> p{};
};

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b, int n);  // (a.b)(i) = a[b[i]]
Perm perm_inverse(const Perm& a, int n);
bool perm_equal(const Perm& a, const Perm& b, int n);
uint64_t perm_hash(const Perm& a, int n);

// a finite permutation group enumerated from involutive generators, with the
// bookkeeping needed for Coxeter-style length counting and class algebra
struct GroupArena {
  int n_points = 0;
  int n_gens = 0;
  std::vector<Perm> gens;
  std::vector<uint8_t> unit_reps;  // one representative point per length unit

  std::vector<Perm> elems;  // id -> permutation, id 0 = identity
  std::vector<int32_t> right_cayley;  // [id * n_gens + g] = id of elem . gen
  std::vector<int32_t> left_cayley;   // [id * n_gens + g] = id of gen . elem
  std::vector<int32_t> inv_id;
  std::vector<int16_t> length;      // units mapped into the negative half
  std::vector<int16_t> elem_order;
  long long exponent = 1;

  // conjugacy classes, ordered by (element order, size, least member id)
  std::vector<int32_t> class_of;
  std::vector<int32_t> class_rep;
  std::vector<long long> class_size;
  std::vector<std::vector<int32_t>> class_members;
  std::vector<int32_t> class_inv;  // class of the inverses

  std::size_t size() const { return elems.size(); }
  int num_classes() const { return static_cast<int>(class_rep.size()); }
  int id_of(const Perm& q) const;  // -1 when absent
  int compose_ids(int a, int b) const;
  int conjugate_by_gen(int id, int g) const;  // gen . elem . gen
  int id_of_word(const std::vector<int>& gen_word) const;
  int length_of_perm(const Perm& q) const;

  static GroupArena enumerate(int n_points, std::vector<Perm> gens,
                              std::vector<uint8_t> unit_reps);

 private:
  std::unordered_map<uint64_t, std::vector<int32_t>> m_lookup;
};

// full Weyl group on the 72 roots; length = inversions among positives
GroupArena build_weyl_e6(const RootSystem& rs);

// subgroup fixed by the diagram involution, generated by s2, s4, s3 s5,
// s1 s6; length counts dagger-orbits of positive roots mapped negative
GroupArena build_weyl_sigma(const RootSystem& rs);

int find_longest(const GroupArena& g);  // unique element of maximal length

// exact integer character table computed modulo a large prime and lifted
struct CharacterTable {
  uint64_t prime = 0;
  long long group_order = 0;
  std::vector<long long> class_sizes;
  std::vector<int> degrees;                  // chi(1) per row
  std::vector<std::vector<long long>> rows;  // [char][class]

  int num_chars() const { return static_cast<int>(rows.size()); }
  long long value(int row, int cls) const { return rows[row][cls]; }

  static CharacterTable dixon(const GroupArena& g);
  // throws on any failed exact orthogonality relation
  void verify_orthogonality(const GroupArena& g) const;
};

// small integer matrix for reflection representations (n <= 6)
struct SmallMat {
  int n = 0;
  std::array<std::array<long long, 6>, 6> a{};
};

long long det_ll(const SmallMat& m);
LaurentPoly det_one_minus_q(const SmallMat& m);  // sum of principal minors

// matrix of each class representative on the reflection representation,
// columns = images of the simple roots in the simple-root basis
std::vector<SmallMat> e6_reflection_matrices(const RootSystem& rs,
                                             const GroupArena& g);
// matrices of W^sigma on the fixed subspace, basis (a2, a4, a3+a5, a1+a6)
std::vector<SmallMat> folded_reflection_matrices(const RootSystem& rs,
                                                 const GroupArena& g);

LaurentPoly cyclotomic_poly(int d);

// invariant degrees recovered from the length generating function
std::vector<int> degrees_from_poincare(const GroupArena& g, int rank);

// graded multiplicity of the character in the coinvariant algebra
LaurentPoly fake_degree(const CharacterTable& t, int row,
                        const std::vector<SmallMat>& class_mats,
                        const std::vector<int>& degrees);

// names phi_d_b, with _p/_pp suffixes when (d, b) collides; the row whose
// value vector is lexicographically smaller gets _p
struct LabeledCharacters {
  std::vector<std::string> names;        // per table row
  std::vector<int> b_invariant;          // per table row
  std::vector<LaurentPoly> fake_degrees; // per table row
  std::vector<int> display_order;        // rows sorted by (d, b, values)

  int row_by_name(const std::string& name) const;  // -1 when absent

  static LabeledCharacters build(const CharacterTable& t,
                                 const std::vector<LaurentPoly>& fakes);
};

}  // namespace e6char
