#pragma once

#include <array>
#include <cstdint>
#include <vector>

// E6 root datum: Cartan matrix, the 72 roots in simple-root coordinates,
// lattice invariants, the diagram involution, and Chevalley structure
// constants fixed by the extraspecial-pair convention.

namespace e6char {

inline constexpr int kRank = 6;
inline constexpr int kNumRoots = 72;
inline constexpr int kNumPositive = 36;

using Coord = std::array<int, kRank>;   // coefficients on alpha_1 .. alpha_6
using IntMat = std::array<std::array<long long, kRank>, kRank>;

// Bourbaki numbering: chain 1-3-4-5-6 with 2 attached to 4.
IntMat cartan_e6();

long long det_int(const IntMat& m);

struct SmithResult {
  IntMat u;  // unimodular row transform
  IntMat d;  // diagonal, d_i | d_{i+1}
  IntMat v;  // unimodular column transform; u*a*v = d
};

SmithResult smith_normal_form(const IntMat& a);

// Diagonal of the Smith form computed independently via determinantal
// divisors: d_1 ... d_k = gcd of all k x k minors.  Oracle for the
// transform-based routine above.
std::array<long long, kRank> smith_diagonal_by_minors(const IntMat& a);

class RootSystem {
 public:
  // Closure of the simple roots under simple reflections.  Throws when the
  // closure exceeds the finite-type guard bounds (non-finite input).
  static RootSystem generate(const IntMat& cartan);
  static RootSystem build_e6();

  int num_roots() const { return static_cast<int>(m_coords.size()); }
  int num_positive() const { return num_roots() / 2; }
  const Coord& coord(int idx) const { return m_coords[idx]; }
  int height(int idx) const { return m_heights[idx]; }
  bool is_positive(int idx) const { return idx < num_positive(); }

  // index of a coordinate vector; -1 when it is not a root
  int index_of(const Coord& c) const;
  int negative(int idx) const;                 // index of -root
  int simple_root(int i) const;                // index of alpha_{i+1}, i in 0..5
  int highest_root() const { return num_positive() - 1; }

  // <beta, alpha_i^vee> = (C beta)_i
  int pairing(int root_idx, int i) const;
  Coord reflect(const Coord& c, int i) const;  // s_{i+1} applied to a vector
  int reflect_index(int root_idx, int i) const;

  // diagram involution: alpha1<->alpha6, alpha3<->alpha5
  static int dagger_simple(int i);
  Coord dagger_coord(const Coord& c) const;
  int dagger(int root_idx) const;

  const IntMat& cartan() const { return m_cartan; }

 private:
  IntMat m_cartan{};
  std::vector<Coord> m_coords;    // positives by (height, tiebreak), then negatives
  std::vector<int> m_heights;
  std::vector<int> m_index;       // dense lookup, see coord_key
  int coord_key(const Coord& c) const;
};

// Chevalley constants N(alpha, beta) for all root pairs with alpha+beta a
// root.  Convention: for each non-simple positive root g, the special pair
// (a, b), a < b, a + b = g with minimal a gets N(a, b) = +1; everything else
// follows from antisymmetry, N(-a,-b) = -N(a,b), and the Jacobi identities.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs);

  // 0 when alpha_i + alpha_j is not a root, otherwise +-1
  int n(int i, int j) const { return m_n[i * kNumRoots + j]; }
  int sum_index(int i, int j) const { return m_sum[i * kNumRoots + j]; }

 private:
  std::vector<int8_t> m_n;
  std::vector<int16_t> m_sum;
};

// exhaustive consistency check of the constants: support, antisymmetry,
// negation rule, special-pair normalization, the three-term cyclic identity
// and the four-term Jacobi identity; throws on the first violation
void verify_structure_identities(const RootSystem& rs,
                                 const StructureConstants& sc);

}  // namespace e6char
