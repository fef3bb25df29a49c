#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "e6char/rootdata.hpp"

namespace e6char {

// arithmetic is over the prime field with three elements; coefficients are
// stored as 0, 1, 2
inline int8_t f3_norm(int v) {
  int m = v % 3;
  return static_cast<int8_t>(m < 0 ? m + 3 : m);
}
inline int8_t f3_add(int8_t a, int8_t b) { return f3_norm(a + b); }
inline int8_t f3_mul(int8_t a, int8_t b) { return f3_norm(a * b); }
inline int8_t f3_neg(int8_t a) { return f3_norm(-a); }

struct BorelCtx {
  const RootSystem& rs;
  const StructureConstants& sc;
};

// one-parameter factor u_root(coeff); root indexes a positive root
struct Letter {
  int16_t root;
  int8_t coeff;
};

// canonical form: product of root subgroups in positive-root order
using UCoeffs = std::array<int8_t, kNumPositive>;

std::vector<Letter> letters_of(const UCoeffs& u);
UCoeffs coeffs_of(const BorelCtx& c, const std::vector<Letter>& word);

// rewrites an arbitrary word into the canonical ordered product
std::vector<Letter> collect(const BorelCtx& c, std::vector<Letter> word);

UCoeffs u_identity();
UCoeffs u_multiply(const BorelCtx& c, const UCoeffs& a, const UCoeffs& b);
UCoeffs u_inverse(const BorelCtx& c, const UCoeffs& a);
// v a v^{-1} for a conjugator given as a word
UCoeffs u_conj_word(const BorelCtx& c, const std::vector<Letter>& v,
                    const UCoeffs& a);
bool u_equal(const UCoeffs& a, const UCoeffs& b);

// nonzero coefficient on every simple root slot
bool is_regular_unipotent(const UCoeffs& a);

// diagonal torus element written in simple-coroot coordinates; entries are
// the two units of the field, stored as 1 and 2
struct Torus {
  std::array<int8_t, kRank> v{1, 1, 1, 1, 1, 1};
};

int8_t root_value(const BorelCtx& c, const Torus& t, int root);
UCoeffs u_conj_torus(const BorelCtx& c, const Torus& t, const UCoeffs& a);
Torus torus_dagger(const Torus& t);
bool torus_equal(const Torus& a, const Torus& b);

// image of a word under the twisting field automorphism: the cube map fixes
// the prime field, so only the diagram involution acts on the letters
std::vector<Letter> word_dagger(const BorelCtx& c, std::vector<Letter> word);
bool word_is_twisted_stable(const BorelCtx& c, const std::vector<Letter>& word);

// the distinguished regular unipotent element for each form
std::vector<Letter> regular_word(bool twisted);
UCoeffs regular_element(const BorelCtx& c, bool twisted);

struct WitnessSpec {
  std::vector<Letter> word;  // the unipotent part, as a word in simple letters
  Torus t;
};

// the curated conjugating pairs (u, t) with (u t) u0 (u t)^{-1} = u0^{-1}
WitnessSpec curated_witness(bool twisted);

// checks the displacement identity, and rational-form stability of u0, u and
// t for the twisted case
bool verify_witness(const BorelCtx& c, bool twisted, const WitnessSpec& w,
                    std::string* why = nullptr);

// tries sign variants of the given letter patterns against all split torus
// elements; returns the first verified pair
std::optional<WitnessSpec> search_witness(
    const BorelCtx& c, bool twisted,
    const std::vector<std::vector<int>>& simple_patterns);

// verified witness: the curated pair when it holds, otherwise a searched one
WitnessSpec resolve_witness(const BorelCtx& c, bool twisted, bool* curated_ok);

}  // namespace e6char
