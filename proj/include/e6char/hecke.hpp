#pragma once

#include <map>
#include <string>
#include <vector>

#include "e6char/scalars.hpp"
#include "e6char/weyl.hpp"

namespace e6char {

// Iwahori-Hecke algebra of an enumerated Coxeter group with one parameter
// q^{deg_s} per generator
class HeckeAlgebra {
 public:
  using Elt = std::map<int, LaurentPoly>;  // basis element id -> coefficient

  HeckeAlgebra(const GroupArena& w, std::vector<int> param_deg);

  const GroupArena& group() const { return *m_w; }
  const std::vector<int>& param_degrees() const { return m_deg; }

  static Elt unit() { return basis(0); }
  static Elt basis(int id);

  Elt mul_gen_left(int s, const Elt& x) const;    // T_s . x
  Elt mul_basis_left(int id, const Elt& x) const; // T_id . x
  Elt mul(const Elt& a, const Elt& b) const;

  std::vector<int> left_word(int id) const;  // reduced word by left descents
  int weight(int id) const;  // sum of parameter degrees along a reduced word

  // trace on the module induced from the one-dimensional representation of
  // the parabolic subalgebra on the generators in J; sign_rep selects the
  // representation sending every T_s to -1, otherwise T_s -> q^{deg_s}
  LaurentPoly induced_trace(const Elt& h, const std::vector<int>& J,
                            bool sign_rep) const;

  // multiplicity of character row in the induction of the same
  // one-dimensional representation at q = 1
  long long induced_multiplicity(const CharacterTable& t, int row,
                                 const std::vector<int>& J,
                                 bool sign_rep) const;

 private:
  const GroupArena* m_w;
  std::vector<int> m_deg;

  std::vector<int> parabolic_elements(const std::vector<int>& J) const;
};

// defining-relation audit: the quadratic relation for every generator and
// the braid relation for every generator pair; throws on the first failure
void verify_hecke_relations(const HeckeAlgebra& h);

// trace of the basis element of a product of all generators on the
// irreducible module of the given character row: value(cox_class) * q^p with
// 2 p dim = sum_s deg_s (dim + value(class of s)); the trace vanishes when
// the exponent is not integral
LaurentPoly coxeter_trace_row(const CharacterTable& t, int row,
                              const std::vector<int>& gen_classes,
                              const std::vector<int>& param_deg, int cox_class);

// curated trace column at the distinguished Coxeter-type element; rows are
// (character label, generator-index word for the class representative, value)
struct HeckeData {
  std::string case_name;                      // "e6" or "2e6"
  std::vector<std::string> names;
  std::vector<std::vector<int>> class_words;  // zero-based generator indices
  std::vector<LaurentPoly> traces;

  int row_by_name(const std::string& name) const;  // -1 when absent
  static HeckeData load(const std::string& path);
  static HeckeData compute(const CharacterTable& t, const LabeledCharacters& lc,
                           const GroupArena& w,
                           const std::vector<int>& param_deg,
                           const std::vector<int>& cox_word,
                           const std::string& case_name);
  void save(const std::string& path) const;
};

// cross-checks a loaded trace column: label set, dimensions, specialization
// at q = 1, the one-dimensional rows, the family combination, and induced
// module traces computed from first principles
void validate_hecke_data(const HeckeData& data, const CharacterTable& t,
                         const LabeledCharacters& lc, const HeckeAlgebra& h,
                         int cox_id, bool twisted);

// the signed combination of family rows entering the fixed-point count;
// equals 3 q^3 for both forms
LaurentPoly family_trace_combination(const HeckeData& data, bool twisted);

}  // namespace e6char
