#pragma once

#include <string>
#include <vector>

#include "e6char/scalars.hpp"

// Pairs (x, sigma) with x a conjugacy-class representative of a small
// finite group and sigma an irreducible character of its centralizer,
// together with the exact pairing matrix between such pairs.

namespace e6char {

struct SmallGroup {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[a][b]
  std::vector<int> inv;

  // conjugacy classes, identity first, then by (element order, smallest id)
  std::vector<int> class_of;
  std::vector<int> class_rep;
  std::vector<std::string> class_names;

  // centralizer data per class: the subgroup elements and the characters
  // of that subgroup, stored as values indexed by ambient element id
  // (elements outside the centralizer hold 0)
  std::vector<std::vector<int>> centralizers;
  std::vector<std::vector<std::string>> cent_char_names;
  std::vector<std::vector<std::vector<Cyc3>>> cent_char_values;

  static SmallGroup trivial();
  static SmallGroup cyclic(int n);  // n in {2, 3}
  static SmallGroup symmetric3();
  static SmallGroup by_name(const std::string& name);

  int conjugate(int g, int x) const;  // g x g^-1
  int element_order(int x) const;
};

struct FourierMatrix {
  std::string group_name;
  std::vector<std::string> pair_names;  // "x:sigma"
  std::vector<std::vector<Cyc3>> entries;

  int index_of(const std::string& pair_name) const;  // -1 when absent
  Rational rational_entry(int i, int j) const;       // throws when irrational

  static FourierMatrix build(const SmallGroup& g);

  // involutive and hermitian; symmetric whenever every entry is rational
  void verify() const;
};

}  // namespace e6char
