#include "e6char/context.hpp"

namespace e6char {

namespace {

CaseContext make_case(const RootSystem& rs, bool twisted) {
  CaseContext c;
  c.twisted = twisted;
  c.case_name = case_name_of(twisted);
  c.group = twisted ? build_weyl_sigma(rs) : build_weyl_e6(rs);
  c.table = CharacterTable::dixon(c.group);
  std::vector<SmallMat> mats = twisted ? folded_reflection_matrices(rs, c.group)
                                       : e6_reflection_matrices(rs, c.group);
  std::vector<int> degrees = degrees_from_poincare(c.group, twisted ? 4 : 6);
  std::vector<LaurentPoly> fakes;
  fakes.reserve(c.table.num_chars());
  for (int row = 0; row < c.table.num_chars(); ++row)
    fakes.push_back(fake_degree(c.table, row, mats, degrees));
  c.labels = LabeledCharacters::build(c.table, fakes);
  c.param_degrees = twisted ? std::vector<int>{1, 1, 2, 2}
                            : std::vector<int>{1, 1, 1, 1, 1, 1};
  for (int s = 0; s < c.group.n_gens; ++s) c.cox_word.push_back(s);
  c.cox_id = c.group.id_of_word(c.cox_word);
  return c;
}

}  // namespace

Workspace::Workspace()
    : m_roots(RootSystem::build_e6()),
      m_constants(m_roots),
      m_family(FourierMatrix::build(SmallGroup::symmetric3())),
      m_untwisted(make_case(m_roots, false)),
      m_twisted(make_case(m_roots, true)) {}

const Workspace& Workspace::instance() {
  static const Workspace ws;
  return ws;
}

std::string case_name_of(bool twisted) { return twisted ? "2e6" : "e6"; }

std::string default_data_dir() {
#ifdef E6CHAR_DATA_DIR
  return E6CHAR_DATA_DIR;
#else
  return "data";
#endif
}

std::string hecke_path(const std::string& data_dir, bool twisted) {
  return data_dir + "/hecke_" + case_name_of(twisted) + ".tsv";
}

std::string roster_path(const std::string& data_dir, bool twisted) {
  return data_dir + "/roster_" + case_name_of(twisted) + ".tsv";
}

}  // namespace e6char
