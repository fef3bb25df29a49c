#pragma once

#include <string>
#include <vector>

#include "e6char/borel.hpp"
#include "e6char/fourier.hpp"
#include "e6char/rootdata.hpp"
#include "e6char/weyl.hpp"

namespace e6char {

// first-principles computation cache for one rational form
struct CaseContext {
  bool twisted = false;
  std::string case_name;  // "e6" or "2e6"

  GroupArena group;
  CharacterTable table;
  LabeledCharacters labels;

  std::vector<int> param_degrees;  // Hecke parameter exponent per generator
  std::vector<int> cox_word;       // one generator each, in generator order
  int cox_id = 0;
};

// immutable shared workspace; everything here is rebuilt from the Cartan
// matrix on first use and then reused across subcommands and tests
class Workspace {
 public:
  static const Workspace& instance();

  const RootSystem& roots() const { return m_roots; }
  const StructureConstants& constants() const { return m_constants; }
  BorelCtx borel() const { return BorelCtx{m_roots, m_constants}; }
  const FourierMatrix& family_fourier() const { return m_family; }
  const CaseContext& ctx(bool twisted) const {
    return twisted ? m_twisted : m_untwisted;
  }

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

 private:
  Workspace();

  RootSystem m_roots;
  StructureConstants m_constants;
  FourierMatrix m_family;
  CaseContext m_untwisted;
  CaseContext m_twisted;
};

std::string case_name_of(bool twisted);
std::string default_data_dir();
std::string hecke_path(const std::string& data_dir, bool twisted);
std::string roster_path(const std::string& data_dir, bool twisted);

}  // namespace e6char
