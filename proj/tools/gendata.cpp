// writes the ingested data tables: the Coxeter-element trace column of the
// Hecke algebra for both parameter systems, and the parameter-set rosters
// with family slot assignments
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "e6char/context.hpp"
#include "e6char/hecke.hpp"
#include "e6char/unipchars.hpp"

namespace {

using namespace e6char;

Roster curated_roster(bool twisted, const LabeledCharacters& lc) {
  // principal-series slots inside the eight-slot family
  std::map<std::string, std::string> family_slot;
  Roster r;
  r.case_name = case_name_of(twisted);
  if (twisted) {
    family_slot = {{"phi_12_4", "1:1"},
                   {"phi_6_6_p", "1:r"},
                   {"phi_6_6_pp", "g3:1"}};
  } else {
    family_slot = {{"phi_80_7", "1:1"},
                   {"phi_90_8", "1:r"},
                   {"phi_20_10", "1:eps"},
                   {"phi_60_8", "g2:1"},
                   {"phi_10_9", "g3:1"}};
  }
  for (int row : lc.display_order) {
    RosterEntry e;
    e.label = lc.names[row];
    e.source = "irrW";
    auto it = family_slot.find(e.label);
    e.family = it == family_slot.end() ? "-" : "s3";
    e.mpair = it == family_slot.end() ? "-" : it->second;
    r.entries.push_back(std::move(e));
  }
  auto add = [&r](const char* label, const char* source, const char* family,
                  const char* mpair) {
    RosterEntry e;
    e.label = label;
    e.source = source;
    e.family = family;
    e.mpair = mpair;
    r.entries.push_back(std::move(e));
  };
  if (twisted) {
    // cuspidal pair, then the non-principal series filling the remaining
    // family slots (labels follow Carter's tables)
    add("2E6[theta]", "cuspidal", "s3", "g3:th");
    add("2E6[theta2]", "cuspidal", "s3", "g3:th2");
    add("2A5_1", "other", "s3", "1:eps");
    add("2A5_r", "other", "s3", "g2:1");
    add("2A5_eps", "other", "s3", "g2:eps");
  } else {
    add("E6[theta]", "cuspidal", "s3", "g3:th");
    add("E6[theta2]", "cuspidal", "s3", "g3:th2");
    add("D4_1", "other", "-", "-");
    add("D4_r", "other", "s3", "g2:eps");
    add("D4_eps", "other", "-", "-");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerates the data tables and cross-validates them"};
  std::string out_dir = default_data_dir();
  app.add_option("--out-dir", out_dir, "target directory");
  CLI11_PARSE(app, argc, argv);

  try {
    const Workspace& ws = Workspace::instance();
    for (bool twisted : {false, true}) {
      const CaseContext& cc = ws.ctx(twisted);
      HeckeAlgebra h(cc.group, cc.param_degrees);

      HeckeData data = HeckeData::compute(cc.table, cc.labels, cc.group,
                                          cc.param_degrees, cc.cox_word,
                                          cc.case_name);
      validate_hecke_data(data, cc.table, cc.labels, h, cc.cox_id, twisted);
      const std::string hecke_file = hecke_path(out_dir, twisted);
      data.save(hecke_file);
      validate_hecke_data(HeckeData::load(hecke_file), cc.table, cc.labels, h,
                          cc.cox_id, twisted);
      std::cout << "wrote " << hecke_file << "\n";

      Roster roster = curated_roster(twisted, cc.labels);
      validate_roster(roster, cc.labels, ws.family_fourier(), twisted);
      const std::string roster_file = roster_path(out_dir, twisted);
      roster.save(roster_file);
      validate_roster(Roster::load(roster_file), cc.labels, ws.family_fourier(),
                      twisted);
      std::cout << "wrote " << roster_file << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
