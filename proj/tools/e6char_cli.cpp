// command-line front end: verification subcommands plus report emission
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "e6char/context.hpp"
#include "e6char/hecke.hpp"
#include "e6char/report.hpp"
#include "e6char/unipchars.hpp"

namespace {

using e6char::CheckRecord;
using e6char::RunConfig;
using e6char::Workspace;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

bool all_pass(const std::vector<CheckRecord>& records) {
  for (const CheckRecord& r : records)
    if (r.status != "pass") return false;
  return true;
}

void emit_checks(const std::vector<CheckRecord>& records,
                 const std::string& format) {
  if (format == "json") {
    std::cout << e6char::checks_json(records);
    return;
  }
  for (const CheckRecord& r : records) {
    if (format == "tsv")
      std::cout << r.name << '\t' << r.status << '\t' << r.details << '\n';
    else
      std::cout << (r.status == "pass" ? "[PASS] " : "[FAIL] ") << r.name
                << " - " << r.details << '\n';
  }
}

int finish(const std::vector<CheckRecord>& records, const std::string& format) {
  emit_checks(records, format);
  return all_pass(records) ? kExitPass : kExitCheckFailure;
}

std::string matrix_tsv(const e6char::FourierMatrix& fm) {
  std::ostringstream os;
  os << "pair";
  for (const std::string& name : fm.pair_names) os << '\t' << name;
  os << '\n';
  const int n = static_cast<int>(fm.pair_names.size());
  for (int i = 0; i < n; ++i) {
    os << fm.pair_names[i];
    for (int j = 0; j < n; ++j) os << '\t' << fm.entries[i][j].str();
    os << '\n';
  }
  return os.str();
}

std::string matrix_json(const e6char::FourierMatrix& fm) {
  ordered_json doc;
  doc["group"] = fm.group_name;
  doc["pairs"] = fm.pair_names;
  ordered_json rows = ordered_json::array();
  const int n = static_cast<int>(fm.pair_names.size());
  for (int i = 0; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < n; ++j) row.push_back(fm.entries[i][j].str());
    rows.push_back(row);
  }
  doc["entries"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the values of unipotent "
               "characters at regular unipotent elements in types E6 and 2E6 "
               "over fields of order a power of three"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.data_dir = e6char::default_data_dir();
  std::string format;  // per-subcommand default when empty
  app.add_option("--case", cfg.case_filter,
                 "rational form: e6, 2e6 or both (default both)");
  app.add_option("--data-dir", cfg.data_dir, "directory with the data tables");
  app.add_option("--format", format, "output format: json, tsv or text");
  app.add_option("--q-samples", cfg.q_samples,
                 "field-size sample points, powers of three")
      ->delimiter(',');
  app.add_option("--jobs", cfg.jobs, "worker bound for the case pipelines");

  CLI::App* cmd_roots = app.add_subcommand("roots", "root datum checks");
  CLI::App* cmd_weyl = app.add_subcommand(
      "weyl-table", "labeled character table of the reflection group");
  CLI::App* cmd_conj = app.add_subcommand(
      "verify-conjugacy",
      "regular unipotent element conjugate to its inverse, by witness");
  CLI::App* cmd_fourier =
      app.add_subcommand("fourier", "pairing matrix of a family parameter set");
  std::string group_name = "s3";
  cmd_fourier->add_option("--group", group_name,
                          "ambient group: 1, z2, z3 or s3");
  CLI::App* cmd_hecke = app.add_subcommand(
      "hecke-check", "relation and trace-table cross checks");
  std::string hecke_file;
  cmd_hecke->add_option("--data", hecke_file,
                        "trace table file (defaults to the case file in the "
                        "data directory)");
  CLI::App* cmd_xi = app.add_subcommand(
      "determine-xi", "pin the normalization scalar from non-negativity");
  CLI::App* cmd_values = app.add_subcommand(
      "unipotent-values",
      "the thirty values at the distinguished regular unipotent element");
  CLI::App* cmd_report = app.add_subcommand(
      "full-report", "every check in one machine-readable document");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string why;
  if (!e6char::validate_config(cfg, &why)) {
    std::cerr << "error: " << why << "\n";
    return kExitUsage;
  }

  try {
    const Workspace& ws = Workspace::instance();

    if (cmd_roots->parsed()) {
      return finish(check_root_datum(ws), format.empty() ? "text" : format);
    }

    if (cmd_weyl->parsed()) {
      std::vector<CheckRecord> records = check_weyl(ws);
      for (bool twisted : cfg.cases()) {
        const e6char::CaseContext& cc = ws.ctx(twisted);
        std::cout << "# case: " << cc.case_name << "\n";
        std::cout << "# columns: label, degree, lowest fake-degree exponent, "
                     "fake degree\n";
        for (int row : cc.labels.display_order)
          std::cout << cc.labels.names[row] << '\t' << cc.table.degrees[row]
                    << '\t' << cc.labels.b_invariant[row] << '\t'
                    << cc.labels.fake_degrees[row].str() << '\n';
      }
      return all_pass(records) ? kExitPass : kExitCheckFailure;
    }

    if (cmd_conj->parsed()) {
      std::vector<CheckRecord> records;
      for (bool twisted : cfg.cases())
        for (CheckRecord& r : check_witness(ws, twisted)) records.push_back(r);
      return finish(records, format.empty() ? "text" : format);
    }

    if (cmd_fourier->parsed()) {
      e6char::FourierMatrix fm =
          e6char::FourierMatrix::build(e6char::SmallGroup::by_name(group_name));
      fm.verify();
      std::cout << (format == "json" ? matrix_json(fm) : matrix_tsv(fm));
      return kExitPass;
    }

    if (cmd_hecke->parsed()) {
      std::vector<CheckRecord> records;
      for (bool twisted : cfg.cases()) {
        const e6char::CaseContext& cc = ws.ctx(twisted);
        const std::string prefix = cc.case_name + "/";
        e6char::HeckeAlgebra h(cc.group, cc.param_degrees);
        try {
          verify_hecke_relations(h);
          records.push_back(CheckRecord::make(
              prefix + "defining_relations", true,
              "quadratic relation per generator and braid relation per pair"));
          std::string path = hecke_file.empty()
                                 ? e6char::hecke_path(cfg.data_dir, twisted)
                                 : hecke_file;
          e6char::HeckeData data = e6char::HeckeData::load(path);
          validate_hecke_data(data, cc.table, cc.labels, h, cc.cox_id, twisted);
          records.push_back(CheckRecord::make(
              prefix + "trace_table", true,
              "all rows specialize correctly at q = 1; combination 3*q^3"));
        } catch (const std::exception& e) {
          records.push_back(
              CheckRecord::make(prefix + "trace_table", false, e.what()));
        }
      }
      return finish(records, format.empty() ? "text" : format);
    }

    if (cmd_xi->parsed()) {
      ordered_json arr = ordered_json::array();
      bool ok = true;
      for (bool twisted : cfg.cases()) {
        e6char::CaseOutcome oc = run_case_pipeline(ws, twisted, cfg);
        ok = ok && oc.all_passed() && oc.solution.ok;
        ordered_json doc;
        doc["case"] = oc.case_name;
        doc["xi"] = oc.solution.ok ? ordered_json(oc.solution.xi)
                                   : ordered_json(nullptr);
        doc["m_polynomial"] = oc.solution.m.str();
        ordered_json checks = ordered_json::array();
        for (const CheckRecord& r : oc.records)
          checks.push_back(ordered_json{{"name", r.name},
                                        {"status", r.status},
                                        {"details", r.details}});
        doc["checks"] = checks;
        arr.push_back(doc);
      }
      std::cout << (arr.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
      return ok ? kExitPass : kExitCheckFailure;
    }

    if (cmd_values->parsed()) {
      bool ok = true;
      for (bool twisted : cfg.cases()) {
        e6char::CaseOutcome oc = run_case_pipeline(ws, twisted, cfg);
        ok = ok && oc.all_passed() && oc.solution.ok;
        std::cout << "# case: " << oc.case_name << "\n"
                  << e6char::value_table_tsv(oc.table);
      }
      return ok ? kExitPass : kExitCheckFailure;
    }

    if (cmd_report->parsed()) {
      e6char::FullReport rep = run_full_report(ws, cfg);
      std::cout << rep.to_json();
      return rep.all_passed() ? kExitPass : kExitCheckFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }

  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
