#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "e6char/context.hpp"
#include "e6char/unipchars.hpp"

namespace e6char {

inline constexpr const char* kToolName = "e6char";
inline constexpr const char* kToolVersion = "1.0.0";

struct CheckRecord {
  std::string name;
  std::string status;  // "pass" or "fail"
  std::string details;

  static CheckRecord make(const std::string& name, bool ok,
                          const std::string& details);
};

struct RunConfig {
  std::string case_filter = "both";  // "e6", "2e6" or "both"
  std::string data_dir;              // defaults to the build-time directory
  std::string format = "json";       // "json", "tsv" or "text"
  std::vector<long> q_samples = {3, 9, 27};
  int jobs = 1;

  bool wants(bool twisted) const;
  std::vector<bool> cases() const;  // selected flavors in fixed order
};

// flags are rejected before any computation: known case and format names,
// q samples powers of three, at least one worker
bool validate_config(const RunConfig& cfg, std::string* why);

uint64_t fnv1a64_bytes(const std::string& bytes);
uint64_t fnv1a64_file(const std::string& path);  // throws when unreadable
std::string hex64(uint64_t value);

// section runners, each a list of named pass/fail records
std::vector<CheckRecord> check_root_datum(const Workspace& ws);
std::vector<CheckRecord> check_weyl(const Workspace& ws);
std::vector<CheckRecord> check_fourier(const Workspace& ws);
std::vector<CheckRecord> check_witness(const Workspace& ws, bool twisted);

// per-case data-driven pipeline: ingest, cross-validate, pin the sign,
// tabulate the 30 values
struct CaseOutcome {
  std::string case_name;
  bool witness_ok = false;
  ScalarSolution solution;
  std::vector<ValueRow> table;
  std::vector<CheckRecord> records;

  bool all_passed() const;
};

CaseOutcome run_case_pipeline(const Workspace& ws, bool twisted,
                              const RunConfig& cfg);

struct FullReport {
  RunConfig config;
  std::map<std::string, std::string> digests;  // data file name -> hex digest
  std::vector<CheckRecord> checks;
  std::vector<CaseOutcome> outcomes;

  bool all_passed() const;
  std::string to_json() const;  // byte-stable given config, data and version
};

FullReport run_full_report(const Workspace& ws, const RunConfig& cfg);

// serialization helpers shared with the command-line front end
std::string value_table_tsv(const std::vector<ValueRow>& table);
std::string checks_json(const std::vector<CheckRecord>& records);

}  // namespace e6char
